#include "solq/intpoly.hpp"

#include "solq/error.hpp"

#include <sstream>

namespace solq {

const char* var_name(Var v) noexcept {
    switch (v) {
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::u: return "u";
        case Var::v: return "v";
    }
    return "?";
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

Mono Mono::pow(int n) const {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] * n;
    return r;
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.terms_.emplace(Mono{}, std::move(c));
    return p;
}

IntPoly IntPoly::variable(Var v, int exp) {
    if (exp < 0) fail(errc::bad_params, "variable exponents are nonnegative");
    Mono m;
    m[v] = exp;
    return monomial(1, m);
}

IntPoly IntPoly::monomial(BigInt coef, Mono m) {
    for (int e : m.e)
        if (e < 0) fail(errc::bad_params, "monomial exponents are nonnegative");
    IntPoly p;
    if (coef != 0) p.terms_.emplace(m, std::move(coef));
    return p;
}

bool IntPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

std::optional<BigInt> IntPoly::as_constant() const {
    if (terms_.empty()) return BigInt(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
    return std::nullopt;
}

int IntPoly::degree(Var v) const {
    int deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m[v]);
    return deg;
}

void IntPoly::add_term(const Mono& m, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& [m, coef] : r.terms_) coef = -coef;
    return r;
}

IntPoly IntPoly::specialize(const std::map<Var, long long>& bindings) const {
    IntPoly r;
    for (const auto& [m, c] : terms_) {
        BigInt coef = c;
        Mono rest = m;
        for (const auto& [var, value] : bindings) {
            int exp = m[var];
            if (exp == 0) continue;
            BigInt p = 1;
            for (int t = 0; t < exp; ++t) p *= value;
            coef *= p;
            rest[var] = 0;
        }
        r.add_term(rest, coef);
    }
    return r;
}

std::string IntPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt coef = c;
        if (first) {
            if (coef < 0) {
                out << "-";
                coef = -coef;
            }
        } else {
            out << (coef < 0 ? " - " : " + ");
            if (coef < 0) coef = -coef;
        }
        first = false;
        bool printed = false;
        if (coef != 1 || m.is_one()) {
            out << coef;
            printed = true;
        }
        for (Var var : all_vars) {
            int exp = m[var];
            if (exp == 0) continue;
            if (printed) out << "*";
            out << var_name(var);
            if (exp > 1) out << "^" << exp;
            printed = true;
        }
    }
    return out.str();
}

} // namespace solq
