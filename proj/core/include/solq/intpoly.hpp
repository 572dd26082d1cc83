#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace solq {

using BigInt = boost::multiprecision::cpp_int;

/// The fixed polynomial variable alphabet.
enum class Var : int { x = 0, y = 1, u = 2, v = 3 };

inline constexpr std::array<Var, 4> all_vars{Var::x, Var::y, Var::u, Var::v};

const char* var_name(Var v) noexcept;

/// Exponent vector over {x, y, u, v}; exponents are nonnegative.
struct Mono {
    std::array<int, 4> e{0, 0, 0, 0};

    int operator[](Var v) const { return e[static_cast<int>(v)]; }
    int& operator[](Var v) { return e[static_cast<int>(v)]; }

    Mono operator*(const Mono& o) const;
    Mono pow(int n) const;
    bool is_one() const { return e == std::array<int, 4>{0, 0, 0, 0}; }

    auto operator<=>(const Mono&) const = default;
};

/// Multivariate polynomial in x, y, u, v with arbitrary-precision integer
/// coefficients. Always in canonical form: no stored zero coefficients.
class IntPoly {
public:
    IntPoly() = default; // zero

    static IntPoly constant(BigInt c);
    static IntPoly one() { return constant(1); }
    static IntPoly variable(Var v, int exp = 1);
    static IntPoly monomial(BigInt coef, Mono m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Mono, BigInt>& terms() const { return terms_; }
    std::optional<BigInt> as_constant() const;
    int degree(Var v) const; // max exponent over the terms; 0 for the zero poly

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const BigInt& c);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    bool operator==(const IntPoly&) const = default;

    void add_term(const Mono& m, const BigInt& c);

    /// Substitutes integer values for a subset of the variables.
    IntPoly specialize(const std::map<Var, long long>& bindings) const;

    std::string to_string() const;

private:
    std::map<Mono, BigInt> terms_;
};

} // namespace solq
