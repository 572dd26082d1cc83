#include "solq/qseries.hpp"

#include "solq/error.hpp"

#include <atomic>

namespace solq {

namespace {
std::atomic<int> g_floor{-2};
const IntPoly k_zero_poly{};
} // namespace

int laurent_floor() noexcept { return g_floor.load(); }

void set_laurent_floor(int floor) {
    if (floor > 0) fail(errc::bad_params, "laurent floor must be <= 0");
    g_floor.store(floor);
}

QSeries::QSeries(int order, int min_exp) : min_exp_(min_exp), order_(order) {
    if (min_exp_ < laurent_floor())
        fail(errc::truncation_underflow,
             "min exponent " + std::to_string(min_exp_) + " below floor " +
                 std::to_string(laurent_floor()));
    if (min_exp_ > order_) min_exp_ = order_; // empty-ish; keep a sane window
    c_.assign(static_cast<size_t>(order_ - min_exp_) + 1, IntPoly{});
}

QSeries QSeries::one(int order) {
    QSeries s(order, 0);
    s.add_term(0, IntPoly::one());
    return s;
}

QSeries QSeries::term(const QMonomial& m, int order) {
    QSeries s(order, std::min(m.qexp, order));
    s.add_term(m.qexp, IntPoly::monomial(m.coef, m.mono));
    return s;
}

const IntPoly& QSeries::coeff(int qexp) const {
    if (qexp < min_exp_ || qexp > order_) return k_zero_poly;
    return c_[static_cast<size_t>(qexp - min_exp_)];
}

bool QSeries::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

int QSeries::max_degree(Var v) const {
    int deg = 0;
    for (const auto& p : c_) deg = std::max(deg, p.degree(v));
    return deg;
}

void QSeries::add_term(int qexp, const IntPoly& poly) {
    if (poly.is_zero() || qexp > order_) return;
    if (qexp < laurent_floor())
        fail(errc::truncation_underflow,
             "q^" + std::to_string(qexp) + " below floor " + std::to_string(laurent_floor()));
    if (qexp < min_exp_) {
        c_.insert(c_.begin(), static_cast<size_t>(min_exp_ - qexp), IntPoly{});
        min_exp_ = qexp;
    }
    c_[static_cast<size_t>(qexp - min_exp_)] += poly;
}

void QSeries::shrink_order(int new_order) {
    order_ = new_order;
    if (order_ < min_exp_) {
        min_exp_ = order_;
        c_.assign(1, IntPoly{});
        return;
    }
    size_t want = static_cast<size_t>(order_ - min_exp_) + 1;
    if (want < c_.size()) c_.resize(want);
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.order_ < order_) shrink_order(o.order_);
    for (int e = o.min_exp_; e <= std::min(o.order_, order_); ++e) add_term(e, o.coeff(e));
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.order_ < order_) shrink_order(o.order_);
    for (int e = o.min_exp_; e <= std::min(o.order_, order_); ++e) {
        IntPoly neg = -o.coeff(e);
        add_term(e, neg);
    }
    return *this;
}

QSeries QSeries::mul(const QSeries& o) const {
    // exactness bound: coefficient at e needs this at e-f for f >= o.min_exp
    // and o at e-g for g >= min_exp
    long long bound = std::min(static_cast<long long>(order_) + o.min_exp_,
                               static_cast<long long>(o.order_) + min_exp_);
    int out_order = static_cast<int>(std::min<long long>(bound, 1 << 24));
    long long out_min = static_cast<long long>(min_exp_) + o.min_exp_;
    if (out_min < laurent_floor())
        fail(errc::truncation_underflow, "product minimum exponent below floor");
    if (out_order < out_min) return QSeries(static_cast<int>(out_min), static_cast<int>(out_min));
    QSeries r(out_order, static_cast<int>(out_min));
    for (int ea = min_exp_; ea <= order_; ++ea) {
        const IntPoly& ca = coeff(ea);
        if (ca.is_zero()) continue;
        for (int eb = o.min_exp_; eb <= std::min(o.order_, out_order - ea); ++eb) {
            const IntPoly& cb = o.coeff(eb);
            if (cb.is_zero()) continue;
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

QSeries QSeries::mul_monomial(const QMonomial& m) const {
    long long out_min = static_cast<long long>(min_exp_) + m.qexp;
    if (out_min < laurent_floor())
        fail(errc::truncation_underflow, "monomial shift below floor");
    QSeries r(order_ + m.qexp, static_cast<int>(out_min));
    IntPoly factor = IntPoly::monomial(m.coef, m.mono);
    for (int e = min_exp_; e <= order_; ++e) {
        if (coeff(e).is_zero()) continue;
        r.add_term(e + m.qexp, coeff(e) * factor);
    }
    return r;
}

QSeries QSeries::mul_binomial(const BigInt& coef, const Mono& mono, int shift) const {
    long long out_min = std::min<long long>(min_exp_, static_cast<long long>(min_exp_) + shift);
    if (out_min < laurent_floor())
        fail(errc::truncation_underflow, "binomial factor pushes series below floor");
    int out_order = shift >= 0 ? order_ : order_ + shift;
    QSeries r(out_order, static_cast<int>(out_min));
    IntPoly factor = IntPoly::monomial(coef, mono);
    for (int e = min_exp_; e <= order_; ++e) {
        const IntPoly& ce = coeff(e);
        if (ce.is_zero()) continue;
        r.add_term(e, ce);
        r.add_term(e + shift, ce * factor);
    }
    return r;
}

QSeries QSeries::truncated(int new_order) const {
    if (new_order > order_)
        fail(errc::bad_params, "cannot extend a truncated series");
    QSeries r(new_order, std::min(min_exp_, new_order));
    for (int e = min_exp_; e <= new_order; ++e) r.add_term(e, coeff(e));
    return r;
}

QSeries QSeries::specialize(const std::map<Var, long long>& bindings) const {
    QSeries r(order_, min_exp_);
    for (int e = min_exp_; e <= order_; ++e) r.add_term(e, coeff(e).specialize(bindings));
    return r;
}

QSeries pochhammer(const QMonomial& a, int step, std::optional<int> count, int order) {
    if (step < 1) fail(errc::bad_params, "pochhammer step must be >= 1");
    if (!count && a.qexp < 1)
        fail(errc::divergent_product, "infinite product needs the monomial at q^e with e >= 1");
    if (count && *count < 0) fail(errc::bad_params, "pochhammer count must be >= 0");
    QSeries acc = QSeries::one(order);
    for (long long t = 0;; ++t) {
        long long exp = a.qexp + static_cast<long long>(step) * t;
        if (count) {
            if (t >= *count) break;
        } else if (exp > order) {
            break;
        }
        acc = acc.mul_binomial(-a.coef, a.mono, static_cast<int>(exp));
    }
    return acc;
}

QSeries inverse_pochhammer(int step, int count, int order) {
    return inverse_pochhammer(QMonomial{1, Mono{}, step}, step, count, order);
}

QSeries inverse_pochhammer(const QMonomial& a, int step, std::optional<int> count, int order) {
    if (step < 1) fail(errc::bad_params, "pochhammer step must be >= 1");
    if (count && *count < 0) fail(errc::bad_params, "pochhammer count must be >= 0");
    if (a.qexp < 1)
        fail(errc::divergent_product, "inverse factors need positive q-exponents");
    QSeries acc = QSeries::one(order);
    for (long long t = 0;; ++t) {
        long long exp = a.qexp + static_cast<long long>(step) * t;
        if (count) {
            if (t >= *count) break;
        } else if (exp > order) {
            break;
        }
        if (exp > order) continue; // finite count, factor fully above the order
        // geometric series for 1/(1 - a q^exp)
        QSeries geo(order, 0);
        BigInt c = 1;
        Mono m{};
        for (long long e = 0; e <= order; e += exp, c *= a.coef, m = m * a.mono)
            geo.add_term(static_cast<int>(e), IntPoly::monomial(c, m));
        acc = acc.mul(geo);
    }
    return acc;
}

ShiftResult shift_substitute(const QSeries& s, Var var, int m) {
    int max_deg = s.max_degree(var);
    QSeries r(s.order(), std::min(0, s.min_exp()));
    for (int e = s.min_exp(); e <= s.order(); ++e) {
        for (const auto& [mono, coef] : s.coeff(e).terms()) {
            long long ne = e + static_cast<long long>(m) * mono[var];
            if (ne > s.order()) continue;
            if (ne < laurent_floor())
                fail(errc::truncation_underflow, "shift pushes a term below the floor");
            r.add_term(static_cast<int>(ne), IntPoly::monomial(coef, mono));
        }
    }
    return {r, max_deg};
}

MatchReport series_equal(const QSeries& a, const QSeries& b, int through) {
    if (through > a.order() || through > b.order())
        fail(errc::bad_params, "comparison order exceeds a series truncation order");
    MatchReport rep;
    rep.through = through;
    for (int e = std::min(a.min_exp(), b.min_exp()); e <= through; ++e) {
        if (a.coeff(e) == b.coeff(e)) continue;
        rep.equal = false;
        rep.first_mismatch = e;
        rep.lhs = a.coeff(e);
        rep.rhs = b.coeff(e);
        break;
    }
    return rep;
}

} // namespace solq
