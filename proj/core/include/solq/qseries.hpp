#pragma once

#include "solq/intpoly.hpp"

#include <optional>
#include <vector>

namespace solq {

/// Lowest q-exponent any series may represent. Exponents below the floor
/// raise truncation_underflow. Default -2; the identities needing Laurent
/// terms bottom out at q^{-1}.
int laurent_floor() noexcept;
void set_laurent_floor(int floor);

/// coef * x^.. y^.. u^.. v^.. * q^qexp
struct QMonomial {
    BigInt coef = 1;
    Mono mono{};
    int qexp = 0;
};

/// Truncated Laurent series in q with IntPoly coefficients. A series with
/// order N represents exact coefficients for every exponent in
/// [min_exp, N]; higher terms are unknown and discarded by arithmetic.
class QSeries {
public:
    explicit QSeries(int order, int min_exp = 0);
    static QSeries one(int order);
    static QSeries term(const QMonomial& m, int order);

    int order() const noexcept { return order_; }
    int min_exp() const noexcept { return min_exp_; }
    const IntPoly& coeff(int qexp) const; // zero outside [min_exp, order]
    bool is_zero() const;
    int max_degree(Var v) const;

    /// Accumulates poly * q^qexp; terms above the order are discarded,
    /// terms below the floor raise truncation_underflow.
    void add_term(int qexp, const IntPoly& poly);

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

    /// Exact convolution; the result order is the largest exponent both
    /// factors can vouch for, which can shrink when a factor has negative
    /// minimum exponent.
    QSeries mul(const QSeries& o) const;
    QSeries mul_monomial(const QMonomial& m) const;
    /// this * (1 + coef * mono * q^shift) without materialising the binomial.
    QSeries mul_binomial(const BigInt& coef, const Mono& mono, int shift) const;

    QSeries truncated(int new_order) const;
    QSeries specialize(const std::map<Var, long long>& bindings) const;

private:
    void shrink_order(int new_order);

    int min_exp_;
    int order_;
    std::vector<IntPoly> c_; // index e - min_exp_ for e in [min_exp_, order_]
};

/// (a; q^step)_count = prod (1 - a q^{step*t}).  count == nullopt means the
/// infinite product, which needs a.qexp >= 1 to stabilise below the order.
QSeries pochhammer(const QMonomial& a, int step, std::optional<int> count, int order);

/// 1/(q^step; q^step)_count expanded as a product of geometric series.
QSeries inverse_pochhammer(int step, int count, int order);

/// 1/(a; q^step)_count for a general monomial a; every factor must sit at a
/// positive q-exponent, so a.qexp >= 1 is required.
QSeries inverse_pochhammer(const QMonomial& a, int step, std::optional<int> count, int order);

struct ShiftResult {
    QSeries series;
    int max_degree; // highest exponent of the shifted variable seen in the input
};

/// var^a q^b -> var^a q^{b + m*a}. Terms pushed above the order are dropped;
/// callers comparing results should lower the comparison order by
/// m * max_degree.
ShiftResult shift_substitute(const QSeries& s, Var var, int m);

struct MatchReport {
    bool equal = true;
    int through = 0;
    std::optional<int> first_mismatch;
    IntPoly lhs, rhs; // coefficients at the first mismatch
};

MatchReport series_equal(const QSeries& a, const QSeries& b, int through);

} // namespace solq
