#include "solq/double_sum.hpp"

#include "solq/error.hpp"

#include <cstdlib>

namespace solq {

long long QuadraticForm::operator()(long long i, long long j) const {
    long long d = doubled(i, j);
    if (d % 2 != 0)
        fail(errc::bad_params, "exponent form is not integer-valued at (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
    return d / 2;
}

void DoubleSumSpec::validate() const {
    if (denom_step_i < 1) fail(errc::bad_params, "denominator step for i must be >= 1");
    if (denom_step_j < 0) fail(errc::bad_params, "denominator step for j must be >= 0");
    const auto& E = exponent;
    for (long long i = 0; i <= 2; ++i)
        for (long long j = 0; j <= 2; ++j)
            (void)E(i, j); // integrality; parity of a quadratic has period 2
    if (E.aii <= 0) fail(errc::unbounded_spec, "exponent must grow quadratically in i");
    if (denom_step_j == 0) {
        if (E.aij != 0 || E.ajj != 0 || E.aj != 0)
            fail(errc::bad_params, "single-sum spec must not mention j");
        return;
    }
    if (E.ajj <= 0) fail(errc::unbounded_spec, "exponent must grow quadratically in j");
    if (4 * E.aii * E.ajj - E.aij * E.aij <= 0)
        fail(errc::unbounded_spec, "exponent form must be strictly convex");
}

namespace {

// Lowest value of the doubled form along row i over real j >= 0, scaled by
// 4*ajj so it stays an integer: min_j D(i, j) = D(i, j*) with the vertex
// clamped at 0. This partial minimum is convex in i, which makes the row
// cutoff sound: once it exceeds the target and stops decreasing, no later
// row can contribute.
long long row_min_scaled(const QuadraticForm& E, long long i, bool has_j) {
    if (!has_j) return E.doubled(i, 0);
    long long slope = E.aij * i + E.aj; // vertex at j = -slope / (2 ajj)
    if (slope >= 0) return 4 * E.ajj * E.doubled(i, 0);
    return 4 * E.ajj * (E.aii * i * i + E.ai * i + E.a0) - slope * slope;
}

} // namespace

QSeries double_sum(const DoubleSumSpec& spec, int order) {
    spec.validate();
    const auto& E = spec.exponent;
    const bool has_j = spec.denom_step_j > 0;
    QSeries acc(order, 0); // grows downward if a Laurent term shows up

    const long long target = has_j ? 8LL * E.ajj * order : 2LL * order;
    const long long guard = 4 * (order + 8LL) + std::llabs(E.ai) + std::llabs(E.aij) +
                            std::llabs(E.aj);
    long long prev_row_min = 0;
    bool have_prev = false;
    for (long long i = 0;; ++i) {
        long long row_min = row_min_scaled(E, i, has_j);
        if (row_min > target && have_prev && row_min >= prev_row_min) break;
        if (i > guard) fail(errc::unbounded_spec, "cutoff failed to terminate");
        prev_row_min = row_min;
        have_prev = true;
        if (row_min <= target) {
            for (long long j = 0;; ++j) {
                long long d = E.doubled(i, j);
                if (d <= 2LL * order) {
                    long long e = E(i, j);
                    QMonomial lead;
                    lead.coef = 1;
                    switch (spec.sign) {
                        case SignRule::plus: break;
                        case SignRule::alternating_j:
                            if (j % 2) lead.coef = -1;
                            break;
                        case SignRule::alternating_ij:
                            if ((i + j) % 2) lead.coef = -1;
                            break;
                    }
                    auto set_exp = [&](Var var, const LinearForm& f) {
                        long long v = f(i, j);
                        if (v < 0)
                            fail(errc::bad_params, "negative variable exponent in spec");
                        lead.mono[var] = static_cast<int>(v);
                    };
                    set_exp(Var::x, spec.x_exp);
                    set_exp(Var::y, spec.y_exp);
                    set_exp(Var::u, spec.u_exp);
                    set_exp(Var::v, spec.v_exp);
                    lead.qexp = static_cast<int>(e);

                    int inner_order = order - static_cast<int>(std::min<long long>(e, 0));
                    QSeries denom =
                        inverse_pochhammer(spec.denom_step_i, static_cast<int>(i), inner_order);
                    if (has_j && j > 0)
                        denom = denom.mul(inverse_pochhammer(spec.denom_step_j,
                                                             static_cast<int>(j), inner_order));
                    acc += denom.mul_monomial(lead).truncated(order);
                } else if (!has_j || E.doubled(i, j + 1) >= d) {
                    break;
                }
                if (!has_j) break;
            }
        }
    }
    return acc;
}

} // namespace solq
