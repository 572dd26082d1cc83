#pragma once

#include "solq/qseries.hpp"

namespace solq {

struct LinearForm {
    long long ci = 0, cj = 0, c0 = 0;
    long long operator()(long long i, long long j) const { return ci * i + cj * j + c0; }
};

/// Integer-valued quadratic in (i, j) with coefficients stored doubled:
/// value = (aii i^2 + aij ij + ajj j^2 + ai i + aj j + a0) / 2.
/// Half-integer binomial exponents fit this shape exactly.
struct QuadraticForm {
    long long aii = 0, aij = 0, ajj = 0, ai = 0, aj = 0, a0 = 0;

    long long doubled(long long i, long long j) const {
        return aii * i * i + aij * i * j + ajj * j * j + ai * i + aj * j + a0;
    }
    long long operator()(long long i, long long j) const;
};

enum class SignRule { plus, alternating_j, alternating_ij };

/// One double-sum side of an identity:
///   sum over i,j >= 0 of sign(i,j) x^.. y^.. u^.. v^.. q^{E(i,j)}
///     / ((q^{si}; q^{si})_i (q^{sj}; q^{sj})_j).
/// denom_step_j == 0 drops the j index entirely (single sums).
struct DoubleSumSpec {
    SignRule sign = SignRule::plus;
    QuadraticForm exponent;
    LinearForm x_exp, y_exp, u_exp, v_exp;
    int denom_step_i = 1;
    int denom_step_j = 0;

    /// Checks the growth precondition: the exponent must be strictly convex
    /// in the live indices so every truncation admits a finite cutoff.
    void validate() const;
};

QSeries double_sum(const DoubleSumSpec& spec, int order);

} // namespace solq
