#pragma once

#include "solq/family.hpp"
#include "solq/qseries.hpp"

#include <utility>
#include <vector>

namespace solq {

/// Statistics that can mark a variable in an enumeration generating function.
enum class Stat {
    length,
    distinct_sizes,
    repeated_sizes,
    odd_seq_count,          // strict families only
    residue_seq_count,      // d_ka families only
    length_minus_odd_seq,
    length_minus_3_repeated,
};

/// Each entry contributes var^{stat(lambda)}; repeated variables accumulate.
using WeightMap = std::vector<std::pair<Stat, Var>>;

/// Brute-force generating function: sums the weight-map monomial of every
/// family member of weight n <= order. The oracle side of every enumeration
/// check in the registry.
QSeries gf_enumerate(const FamilyTag& tag, const WeightMap& weights, int order);

} // namespace solq
