#pragma once

#include "solq/intpoly.hpp"
#include "solq/partition.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace solq {

// ---------------------------------------------------------------------------
// psi: the sign-reversing involution on the c family. Fixed points are the
// strict partitions into odd parts; elsewhere it flips the parity of the
// number of repeated sizes while preserving weight and distinct-size count.
// ---------------------------------------------------------------------------

/// Landmarks of a c-family partition. nullopt encodes -infinity.
struct CState {
    Partition lambda;
    std::optional<int> largest_repeated;              // lrp
    std::optional<int> smallest_in_largest_even_run;  // sle
    std::vector<std::vector<int>> even_runs;          // runs of even singletons, step 2
};

CState psi_landmarks(const Partition& lambda);

enum class PsiCase { fixed, case_i, case_ii };

const char* to_string(PsiCase c) noexcept;

struct PsiStep {
    enum class Op { pair_advance, merge, chain_step, split };
    Op op;
    std::vector<int> parts;        // settled parts, excluding any marked pair
    std::optional<int> pair_value; // the walking repeated pair, if any
    std::optional<int> moving;     // the descending even part in the chain
    std::string note;
};

struct PsiResult {
    Partition gamma;
    PsiCase kase = PsiCase::fixed;
    std::optional<int> merged_part; // case I: the even part the pair became
    std::optional<int> split_part;  // case II: the value of the new repeated pair
    std::vector<PsiStep> trace;
};

PsiResult psi(const Partition& lambda);

struct PsiOrbits {
    std::vector<Partition> fixed;
    // (element mapped by case I, element mapped by case II), sorted by the
    // case-I element's part list
    std::vector<std::pair<Partition, Partition>> pairs;
};

PsiOrbits psi_orbits(long long n);

// ---------------------------------------------------------------------------
// theta: the killing involution on weighted pairs. The first component is a
// labeled strict partition, the second a strict partition with a floor on its
// parts; non-fixed points cancel in signed weight.
// ---------------------------------------------------------------------------

struct LabeledPart {
    int value = 0;
    bool label_x = false; // y otherwise
    auto operator<=>(const LabeledPart&) const = default;
};

/// Strictly increasing parts, each labeled x or y; x is only allowed when the
/// gap to the next part is at least 2 (the largest part may always be x).
class LabeledPartition {
public:
    LabeledPartition() = default;
    explicit LabeledPartition(std::vector<LabeledPart> parts);

    const std::vector<LabeledPart>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long weight() const;
    Partition shape() const;
    IntPoly label_weight() const; // x^{#x} y^{#y}

    auto operator<=>(const LabeledPartition&) const = default;
    std::string to_string() const; // "1+2+4x" style, y labels implicit

private:
    std::vector<LabeledPart> parts_;
};

/// A pair (A, B): A labeled with j parts, B strict with every part >= j+1
/// and each part weighted -y.
struct WeightedPair {
    LabeledPartition a;
    Partition b;

    long long weight() const { return a.weight() + b.weight(); }
    auto operator<=>(const WeightedPair&) const = default;
    std::string to_string() const;
};

void validate_pair(const WeightedPair& pair); // throws invalid_pair

/// Signed monomial (-1)^{len B} x^{#x} y^{#y + len B}.
IntPoly pair_weight(const WeightedPair& pair);

struct SequenceVerdict {
    int start_index = 0; // 0-based index of the first part of the sequence
    int length = 0;
    bool bad = false; // even length ending in x, or odd length ending in y
};

struct LShapeProfile {
    std::vector<long long> sizes;       // s_k = part_k + len - k (1-based k)
    std::optional<long long> first_bad; // sfb; nullopt encodes +infinity
};

std::pair<std::vector<SequenceVerdict>, LShapeProfile>
bad_sequences(const LabeledPartition& a);

enum class ThetaCase { fixed, case_i, case_ii };

const char* to_string(ThetaCase c) noexcept;

struct ThetaResult {
    WeightedPair image;
    ThetaCase kase = ThetaCase::fixed;
    std::optional<long long> sfb;
    std::optional<int> mu1;
    int block_index = 0; // L-shape deleted (case I) or inserted (case II), 1-based
};

ThetaResult theta(const WeightedPair& pair);

struct ThetaOrbits {
    std::vector<WeightedPair> fixed;
    std::vector<std::pair<WeightedPair, WeightedPair>> pairs; // (case I, case II)
};

ThetaOrbits theta_orbits(long long total_weight);

/// All weighted pairs of the given total weight, lexicographic.
std::vector<WeightedPair> enumerate_pairs(long long total_weight);

} // namespace solq
