#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace solq {

/// An integer partition stored as its weakly increasing list of positive parts.
/// The empty partition is the unique object of weight 0. Immutable after
/// construction; freely copyable and shareable across threads.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition of(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    long long weight() const noexcept;
    int multiplicity(int value) const noexcept;
    bool is_strict() const noexcept;

    auto operator<=>(const Partition&) const = default;

    /// "2+4+5" in increasing order; the empty partition prints as "0".
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// A maximal run of consecutive parts in a strict partition:
/// start, start+1, ..., start+length-1, with start-1 and start+length absent.
struct SequenceBlock {
    int start = 0;
    int length = 0;
    auto operator<=>(const SequenceBlock&) const = default;
};

struct PartitionStats {
    int length = 0;          // number of parts
    int distinct_sizes = 0;  // number of different part sizes
    int repeated_sizes = 0;  // number of sizes occurring more than once
    std::optional<int> odd_seq_count;       // sequences of odd length; strict only
    std::vector<SequenceBlock> sequences;   // populated for strict partitions only
};

/// Sequence decomposition of a strict partition. Throws not_strict otherwise.
std::vector<SequenceBlock> sequences(const Partition& p);

PartitionStats stats(const Partition& p);

/// Number of sequences whose length is congruent to a (mod k), for a strict
/// partition all of whose sequence lengths are 0 or a (mod k). Requires
/// k > a >= 1; throws not_member when some sequence length violates the
/// residue condition.
int sl_count(const Partition& p, int k, int a);

/// Ferrers diagram as text, rows top-down largest-first, one '#' per cell.
std::string ferrers(const Partition& p);

} // namespace solq
