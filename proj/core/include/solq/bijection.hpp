#pragma once

#include "solq/partition.hpp"

#include <string>
#include <vector>

namespace solq {

/// The four base+increments constructions. Every kind has movable blocks of
/// k_len parts walked by the increment partition eta and free blocks of a_len
/// parts walked by mu:
///   main:    movable [b, b+1],      free singletons, strict partitions
///   cpair:   movable [t, t],        free singletons, the c family
///   ka:      movable k consecutive, free a consecutive, (k,a)-strict
///   wtriple: movable [t, t, t+1],   free singletons, the w family
struct BaseKind {
    enum class Family { main, cpair, ka, wtriple };

    Family family = Family::main;
    int k = 2, a = 1; // ka only; fixed otherwise
    int i = 0, j = 0;

    static BaseKind main(int i, int j);
    static BaseKind cpair(int i, int j);
    static BaseKind ka(int k, int a, int i, int j);
    static BaseKind wtriple(int i, int j);

    int movable_len() const; // parts per movable block
    int free_len() const;    // parts per free block

    std::string to_string() const; // "main:2,2", "ka:3,1:2,2"
    bool operator==(const BaseKind&) const = default;
};

struct Block {
    enum class Type { movable, free };
    Type type = Type::free;
    std::vector<int> parts; // consecutive or repeated per kind, increasing

    int min() const { return parts.front(); }
    int max() const { return parts.back(); }
    bool operator==(const Block&) const = default;
};

/// A partition with its block structure made explicit. Flattening yields a
/// member of the kind's target family at every step of a move sequence.
class BlockPartition {
public:
    BlockPartition() = default;
    BlockPartition(BaseKind kind, std::vector<Block> blocks);

    const BaseKind& kind() const { return kind_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    Partition flatten() const;

    /// Family membership plus block-shape sanity; throws internal on
    /// violation (the move engine relies on this after every step).
    void validate() const;

    std::string to_string() const; // bracket notation: "[1, 2], [3, 4], 5, 7"
    bool operator==(const BlockPartition&) const = default;

private:
    BaseKind kind_;
    std::vector<Block> blocks_;
};

struct MoveStep {
    enum class Op { forward, backward, adjustment, normalization };
    Op op;
    int block = 0; // index into the snapshot's block list
    BlockPartition snapshot;
};

const char* to_string(MoveStep::Op op) noexcept;

struct MoveTrace {
    BaseKind kind;
    BlockPartition initial;
    std::vector<MoveStep> steps;
};

/// The minimum-weight member of the kind's family with block signature (i, j).
BlockPartition base_partition(const BaseKind& kind);

/// Folds the increment partitions into the base: mu drives forward moves on
/// the free blocks (largest part to largest block first), then eta on the
/// movable blocks, with zero-weight adjustments applied as soon as a move
/// collides with a free block.
std::pair<Partition, MoveTrace> phi(const BaseKind& kind, const Partition& mu,
                                    const Partition& eta);

struct PhiInverse {
    BaseKind kind;
    Partition mu;
    Partition eta;
    MoveTrace trace;
};

/// Recovers (kind, mu, eta) from a family member; indices are inferred.
/// k and a are only consulted for the ka family.
PhiInverse phi_inverse(BaseKind::Family family, const Partition& lambda, int k = 0, int a = 0);

/// The gap-2 prototype: lambda = (1, 3, ..., 2n-1) + iota partwise.
std::pair<int, Partition> rr_decompose(const Partition& lambda);
Partition rr_compose(int n, const Partition& iota);

} // namespace solq
