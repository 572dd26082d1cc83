#include "solq/bijection.hpp"

#include "solq/error.hpp"
#include "solq/family.hpp"

#include <algorithm>
#include <sstream>

namespace solq {

BaseKind BaseKind::main(int i, int j) {
    if (i < 0 || j < 0) fail(errc::bad_params, "indices must be >= 0");
    return {Family::main, 2, 1, i, j};
}

BaseKind BaseKind::cpair(int i, int j) {
    if (i < 0 || j < 0) fail(errc::bad_params, "indices must be >= 0");
    return {Family::cpair, 2, 1, i, j};
}

BaseKind BaseKind::ka(int k, int a, int i, int j) {
    if (!(k > a && a >= 1)) fail(errc::bad_params, "ka kind needs k > a >= 1");
    if (i < 0 || j < 0) fail(errc::bad_params, "indices must be >= 0");
    return {Family::ka, k, a, i, j};
}

BaseKind BaseKind::wtriple(int i, int j) {
    if (i < 0 || j < 0) fail(errc::bad_params, "indices must be >= 0");
    return {Family::wtriple, 3, 1, i, j};
}

int BaseKind::movable_len() const {
    switch (family) {
        case Family::main:
        case Family::cpair: return 2;
        case Family::ka: return k;
        case Family::wtriple: return 3;
    }
    return 0;
}

int BaseKind::free_len() const {
    return family == Family::ka ? a : 1;
}

std::string BaseKind::to_string() const {
    std::ostringstream out;
    switch (family) {
        case Family::main: out << "main:"; break;
        case Family::cpair: out << "cpair:"; break;
        case Family::ka: out << "ka:" << k << "," << a << ":"; break;
        case Family::wtriple: out << "w:"; break;
    }
    out << i << "," << j;
    return out.str();
}

const char* to_string(MoveStep::Op op) noexcept {
    switch (op) {
        case MoveStep::Op::forward: return "FORWARD";
        case MoveStep::Op::backward: return "BACKWARD";
        case MoveStep::Op::adjustment: return "ADJUSTMENT";
        case MoveStep::Op::normalization: return "NORMALIZATION";
    }
    return "?";
}

namespace {

// shape of a single block for the given kind
void check_block_shape(const BaseKind& kind, const Block& b) {
    bool ok = true;
    if (b.type == Block::Type::movable) {
        switch (kind.family) {
            case BaseKind::Family::main:
                ok = b.parts.size() == 2 && b.parts[1] == b.parts[0] + 1;
                break;
            case BaseKind::Family::cpair:
                ok = b.parts.size() == 2 && b.parts[1] == b.parts[0];
                break;
            case BaseKind::Family::ka:
                ok = static_cast<int>(b.parts.size()) == kind.k;
                for (size_t t = 1; ok && t < b.parts.size(); ++t)
                    ok = b.parts[t] == b.parts[t - 1] + 1;
                break;
            case BaseKind::Family::wtriple:
                ok = b.parts.size() == 3 && b.parts[1] == b.parts[0] &&
                     b.parts[2] == b.parts[0] + 1;
                break;
        }
    } else {
        switch (kind.family) {
            case BaseKind::Family::ka:
                ok = static_cast<int>(b.parts.size()) == kind.a;
                for (size_t t = 1; ok && t < b.parts.size(); ++t)
                    ok = b.parts[t] == b.parts[t - 1] + 1;
                break;
            default:
                ok = b.parts.size() == 1;
                break;
        }
    }
    if (!ok || b.parts.empty() || b.parts.front() < 1)
        fail(errc::internal, "malformed block in " + kind.to_string());
}

FamilyTag target_family(const BaseKind& kind) {
    switch (kind.family) {
        case BaseKind::Family::main: return FamilyTag::strict();
        case BaseKind::Family::cpair: return FamilyTag::c_family();
        case BaseKind::Family::ka: return FamilyTag::d_ka(kind.k, kind.a);
        case BaseKind::Family::wtriple: return FamilyTag::w_family();
    }
    return FamilyTag::all();
}

} // namespace

BlockPartition::BlockPartition(BaseKind kind, std::vector<Block> blocks)
    : kind_(kind), blocks_(std::move(blocks)) {}

Partition BlockPartition::flatten() const {
    std::vector<int> parts;
    for (const auto& b : blocks_) parts.insert(parts.end(), b.parts.begin(), b.parts.end());
    std::sort(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

void BlockPartition::validate() const {
    int movables = 0, frees = 0;
    int prev_max = 0;
    for (const auto& b : blocks_) {
        check_block_shape(kind_, b);
        if (b.min() <= prev_max)
            fail(errc::internal, "blocks out of order in " + to_string());
        prev_max = b.max();
        (b.type == Block::Type::movable ? movables : frees)++;
    }
    if (movables != kind_.j || frees != kind_.i)
        fail(errc::internal, "block counts drifted in " + to_string());

    Partition flat = flatten();
    auto cls = classify(flat, target_family(kind_));
    bool stats_ok = cls.member;
    if (stats_ok) {
        switch (kind_.family) {
            case BaseKind::Family::main: {
                auto st = stats(flat);
                stats_ok = st.odd_seq_count == kind_.i && st.length == kind_.i + 2 * kind_.j;
                break;
            }
            case BaseKind::Family::cpair:
            case BaseKind::Family::wtriple:
            case BaseKind::Family::ka:
                stats_ok = cls.i == kind_.i && cls.j == kind_.j;
                break;
        }
    }
    if (!stats_ok)
        fail(errc::internal,
             "intermediate state left the family: " + to_string() + " as " + flat.to_string());
}

std::string BlockPartition::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& b : blocks_) {
        if (!first) out << ", ";
        first = false;
        if (b.type == Block::Type::movable) {
            out << "[";
            for (size_t t = 0; t < b.parts.size(); ++t) out << (t ? ", " : "") << b.parts[t];
            out << "]";
        } else {
            if (kind_.family == BaseKind::Family::ka && kind_.a > 1) {
                out << "(";
                for (size_t t = 0; t < b.parts.size(); ++t) out << (t ? ", " : "") << b.parts[t];
                out << ")";
            } else {
                out << b.parts[0];
            }
        }
    }
    if (blocks_.empty()) out << "0";
    return out.str();
}

BlockPartition base_partition(const BaseKind& kind) {
    std::vector<Block> blocks;
    const int i = kind.i, j = kind.j;
    switch (kind.family) {
        case BaseKind::Family::main:
            for (int t = 1; t <= j; ++t)
                blocks.push_back({Block::Type::movable, {2 * t - 1, 2 * t}});
            for (int t = 1; t <= i; ++t)
                blocks.push_back({Block::Type::free, {2 * j + 2 * t - 1}});
            break;
        case BaseKind::Family::cpair:
            for (int t = 1; t <= j; ++t)
                blocks.push_back({Block::Type::movable, {2 * t - 1, 2 * t - 1}});
            for (int t = 1; t <= i; ++t)
                blocks.push_back({Block::Type::free, {2 * j + 2 * t - 1}});
            break;
        case BaseKind::Family::ka: {
            const int k = kind.k, a = kind.a;
            for (int t = 1; t <= j; ++t) {
                Block b{Block::Type::movable, {}};
                for (int s = (t - 1) * k + 1; s <= t * k; ++s) b.parts.push_back(s);
                blocks.push_back(std::move(b));
            }
            for (int t = 1; t <= i; ++t) {
                Block b{Block::Type::free, {}};
                int start = j * k + (t - 1) * a + t;
                for (int s = start; s < start + a; ++s) b.parts.push_back(s);
                blocks.push_back(std::move(b));
            }
            break;
        }
        case BaseKind::Family::wtriple:
            for (int t = 1; t <= j; ++t)
                blocks.push_back({Block::Type::movable, {3 * t - 1, 3 * t - 1, 3 * t}});
            for (int t = 1; t <= i; ++t)
                blocks.push_back({Block::Type::free, {3 * j + 2 * t}});
            break;
    }
    BlockPartition bp(kind, std::move(blocks));
    bp.validate();
    return bp;
}

namespace {

struct MoveEngine {
    BaseKind kind;
    std::vector<Block> blocks;
    MoveTrace trace;

    BlockPartition state() const { return BlockPartition(kind, blocks); }

    // raw snapshots capture the colliding state between a move and its
    // zero-weight repair, the way the step displays read
    void record(MoveStep::Op op, int block, bool settled = true) {
        BlockPartition snap = state();
        if (settled) snap.validate();
        trace.steps.push_back({op, block, std::move(snap)});
    }

    // gap between a movable block's top and the free block above that
    // signals a collision after a forward move
    int forward_collision_gap() const {
        switch (kind.family) {
            case BaseKind::Family::main:
            case BaseKind::Family::ka: return 0; // duplicate part
            case BaseKind::Family::cpair:
            case BaseKind::Family::wtriple: return 1; // family gap violation
        }
        return 0;
    }

    void shift(Block& b, int delta) {
        for (int& p : b.parts) p += delta;
    }

    // one forward move on the movable block at index idx, adjusting past free
    // blocks as needed; returns the block's new index
    int forward(int idx) {
        shift(blocks[idx], +1);
        bool collided = idx + 1 < static_cast<int>(blocks.size()) &&
                        blocks[idx + 1].min() - blocks[idx].max() == forward_collision_gap();
        if (collided && blocks[idx + 1].type == Block::Type::movable)
            fail(errc::internal, "movable blocks collided in " + state().to_string());
        if (!collided) {
            record(MoveStep::Op::forward, idx);
            return idx;
        }
        record(MoveStep::Op::forward, idx, /*settled=*/false);
        shift(blocks[idx], kind.free_len());
        shift(blocks[idx + 1], -kind.movable_len());
        std::swap(blocks[idx], blocks[idx + 1]);
        record(MoveStep::Op::adjustment, idx + 1);
        return idx + 1;
    }

    // one backward move on the movable block at index idx, normalizing past
    // free blocks; returns the block's new index
    int backward(int idx) {
        shift(blocks[idx], -1);
        bool collided = idx > 0 && blocks[idx].min() - blocks[idx - 1].max() == 1 &&
                        blocks[idx - 1].type == Block::Type::free;
        if (idx > 0 && blocks[idx].min() <= blocks[idx - 1].max() &&
            blocks[idx - 1].type == Block::Type::movable)
            fail(errc::internal, "movable blocks collided in " + state().to_string());
        if (!collided) {
            record(MoveStep::Op::backward, idx);
            return idx;
        }
        record(MoveStep::Op::backward, idx, /*settled=*/false);
        shift(blocks[idx], -kind.free_len());
        shift(blocks[idx - 1], +kind.movable_len());
        std::swap(blocks[idx], blocks[idx - 1]);
        record(MoveStep::Op::normalization, idx - 1);
        return idx - 1;
    }

    int movable_index(int rank) const { return block_index(Block::Type::movable, rank); }
    int free_index(int rank) const { return block_index(Block::Type::free, rank); }

    int block_index(Block::Type type, int rank) const {
        int seen = 0;
        for (int idx = 0; idx < static_cast<int>(blocks.size()); ++idx)
            if (blocks[idx].type == type && ++seen == rank) return idx;
        fail(errc::internal, "block rank out of range");
    }
};

// mu in P_i / T^a_i, eta in E_j / T^k_j / T^3_j depending on the kind
void check_increments(const BaseKind& kind, const Partition& mu, const Partition& eta) {
    const int a = kind.free_len();
    const int m = kind.movable_len();
    if (mu.length() > kind.i)
        fail(errc::bad_increment, "mu has more than i parts");
    if (eta.length() > kind.j)
        fail(errc::bad_increment, "eta has more than j parts");
    int mu_step = kind.family == BaseKind::Family::ka ? a : 1;
    int eta_step = kind.family == BaseKind::Family::main || kind.family == BaseKind::Family::cpair
                       ? 2
                       : m;
    for (int p : mu.parts())
        if (p % mu_step != 0)
            fail(errc::bad_increment, "mu parts must be multiples of " + std::to_string(mu_step));
    for (int p : eta.parts())
        if (p % eta_step != 0)
            fail(errc::bad_increment, "eta parts must be multiples of " + std::to_string(eta_step));
}

std::vector<int> padded(const Partition& p, int len) {
    std::vector<int> parts(static_cast<size_t>(len), 0);
    // parts are weakly increasing; right-align so the largest lands last
    int offset = len - p.length();
    for (int t = 0; t < p.length(); ++t) parts[static_cast<size_t>(offset + t)] = p.parts()[t];
    return parts;
}

} // namespace

std::pair<Partition, MoveTrace> phi(const BaseKind& kind, const Partition& mu,
                                    const Partition& eta) {
    check_increments(kind, mu, eta);
    BlockPartition base = base_partition(kind);
    MoveEngine eng{kind, base.blocks(), {kind, base, {}}};

    const int a = kind.free_len();
    const int mlen = kind.movable_len();
    std::vector<int> mu_parts = padded(mu, kind.i);
    std::vector<int> eta_parts = padded(eta, kind.j);

    // Phase I: largest part of mu onto the largest free block, then downward.
    for (int rank = kind.i; rank >= 1; --rank) {
        int moves = mu_parts[static_cast<size_t>(rank - 1)] / (kind.family == BaseKind::Family::ka ? a : 1);
        int idx = eng.free_index(rank);
        for (int t = 0; t < moves; ++t) {
            eng.shift(eng.blocks[idx], +1);
            eng.record(MoveStep::Op::forward, idx);
        }
    }
    // Phase II: largest part of eta onto the largest movable block, downward.
    int eta_step = kind.family == BaseKind::Family::ka ? mlen
                   : kind.family == BaseKind::Family::wtriple ? 3
                                                              : 2;
    for (int rank = kind.j; rank >= 1; --rank) {
        int moves = eta_parts[static_cast<size_t>(rank - 1)] / eta_step;
        int idx = eng.movable_index(rank);
        for (int t = 0; t < moves; ++t) idx = eng.forward(idx);
    }
    Partition out = eng.state().flatten();
    return {out, std::move(eng.trace)};
}

namespace {

// canonical block derivation: movable blocks fill each sequence from the
// bottom, the leftover a-run (or singleton) sits on top
std::vector<Block> derive_blocks(const BaseKind& kind, const Partition& lambda) {
    std::vector<Block> blocks;
    switch (kind.family) {
        case BaseKind::Family::main:
        case BaseKind::Family::ka: {
            const int k = kind.movable_len(), a = kind.free_len();
            for (const auto& seq : sequences(lambda)) {
                int rem = seq.length % k;
                int pairs = seq.length / k;
                if (rem != 0) pairs = (seq.length - a) / k;
                int v = seq.start;
                for (int t = 0; t < pairs; ++t) {
                    Block b{Block::Type::movable, {}};
                    for (int s = 0; s < k; ++s) b.parts.push_back(v++);
                    blocks.push_back(std::move(b));
                }
                if (rem != 0) {
                    Block b{Block::Type::free, {}};
                    for (int s = 0; s < a; ++s) b.parts.push_back(v++);
                    blocks.push_back(std::move(b));
                }
            }
            break;
        }
        case BaseKind::Family::cpair: {
            const auto& parts = lambda.parts();
            for (size_t t = 0; t < parts.size();) {
                if (t + 1 < parts.size() && parts[t] == parts[t + 1]) {
                    blocks.push_back({Block::Type::movable, {parts[t], parts[t]}});
                    t += 2;
                } else {
                    blocks.push_back({Block::Type::free, {parts[t]}});
                    ++t;
                }
            }
            break;
        }
        case BaseKind::Family::wtriple: {
            const auto& parts = lambda.parts();
            for (size_t t = 0; t < parts.size();) {
                if (t + 1 < parts.size() && parts[t] == parts[t + 1]) {
                    blocks.push_back(
                        {Block::Type::movable, {parts[t], parts[t], parts[t] + 1}});
                    t += 3; // the +1 part is forced to follow the pair
                } else {
                    blocks.push_back({Block::Type::free, {parts[t]}});
                    ++t;
                }
            }
            break;
        }
    }
    return blocks;
}

} // namespace

PhiInverse phi_inverse(BaseKind::Family family, const Partition& lambda, int k, int a) {
    BaseKind kind;
    switch (family) {
        case BaseKind::Family::main: {
            auto st = stats(lambda);
            if (!st.odd_seq_count) fail(errc::not_member, lambda.to_string() + " is not strict");
            int i = *st.odd_seq_count;
            if ((st.length - i) % 2 != 0) fail(errc::internal, "parity bookkeeping failed");
            kind = BaseKind::main(i, (st.length - i) / 2);
            break;
        }
        case BaseKind::Family::cpair: {
            auto cls = classify(lambda, FamilyTag::c_family());
            if (!cls.member) fail(errc::not_member, lambda.to_string() + " is not in the c family");
            kind = BaseKind::cpair(*cls.i, *cls.j);
            break;
        }
        case BaseKind::Family::ka: {
            auto cls = classify(lambda, FamilyTag::d_ka(k, a));
            if (!cls.member)
                fail(errc::not_member, lambda.to_string() + " is not (k,a)-strict");
            kind = BaseKind::ka(k, a, *cls.i, *cls.j);
            break;
        }
        case BaseKind::Family::wtriple: {
            auto cls = classify(lambda, FamilyTag::w_family());
            if (!cls.member) fail(errc::not_member, lambda.to_string() + " is not in the w family");
            kind = BaseKind::wtriple(*cls.i, *cls.j);
            break;
        }
    }

    MoveEngine eng{kind, derive_blocks(kind, lambda), {kind, {}, {}}};
    eng.trace.initial = eng.state();
    eng.trace.initial.validate();

    BlockPartition base = base_partition(kind);
    std::vector<int> base_movable_min, base_free_min;
    for (const auto& b : base.blocks())
        (b.type == Block::Type::movable ? base_movable_min : base_free_min).push_back(b.min());

    const int eta_step = kind.family == BaseKind::Family::cpair ||
                                 kind.family == BaseKind::Family::main
                             ? 2
                             : kind.movable_len();
    // Phase II': walk each movable block down to its base slot, smallest first.
    std::vector<int> eta_parts;
    for (int rank = 1; rank <= kind.j; ++rank) {
        int target = base_movable_min[static_cast<size_t>(rank - 1)];
        int idx = eng.movable_index(rank);
        int moves = 0;
        while (eng.blocks[idx].min() != target) {
            if (eng.blocks[idx].min() < target)
                fail(errc::internal, "movable block overshot its base slot");
            idx = eng.backward(idx);
            ++moves;
        }
        eta_parts.push_back(moves * eta_step);
    }
    // Phase I': free blocks, smallest first.
    std::vector<int> mu_parts;
    const int mu_step = kind.family == BaseKind::Family::ka ? kind.a : 1;
    for (int rank = 1; rank <= kind.i; ++rank) {
        int target = base_free_min[static_cast<size_t>(rank - 1)];
        int idx = eng.free_index(rank);
        int moves = eng.blocks[idx].min() - target;
        if (moves < 0) fail(errc::internal, "free block below its base slot");
        for (int t = 0; t < moves; ++t) {
            eng.shift(eng.blocks[idx], -1);
            eng.record(MoveStep::Op::backward, idx);
        }
        mu_parts.push_back(moves * mu_step);
    }
    if (eng.state() != base)
        fail(errc::internal, "inverse walk did not reach the base partition");
    for (size_t t = 1; t < eta_parts.size(); ++t)
        if (eta_parts[t - 1] > eta_parts[t])
            fail(errc::internal, "recovered eta is not weakly increasing");
    for (size_t t = 1; t < mu_parts.size(); ++t)
        if (mu_parts[t - 1] > mu_parts[t])
            fail(errc::internal, "recovered mu is not weakly increasing");

    auto strip = [](std::vector<int> parts) {
        std::erase(parts, 0);
        return Partition(std::move(parts));
    };
    return {kind, strip(mu_parts), strip(eta_parts), std::move(eng.trace)};
}

std::pair<int, Partition> rr_decompose(const Partition& lambda) {
    if (!classify(lambda, FamilyTag::rr()).member)
        fail(errc::not_member, lambda.to_string() + " has parts closer than 2 apart");
    int n = lambda.length();
    std::vector<int> iota;
    for (int t = 0; t < n; ++t) {
        int inc = lambda.parts()[static_cast<size_t>(t)] - (2 * t + 1);
        if (inc > 0) iota.push_back(inc);
    }
    std::sort(iota.begin(), iota.end());
    return {n, Partition(std::move(iota))};
}

Partition rr_compose(int n, const Partition& iota) {
    if (n < 0) fail(errc::bad_params, "n must be >= 0");
    if (iota.length() > n) fail(errc::not_member, "iota has more than n parts");
    std::vector<int> parts = padded(iota, n);
    for (int t = 0; t < n; ++t) parts[static_cast<size_t>(t)] += 2 * t + 1;
    return Partition(std::move(parts));
}

} // namespace solq
