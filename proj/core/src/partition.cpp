#include "solq/partition.hpp"

#include "solq/error.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace solq {

const char* to_string(errc code) noexcept {
    switch (code) {
        case errc::not_strict: return "NOT_STRICT";
        case errc::not_member: return "NOT_MEMBER";
        case errc::bad_params: return "BAD_PARAMS";
        case errc::bad_increment: return "BAD_INCREMENT";
        case errc::truncation_underflow: return "TRUNCATION_UNDERFLOW";
        case errc::divergent_product: return "DIVERGENT_PRODUCT";
        case errc::unbounded_spec: return "UNBOUNDED_SPEC";
        case errc::no_enum_form: return "NO_ENUM_FORM";
        case errc::invalid_labels: return "INVALID_LABELS";
        case errc::invalid_pair: return "INVALID_PAIR";
        case errc::internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            fail(errc::bad_params, "partition parts must be positive");
        if (i > 0 && parts_[i - 1] > parts_[i])
            fail(errc::bad_params, "partition parts must be weakly increasing");
    }
}

Partition Partition::of(std::initializer_list<int> parts) {
    return Partition(std::vector<int>(parts));
}

long long Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::multiplicity(int value) const noexcept {
    int count = 0;
    for (int p : parts_)
        if (p == value) ++count;
    return count;
}

bool Partition::is_strict() const noexcept {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] == parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << '+';
        out << parts_[i];
    }
    return out.str();
}

std::vector<SequenceBlock> sequences(const Partition& p) {
    if (!p.is_strict())
        fail(errc::not_strict, "sequence decomposition needs distinct parts: " + p.to_string());
    std::vector<SequenceBlock> blocks;
    for (int part : p.parts()) {
        if (!blocks.empty() && blocks.back().start + blocks.back().length == part)
            ++blocks.back().length;
        else
            blocks.push_back({part, 1});
    }
    return blocks;
}

PartitionStats stats(const Partition& p) {
    PartitionStats s;
    s.length = p.length();
    std::map<int, int> mult;
    for (int part : p.parts()) ++mult[part];
    s.distinct_sizes = static_cast<int>(mult.size());
    for (const auto& [size, count] : mult)
        if (count > 1) ++s.repeated_sizes;
    if (p.is_strict()) {
        s.sequences = sequences(p);
        int odd = 0;
        for (const auto& b : s.sequences)
            if (b.length % 2 == 1) ++odd;
        s.odd_seq_count = odd;
    }
    return s;
}

int sl_count(const Partition& p, int k, int a) {
    if (!(k > a && a >= 1))
        fail(errc::bad_params, "sl_count needs k > a >= 1");
    int count = 0;
    for (const auto& b : sequences(p)) {
        int r = b.length % k;
        if (r == a % k)
            ++count;
        else if (r != 0)
            fail(errc::not_member, "sequence length " + std::to_string(b.length) +
                                       " incompatible with (k,a)=(" + std::to_string(k) + "," +
                                       std::to_string(a) + ")");
    }
    return count;
}

std::string ferrers(const Partition& p) {
    std::string out;
    const auto& parts = p.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        out.append(static_cast<size_t>(*it), '#');
        if (std::next(it) != parts.rend()) out.push_back('\n');
    }
    return out;
}

} // namespace solq
