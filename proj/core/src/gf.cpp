#include "solq/gf.hpp"

#include "solq/error.hpp"

namespace solq {

namespace {

int stat_value(Stat stat, const Partition& p, const PartitionStats& st, const FamilyTag& tag) {
    switch (stat) {
        case Stat::length: return st.length;
        case Stat::distinct_sizes: return st.distinct_sizes;
        case Stat::repeated_sizes: return st.repeated_sizes;
        case Stat::odd_seq_count:
            if (!st.odd_seq_count)
                fail(errc::bad_params, "odd-sequence count undefined on " + p.to_string());
            return *st.odd_seq_count;
        case Stat::residue_seq_count:
            if (tag.kind != FamilyTag::Kind::d_ka)
                fail(errc::bad_params, "residue sequence count needs a d_ka family");
            return sl_count(p, tag.k, tag.a);
        case Stat::length_minus_odd_seq:
            if (!st.odd_seq_count)
                fail(errc::bad_params, "odd-sequence count undefined on " + p.to_string());
            return st.length - *st.odd_seq_count;
        case Stat::length_minus_3_repeated:
            return st.length - 3 * st.repeated_sizes;
    }
    fail(errc::bad_params, "unknown statistic");
}

} // namespace

QSeries gf_enumerate(const FamilyTag& tag, const WeightMap& weights, int order) {
    if (order < 0) fail(errc::bad_params, "order must be >= 0");
    QSeries acc(order, 0);
    for (int n = 0; n <= order; ++n) {
        IntPoly coeff;
        enumerate(n, tag, [&](const Partition& p) {
            auto st = stats(p);
            Mono m;
            for (const auto& [stat, var] : weights) {
                int value = stat_value(stat, p, st, tag);
                if (value < 0) fail(errc::bad_params, "negative statistic exponent");
                m[var] += value;
            }
            coeff.add_term(m, 1);
            return true;
        });
        acc.add_term(n, coeff);
    }
    return acc;
}

} // namespace solq
