#pragma once

#include "solq/partition.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace solq {

/// Describes a restricted partition family. Construct through the named
/// factories; parameters are validated there.
struct FamilyTag {
    enum class Kind {
        all,           // every partition
        strict,        // distinct parts
        odd_distinct,  // distinct odd parts
        rr,            // parts mutually at least 2 apart
        rr2,           // same, with all parts > 1
        mod,           // parts restricted to residue classes mod m
        even_parts,    // every part even
        multiples,     // every part a multiple of m
        d_ka,          // strict, sequence lengths all 0 or a (mod k)
        c_family,      // multiplicity <= 2, distinct neighbours >= 2 apart
        w_family,      // the triple-block family (see classify for the gap table)
    };

    Kind kind = Kind::all;
    int modulus = 0;             // mod / multiples
    std::vector<int> residues;   // mod
    int k = 0, a = 0;            // d_ka
    std::optional<int> max_length;

    static FamilyTag all();
    static FamilyTag strict();
    static FamilyTag odd_distinct();
    static FamilyTag rr();
    static FamilyTag rr2();
    static FamilyTag mod(int modulus, std::vector<int> residues);
    static FamilyTag even_parts();
    static FamilyTag multiples(int m);
    static FamilyTag d_ka(int k, int a);
    static FamilyTag c_family();
    static FamilyTag w_family();

    FamilyTag with_max_length(int n) const;

    std::string name() const;

    bool operator==(const FamilyTag&) const = default;
};

struct Classification {
    bool member = false;
    // Block signature for c_family (len = i+2j), d_ka (len = a*i+k*j) and
    // w_family (len = i+3j); j counts repeated sizes for c/w and k-runs for d_ka.
    std::optional<int> i, j;
    std::optional<int> sl;  // d_ka only
};

Classification classify(const Partition& p, const FamilyTag& tag);

/// Streams the weight-n members of the family in lexicographic order on the
/// increasing part list. Return false from the callback to stop early.
void enumerate(long long n, const FamilyTag& tag,
               const std::function<bool(const Partition&)>& emit);

std::vector<Partition> enumerate_all(long long n, const FamilyTag& tag);

long long family_count(long long n, const FamilyTag& tag);

/// Reference path: walks every partition of n and filters with classify.
/// Slower than enumerate but independent of the per-family generators.
void enumerate_filtered(long long n, const FamilyTag& tag,
                        const std::function<bool(const Partition&)>& emit);

} // namespace solq
