#include "solq/family.hpp"

#include "solq/error.hpp"

#include <algorithm>
#include <sstream>

namespace solq {

namespace {

void check_mod_params(int modulus, const std::vector<int>& residues) {
    if (modulus < 1) fail(errc::bad_params, "modulus must be >= 1");
    if (residues.empty()) fail(errc::bad_params, "residue set must be nonempty");
    for (int r : residues)
        if (r < 0 || r >= modulus) fail(errc::bad_params, "residues must lie in [0, modulus)");
}

} // namespace

namespace {
FamilyTag make_tag(FamilyTag::Kind kind) {
    FamilyTag t;
    t.kind = kind;
    return t;
}
} // namespace

FamilyTag FamilyTag::all() { return make_tag(Kind::all); }
FamilyTag FamilyTag::strict() { return make_tag(Kind::strict); }
FamilyTag FamilyTag::odd_distinct() { return make_tag(Kind::odd_distinct); }
FamilyTag FamilyTag::rr() { return make_tag(Kind::rr); }
FamilyTag FamilyTag::rr2() { return make_tag(Kind::rr2); }

FamilyTag FamilyTag::mod(int modulus, std::vector<int> residues) {
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    check_mod_params(modulus, residues);
    FamilyTag t = make_tag(Kind::mod);
    t.modulus = modulus;
    t.residues = std::move(residues);
    return t;
}

FamilyTag FamilyTag::even_parts() { return make_tag(Kind::even_parts); }

FamilyTag FamilyTag::multiples(int m) {
    if (m < 1) fail(errc::bad_params, "multiples(m) needs m >= 1");
    FamilyTag t = make_tag(Kind::multiples);
    t.modulus = m;
    return t;
}

FamilyTag FamilyTag::d_ka(int k, int a) {
    if (!(k > a && a >= 1)) fail(errc::bad_params, "d_ka needs k > a >= 1");
    FamilyTag t = make_tag(Kind::d_ka);
    t.k = k;
    t.a = a;
    return t;
}

FamilyTag FamilyTag::c_family() { return make_tag(Kind::c_family); }
FamilyTag FamilyTag::w_family() { return make_tag(Kind::w_family); }

FamilyTag FamilyTag::with_max_length(int n) const {
    if (n < 0) fail(errc::bad_params, "max_length must be >= 0");
    FamilyTag t = *this;
    t.max_length = n;
    return t;
}

std::string FamilyTag::name() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::all: out << "all"; break;
        case Kind::strict: out << "strict"; break;
        case Kind::odd_distinct: out << "odd_distinct"; break;
        case Kind::rr: out << "rr"; break;
        case Kind::rr2: out << "rr2"; break;
        case Kind::mod: {
            out << "mod(" << modulus << ";";
            for (size_t i = 0; i < residues.size(); ++i) out << (i ? "," : "") << residues[i];
            out << ")";
            break;
        }
        case Kind::even_parts: out << "even"; break;
        case Kind::multiples: out << "multiples(" << modulus << ")"; break;
        case Kind::d_ka: out << "d_ka(" << k << "," << a << ")"; break;
        case Kind::c_family: out << "c"; break;
        case Kind::w_family: out << "w"; break;
    }
    if (max_length) out << "[len<=" << *max_length << "]";
    return out.str();
}

namespace {

bool w_gaps_ok(const std::vector<int>& parts) {
    // lambda_0 = 0 by convention; the admissible next gap depends on the
    // previous one: after 0 exactly 1, after 1 at least 2, otherwise 0 or >= 2.
    int prev_gap = -1; // -1: no parts yet
    for (size_t idx = 0; idx < parts.size(); ++idx) {
        int gap = idx == 0 ? parts[0] : parts[idx] - parts[idx - 1];
        if (idx == 0) {
            if (gap < 2) return false;
        } else if (prev_gap == 0) {
            if (gap != 1) return false;
        } else if (prev_gap == 1) {
            if (gap < 2) return false;
        } else {
            if (gap != 0 && gap < 2) return false;
        }
        prev_gap = gap;
    }
    // a trailing repeated pair has no room for its third block member
    size_t n = parts.size();
    if (n >= 2 && parts[n - 1] == parts[n - 2]) return false;
    return true;
}

bool run_lengths_ok(const Partition& p, int k, int a) {
    for (const auto& b : sequences(p)) {
        int r = b.length % k;
        if (r != 0 && r != a % k) return false;
    }
    return true;
}

} // namespace

Classification classify(const Partition& p, const FamilyTag& tag) {
    if (tag.max_length && p.length() > *tag.max_length) return {};
    const auto& parts = p.parts();
    Classification out;
    switch (tag.kind) {
        case FamilyTag::Kind::all:
            out.member = true;
            break;
        case FamilyTag::Kind::strict:
            out.member = p.is_strict();
            break;
        case FamilyTag::Kind::odd_distinct:
            out.member = p.is_strict() &&
                         std::all_of(parts.begin(), parts.end(), [](int v) { return v % 2 == 1; });
            break;
        case FamilyTag::Kind::rr:
        case FamilyTag::Kind::rr2: {
            bool ok = tag.kind == FamilyTag::Kind::rr || parts.empty() || parts[0] > 1;
            for (size_t i = 1; ok && i < parts.size(); ++i)
                ok = parts[i] - parts[i - 1] >= 2;
            out.member = ok;
            break;
        }
        case FamilyTag::Kind::mod:
            out.member = std::all_of(parts.begin(), parts.end(), [&](int v) {
                return std::binary_search(tag.residues.begin(), tag.residues.end(), v % tag.modulus);
            });
            break;
        case FamilyTag::Kind::even_parts:
            out.member = std::all_of(parts.begin(), parts.end(), [](int v) { return v % 2 == 0; });
            break;
        case FamilyTag::Kind::multiples:
            out.member = std::all_of(parts.begin(), parts.end(),
                                     [&](int v) { return v % tag.modulus == 0; });
            break;
        case FamilyTag::Kind::d_ka: {
            if (!p.is_strict() || !run_lengths_ok(p, tag.k, tag.a)) break;
            int sl = sl_count(p, tag.k, tag.a);
            out.member = true;
            out.sl = sl;
            out.i = sl;
            long long rest = p.length() - static_cast<long long>(tag.a) * sl;
            if (rest % tag.k != 0)
                fail(errc::internal, "d_ka length bookkeeping failed for " + p.to_string());
            out.j = static_cast<int>(rest / tag.k);
            break;
        }
        case FamilyTag::Kind::c_family: {
            bool ok = true;
            for (size_t i = 0; ok && i < parts.size(); ++i) {
                if (i + 2 < parts.size() && parts[i] == parts[i + 2]) ok = false; // multiplicity 3
                if (i + 1 < parts.size() && parts[i] != parts[i + 1] &&
                    parts[i + 1] - parts[i] < 2)
                    ok = false;
            }
            if (!ok) break;
            auto st = stats(p);
            out.member = true;
            out.j = st.repeated_sizes;
            out.i = st.length - 2 * st.repeated_sizes;
            break;
        }
        case FamilyTag::Kind::w_family: {
            bool ok = true;
            for (size_t i = 0; ok && i + 2 < parts.size(); ++i)
                if (parts[i] == parts[i + 2]) ok = false;
            if (!ok || !w_gaps_ok(parts)) break;
            auto st = stats(p);
            int j = st.repeated_sizes;
            int i = st.length - 3 * j;
            if (i < 0) break;
            out.member = true;
            out.i = i;
            out.j = j;
            break;
        }
    }
    if (!out.member) return {};
    return out;
}

namespace {

// Recursive lexicographic generator. Emits weakly increasing part lists;
// per-family successor rules keep the walk inside the family wherever the
// constraints are local, with a final check for the non-local ones.
struct Generator {
    const FamilyTag& tag;
    const std::function<bool(const Partition&)>& emit;
    std::vector<int> prefix;

    bool final_ok(const Partition& p) const {
        switch (tag.kind) {
            case FamilyTag::Kind::d_ka:
                return run_lengths_ok(p, tag.k, tag.a);
            case FamilyTag::Kind::w_family: {
                size_t n = p.parts().size();
                return n < 2 || p.parts()[n - 1] != p.parts()[n - 2];
            }
            default:
                return true;
        }
    }

    bool deliver() {
        Partition p(prefix);
        if (!final_ok(p)) return true;
        return emit(p);
    }

    // returns false once the consumer has asked to stop
    bool walk(long long rem) {
        if (rem == 0) return deliver();
        if (tag.max_length && static_cast<int>(prefix.size()) >= *tag.max_length) return true;

        const int last = prefix.empty() ? 0 : prefix.back();
        auto push_try = [&](int v) {
            if (v > rem) return true;
            prefix.push_back(v);
            bool keep = walk(rem - v);
            prefix.pop_back();
            return keep;
        };

        switch (tag.kind) {
            case FamilyTag::Kind::all:
                for (int v = std::max(1, last); v <= rem; ++v)
                    if (!push_try(v)) return false;
                return true;
            case FamilyTag::Kind::strict:
            case FamilyTag::Kind::d_ka:
                for (int v = last + 1; v <= rem; ++v)
                    if (!push_try(v)) return false;
                return true;
            case FamilyTag::Kind::odd_distinct: {
                int v = last + 1;
                if (v % 2 == 0) ++v;
                for (; v <= rem; v += 2)
                    if (!push_try(v)) return false;
                return true;
            }
            case FamilyTag::Kind::rr:
            case FamilyTag::Kind::rr2: {
                int lo = prefix.empty() ? (tag.kind == FamilyTag::Kind::rr2 ? 2 : 1) : last + 2;
                for (int v = lo; v <= rem; ++v)
                    if (!push_try(v)) return false;
                return true;
            }
            case FamilyTag::Kind::mod: {
                for (int v = std::max(1, last); v <= rem; ++v) {
                    if (!std::binary_search(tag.residues.begin(), tag.residues.end(),
                                            v % tag.modulus))
                        continue;
                    if (!push_try(v)) return false;
                }
                return true;
            }
            case FamilyTag::Kind::even_parts: {
                int v = std::max(2, last);
                if (v % 2) ++v;
                for (; v <= rem; v += 2)
                    if (!push_try(v)) return false;
                return true;
            }
            case FamilyTag::Kind::multiples: {
                int m = tag.modulus;
                int v = std::max(m, last);
                if (v % m) v += m - v % m;
                for (; v <= rem; v += m)
                    if (!push_try(v)) return false;
                return true;
            }
            case FamilyTag::Kind::c_family: {
                if (!prefix.empty() &&
                    (prefix.size() < 2 || prefix[prefix.size() - 2] != last)) {
                    if (!push_try(last)) return false; // double the last size
                }
                for (int v = prefix.empty() ? 1 : last + 2; v <= rem; ++v)
                    if (!push_try(v)) return false;
                return true;
            }
            case FamilyTag::Kind::w_family: {
                if (prefix.empty()) {
                    for (int v = 2; v <= rem; ++v)
                        if (!push_try(v)) return false;
                    return true;
                }
                int prev_gap = prefix.size() == 1 ? prefix[0]
                                                  : last - prefix[prefix.size() - 2];
                if (prev_gap == 0) {
                    if (!push_try(last + 1)) return false;
                    return true;
                }
                if (prev_gap >= 2)
                    if (!push_try(last)) return false;
                for (int v = last + 2; v <= rem; ++v)
                    if (!push_try(v)) return false;
                return true;
            }
        }
        return true;
    }
};

} // namespace

void enumerate(long long n, const FamilyTag& tag,
               const std::function<bool(const Partition&)>& emit) {
    if (n < 0) fail(errc::bad_params, "enumerate needs n >= 0");
    Generator gen{tag, emit, {}};
    gen.walk(n);
}

std::vector<Partition> enumerate_all(long long n, const FamilyTag& tag) {
    std::vector<Partition> out;
    enumerate(n, tag, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

long long family_count(long long n, const FamilyTag& tag) {
    long long count = 0;
    enumerate(n, tag, [&](const Partition&) {
        ++count;
        return true;
    });
    return count;
}

void enumerate_filtered(long long n, const FamilyTag& tag,
                        const std::function<bool(const Partition&)>& emit) {
    enumerate(n, FamilyTag::all(), [&](const Partition& p) {
        if (!classify(p, tag).member) return true;
        return emit(p);
    });
}

} // namespace solq
