#include "solq/involution.hpp"

#include "solq/error.hpp"
#include "solq/family.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace solq {

const char* to_string(PsiCase c) noexcept {
    switch (c) {
        case PsiCase::fixed: return "FIXED";
        case PsiCase::case_i: return "CASE_I";
        case PsiCase::case_ii: return "CASE_II";
    }
    return "?";
}

const char* to_string(ThetaCase c) noexcept {
    switch (c) {
        case ThetaCase::fixed: return "FIXED";
        case ThetaCase::case_i: return "CASE_I";
        case ThetaCase::case_ii: return "CASE_II";
    }
    return "?";
}

CState psi_landmarks(const Partition& lambda) {
    if (!classify(lambda, FamilyTag::c_family()).member)
        fail(errc::not_member, lambda.to_string() + " is not in the c family");
    CState st;
    st.lambda = lambda;
    std::vector<int> singles, repeated;
    const auto& parts = lambda.parts();
    for (size_t t = 0; t < parts.size();) {
        if (t + 1 < parts.size() && parts[t] == parts[t + 1]) {
            repeated.push_back(parts[t]);
            t += 2;
        } else {
            singles.push_back(parts[t]);
            ++t;
        }
    }
    if (!repeated.empty()) st.largest_repeated = repeated.back();
    for (int v : singles) {
        if (v % 2 != 0) continue;
        if (!st.even_runs.empty() && st.even_runs.back().back() + 2 == v)
            st.even_runs.back().push_back(v);
        else
            st.even_runs.push_back({v});
    }
    if (!st.even_runs.empty())
        st.smallest_in_largest_even_run = st.even_runs.back().front();
    return st;
}

namespace {

std::vector<int> psi_snapshot(const std::vector<int>& below, const std::vector<int>& mid,
                              const std::vector<int>& above) {
    std::vector<int> parts = below;
    parts.insert(parts.end(), mid.begin(), mid.end());
    parts.insert(parts.end(), above.begin(), above.end());
    std::sort(parts.begin(), parts.end());
    return parts;
}

} // namespace

PsiResult psi(const Partition& lambda) {
    CState st = psi_landmarks(lambda);
    PsiResult res;
    if (!st.largest_repeated && !st.smallest_in_largest_even_run) {
        res.gamma = lambda;
        res.kase = PsiCase::fixed;
        return res;
    }

    const auto& parts = lambda.parts();
    std::optional<int> a = st.largest_repeated;
    std::optional<int> b = st.smallest_in_largest_even_run;

    std::optional<int> a_hat;
    std::vector<int> lowered; // a_s - 2 for the singletons the pair advanced past
    std::vector<int> rest;    // a_s for s >= k
    std::vector<int> below_pair;
    if (a) {
        std::vector<int> above;
        for (int v : parts) {
            if (v < *a) below_pair.push_back(v);
            if (v > *a) above.push_back(v);
        }
        int k = 1;
        while (true) {
            long long next = k - 1 < static_cast<int>(above.size())
                                 ? above[static_cast<size_t>(k - 1)]
                                 : static_cast<long long>(1) << 40;
            if (next >= 2LL * (*a + k - 1) + 2) break;
            lowered.push_back(static_cast<int>(next) - 2);
            res.trace.push_back({PsiStep::Op::pair_advance,
                                 psi_snapshot(below_pair, lowered,
                                              {above.begin() + k, above.end()}),
                                 *a + k, std::nullopt,
                                 "pair advances past " + std::to_string(static_cast<int>(next))});
            ++k;
        }
        a_hat = *a + k - 1;
        rest.assign(above.begin() + (k - 1), above.end());
    }

    bool case_one = !b || (a_hat && 2LL * *a_hat >= *b - 2);
    if (case_one) {
        // merge the advanced pair into the single even part 2*a_hat
        std::vector<int> out = below_pair;
        out.insert(out.end(), lowered.begin(), lowered.end());
        out.push_back(2 * *a_hat);
        out.insert(out.end(), rest.begin(), rest.end());
        std::sort(out.begin(), out.end());
        res.gamma = Partition(out);
        res.kase = PsiCase::case_i;
        res.merged_part = 2 * *a_hat;
        res.trace.push_back({PsiStep::Op::merge, out, std::nullopt, std::nullopt,
                             "pair merges into " + std::to_string(2 * *a_hat)});
    } else {
        // descend b through the parts between the repeated pair and b
        std::vector<int> remaining, moved, untouched, pair_and_below;
        bool b_skipped = false;
        for (int v : parts) {
            if (v == *b && !b_skipped) {
                b_skipped = true;
                continue;
            }
            if (a && v <= *a)
                pair_and_below.push_back(v);
            else if (v < *b)
                remaining.push_back(v);
            else
                untouched.push_back(v);
        }

        int bcur = *b;
        while (true) {
            if (remaining.empty()) break;
            int top = remaining.back();
            if (top <= bcur / 2 - 2) break;
            remaining.pop_back();
            moved.push_back(top + 2);
            bcur -= 2;
            std::vector<int> snap = pair_and_below;
            snap.insert(snap.end(), remaining.begin(), remaining.end());
            snap.push_back(bcur);
            snap.insert(snap.end(), moved.begin(), moved.end());
            snap.insert(snap.end(), untouched.begin(), untouched.end());
            std::sort(snap.begin(), snap.end());
            res.trace.push_back({PsiStep::Op::chain_step, snap, std::nullopt, bcur,
                                 "even part descends to " + std::to_string(bcur)});
        }
        if (bcur % 2 != 0) fail(errc::internal, "descending part lost its parity");
        int half = bcur / 2;
        if (a && remaining.empty() && !(*a <= half - 2))
            fail(errc::internal, "split collides with the repeated pair");
        std::vector<int> others = pair_and_below;
        others.insert(others.end(), remaining.begin(), remaining.end());
        others.insert(others.end(), moved.begin(), moved.end());
        others.insert(others.end(), untouched.begin(), untouched.end());
        std::sort(others.begin(), others.end());
        std::vector<int> out = others;
        out.push_back(half);
        out.push_back(half);
        std::sort(out.begin(), out.end());
        res.gamma = Partition(out);
        res.kase = PsiCase::case_ii;
        res.split_part = half;
        res.trace.push_back({PsiStep::Op::split, others, half, std::nullopt,
                             "split " + std::to_string(bcur) + " into a repeated pair"});
        auto out_state = psi_landmarks(res.gamma);
        if (out_state.largest_repeated != half)
            fail(errc::internal, "case II output has unexpected largest repeated part");
    }

    if (!classify(res.gamma, FamilyTag::c_family()).member)
        fail(errc::internal, "psi image left the c family: " + res.gamma.to_string());
    return res;
}

PsiOrbits psi_orbits(long long n) {
    PsiOrbits orbits;
    std::set<Partition> seen;
    for (const Partition& lam : enumerate_all(n, FamilyTag::c_family())) {
        if (seen.count(lam)) continue;
        PsiResult r = psi(lam);
        if (r.kase == PsiCase::fixed) {
            orbits.fixed.push_back(lam);
            seen.insert(lam);
            continue;
        }
        PsiResult back = psi(r.gamma);
        if (back.gamma != lam || back.kase == r.kase || back.kase == PsiCase::fixed)
            fail(errc::internal, "psi failed to pair " + lam.to_string() + " with " +
                                     r.gamma.to_string());
        if (r.kase == PsiCase::case_i)
            orbits.pairs.emplace_back(lam, r.gamma);
        else
            orbits.pairs.emplace_back(r.gamma, lam);
        seen.insert(lam);
        seen.insert(r.gamma);
    }
    std::sort(orbits.pairs.begin(), orbits.pairs.end());
    return orbits;
}

// ---------------------------------------------------------------------------

LabeledPartition::LabeledPartition(std::vector<LabeledPart> parts) : parts_(std::move(parts)) {
    for (size_t t = 0; t < parts_.size(); ++t) {
        if (parts_[t].value < 1)
            fail(errc::invalid_labels, "labeled parts must be positive");
        if (t + 1 < parts_.size() && parts_[t].value >= parts_[t + 1].value)
            fail(errc::invalid_labels, "labeled parts must be strictly increasing");
        if (parts_[t].label_x && t + 1 < parts_.size() &&
            parts_[t + 1].value - parts_[t].value < 2)
            fail(errc::invalid_labels,
                 "an x label needs a gap of at least 2 to the next part");
    }
}

long long LabeledPartition::weight() const {
    long long w = 0;
    for (const auto& p : parts_) w += p.value;
    return w;
}

Partition LabeledPartition::shape() const {
    std::vector<int> parts;
    parts.reserve(parts_.size());
    for (const auto& p : parts_) parts.push_back(p.value);
    return Partition(std::move(parts));
}

IntPoly LabeledPartition::label_weight() const {
    Mono m;
    for (const auto& p : parts_) ++m[p.label_x ? Var::x : Var::y];
    return IntPoly::monomial(1, m);
}

std::string LabeledPartition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream out;
    for (size_t t = 0; t < parts_.size(); ++t) {
        if (t) out << '+';
        out << parts_[t].value;
        if (parts_[t].label_x) out << 'x';
    }
    return out.str();
}

std::string WeightedPair::to_string() const {
    return "(" + a.to_string() + ", " + b.to_string() + ")";
}

void validate_pair(const WeightedPair& pair) {
    if (!pair.b.is_strict())
        fail(errc::invalid_pair, "second component must be strict");
    if (!pair.b.empty() && pair.b.parts().front() < pair.a.length() + 1)
        fail(errc::invalid_pair, "second component parts must be at least j+1");
}

IntPoly pair_weight(const WeightedPair& pair) {
    IntPoly w = pair.a.label_weight();
    Mono yext;
    yext[Var::y] = pair.b.length();
    w *= IntPoly::monomial(pair.b.length() % 2 ? -1 : 1, yext);
    return w;
}

std::pair<std::vector<SequenceVerdict>, LShapeProfile>
bad_sequences(const LabeledPartition& a) {
    const auto& parts = a.parts();
    const int len = a.length();
    std::vector<SequenceVerdict> verdicts;
    LShapeProfile profile;
    for (int t = 0; t < len; ++t)
        profile.sizes.push_back(parts[static_cast<size_t>(t)].value + len - (t + 1));
    int start = 0;
    for (int t = 0; t < len; ++t) {
        bool last_of_seq = t + 1 == len ||
                           parts[static_cast<size_t>(t + 1)].value !=
                               parts[static_cast<size_t>(t)].value + 1;
        if (!last_of_seq) continue;
        SequenceVerdict verdict;
        verdict.start_index = start;
        verdict.length = t - start + 1;
        bool ends_x = parts[static_cast<size_t>(t)].label_x;
        verdict.bad = (verdict.length % 2 == 0) ? ends_x : !ends_x;
        verdicts.push_back(verdict);
        if (verdict.bad && !profile.first_bad)
            profile.first_bad = profile.sizes[static_cast<size_t>(start)];
        start = t + 1;
    }
    return {verdicts, profile};
}

ThetaResult theta(const WeightedPair& pair) {
    validate_pair(pair);
    auto [verdicts, profile] = bad_sequences(pair.a);
    ThetaResult res;
    res.sfb = profile.first_bad;
    std::optional<int> mu1;
    if (!pair.b.empty()) mu1 = pair.b.parts().front();
    res.mu1 = mu1;

    if (!res.sfb && !mu1) {
        res.image = pair;
        res.kase = ThetaCase::fixed;
        return res;
    }

    const auto& parts = pair.a.parts();
    const int j = pair.a.length();

    bool case_one = res.sfb && (!mu1 || *res.sfb < *mu1);
    if (case_one) {
        int k = 0; // 0-based start of the first bad sequence
        for (const auto& verd : verdicts)
            if (verd.bad) {
                k = verd.start_index;
                break;
            }
        res.block_index = k + 1;
        std::vector<LabeledPart> out;
        for (int t = 0; t < j; ++t) {
            if (t == k) continue;
            LabeledPart p = parts[static_cast<size_t>(t)];
            if (t > k) --p.value;
            out.push_back(p);
        }
        std::vector<int> bparts = {static_cast<int>(*res.sfb)};
        bparts.insert(bparts.end(), pair.b.parts().begin(), pair.b.parts().end());
        res.image = {LabeledPartition(std::move(out)), Partition(std::move(bparts))};
        res.kase = ThetaCase::case_i;
    } else {
        // case II: pull mu1 out of b and graft it into a as an L-shape
        int m1 = *mu1;
        std::vector<int> bparts(pair.b.parts().begin() + 1, pair.b.parts().end());
        int l = j + 1;
        for (int t = 1; t <= j; ++t) {
            if (profile.sizes[static_cast<size_t>(t - 1)] >= m1 - 1) {
                l = t;
                break;
            }
        }
        if (l == j + 1 && res.sfb)
            fail(errc::internal, "no insertion slot despite a bad sequence");
        res.block_index = l;
        std::vector<LabeledPart> out;
        for (int t = 1; t < l; ++t) out.push_back(parts[static_cast<size_t>(t - 1)]);
        out.push_back({m1 - j + l - 1, false});
        for (int t = l; t <= j; ++t) {
            LabeledPart p = parts[static_cast<size_t>(t - 1)];
            ++p.value;
            out.push_back(p);
        }
        res.image = {LabeledPartition(std::move(out)), Partition(std::move(bparts))};
        res.kase = ThetaCase::case_ii;
    }
    validate_pair(res.image);
    return res;
}

std::vector<WeightedPair> enumerate_pairs(long long total_weight) {
    std::vector<WeightedPair> pairs;
    for (long long wa = 0; wa <= total_weight; ++wa) {
        for (const Partition& shape : enumerate_all(wa, FamilyTag::strict())) {
            // positions free to carry an x label: sequence-last parts
            std::vector<int> free_slots;
            const auto& sp = shape.parts();
            for (size_t t = 0; t < sp.size(); ++t)
                if (t + 1 == sp.size() || sp[t + 1] - sp[t] >= 2)
                    free_slots.push_back(static_cast<int>(t));
            for (unsigned mask = 0; mask < (1u << free_slots.size()); ++mask) {
                std::vector<LabeledPart> labeled;
                for (size_t t = 0; t < sp.size(); ++t) labeled.push_back({sp[t], false});
                for (size_t s = 0; s < free_slots.size(); ++s)
                    if (mask & (1u << s))
                        labeled[static_cast<size_t>(free_slots[s])].label_x = true;
                LabeledPartition a(std::move(labeled));
                int j = a.length();
                enumerate(total_weight - wa, FamilyTag::strict(), [&](const Partition& b) {
                    if (!b.empty() && b.parts().front() < j + 1) return true;
                    pairs.push_back({a, b});
                    return true;
                });
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

ThetaOrbits theta_orbits(long long total_weight) {
    ThetaOrbits orbits;
    std::set<WeightedPair> seen;
    for (const WeightedPair& p : enumerate_pairs(total_weight)) {
        if (seen.count(p)) continue;
        ThetaResult r = theta(p);
        if (r.kase == ThetaCase::fixed) {
            orbits.fixed.push_back(p);
            seen.insert(p);
            continue;
        }
        ThetaResult back = theta(r.image);
        if (back.image != p || back.kase == r.kase || back.kase == ThetaCase::fixed)
            fail(errc::internal, "theta failed to pair " + p.to_string() + " with " +
                                     r.image.to_string());
        if (r.kase == ThetaCase::case_i)
            orbits.pairs.emplace_back(p, r.image);
        else
            orbits.pairs.emplace_back(r.image, p);
        seen.insert(p);
        seen.insert(r.image);
    }
    std::sort(orbits.pairs.begin(), orbits.pairs.end());
    return orbits;
}

} // namespace solq
