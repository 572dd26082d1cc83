#include "solq/registry.hpp"

#include "solq/bijection.hpp"
#include "solq/error.hpp"
#include "solq/involution.hpp"

#include <chrono>
#include <functional>
#include <map>

namespace solq {

const char* to_string(Mode m) noexcept {
    switch (m) {
        case Mode::series: return "SERIES";
        case Mode::enumeration: return "ENUMERATION";
        case Mode::pairing: return "PAIRING";
        case Mode::counting: return "COUNTING";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

QMonomial qmono(BigInt coef, int qexp, std::optional<Var> var = std::nullopt, int vexp = 1) {
    QMonomial m;
    m.coef = std::move(coef);
    m.qexp = qexp;
    if (var) m.mono[*var] = vexp;
    return m;
}

// --- double-sum specs ------------------------------------------------------

DoubleSumSpec spec_gf_l_sol() {
    DoubleSumSpec s;
    s.exponent = {2, 4, 4, 0, 2, 0}; // i^2 + 2ij + 2j^2 + j
    s.x_exp = {1, 0, 0};
    s.y_exp = {1, 2, 0};
    s.denom_step_i = 1;
    s.denom_step_j = 2;
    return s;
}

DoubleSumSpec spec_id_121() {
    DoubleSumSpec s;
    s.sign = SignRule::alternating_j;
    s.exponent = {2, 4, 4, 0, 0, 0}; // i^2 + 2ij + 2j^2
    s.u_exp = {1, 1, 0};
    s.denom_step_i = 1;
    s.denom_step_j = 2;
    return s;
}

DoubleSumSpec spec_id_122() {
    DoubleSumSpec s;
    s.exponent = {2, 4, 4, 0, 2, 0};
    s.u_exp = {1, 2, 0};
    s.denom_step_i = 1;
    s.denom_step_j = 2;
    return s;
}

DoubleSumSpec spec_id_123() {
    DoubleSumSpec s;
    s.exponent = {4, 8, 8, -6, 0, 0}; // 2i^2 + 4ij + 4j^2 - 3i, hits q^{-1}
    s.u_exp = {1, 2, 0};
    s.denom_step_i = 2;
    s.denom_step_j = 4;
    return s;
}

DoubleSumSpec spec_id_123_prime() {
    DoubleSumSpec s;
    s.exponent = {2, 4, 4, 0, 6, 0}; // i^2 + 2ij + 2j^2 + 3j
    s.u_exp = {1, 2, 0};
    s.denom_step_i = 1;
    s.denom_step_j = 2;
    return s;
}

DoubleSumSpec spec_wei_lhs() {
    DoubleSumSpec s;
    s.exponent = {2, 4, 4, 0, 2, 0};
    s.x_exp = {1, 0, 0};
    s.y_exp = {0, 2, 0};
    s.denom_step_i = 1;
    s.denom_step_j = 2;
    return s;
}

DoubleSumSpec spec_gf_c_ij() {
    DoubleSumSpec s;
    s.exponent = {2, 4, 4, 0, 0, 0};
    s.v_exp = {0, 1, 0};
    s.u_exp = {1, 1, 0};
    s.denom_step_i = 1;
    s.denom_step_j = 2;
    return s;
}

DoubleSumSpec spec_au1() {
    DoubleSumSpec s;
    s.sign = SignRule::alternating_j;
    s.exponent = {2, 6, 9, 0, 3, 0}; // i^2 + 3ij + 3j(3j+1)/2
    s.denom_step_i = 1;
    s.denom_step_j = 3;
    return s;
}

DoubleSumSpec spec_au2() {
    DoubleSumSpec s;
    s.sign = SignRule::alternating_j;
    s.exponent = {2, 6, 9, 2, 5, 0}; // 3j(3j+1)/2 + i^2 + 3ij + i + j
    s.denom_step_i = 1;
    s.denom_step_j = 3;
    return s;
}

DoubleSumSpec spec_main_ka(int k, int a) {
    DoubleSumSpec s;
    // i^2 binom(a+1,2) + a k i j + binom(kj+1, 2)
    s.exponent = {static_cast<long long>(a) * (a + 1),
                  2LL * a * k,
                  static_cast<long long>(k) * k,
                  0,
                  k,
                  0};
    s.x_exp = {1, 0, 0};
    s.y_exp = {a, k, 0};
    s.denom_step_i = a;
    s.denom_step_j = k;
    return s;
}

DoubleSumSpec spec_gf_w_xy() {
    DoubleSumSpec s;
    s.exponent = {2, 6, 9, 2, 5, 0};
    s.x_exp = {1, 0, 0};
    s.y_exp = {1, 3, 0};
    s.denom_step_i = 1;
    s.denom_step_j = 3;
    return s;
}

DoubleSumSpec spec_rr(bool shifted) {
    DoubleSumSpec s;
    s.exponent = {2, 0, 0, shifted ? 2 : 0, 0, 0}; // i^2 (+ i)
    s.u_exp = {1, 0, 0};
    s.denom_step_i = 1;
    s.denom_step_j = 0;
    return s;
}

DoubleSumSpec spec_gf_od_lhs() {
    DoubleSumSpec s;
    s.exponent = {2, 0, 0, 0, 0, 0}; // i^2 over (q^2;q^2)_i
    s.u_exp = {1, 0, 0};
    s.denom_step_i = 2;
    s.denom_step_j = 0;
    return s;
}

// --- product sides ---------------------------------------------------------

QSeries rhs_id_121(int n) { return pochhammer(qmono(-1, 1, Var::u), 2, std::nullopt, n); }
QSeries rhs_id_122(int n) { return pochhammer(qmono(-1, 1, Var::u), 1, std::nullopt, n); }

QSeries rhs_id_123(int n) {
    QSeries tri(n + 2, -1);
    tri.add_term(0, IntPoly::one());
    tri.add_term(1, IntPoly::variable(Var::u));
    tri.add_term(-1, IntPoly::variable(Var::u));
    QSeries tail = pochhammer(qmono(-1, 3, Var::u), 2, std::nullopt, n + 2);
    return tri.mul(tail).truncated(n);
}

QSeries rhs_id_123_prime(int n) {
    QSeries tri(n, 0);
    tri.add_term(0, IntPoly::one());
    tri.add_term(1, IntPoly::variable(Var::u));
    tri.add_term(2, IntPoly::variable(Var::u));
    return tri.mul(pochhammer(qmono(-1, 3, Var::u), 1, std::nullopt, n)).truncated(n);
}

// sum_j (y+x)(y+xq)...(y+xq^{j-1}) q^{binom(j+1,2)} / (q;q)_j * (yq^{j+1}; q)_inf
QSeries rhs_wei(int n) {
    QSeries acc(n, 0);
    for (int j = 0;; ++j) {
        long long base = static_cast<long long>(j) * (j + 1) / 2;
        if (base > n) break;
        QSeries term = QSeries::term(qmono(1, static_cast<int>(base)), n);
        for (int t = 0; t < j; ++t) {
            QSeries factor(n, 0);
            factor.add_term(0, IntPoly::variable(Var::y));
            factor.add_term(t, IntPoly::variable(Var::x));
            term = term.mul(factor);
        }
        term = term.mul(inverse_pochhammer(1, j, n));
        term = term.mul(pochhammer(qmono(1, j + 1, Var::y), 1, std::nullopt, n));
        acc += term.truncated(n);
    }
    return acc;
}

QSeries rhs_gf_od(int n) { return pochhammer(qmono(-1, 1, Var::u), 2, std::nullopt, n); }

QSeries rhs_au1(int n) { return inverse_pochhammer(qmono(1, 1), 3, std::nullopt, n); }

QSeries rhs_au2(int n) {
    return inverse_pochhammer(qmono(1, 2), 6, std::nullopt, n)
        .mul(inverse_pochhammer(qmono(1, 3), 6, std::nullopt, n));
}

QSeries rhs_rr1(int n) {
    return inverse_pochhammer(qmono(1, 1), 5, std::nullopt, n)
        .mul(inverse_pochhammer(qmono(1, 4), 5, std::nullopt, n));
}

QSeries rhs_rr2(int n) {
    return inverse_pochhammer(qmono(1, 2), 5, std::nullopt, n)
        .mul(inverse_pochhammer(qmono(1, 3), 5, std::nullopt, n));
}

// --- the q-Chu-Vandermonde specialization ----------------------------------
// For each fixed n: sum_{i=0}^{n} (q^{-n}; q)_i q^{binom(i+1,2) + n i}
//   / ((q;q)_i (-q;q)_i)  ==  1 / (-q; q)_n  as Laurent series.

QSeries chu_lhs(int n, int order) {
    QSeries acc(order, 0);
    for (int i = 0; i <= n; ++i) {
        if (static_cast<long long>(i) * i > order) continue; // below the term's lowest exponent
        long long head = static_cast<long long>(i) * (i + 1) / 2 +
                         static_cast<long long>(n) * i;
        // the numerator factors carry negative exponents, so seed with enough
        // working order that the product still reaches `order` exactly; the
        // partial minima stay at i^2 or above throughout
        long long drop = static_cast<long long>(n) * i - static_cast<long long>(i) * (i - 1) / 2;
        QSeries term = QSeries::term(qmono(1, static_cast<int>(head)),
                                     static_cast<int>(order + drop));
        for (int t = 0; t < i; ++t) term = term.mul_binomial(-1, Mono{}, -n + t);
        term = term.truncated(order);
        term = term.mul(inverse_pochhammer(qmono(1, 1), 1, i, order));
        term = term.mul(inverse_pochhammer(qmono(-1, 1), 1, i, order));
        acc += term.truncated(order);
    }
    return acc;
}

QSeries chu_rhs(int n, int order) {
    return inverse_pochhammer(qmono(-1, 1), 1, n, order);
}

// --- registry wiring ---------------------------------------------------------

struct Entry {
    std::string id;
    std::set<Mode> modes;
    std::map<Mode, long long> defaults;
    std::function<QSeries(int)> lhs, rhs;
    // enumeration oracle side
    FamilyTag family;
    WeightMap weights;
    bool drop_u_mark = false; // specialize u -> 1 before a series comparison
};

Entry series_entry(std::string id, DoubleSumSpec spec, std::function<QSeries(int)> rhs,
                   long long def_order, bool drop_u = false) {
    Entry e;
    e.id = std::move(id);
    e.modes = {Mode::series};
    e.defaults[Mode::series] = def_order;
    spec.validate();
    e.lhs = [spec](int n) { return double_sum(spec, n); };
    e.rhs = std::move(rhs);
    e.drop_u_mark = drop_u;
    return e;
}

} // namespace

struct IdentityRegistry::Impl {
    std::vector<Entry> entries;
    std::map<std::string, size_t> index;

    const Entry& get(const std::string& id) const {
        auto it = index.find(id);
        if (it == index.end()) fail(errc::bad_params, "unknown identity: " + id);
        return entries[it->second];
    }

    void add(Entry e) {
        index[e.id] = entries.size();
        entries.push_back(std::move(e));
    }
};

IdentityRegistry::IdentityRegistry() {
    auto* impl = new Impl;

    impl->add(series_entry("ID_121", spec_id_121(), rhs_id_121, 60));
    impl->add(series_entry("ID_122", spec_id_122(), rhs_id_122, 60));
    impl->add(series_entry("ID_123", spec_id_123(), rhs_id_123, 60));
    impl->add(series_entry("ID_123_PRIME", spec_id_123_prime(), rhs_id_123_prime, 60));
    impl->add(series_entry("AU1", spec_au1(), rhs_au1, 60));
    impl->add(series_entry("AU2", spec_au2(), rhs_au2, 60));
    impl->add(series_entry("RR1", spec_rr(false), rhs_rr1, 60, /*drop_u=*/true));
    impl->add(series_entry("RR2", spec_rr(true), rhs_rr2, 60, /*drop_u=*/true));

    {
        Entry e = series_entry("GF_OD", spec_gf_od_lhs(), rhs_gf_od, 60);
        e.modes.insert(Mode::enumeration);
        e.defaults[Mode::enumeration] = 25;
        e.family = FamilyTag::odd_distinct();
        e.weights = {{Stat::length, Var::u}};
        impl->add(std::move(e));
    }
    {
        Entry e = series_entry("WEI_M2PARA", spec_wei_lhs(), rhs_wei, 40);
        e.modes.insert(Mode::pairing);
        e.defaults[Mode::pairing] = 6;
        impl->add(std::move(e));
    }
    {
        Entry e;
        e.id = "EQUIV_122_123P";
        e.modes = {Mode::series};
        e.defaults[Mode::series] = 40;
        impl->add(std::move(e));
    }
    {
        Entry e;
        e.id = "CHU_SPECIAL";
        e.modes = {Mode::series};
        e.defaults[Mode::series] = 30;
        e.lhs = [](int n) { return chu_lhs(10, n); };
        e.rhs = [](int n) { return chu_rhs(10, n); };
        impl->add(std::move(e));
    }

    auto enum_entry = [&](std::string id, DoubleSumSpec spec, FamilyTag family,
                          WeightMap weights, long long def_order) {
        Entry e;
        e.id = std::move(id);
        e.modes = {Mode::enumeration};
        e.defaults[Mode::enumeration] = def_order;
        spec.validate();
        e.lhs = [spec](int n) { return double_sum(spec, n); };
        e.family = std::move(family);
        e.weights = std::move(weights);
        impl->add(std::move(e));
    };

    enum_entry("GF_L_SOL", spec_gf_l_sol(), FamilyTag::strict(),
               {{Stat::odd_seq_count, Var::x}, {Stat::length, Var::y}}, 25);
    enum_entry("GF_C_IJ", spec_gf_c_ij(), FamilyTag::c_family(),
               {{Stat::repeated_sizes, Var::v}, {Stat::distinct_sizes, Var::u}}, 20);
    enum_entry("GF_W_XY", spec_gf_w_xy(), FamilyTag::w_family(),
               {{Stat::length_minus_3_repeated, Var::x}, {Stat::length, Var::y}}, 20);
    for (auto [k, a] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}}) {
        enum_entry("MAIN_KA(" + std::to_string(k) + "," + std::to_string(a) + ")",
                   spec_main_ka(k, a), FamilyTag::d_ka(k, a),
                   {{Stat::residue_seq_count, Var::x}, {Stat::length, Var::y}}, 20);
    }

    auto count_entry = [&](std::string id, long long bound) {
        Entry e;
        e.id = std::move(id);
        e.modes = {Mode::counting};
        e.defaults[Mode::counting] = bound;
        impl->add(std::move(e));
    };
    {
        Entry e;
        e.id = "LOVEJOY_COUNT";
        e.modes = {Mode::counting, Mode::pairing};
        e.defaults[Mode::counting] = 30;
        e.defaults[Mode::pairing] = 18;
        impl->add(std::move(e));
    }
    count_entry("AU1_PAR", 30);
    count_entry("AU2_PAR", 30);
    count_entry("RR_MACMAHON", 40);

    impl_ = impl;
}

const IdentityRegistry& IdentityRegistry::instance() {
    static IdentityRegistry reg;
    return reg;
}

std::vector<std::string> IdentityRegistry::ids() const {
    std::vector<std::string> out;
    for (const auto& e : impl_->entries) out.push_back(e.id);
    return out;
}

bool IdentityRegistry::has(const std::string& id) const {
    return impl_->index.count(id) > 0;
}

std::set<Mode> IdentityRegistry::modes(const std::string& id) const {
    return impl_->get(id).modes;
}

long long IdentityRegistry::default_bound(const std::string& id, Mode mode) const {
    const Entry& e = impl_->get(id);
    auto it = e.defaults.find(mode);
    if (it == e.defaults.end()) fail(errc::bad_params, id + " has no " + to_string(mode) + " mode");
    return it->second;
}

QSeries IdentityRegistry::lhs(const std::string& id, int order) const {
    const Entry& e = impl_->get(id);
    if (id == "EQUIV_122_123P") {
        QSeries base = double_sum(spec_id_122(), order);
        auto shifted = shift_substitute(base, Var::u, 2);
        QSeries scaled = shifted.series.mul_monomial(qmono(1, 3, Var::u, 2)).truncated(order);
        return base - scaled;
    }
    if (!e.lhs) fail(errc::bad_params, id + " has no series form");
    return e.lhs(order);
}

QSeries IdentityRegistry::rhs(const std::string& id, int order) const {
    const Entry& e = impl_->get(id);
    if (id == "EQUIV_122_123P") return rhs_id_123_prime(order);
    if (e.rhs) return e.rhs(order);
    if (e.modes.count(Mode::enumeration)) return gf_enumerate(e.family, e.weights, order);
    fail(errc::bad_params, id + " has no product/enumeration form");
}

namespace {

VerificationReport report_match(std::string id, Mode mode, long long bound,
                                const MatchReport& match, Clock::time_point start) {
    VerificationReport rep;
    rep.id = std::move(id);
    rep.mode = mode;
    rep.order = bound;
    rep.equal = match.equal;
    if (!match.equal)
        rep.mismatch = {*match.first_mismatch, match.lhs.to_string(), match.rhs.to_string()};
    rep.wall_ms = ms_since(start);
    return rep;
}

VerificationReport report_counts(std::string id, Mode mode, long long bound, bool equal,
                                 std::optional<MismatchDetail> detail, Clock::time_point start) {
    VerificationReport rep;
    rep.id = std::move(id);
    rep.mode = mode;
    rep.order = bound;
    rep.equal = equal;
    rep.mismatch = std::move(detail);
    rep.wall_ms = ms_since(start);
    return rep;
}

} // namespace

VerificationReport IdentityRegistry::verify_series(const std::string& id, int order) const {
    const Entry& e = impl_->get(id);
    if (!e.modes.count(Mode::series))
        fail(errc::bad_params, id + " has no series mode");
    auto start = Clock::now();

    if (id == "CHU_SPECIAL") {
        for (int n = 0; n <= 10; ++n) {
            MatchReport match = series_equal(chu_lhs(n, order), chu_rhs(n, order), order);
            if (!match.equal) {
                auto rep = report_match(id, Mode::series, order, match, start);
                rep.mismatch->lhs = "n=" + std::to_string(n) + ": " + rep.mismatch->lhs;
                return rep;
            }
        }
        return report_match(id, Mode::series, order, MatchReport{}, start);
    }
    if (id == "EQUIV_122_123P") {
        QSeries base = double_sum(spec_id_122(), order);
        auto shifted = shift_substitute(base, Var::u, 2);
        QSeries diff = base - shifted.series.mul_monomial(qmono(1, 3, Var::u, 2)).truncated(order);
        int through = order - 2 * shifted.max_degree;
        if (through < 0) through = 0;
        MatchReport match = series_equal(diff, rhs_id_123_prime(order), through);
        return report_match(id, Mode::series, through, match, start);
    }

    QSeries left = e.lhs(order);
    if (e.drop_u_mark) left = left.specialize({{Var::u, 1}});
    MatchReport match = series_equal(left, e.rhs(order), order);
    return report_match(id, Mode::series, order, match, start);
}

VerificationReport IdentityRegistry::verify_enumeration(const std::string& id, int order) const {
    const Entry& e = impl_->get(id);
    if (!e.modes.count(Mode::enumeration))
        fail(errc::no_enum_form, id + " has no enumeration counterpart");
    auto start = Clock::now();
    MatchReport match =
        series_equal(e.lhs(order), gf_enumerate(e.family, e.weights, order), order);
    return report_match(id, Mode::enumeration, order, match, start);
}

VerificationReport IdentityRegistry::verify_counting(const std::string& id, long long n_max) const {
    const Entry& e = impl_->get(id);
    if (!e.modes.count(Mode::counting))
        fail(errc::bad_params, id + " has no counting mode");
    auto start = Clock::now();

    auto mismatch = [&](long long n, long long left, long long right,
                        const std::string& note) -> VerificationReport {
        return report_counts(id, Mode::counting, n_max, false,
                             MismatchDetail{n, note + "=" + std::to_string(left),
                                            std::to_string(right)},
                             start);
    };

    if (id == "LOVEJOY_COUNT") {
        for (long long n = 0; n <= n_max; ++n) {
            std::map<int, long long> signed_by_m, od_by_m;
            enumerate(n, FamilyTag::c_family(), [&](const Partition& p) {
                auto st = stats(p);
                signed_by_m[st.distinct_sizes] += st.repeated_sizes % 2 ? -1 : 1;
                return true;
            });
            enumerate(n, FamilyTag::odd_distinct(), [&](const Partition& p) {
                ++od_by_m[p.length()];
                return true;
            });
            for (const auto& [m, cnt] : signed_by_m)
                if (cnt != 0 && od_by_m[m] != cnt)
                    return mismatch(n, cnt, od_by_m[m], "m=" + std::to_string(m) + " signed");
            for (const auto& [m, cnt] : od_by_m)
                if (signed_by_m[m] != cnt)
                    return mismatch(n, signed_by_m[m], cnt, "m=" + std::to_string(m) + " signed");
        }
    } else if (id == "AU1_PAR") {
        for (long long n = 0; n <= n_max; ++n) {
            long long excess = 0;
            enumerate(n, FamilyTag::d_ka(3, 1), [&](const Partition& p) {
                int sl = sl_count(p, 3, 1);
                excess += (p.length() + sl) % 2 ? -1 : 1;
                return true;
            });
            long long mod_count = family_count(n, FamilyTag::mod(3, {1}));
            if (excess != mod_count) return mismatch(n, excess, mod_count, "excess");
        }
    } else if (id == "AU2_PAR") {
        for (long long n = 0; n <= n_max; ++n) {
            long long excess = 0;
            enumerate(n, FamilyTag::w_family(), [&](const Partition& p) {
                excess += stats(p).repeated_sizes % 2 ? -1 : 1;
                return true;
            });
            long long mod_count = family_count(n, FamilyTag::mod(6, {2, 3}));
            if (excess != mod_count) return mismatch(n, excess, mod_count, "excess");
        }
    } else if (id == "RR_MACMAHON") {
        for (long long n = 0; n <= n_max; ++n) {
            long long gap = family_count(n, FamilyTag::rr());
            long long mod14 = family_count(n, FamilyTag::mod(5, {1, 4}));
            if (gap != mod14) return mismatch(n, gap, mod14, "gap");
            long long gap2 = family_count(n, FamilyTag::rr2());
            long long mod23 = family_count(n, FamilyTag::mod(5, {2, 3}));
            if (gap2 != mod23) return mismatch(n, gap2, mod23, "gap2");
        }
    } else {
        fail(errc::bad_params, "no counting routine for " + id);
    }
    return report_counts(id, Mode::counting, n_max, true, std::nullopt, start);
}

VerificationReport IdentityRegistry::verify_pairing(const std::string& id, long long weight) const {
    const Entry& e = impl_->get(id);
    if (!e.modes.count(Mode::pairing))
        fail(errc::bad_params, id + " has no pairing mode");
    auto start = Clock::now();

    auto fail_report = [&](long long at, const std::string& lhs,
                           const std::string& rhs) -> VerificationReport {
        return report_counts(id, Mode::pairing, weight, false, MismatchDetail{at, lhs, rhs},
                             start);
    };

    if (id == "LOVEJOY_COUNT") {
        PsiOrbits orbits = psi_orbits(weight);
        // fixed points are exactly the odd-distinct partitions
        auto od = enumerate_all(weight, FamilyTag::odd_distinct());
        if (orbits.fixed != od)
            return fail_report(weight, "fixed points", "odd-distinct partitions");
        // orbit invariants: weight is shared, distinct count preserved,
        // repeated-size parity flipped
        std::map<int, long long> cancel_check;
        for (const auto& [lam, gam] : orbits.pairs) {
            auto sl = stats(lam), sg = stats(gam);
            if (lam.weight() != weight || gam.weight() != weight)
                return fail_report(weight, lam.to_string(), "weight drifted");
            if (sl.distinct_sizes != sg.distinct_sizes)
                return fail_report(weight, lam.to_string(), "distinct count drifted");
            if ((sl.repeated_sizes + sg.repeated_sizes) % 2 == 0)
                return fail_report(weight, lam.to_string(), "parity not flipped");
            cancel_check[sl.distinct_sizes] +=
                (sl.repeated_sizes % 2 ? -1 : 1) + (sg.repeated_sizes % 2 ? -1 : 1);
        }
        for (const auto& [m, total] : cancel_check)
            if (total != 0) return fail_report(weight, "orbit sum m=" + std::to_string(m), "0");
        // the orbit structure therefore reproduces the signed count
        std::map<int, long long> od_by_m;
        for (const auto& p : od) ++od_by_m[p.length()];
        std::map<int, long long> direct;
        enumerate(weight, FamilyTag::c_family(), [&](const Partition& p) {
            auto st = stats(p);
            direct[st.distinct_sizes] += st.repeated_sizes % 2 ? -1 : 1;
            return true;
        });
        std::erase_if(direct, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(od_by_m, [](const auto& kv) { return kv.second == 0; });
        if (direct != od_by_m)
            return fail_report(weight, "signed counts", "odd-distinct counts");
        return report_counts(id, Mode::pairing, weight, true, std::nullopt, start);
    }
    if (id == "WEI_M2PARA") {
        ThetaOrbits orbits = theta_orbits(weight);
        IntPoly fixed_sum, total;
        for (const auto& p : orbits.fixed) fixed_sum += pair_weight(p);
        for (const auto& p : enumerate_pairs(weight)) total += pair_weight(p);
        for (const auto& [pi, pii] : orbits.pairs) {
            if (!(pair_weight(pi) + pair_weight(pii)).is_zero())
                return fail_report(weight, pi.to_string(), "signed weights do not cancel");
            ThetaResult r = theta(pi);
            if (r.kase != ThetaCase::case_i || theta(pii).kase != ThetaCase::case_ii)
                return fail_report(weight, pi.to_string(), "case tags do not alternate");
        }
        if (!(fixed_sum - total).is_zero())
            return fail_report(weight, fixed_sum.to_string(), total.to_string());
        // fixed points carry the strict-partition weight, matching the
        // double-sum side coefficient
        QSeries side = double_sum(spec_wei_lhs(), static_cast<int>(weight));
        if (!(fixed_sum - side.coeff(static_cast<int>(weight))).is_zero())
            return fail_report(weight, fixed_sum.to_string(),
                               side.coeff(static_cast<int>(weight)).to_string());
        return report_counts(id, Mode::pairing, weight, true, std::nullopt, start);
    }
    fail(errc::bad_params, "no pairing routine for " + id);
}

VerificationReport IdentityRegistry::verify(const std::string& id, Mode mode,
                                            long long bound) const {
    switch (mode) {
        case Mode::series: return verify_series(id, static_cast<int>(bound));
        case Mode::enumeration: return verify_enumeration(id, static_cast<int>(bound));
        case Mode::counting: return verify_counting(id, bound);
        case Mode::pairing: return verify_pairing(id, bound);
    }
    fail(errc::bad_params, "unknown mode");
}

} // namespace solq
