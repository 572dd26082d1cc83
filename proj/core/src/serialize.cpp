#include "solq/serialize.hpp"

#include "solq/error.hpp"

#include <json.hpp>

#include <sstream>

namespace solq {

using nlohmann::json;

namespace {

json partition_json(const Partition& p) { return json(p.parts()); }

Partition partition_from(const json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

json labeled_json(const LabeledPartition& a) {
    json arr = json::array();
    for (const auto& p : a.parts())
        arr.push_back({{"part", p.value}, {"label", p.label_x ? "x" : "y"}});
    return arr;
}

LabeledPartition labeled_from(const json& j) {
    std::vector<LabeledPart> parts;
    for (const auto& item : j)
        parts.push_back({item.at("part").get<int>(), item.at("label").get<std::string>() == "x"});
    return LabeledPartition(std::move(parts));
}

json pair_json(const WeightedPair& p) {
    return {{"a", labeled_json(p.a)}, {"b", partition_json(p.b)}};
}

json block_partition_json(const BlockPartition& bp) {
    json arr = json::array();
    for (const auto& b : bp.blocks()) {
        if (b.type == Block::Type::movable) {
            arr.push_back(json(b.parts));
        } else {
            std::ostringstream out;
            for (size_t t = 0; t < b.parts.size(); ++t) out << (t ? "," : "") << b.parts[t];
            arr.push_back(out.str());
        }
    }
    return arr;
}

} // namespace

std::string to_json(const Partition& p) { return partition_json(p).dump(); }

Partition partition_from_json(const std::string& text) {
    return partition_from(json::parse(text));
}

std::string to_json(const FamilyTag& tag) {
    json params = json::object();
    switch (tag.kind) {
        case FamilyTag::Kind::mod:
            params["m"] = tag.modulus;
            params["residues"] = tag.residues;
            break;
        case FamilyTag::Kind::multiples:
            params["m"] = tag.modulus;
            break;
        case FamilyTag::Kind::d_ka:
            params["k"] = tag.k;
            params["a"] = tag.a;
            break;
        default:
            break;
    }
    if (tag.max_length) params["max_length"] = *tag.max_length;
    std::string name;
    switch (tag.kind) {
        case FamilyTag::Kind::all: name = "all"; break;
        case FamilyTag::Kind::strict: name = "strict"; break;
        case FamilyTag::Kind::odd_distinct: name = "odd_distinct"; break;
        case FamilyTag::Kind::rr: name = "rr"; break;
        case FamilyTag::Kind::rr2: name = "rr2"; break;
        case FamilyTag::Kind::mod: name = "mod"; break;
        case FamilyTag::Kind::even_parts: name = "even"; break;
        case FamilyTag::Kind::multiples: name = "multiples"; break;
        case FamilyTag::Kind::d_ka: name = "d_ka"; break;
        case FamilyTag::Kind::c_family: name = "c"; break;
        case FamilyTag::Kind::w_family: name = "w"; break;
    }
    return json{{"family", name}, {"params", params}}.dump();
}

FamilyTag family_from_json(const std::string& text) {
    json j = json::parse(text);
    std::string name = j.at("family").get<std::string>();
    json params = j.value("params", json::object());
    FamilyTag tag;
    if (name == "all") tag = FamilyTag::all();
    else if (name == "strict") tag = FamilyTag::strict();
    else if (name == "odd_distinct") tag = FamilyTag::odd_distinct();
    else if (name == "rr") tag = FamilyTag::rr();
    else if (name == "rr2") tag = FamilyTag::rr2();
    else if (name == "mod")
        tag = FamilyTag::mod(params.at("m").get<int>(),
                             params.at("residues").get<std::vector<int>>());
    else if (name == "even") tag = FamilyTag::even_parts();
    else if (name == "multiples") tag = FamilyTag::multiples(params.at("m").get<int>());
    else if (name == "d_ka")
        tag = FamilyTag::d_ka(params.at("k").get<int>(), params.at("a").get<int>());
    else if (name == "c") tag = FamilyTag::c_family();
    else if (name == "w") tag = FamilyTag::w_family();
    else fail(errc::bad_params, "unknown family: " + name);
    if (params.contains("max_length")) tag = tag.with_max_length(params["max_length"].get<int>());
    return tag;
}

std::string to_json(const QSeries& s) {
    json coeffs = json::array();
    for (int e = s.min_exp(); e <= s.order(); ++e) {
        const IntPoly& poly = s.coeff(e);
        if (poly.is_zero()) continue;
        json terms = json::array();
        for (const auto& [m, c] : poly.terms())
            terms.push_back({{"x", m[Var::x]},
                             {"y", m[Var::y]},
                             {"u", m[Var::u]},
                             {"v", m[Var::v]},
                             {"coef", c.str()}});
        coeffs.push_back({{"q", e}, {"poly", terms}});
    }
    return json{{"min_exp", s.min_exp()}, {"order", s.order()}, {"coeffs", coeffs}}.dump();
}

QSeries qseries_from_json(const std::string& text) {
    json j = json::parse(text);
    QSeries s(j.at("order").get<int>(), j.at("min_exp").get<int>());
    for (const auto& entry : j.at("coeffs")) {
        IntPoly poly;
        for (const auto& term : entry.at("poly")) {
            Mono m;
            m[Var::x] = term.at("x").get<int>();
            m[Var::y] = term.at("y").get<int>();
            m[Var::u] = term.at("u").get<int>();
            m[Var::v] = term.at("v").get<int>();
            poly.add_term(m, BigInt(term.at("coef").get<std::string>()));
        }
        s.add_term(entry.at("q").get<int>(), poly);
    }
    return s;
}

std::string to_json(const MoveTrace& trace) {
    json steps = json::array();
    for (const auto& step : trace.steps)
        steps.push_back({{"op", to_string(step.op)},
                         {"block", step.block},
                         {"partition", block_partition_json(step.snapshot)}});
    return json{{"kind", trace.kind.to_string()},
                {"initial", block_partition_json(trace.initial)},
                {"steps", steps}}
        .dump();
}

std::string to_json(const LabeledPartition& a) { return labeled_json(a).dump(); }

LabeledPartition labeled_from_json(const std::string& text) {
    return labeled_from(json::parse(text));
}

std::string to_json(const WeightedPair& pair) { return pair_json(pair).dump(); }

std::string to_json(const PsiOrbits& orbits, long long n) {
    json fixed = json::array();
    for (const auto& p : orbits.fixed) fixed.push_back(partition_json(p));
    json pairs = json::array();
    for (const auto& [lam, gam] : orbits.pairs)
        pairs.push_back({partition_json(lam), partition_json(gam)});
    return json{{"n", n}, {"fixed", fixed}, {"pairs", pairs}}.dump();
}

std::string to_json(const ThetaOrbits& orbits, long long n) {
    json fixed = json::array();
    for (const auto& p : orbits.fixed) fixed.push_back(pair_json(p));
    json pairs = json::array();
    for (const auto& [pi, pii] : orbits.pairs)
        pairs.push_back({pair_json(pi), pair_json(pii)});
    return json{{"n", n}, {"fixed", fixed}, {"pairs", pairs}}.dump();
}

std::string to_json(const PsiResult& result, const Partition& input) {
    json steps = json::array();
    for (const auto& step : result.trace) {
        const char* op = nullptr;
        switch (step.op) {
            case PsiStep::Op::pair_advance: op = "PAIR_ADVANCE"; break;
            case PsiStep::Op::merge: op = "MERGE"; break;
            case PsiStep::Op::chain_step: op = "CHAIN_STEP"; break;
            case PsiStep::Op::split: op = "SPLIT"; break;
        }
        json entry = {{"op", op}, {"parts", step.parts}, {"note", step.note}};
        if (step.pair_value) entry["pair"] = *step.pair_value;
        if (step.moving) entry["moving"] = *step.moving;
        steps.push_back(entry);
    }
    return json{{"input", partition_json(input)},
                {"case", to_string(result.kase)},
                {"image", partition_json(result.gamma)},
                {"steps", steps}}
        .dump();
}

std::string to_json(const ThetaResult& result, const WeightedPair& input) {
    json j = {{"input", pair_json(input)},
              {"case", to_string(result.kase)},
              {"image", pair_json(result.image)},
              {"block", result.block_index}};
    j["sfb"] = result.sfb ? json(*result.sfb) : json("inf");
    j["mu1"] = result.mu1 ? json(*result.mu1) : json("inf");
    return j.dump();
}

std::string to_json(const VerificationReport& report) {
    json j = {{"id", report.id},
              {"mode", to_string(report.mode)},
              {"order", report.order},
              {"verdict", report.equal ? "EQUAL" : "MISMATCH"},
              {"ms", report.wall_ms}};
    if (report.mismatch) {
        j["first_fail"] = report.mismatch->at;
        j["lhs"] = report.mismatch->lhs;
        j["rhs"] = report.mismatch->rhs;
    }
    return j.dump();
}

std::string golden_path(const std::string& dir, const std::string& id, int order) {
    return dir + "/v1/" + id + "-" + std::to_string(order) + ".json";
}

} // namespace solq
