// solq: verify the registered identities, enumerate restricted partition
// families, and trace the bijections and involutions step by step.

#include "solq/bijection.hpp"
#include "solq/error.hpp"
#include "solq/family.hpp"
#include "solq/involution.hpp"
#include "solq/registry.hpp"
#include "solq/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

using namespace solq;

namespace {

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ','))
        if (!token.empty()) parts.push_back(std::stoi(token));
    return Partition(std::move(parts));
}

LabeledPartition parse_labeled(const std::string& text) {
    std::vector<LabeledPart> parts;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        bool x = false;
        if (token.back() == 'x' || token.back() == 'y') {
            x = token.back() == 'x';
            token.pop_back();
        }
        parts.push_back({std::stoi(token), x});
    }
    return LabeledPartition(std::move(parts));
}

// "main:2,2" | "cpair:2,2" | "ka:3,1:2,2" | "w:2,2"; indices optional for
// the inverse maps ("main", "ka:3,1", ...)
BaseKind parse_kind(const std::string& text, bool need_indices) {
    std::vector<std::string> fields;
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ':')) fields.push_back(field);
    if (fields.empty()) fail(errc::bad_params, "empty kind");
    auto parse_ij = [&](const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos) fail(errc::bad_params, "expected i,j in kind");
        return std::pair{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    };
    const std::string& name = fields[0];
    if (name == "ka") {
        if (fields.size() < 2) fail(errc::bad_params, "ka kind needs k,a");
        auto [k, a] = parse_ij(fields[1]);
        if (!need_indices && fields.size() == 2) return BaseKind::ka(k, a, 0, 0);
        if (fields.size() != 3) fail(errc::bad_params, "ka kind: ka:k,a:i,j");
        auto [i, j] = parse_ij(fields[2]);
        return BaseKind::ka(k, a, i, j);
    }
    int i = 0, j = 0;
    if (fields.size() > 1) std::tie(i, j) = parse_ij(fields[1]);
    else if (need_indices) fail(errc::bad_params, "kind needs indices: " + name + ":i,j");
    if (name == "main") return BaseKind::main(i, j);
    if (name == "cpair") return BaseKind::cpair(i, j);
    if (name == "w") return BaseKind::wtriple(i, j);
    fail(errc::bad_params, "unknown kind: " + name);
}

// bracket rendering for c/w family partitions: repeated sizes as [a, a]
std::string render_blocks(const Partition& p) {
    const auto& parts = p.parts();
    if (parts.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t t = 0; t < parts.size();) {
        if (!first) out << ", ";
        first = false;
        if (t + 1 < parts.size() && parts[t] == parts[t + 1]) {
            out << "[" << parts[t] << ", " << parts[t] << "]";
            t += 2;
        } else {
            out << parts[t];
            ++t;
        }
    }
    return out.str();
}

std::string render_pair(const WeightedPair& pair) {
    return "(" + pair.a.to_string() + ", " + pair.b.to_string() + ")";
}

struct Output {
    std::ostream* stream = &std::cout;
    std::ofstream file;
    bool json = false;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) fail(errc::bad_params, "cannot open " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

Mode parse_mode(const std::string& name) {
    if (name == "series") return Mode::series;
    if (name == "enum") return Mode::enumeration;
    if (name == "pairing") return Mode::pairing;
    if (name == "counting") return Mode::counting;
    fail(errc::bad_params, "unknown mode: " + name);
}

int run_verify(Output& output, std::string id, std::string mode_name, int order,
               long long weight_bound, bool fast) {
    const auto& reg = IdentityRegistry::instance();
    std::vector<std::string> ids;
    if (id == "all") {
        ids = reg.ids();
        std::sort(ids.begin(), ids.end());
    } else {
        std::transform(id.begin(), id.end(), id.begin(), ::toupper);
        if (!reg.has(id)) fail(errc::bad_params, "unknown identity: " + id);
        ids.push_back(id);
    }

    const char* env_order = std::getenv("SOLQ_ORDER");
    // independent verifications fan out; output stays ordered by identity
    std::vector<std::future<std::vector<VerificationReport>>> futures;
    for (const std::string& name : ids) {
        futures.push_back(std::async(std::launch::async, [&, name] {
            std::vector<VerificationReport> reports;
            for (Mode mode : reg.modes(name)) {
                if (mode_name != "all" && mode != parse_mode(mode_name)) continue;
                long long def = reg.default_bound(name, mode);
                if (fast) def = (def + 1) / 2;
                long long bound;
                if (mode == Mode::series || mode == Mode::enumeration) {
                    bound = order >= 0            ? order
                            : env_order != nullptr ? std::atoll(env_order)
                                                   : def;
                } else {
                    bound = weight_bound >= 0 ? weight_bound : def;
                }
                reports.push_back(reg.verify(name, mode, bound));
            }
            return reports;
        }));
    }

    bool any_mismatch = false, any_run = false;
    std::ostringstream json_rows;
    for (auto& future : futures) {
        for (const auto& rep : future.get()) {
            any_run = true;
            if (!rep.equal) any_mismatch = true;
            if (output.json) {
                json_rows << (json_rows.tellp() > 0 ? ",\n  " : "  ") << to_json(rep);
            } else {
                output.out() << rep.id << " " << to_string(rep.mode) << " bound=" << rep.order
                             << " " << (rep.equal ? "EQUAL" : "MISMATCH") << " ("
                             << static_cast<long long>(rep.wall_ms) << " ms)";
                if (rep.mismatch)
                    output.out() << " first failure at " << rep.mismatch->at << ": "
                                 << rep.mismatch->lhs << " vs " << rep.mismatch->rhs;
                output.out() << "\n";
            }
        }
    }
    if (output.json) output.out() << "[\n" << json_rows.str() << "\n]\n";
    if (!any_run) fail(errc::bad_params, "no registered mode matched the request");
    return any_mismatch ? 1 : 0;
}

int run_enumerate(Output& output, long long n, const std::string& family, int modulus,
                  const std::string& residues, int k, int a, int max_length) {
    FamilyTag tag;
    if (family == "all") tag = FamilyTag::all();
    else if (family == "strict") tag = FamilyTag::strict();
    else if (family == "odd_distinct") tag = FamilyTag::odd_distinct();
    else if (family == "rr") tag = FamilyTag::rr();
    else if (family == "rr2") tag = FamilyTag::rr2();
    else if (family == "mod") {
        std::vector<int> rs;
        std::stringstream in(residues);
        std::string token;
        while (std::getline(in, token, ','))
            if (!token.empty()) rs.push_back(std::stoi(token));
        tag = FamilyTag::mod(modulus, rs);
    } else if (family == "even") tag = FamilyTag::even_parts();
    else if (family == "multiples") tag = FamilyTag::multiples(modulus);
    else if (family == "d_ka") tag = FamilyTag::d_ka(k, a);
    else if (family == "c") tag = FamilyTag::c_family();
    else if (family == "w") tag = FamilyTag::w_family();
    else fail(errc::bad_params, "unknown family: " + family);
    if (max_length >= 0) tag = tag.with_max_length(max_length);

    long long count = 0;
    bool first = true;
    if (output.json) output.out() << "[";
    enumerate(n, tag, [&](const Partition& p) {
        ++count;
        if (output.json) {
            output.out() << (first ? "" : ",") << to_json(p);
            first = false;
        } else {
            output.out() << p.to_string() << "\n";
        }
        return true;
    });
    if (output.json)
        output.out() << "]\n";
    else
        output.out() << "total " << count << " partitions of " << n << " in " << tag.name()
                     << "\n";
    return 0;
}

void print_move_trace(Output& output, const MoveTrace& trace) {
    output.out() << "base: " << trace.initial.to_string() << "\n";
    for (const auto& step : trace.steps)
        output.out() << to_string(step.op) << " block " << step.block << ": "
                     << step.snapshot.to_string() << "\n";
}

int run_trace(Output& output, const std::string& map, const std::string& kind_text,
              const std::string& mu_text, const std::string& eta_text,
              const std::string& partition_text, const std::string& pair_text) {
    if (map == "phi") {
        BaseKind kind = parse_kind(kind_text, true);
        auto [lambda, trace] = phi(kind, parse_partition(mu_text), parse_partition(eta_text));
        if (output.json) {
            output.out() << to_json(trace) << "\n";
        } else {
            print_move_trace(output, trace);
            output.out() << "image: " << lambda.to_string() << "\n";
        }
        return 0;
    }
    if (map == "phi-inv") {
        BaseKind kind = parse_kind(kind_text, false);
        auto inv = phi_inverse(kind.family, parse_partition(partition_text), kind.k, kind.a);
        if (output.json) {
            output.out() << to_json(inv.trace) << "\n";
        } else {
            output.out() << "kind: " << inv.kind.to_string() << "\n";
            print_move_trace(output, inv.trace);
            output.out() << "mu: " << inv.mu.to_string() << "\neta: " << inv.eta.to_string()
                         << "\n";
        }
        return 0;
    }
    if (map == "psi") {
        Partition lambda = parse_partition(partition_text);
        PsiResult result = psi(lambda);
        if (output.json) {
            output.out() << to_json(result, lambda) << "\n";
            return 0;
        }
        output.out() << render_blocks(lambda) << "\n";
        for (const auto& step : result.trace) {
            std::ostringstream line;
            std::vector<int> parts = step.parts;
            std::sort(parts.begin(), parts.end());
            bool first = true;
            size_t t = 0;
            auto emit = [&](const std::string& piece) {
                line << (first ? "" : ", ") << piece;
                first = false;
            };
            for (; t < parts.size();) {
                if (step.pair_value && parts[t] > *step.pair_value) break;
                if (t + 1 < parts.size() && parts[t] == parts[t + 1] &&
                    (!step.pair_value || parts[t] != *step.pair_value)) {
                    emit("[" + std::to_string(parts[t]) + ", " + std::to_string(parts[t]) + "]");
                    t += 2;
                } else {
                    emit(std::to_string(parts[t]));
                    ++t;
                }
            }
            if (step.pair_value)
                emit("[" + std::to_string(*step.pair_value) + ", " +
                     std::to_string(*step.pair_value) + "]");
            for (; t < parts.size(); ++t) emit(std::to_string(parts[t]));
            if (first) line << "0";
            output.out() << "  " << step.note << ": " << line.str() << "\n";
        }
        output.out() << to_string(result.kase) << " -> " << render_blocks(result.gamma) << "\n";
        return 0;
    }
    if (map == "theta") {
        auto colon = pair_text.find(':');
        if (colon == std::string::npos)
            fail(errc::bad_params, "--pair expects \"a-parts:b-parts\"");
        WeightedPair pair{parse_labeled(pair_text.substr(0, colon)),
                          parse_partition(pair_text.substr(colon + 1))};
        validate_pair(pair);
        ThetaResult result = theta(pair);
        if (output.json) {
            output.out() << to_json(result, pair) << "\n";
            return 0;
        }
        output.out() << render_pair(pair) << "\n";
        output.out() << "  sfb = " << (result.sfb ? std::to_string(*result.sfb) : "inf")
                     << ", mu1 = " << (result.mu1 ? std::to_string(*result.mu1) : "inf") << "\n";
        output.out() << to_string(result.kase) << " -> " << render_pair(result.image) << "\n";
        return 0;
    }
    if (map == "rr") {
        Partition lambda = parse_partition(partition_text);
        auto [n, iota] = rr_decompose(lambda);
        if (output.json) {
            output.out() << "{\"n\":" << n << ",\"iota\":" << to_json(iota) << "}\n";
        } else {
            output.out() << lambda.to_string() << " = staircase(" << n << ") + "
                         << iota.to_string() << "\n";
        }
        return 0;
    }
    fail(errc::bad_params, "unknown map: " + map);
}

int run_pairs(Output& output, const std::string& map, long long n) {
    if (map == "psi") {
        PsiOrbits orbits = psi_orbits(n);
        if (output.json) {
            output.out() << to_json(orbits, n) << "\n";
            return 0;
        }
        output.out() << "n=" << n << ": " << orbits.fixed.size() << " fixed points, "
                     << orbits.pairs.size() << " orbit pairs\n";
        for (const auto& p : orbits.fixed) output.out() << "fixed: " << render_blocks(p) << "\n";
        for (const auto& [ci, cii] : orbits.pairs)
            output.out() << render_blocks(ci) << " | " << render_blocks(cii) << "\n";
        return 0;
    }
    if (map == "theta") {
        ThetaOrbits orbits = theta_orbits(n);
        if (output.json) {
            output.out() << to_json(orbits, n) << "\n";
            return 0;
        }
        output.out() << "weight " << n << ": " << orbits.fixed.size() << " fixed points, "
                     << orbits.pairs.size() << " orbit pairs\n";
        for (const auto& p : orbits.fixed) output.out() << "fixed: " << render_pair(p) << "\n";
        for (const auto& [ci, cii] : orbits.pairs)
            output.out() << render_pair(ci) << " | " << render_pair(cii) << "\n";
        return 0;
    }
    fail(errc::bad_params, "unknown map: " + map);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series and partition bijection laboratory"};
    app.require_subcommand(1);

    bool json = false, fast = false;
    std::string out_path;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_flag("--text", "emit text (default)");
    app.add_option("--out", out_path, "write output to a file");
    app.add_flag("--fast", fast, "halve the default verification bounds");

    auto* verify = app.add_subcommand("verify", "check registered identities");
    std::string id = "all", mode = "all";
    int order = -1;
    long long weight_bound = -1;
    verify->add_option("--id", id, "identity name or 'all'");
    verify->add_option("--mode", mode, "series|enum|pairing|counting|all");
    verify->add_option("--order", order, "truncation order for series/enum modes");
    verify->add_option("--weight-bound", weight_bound, "bound for counting/pairing modes");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list family members of weight n");
    long long n = 0;
    std::string family = "all", residues;
    int modulus = 0, k = 0, a = 0, max_length = -1;
    enumerate_cmd->add_option("--n", n, "weight")->required();
    enumerate_cmd->add_option("--family", family,
                              "all|strict|odd_distinct|rr|rr2|mod|even|multiples|d_ka|c|w");
    enumerate_cmd->add_option("--modulus", modulus, "modulus for mod/multiples");
    enumerate_cmd->add_option("--residues", residues, "comma-separated residues for mod");
    enumerate_cmd->add_option("--k", k, "k for d_ka");
    enumerate_cmd->add_option("--a", a, "a for d_ka");
    enumerate_cmd->add_option("--max-length", max_length, "cap on the number of parts");

    auto* trace = app.add_subcommand("trace", "run one map with a full step trace");
    std::string map, kind_text, mu_text, eta_text, partition_text, pair_text;
    trace->add_option("--map", map, "phi|phi-inv|psi|theta|rr")->required();
    trace->add_option("--kind", kind_text, "main:i,j | cpair:i,j | ka:k,a:i,j | w:i,j");
    trace->add_option("--mu", mu_text, "comma-separated increment partition");
    trace->add_option("--eta", eta_text, "comma-separated increment partition");
    trace->add_option("--partition", partition_text, "comma-separated increasing parts");
    trace->add_option("--pair", pair_text, "a-parts:b-parts, labels as suffixes (7x)");

    auto* pairs = app.add_subcommand("pairs", "orbit table of an involution at one weight");
    std::string pairs_map;
    long long pairs_n = 0;
    pairs->add_option("--map", pairs_map, "psi|theta")->required();
    pairs->add_option("--n", pairs_n, "weight")->required();

    auto* ferrers_cmd = app.add_subcommand("ferrers", "print a Ferrers diagram");
    std::string ferrers_partition;
    ferrers_cmd->add_option("--partition", ferrers_partition, "comma-separated parts")
        ->required();

    // let the global output flags appear after the subcommand name
    for (CLI::App* sub : {verify, enumerate_cmd, trace, pairs, ferrers_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output output;
    output.json = json;
    try {
        output.open(out_path);
        if (*verify) return run_verify(output, id, mode, order, weight_bound, fast);
        if (*enumerate_cmd)
            return run_enumerate(output, n, family, modulus, residues, k, a, max_length);
        if (*trace)
            return run_trace(output, map, kind_text, mu_text, eta_text, partition_text,
                             pair_text);
        if (*pairs) return run_pairs(output, pairs_map, pairs_n);
        if (*ferrers_cmd) {
            Partition p = parse_partition(ferrers_partition);
            if (output.json) {
                std::vector<int> rows(p.parts().rbegin(), p.parts().rend());
                output.out() << "{\"partition\":" << to_json(p) << ",\"rows\":"
                             << nlohmann::json(rows).dump() << "}\n";
            } else {
                output.out() << ferrers(p) << "\n";
            }
            return 0;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
