// Command-line entry point: analyze graphs, run the exact solvers and the
// brute-force reference solvers, generate gadget instances, verify
// certificates. Reports are JSON on stdout; diagnostics go to stderr.
//
// Exit codes: 0 solved/decided, 2 input error, 3 guard or budget refusal,
// 4 internal invariant violation.

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "itp/eqc.hpp"
#include "itp/gadgets.hpp"
#include "itp/gen.hpp"
#include "itp/graph.hpp"
#include "itp/io.hpp"
#include "itp/oracles.hpp"
#include "itp/solvers.hpp"
#include "itp/typepart.hpp"

using nlohmann::ordered_json;
using namespace itp;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fnv1a_digest(const std::string& content) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct GraphInput {
    std::string path;
    std::string format_flag;  // empty = infer from extension

    ParsedGraph load() const {
        GraphFormat f =
            format_flag.empty() ? format_from_path(path) : format_from_name(format_flag);
        ParsedGraph pg = load_graph_file(path, f);
        for (const auto& w : pg.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
        return pg;
    }
};

void emit(const ordered_json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (!out_path.empty()) write_file(out_path, text);
    else std::cout << text;
}

std::string g_command_line;

ordered_json report_head(const std::string& command, const std::string& input_path) {
    ordered_json j;
    j["command"] = command;
    j["command_line"] = g_command_line;
    j["version"] = kVersion;
    if (!input_path.empty()) {
        j["input"] = input_path;
        j["input_digest"] = fnv1a_digest(read_file(input_path));
    }
    return j;
}

ordered_json certificate_json(const NodeSet& s) {
    return ordered_json(s);
}

ordered_json certificate_json(const ColoringAssignment& a, bool single_color) {
    ordered_json arr = ordered_json::array();
    for (const auto& cs : a.colors) {
        if (single_color) arr.push_back(cs.empty() ? -1 : cs[0]);
        else arr.push_back(cs);
    }
    return arr;
}

std::vector<long long> parse_weights_file(const std::string& path, int n) {
    std::string text = read_file(path);
    std::vector<long long> w;
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '[') {
        auto j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw ParseError("weights file must be integers or a json array");
        for (const auto& x : j) w.push_back(x.get<long long>());
    } else {
        std::istringstream in(text);
        long long x;
        while (in >> x) w.push_back(x);
    }
    if (static_cast<int>(w.size()) != n)
        throw ParseError("weights file has " + std::to_string(w.size()) + " entries, graph has " +
                         std::to_string(n) + " nodes");
    return w;
}

ColoringAssignment parse_certificate_colors(const std::string& path, int n) {
    nlohmann::json j = nlohmann::json::parse(read_file(path), nullptr, false);
    if (j.is_discarded()) throw ParseError("certificate file is not valid json");
    if (j.is_object() && j.contains("certificate")) j = j["certificate"];
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("certificate must be an array with one entry per node");
    ColoringAssignment a;
    a.colors.resize(n);
    for (int v = 0; v < n; ++v) {
        if (j[v].is_array())
            for (const auto& c : j[v]) a.colors[v].push_back(c.get<int>());
        else a.colors[v].push_back(j[v].get<int>());
        std::sort(a.colors[v].begin(), a.colors[v].end());
    }
    return a;
}

NodeSet parse_certificate_nodes(const std::string& path) {
    std::string text = read_file(path);
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    NodeSet s;
    if (!j.is_discarded()) {
        if (j.is_object() && j.contains("certificate")) j = j["certificate"];
        if (j.is_array()) {
            for (const auto& x : j) s.push_back(x.get<int>());
            std::sort(s.begin(), s.end());
            return s;
        }
    }
    std::istringstream in(text);
    int x;
    while (in >> x) s.push_back(x);
    std::sort(s.begin(), s.end());
    return s;
}

ordered_json level_sizes(const TypeSequence& seq) {
    ordered_json arr = ordered_json::array();
    for (const auto& lvl : seq.levels) arr.push_back(lvl.graph.node_count());
    return arr;
}

ordered_json sequence_json(const TypeSequence& seq) {
    ordered_json levels = ordered_json::array();
    for (const auto& lvl : seq.levels) {
        ordered_json l;
        l["n"] = lvl.graph.node_count();
        ordered_json edges = ordered_json::array();
        for (const auto& [u, v] : lvl.graph.edges()) edges.push_back({u, v});
        l["edges"] = std::move(edges);
        ordered_json classes = ordered_json::array();
        for (const auto& cls : lvl.partition.classes) {
            ordered_json c;
            c["members"] = cls.members;
            c["kind"] = kind_name(cls.kind);
            classes.push_back(std::move(c));
        }
        l["classes"] = std::move(classes);
        levels.push_back(std::move(l));
    }
    return levels;
}

// ---- subcommand bodies -------------------------------------------------------

int run_analyze(const GraphInput& in, bool full_levels, const std::string& out_path) {
    Timer timer;
    ParsedGraph pg = in.load();
    TypeSequence seq = type_sequence(pg.graph);
    ordered_json j = report_head("analyze", in.path);
    j["n"] = pg.graph.node_count();
    j["m"] = pg.graph.edge_count();
    j["nd"] = seq.levels.front().partition.class_count();
    j["itp"] = seq.itp();
    j["depth"] = seq.depth();
    ordered_json lv = ordered_json::array();
    for (const auto& lvl : seq.levels) {
        int cliques = 0, independents = 0;
        for (const auto& cls : lvl.partition.classes)
            (cls.kind == ClassKind::Clique ? cliques : independents) += 1;
        lv.push_back({{"n", lvl.graph.node_count()},
                      {"cliques", cliques},
                      {"independents", independents}});
    }
    j["levels"] = std::move(lv);
    if (full_levels) j["sequence"] = sequence_json(seq);
    j["elapsed_ms"] = timer.elapsed_ms();
    emit(j, out_path);
    return 0;
}

int run_solve(const std::string& problem, const GraphInput& in, int k,
              const std::string& weights_path, int nd_cap, long long budget,
              const std::string& out_path) {
    Timer timer;
    ParsedGraph pg = in.load();
    const Graph& g = pg.graph;
    TypeSequence seq = type_sequence(g);
    ordered_json j = report_head("solve", in.path);
    j["problem"] = problem;

    if (problem == "ds" || problem == "vc") {
        SolveStats stats;
        NodeSet cert = problem == "ds" ? dominating_set(g, &stats) : vertex_cover(g, &stats);
        bool valid = problem == "ds" ? is_dominating_set(g, cert) : is_vertex_cover(g, cert);
        check_invariant(valid, "solve certificate failed validation");
        j["value"] = cert.size();
        j["certificate"] = certificate_json(cert);
        j["valid"] = valid;
    } else if (problem == "color") {
        ColoringAssignment a = coloring(g, nullptr, budget);
        bool valid = is_proper_coloring(g, a);
        check_invariant(valid, "solve certificate failed validation");
        j["value"] = a.distinct_color_count();
        j["certificate"] = certificate_json(a, /*single_color=*/true);
        j["valid"] = valid;
    } else if (problem == "mcolor") {
        if (weights_path.empty()) throw ParseError("mcolor requires --weights");
        auto w = parse_weights_file(weights_path, g.node_count());
        ColoringAssignment a = multicoloring(g, w, nullptr, budget);
        bool valid = is_proper_coloring(g, a);
        check_invariant(valid, "solve certificate failed validation");
        j["value"] = a.distinct_color_count();
        j["certificate"] = certificate_json(a, /*single_color=*/false);
        j["valid"] = valid;
    } else if (problem == "eqc") {
        if (k <= 0) throw ParseError("eqc requires --k");
        EqcOutcome out;
        try {
            out = solve_eqc(g, k, nd_cap, budget);
        } catch (const CapExceeded& e) {
            if (g.node_count() <= 12)
                throw CapExceeded(std::string(e.what()) +
                                  "; at this size `itp oracle eqc` can decide it");
            throw;
        }
        j["k"] = k;
        j["feasible"] = out.feasible;
        if (out.feasible) {
            bool valid = is_equitable_coloring(g, *out.certificate, k);
            check_invariant(valid, "solve certificate failed validation");
            j["certificate"] = certificate_json(*out.certificate, /*single_color=*/true);
            j["valid"] = valid;
        }
        j["independent_set_count"] = out.independent_set_count;
        j["ilp_vars"] = out.ilp_vars;
        j["ilp_nodes_explored"] = out.ilp_nodes_explored;
    } else {
        throw ParseError("unknown problem '" + problem + "'");
    }
    j["itp"] = seq.itp();
    j["nd"] = seq.levels.front().partition.class_count();
    j["levels"] = level_sizes(seq);
    j["elapsed_ms"] = timer.elapsed_ms();
    emit(j, out_path);
    return 0;
}

int run_oracle(const std::string& problem, const GraphInput& in, int k,
               const std::string& weights_path, const std::string& out_path) {
    Timer timer;
    ParsedGraph pg = in.load();
    const Graph& g = pg.graph;
    ordered_json j = report_head("oracle", in.path);
    j["problem"] = problem;
    if (problem == "ds" || problem == "vc") {
        NodeSet cert = problem == "ds" ? bf_dominating_set(g) : bf_vertex_cover(g);
        j["value"] = cert.size();
        j["certificate"] = certificate_json(cert);
        j["valid"] = problem == "ds" ? is_dominating_set(g, cert) : is_vertex_cover(g, cert);
    } else if (problem == "color") {
        auto [chi, a] = bf_chromatic(g);
        j["value"] = chi;
        j["certificate"] = certificate_json(a, true);
        j["valid"] = is_proper_coloring(g, a);
    } else if (problem == "mcolor") {
        if (weights_path.empty()) throw ParseError("mcolor requires --weights");
        auto w = parse_weights_file(weights_path, g.node_count());
        auto [total, a] = bf_multicolor(g, w);
        j["value"] = total;
        j["certificate"] = certificate_json(a, false);
        j["valid"] = is_proper_coloring(g, a);
    } else if (problem == "eqc") {
        if (k <= 0) throw ParseError("eqc requires --k");
        auto witness = bf_equitable(g, k);
        j["k"] = k;
        j["feasible"] = witness.has_value();
        if (witness) {
            j["certificate"] = certificate_json(*witness, true);
            j["valid"] = is_equitable_coloring(g, *witness, k);
        }
    } else {
        throw ParseError("unknown problem '" + problem + "'");
    }
    j["elapsed_ms"] = timer.elapsed_ms();
    emit(j, out_path);
    return 0;
}

int run_verify(const std::string& problem, const GraphInput& in, const std::string& cert_path,
               int k, const std::string& out_path) {
    Timer timer;
    ParsedGraph pg = in.load();
    const Graph& g = pg.graph;
    ordered_json j = report_head("verify", in.path);
    j["problem"] = problem;
    bool valid = false;
    if (problem == "ds") valid = is_dominating_set(g, parse_certificate_nodes(cert_path));
    else if (problem == "vc") valid = is_vertex_cover(g, parse_certificate_nodes(cert_path));
    else if (problem == "color" || problem == "mcolor")
        valid = is_proper_coloring(g, parse_certificate_colors(cert_path, g.node_count()));
    else if (problem == "eqc") {
        if (k <= 0) throw ParseError("eqc requires --k");
        valid = is_equitable_coloring(g, parse_certificate_colors(cert_path, g.node_count()), k);
        j["k"] = k;
    } else throw ParseError("unknown problem '" + problem + "'");
    j["valid"] = valid;
    j["elapsed_ms"] = timer.elapsed_ms();
    emit(j, out_path);
    return 0;
}

void write_graph_output(const Graph& g, const std::string& out_path,
                        const std::string& format_flag, ordered_json& report) {
    GraphFormat f = format_flag.empty()
                        ? (out_path.empty() ? GraphFormat::EdgeList : format_from_path(out_path))
                        : format_from_name(format_flag);
    std::string text = serialize_graph(g, f);
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
    report["n"] = g.node_count();
    report["m"] = g.edge_count();
    report["format"] = format_name(f);
    if (!out_path.empty()) report["out"] = out_path;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) {
        if (i) g_command_line += ' ';
        g_command_line += argv[i];
    }
    CLI::App app{"exact toolkit for iterated-type-partition graph algorithms"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format_flag, out_path, base_path, weights_path, roles_path, cert_path;
    std::string items_csv, family;
    GraphInput input;
    int k = -1, a_param = -1, l_param = -1, B_param = -1, d_param = 1;
    int mult = 2, mult_max = -1, n_param = -1, m_param = -1;
    int nd_cap = kDefaultNdCap;
    long long budget = kDefaultIlpBudget;
    double p_param = 0.5;
    unsigned seed = 1;
    bool full_levels = false, allow_inexact = false, check_reduction = false;

    auto add_graph_arg = [&](CLI::App* cmd) {
        cmd->add_option("graph", input.path, "graph file")->required();
        cmd->add_option("--format", input.format_flag, "dimacs|edgelist|json (default: by extension)");
        cmd->add_option("--out", out_path, "write the JSON report to a file");
    };

    auto* analyze = app.add_subcommand("analyze", "type partition, nd, itp and the quotient sequence");
    add_graph_arg(analyze);
    analyze->add_flag("--levels", full_levels, "dump the full sequence (classes and edges)");

    auto* solve = app.add_subcommand("solve", "run an exact solver (ds|vc|color|mcolor|eqc)");
    solve->add_option("problem", family, "ds|vc|color|mcolor|eqc")->required();
    add_graph_arg(solve);
    solve->add_option("--k", k, "number of colors (eqc)");
    solve->add_option("--weights", weights_path, "per-node color demands (mcolor)");
    solve->add_option("--cap-nd", nd_cap, "refuse eqc when nd exceeds this (default 20)");
    solve->add_option("--budget", budget, "search-node budget for the base-case programs");

    auto* oracle = app.add_subcommand("oracle", "run a brute-force reference solver");
    oracle->add_option("problem", family, "ds|vc|color|mcolor|eqc")->required();
    add_graph_arg(oracle);
    oracle->add_option("--k", k, "number of colors (eqc)");
    oracle->add_option("--weights", weights_path, "per-node color demands (mcolor)");

    auto* verify = app.add_subcommand("verify", "validate a certificate file against a graph");
    verify->add_option("problem", family, "ds|vc|color|mcolor|eqc")->required();
    add_graph_arg(verify);
    verify->add_option("certificate", cert_path, "certificate file (json array)")->required();
    verify->add_option("--k", k, "number of colors (eqc)");

    auto* gen = app.add_subcommand("gen", "generate graphs and reduction gadgets");
    gen->require_subcommand(1);
    auto add_gen_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output graph file (default: stdout)");
        cmd->add_option("--format", format_flag, "dimacs|edgelist|json");
    };
    auto* g_flower = gen->add_subcommand("flower", "(a,k)-flower");
    g_flower->add_option("--a", a_param)->required();
    g_flower->add_option("--k", k)->required();
    add_gen_common(g_flower);
    auto* g_chain = gen->add_subcommand("chain", "(k,l,B)-chain");
    g_chain->add_option("--k", k)->required();
    g_chain->add_option("--l", l_param)->required();
    g_chain->add_option("--B", B_param)->required();
    add_gen_common(g_chain);
    auto* g_reduce = gen->add_subcommand("reduce", "bin-packing to equitable-coloring reduction graph");
    g_reduce->add_option("--items", items_csv, "comma-separated item values")->required();
    g_reduce->add_option("--k", k, "bins")->required();
    g_reduce->add_option("--B", B_param, "capacity")->required();
    g_reduce->add_option("--roles", roles_path, "write the node-role map (json)");
    g_reduce->add_flag("--allow-inexact", allow_inexact,
                       "build even when items do not sum to k*B");
    g_reduce->add_flag("--check", check_reduction, "run the structural invariant report");
    add_gen_common(g_reduce);
    auto* g_expand = gen->add_subcommand("expand", "blow up a connected base graph");
    g_expand->add_option("--base", base_path, "base graph file")->required();
    g_expand->add_option("--d", d_param, "depth (default 1)");
    g_expand->add_option("--mult", mult, "multiplicity lower bound (default 2)");
    g_expand->add_option("--mult-max", mult_max, "multiplicity upper bound (default --mult)");
    g_expand->add_option("--seed", seed, "rng seed");
    add_gen_common(g_expand);
    auto* g_random = gen->add_subcommand("random", "Erdos-Renyi G(n,p)");
    g_random->add_option("--n", n_param)->required();
    g_random->add_option("--p", p_param, "edge probability (default 0.5)");
    g_random->add_option("--seed", seed, "rng seed");
    add_gen_common(g_random);
    auto* g_named = gen->add_subcommand("named", "complete|cycle|path|complete_bipartite");
    g_named->add_option("--family", family, "graph family")->required();
    g_named->add_option("--n", n_param)->required();
    g_named->add_option("--m", m_param, "first side size (complete_bipartite)");
    add_gen_common(g_named);

    try {
        app.parse(argc, argv);

        if (*analyze) return run_analyze(input, full_levels, out_path);
        if (*solve) return run_solve(family, input, k, weights_path, nd_cap, budget, out_path);
        if (*oracle) return run_oracle(family, input, k, weights_path, out_path);
        if (*verify) return run_verify(family, input, cert_path, k, out_path);

        // gen subcommands
        Timer timer;
        ordered_json rep = report_head("gen", "");
        if (*g_flower) {
            write_graph_output(flower(a_param, k), out_path, format_flag, rep);
        } else if (*g_chain) {
            write_graph_output(chain(k, l_param, B_param), out_path, format_flag, rep);
        } else if (*g_reduce) {
            BinPackingInstance inst;
            std::stringstream ss(items_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) inst.items.push_back(std::stoi(tok));
            inst.bins = k;
            inst.capacity = B_param;
            if (!inst.exact() && !allow_inexact)
                throw ParseError("items sum to " + std::to_string(inst.total()) + ", not k*B = " +
                                 std::to_string(static_cast<long long>(k) * B_param) +
                                 "; normalize by appending unit items or pass --allow-inexact");
            if (!inst.exact())
                std::cerr << "warning: non-exact instance; the size identity and packing "
                             "equivalence need an exact one\n";
            ReductionGraph r = reduce_binpacking_to_eqc(inst);
            write_graph_output(r.graph, out_path, format_flag, rep);
            if (!roles_path.empty()) {
                ordered_json roles = ordered_json::array();
                for (const auto& role : r.roles) roles.push_back(role.to_string());
                ordered_json rj;
                rj["items"] = inst.items;
                rj["k"] = inst.bins;
                rj["B"] = inst.capacity;
                rj["roles"] = std::move(roles);
                write_file(roles_path, rj.dump(2) + "\n");
                rep["roles_out"] = roles_path;
            }
            if (check_reduction) {
                ReductionInvariantReport inv = verify_reduction_invariants(r);
                ordered_json checks = ordered_json::array();
                for (const auto& c : inv.checks)
                    checks.push_back({{"name", c.name},
                                      {"expected", c.expected},
                                      {"actual", c.actual},
                                      {"pass", c.pass}});
                rep["invariants"] = std::move(checks);
                rep["invariants_pass"] = inv.all_pass();
            }
        } else if (*g_expand) {
            ParsedGraph base = GraphInput{base_path, ""}.load();
            if (mult_max < 0) mult_max = mult;
            write_graph_output(expand(base.graph, d_param, mult, mult_max, seed), out_path,
                               format_flag, rep);
        } else if (*g_random) {
            write_graph_output(random_graph(n_param, probability_to_millionths(p_param), seed),
                               out_path, format_flag, rep);
        } else if (*g_named) {
            Graph g;
            if (family == "complete") g = complete_graph(n_param);
            else if (family == "cycle") g = cycle_graph(n_param);
            else if (family == "path") g = path_graph(n_param);
            else if (family == "complete_bipartite") {
                if (m_param < 1) throw ParseError("complete_bipartite requires --m");
                g = complete_bipartite(m_param, n_param);
            } else throw ParseError("unknown family '" + family + "'");
            write_graph_output(g, out_path, format_flag, rep);
        }
        rep["elapsed_ms"] = timer.elapsed_ms();
        if (!out_path.empty()) std::cout << rep.dump(2) << "\n";
        else std::cerr << rep.dump(2) << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const CapExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
