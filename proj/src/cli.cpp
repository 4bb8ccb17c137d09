#include "tdrefine/cli.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tdrefine/division.hpp"
#include "tdrefine/errors.hpp"
#include "tdrefine/generators.hpp"
#include "tdrefine/io.hpp"
#include "tdrefine/oracle.hpp"
#include "tdrefine/separators.hpp"
#include "tdrefine/slick.hpp"
#include "tdrefine/weak.hpp"

namespace tdr {

namespace {

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("TDREFINE_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void emit_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(path);
        if (!out) throw UserError("cannot write " + path);
        out << payload;
    }
}

struct RefineResult {
    TreeDecomposition td;
    StatsRecord stats;
};

// Shared by `refine` and `bench`: runs one (graph, mode) job and certifies
// achieved-vs-bound before reporting.
RefineResult run_refine_job(const Graph& g, const std::string& mode,
                            const TreeDecomposition& witness, std::optional<int> user_k,
                            std::optional<int> user_d, const std::string& graph_id,
                            std::uint64_t seed) {
    const int w = width(witness);
    const int n = g.num_vertices();
    RefineResult res;
    res.stats.graph_id = graph_id;
    res.stats.n = n;
    res.stats.m = g.num_edges();
    res.stats.mode = mode;
    res.stats.seed = seed;

    BuildCounters counters;
    auto t0 = std::chrono::steady_clock::now();

    auto need_k_at_least = [&](int lo, const char* why) {
        int k = user_k ? *user_k : lo;
        if (k < lo)
            throw UserError("--k " + std::to_string(k) + " too small: " + why +
                            " (needs k >= " + std::to_string(lo) + ")");
        return k;
    };

    if (mode == "slick") {
        int k = need_k_at_least(std::max(w, 0), "witness width exceeds k");
        res.td = slick_main(g, witness, &counters);
        res.stats.k = k;
        res.stats.width_bound = 14LL * k + 13;
        res.stats.degree_bound = 6;
        res.stats.order_bound = std::max(n, 1);
        res.stats.spread_bound = "deg(v)+1";
    } else if (mode == "small") {
        int k = need_k_at_least(std::max(w, 1), "witness width exceeds k");
        res.td = small_tree_decomp(g, witness, k);
        res.stats.k = k;
        res.stats.width_bound = 3LL * k - 1;
        res.stats.order_bound = std::max(static_cast<double>(n) / k - 1, 1.0);
        res.stats.degree_bound = -1;
        res.stats.spread_bound = "-";
    } else if (mode == "slick-small") {
        int k = need_k_at_least(std::max(w, 0), "witness width exceeds k");
        res.td = slick_and_small(g, witness, k, &counters);
        res.stats.k = k;
        res.stats.width_bound = 56LL * k + 58;
        res.stats.order_bound = std::max(static_cast<double>(n) / (14 * k + 14), 1.0);
        res.stats.degree_bound = -1;
        res.stats.spread_bound = "deg(v)+1";
    } else if (mode == "weak" || mode == "combined" || mode == "partition") {
        int k = need_k_at_least(std::max(w, 0) + 1, "weak modes need width(td) <= k-1");
        res.stats.k = k;
        if (mode == "weak") {
            int d = user_d.value_or(2);
            if (d < 2) throw UserError("--d must be at least 2");
            res.td = weak_tree_decomp_gen(g, witness, k, d, &counters);
            res.stats.d = d;
            res.stats.width_bound = 18LL * k * d - 1;
            res.stats.degree_bound = 6 * d;
            res.stats.spread_bound = "1+deg(v)/" + std::to_string(d - 1);
        } else if (mode == "combined") {
            if (user_d && *user_d != 2) throw UserError("combined mode fixes d=2");
            res.td = spread_small_degree(g, witness, k, &counters);
            res.stats.d = 2;
            res.stats.width_bound = 72LL * k + 1;
            res.stats.degree_bound = 12;
            res.stats.spread_bound = "deg(v)+1";
        } else {
            if (user_d) throw UserError("partition mode derives d from the maximum degree");
            int d = g.max_degree() + 2;
            res.td = tree_partition(g, witness, k, &counters);
            res.stats.d = d;
            res.stats.width_bound = 18LL * k * d;
            res.stats.degree_bound = 6 * d;
            res.stats.spread_bound = "1";
        }
        res.stats.order_bound = std::max(static_cast<double>(n) / (2 * k), 1.0);
    } else {
        throw UserError("unknown refine mode: " + mode);
    }

    res.stats.wall_ms = ms_since(t0);
    res.stats.cases = counters;
    res.stats.width = width(res.td);
    res.stats.order = order(res.td);
    res.stats.degree = degree(res.td);
    res.stats.max_spread = max_spread(res.td);

    certify(res.stats.width <= res.stats.width_bound, "stats-width-bound",
            "achieved width exceeds the mode bound");
    if (res.stats.degree_bound >= 0)
        certify(res.stats.degree <= res.stats.degree_bound, "stats-degree-bound",
                "achieved degree exceeds the mode bound");
    return res;
}

TreeDecomposition load_witness(const Graph& g, const std::string& td_path) {
    if (!td_path.empty()) {
        auto witness = read_td_file(td_path);
        if (witness.graph_universe != g.universe())
            throw UserError("--td: decomposition is for a graph on " +
                            std::to_string(witness.graph_universe) + " vertices");
        auto rep = validate(g, witness);
        if (!rep.ok())
            throw UserError("--td: input decomposition invalid: " +
                            rep.violations.front().to_string());
        return witness;
    }
    return oracle::width_witness(g);
}

// --- subcommands -------------------------------------------------------------

int run_gen(const std::string& family, GenParams params, std::uint64_t seed,
            const std::string& out_path) {
    Graph g = generate(family, params, effective_seed(seed));
    std::ostringstream os;
    write_gr(os, g);
    emit_output(out_path, os.str());
    return 0;
}

int run_refine_cmd(const std::string& in_path, const std::string& mode,
                   const std::string& td_path, std::optional<int> user_k,
                   std::optional<int> user_d, const std::string& out_path,
                   const std::string& stats_path, std::uint64_t seed, bool no_verify) {
    Graph g = read_gr_file(in_path);
    auto witness = load_witness(g, td_path);
    auto res = run_refine_job(g, mode, witness, user_k, user_d, in_path, effective_seed(seed));

    if (!no_verify) {
        auto rep = validate(g, res.td);
        certify(rep.ok(), "cli-verify", "refined decomposition failed final validation");
    }
    emit_output(out_path, td_to_string(res.td));
    if (!stats_path.empty()) {
        std::ofstream stats(stats_path, std::ios::app);
        if (!stats) throw UserError("cannot write " + stats_path);
        stats << res.stats.to_json().dump() << "\n";
    }
    std::cerr << "mode=" << mode << " width=" << res.stats.width << "/"
              << res.stats.width_bound << " order=" << res.stats.order
              << " degree=" << res.stats.degree << " max_spread=" << res.stats.max_spread
              << "\n";
    return 0;
}

int run_verify(const std::string& gr_path, const std::string& td_path, const std::string& kind,
               std::optional<int> slick_s, bool as_json) {
    Graph g = read_gr_file(gr_path);
    auto td = read_td_file(td_path);
    if (td.graph_universe != g.universe())
        throw UserError("decomposition universe does not match the graph");
    td.kind = kind_from_name(kind);
    auto rep = validate(g, td);
    bool ok = rep.ok();
    SlickWitness sw;
    if (slick_s) {
        sw = is_slick(g, td, *slick_s);
        ok = ok && sw.ok;
    }
    if (as_json) {
        auto j = report_to_json(rep);
        j["kind"] = kind;
        if (slick_s) {
            j["slick"] = sw.ok;
            if (!sw.ok) {
                j["slick_witness_node"] = sw.child + 1;
                j["slick_witness_vertex"] = sw.vertex + 1;
            }
        }
        j["valid"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.text();
        if (slick_s && !sw.ok)
            std::cout << "not " << *slick_s << "-slick: vertex " << sw.vertex + 1
                      << " at tree node " << sw.child + 1 << "\n";
        std::cout << (ok ? "valid" : "invalid") << " (" << kind << ")\n";
    }
    return ok ? 0 : 1;
}

Weighting load_weights(const Graph& g, const std::string& path) {
    if (path.empty()) return Weighting::uniform(g, Rat(1));
    std::ifstream in(path);
    if (!in) throw UserError("cannot open " + path);
    Weighting gamma(g.universe());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        long long v;
        std::string w;
        if (!(ls >> v >> w)) throw UserError("weights: malformed line: " + line);
        if (v < 1 || v > g.universe() || !g.has_vertex(static_cast<int>(v - 1)))
            throw UserError("weights: unknown vertex " + std::to_string(v));
        gamma.set(static_cast<int>(v - 1), parse_rat(w));
    }
    return gamma;
}

int run_separate(const std::string& in_path, const std::string& td_path,
                 std::optional<int> q_opt, const std::string& beta_str,
                 const std::string& weights_path, const std::string& out_path) {
    if (q_opt.has_value() == !beta_str.empty())
        throw UserError("separate: give exactly one of --q or --beta");
    Graph g = read_gr_file(in_path);
    auto witness = load_witness(g, td_path);
    auto gamma = load_weights(g, weights_path);

    nlohmann::json j;
    auto to_external = [](const std::vector<int>& vs) {
        std::vector<int> out;
        out.reserve(vs.size());
        for (int v : vs) out.push_back(v + 1);
        return out;
    };
    if (q_opt) {
        int q = *q_opt;
        if (q < 0) throw UserError("separate: q must be >= 0");
        auto x_set = treewidth_sep(g, gamma, witness, q);
        j["mode"] = "q";
        j["q"] = q;
        j["x"] = to_external(x_set);
        j["x_bound"] = static_cast<long long>(q) * (width(witness) + 1);
        j["component_weight_bound"] = to_string(gamma.total() / Rat(q + 1));
        auto rest = g.minus(x_set);
        j["components"] = nlohmann::json::array();
        for (const auto& comp : rest.components()) {
            j["components"].push_back(
                {{"vertices", to_external(comp)}, {"weight", to_string(gamma.sum(comp))}});
        }
    } else {
        Rat beta = parse_rat(beta_str);
        auto sep = gen_separation(g, gamma, witness, beta);
        certify(check_separation(g, sep), "separate-structure",
                "separation invariants must hold");
        j["mode"] = "beta";
        j["beta"] = beta_str;
        j["x"] = to_external(sep.x_set);
        j["x_bound"] = (ceil_rat(Rat(1) / beta) - 1) * (width(witness) + 1);
        j["m"] = sep.m();
        j["m_bound"] = ceil_rat(Rat(2) / beta) - 1;
        j["part_weight_bound"] = to_string(beta * gamma.total());
        j["parts"] = nlohmann::json::array();
        for (const auto& p : sep.parts) {
            std::vector<int> outside = set_difference(p.vertices(), sep.x_set);
            j["parts"].push_back({{"vertices", to_external(p.vertices())},
                                  {"weight_outside_x", to_string(gamma.sum(outside))}});
        }
    }
    emit_output(out_path, j.dump(2) + "\n");
    return 0;
}

int run_oracle_tw(const std::string& in_path, int budget, const std::string& out_path) {
    Graph g = read_gr_file(in_path);
    oracle::OracleBudget b;
    b.max_vertices = budget;
    auto res = oracle::exact_treewidth(g, b);
    std::cout << "treewidth " << res.width << "\n";
    if (!out_path.empty()) write_td_file(out_path, res.witness);
    return 0;
}

int run_oracle_verify(const std::string& gr_path, const std::string& td_path,
                      const std::string& kind) {
    Graph g = read_gr_file(gr_path);
    auto td = read_td_file(td_path);
    if (td.graph_universe != g.universe())
        throw UserError("decomposition universe does not match the graph");
    td.kind = kind_from_name(kind);
    bool ok = oracle::verify_decomposition_bruteforce(g, td);
    std::cout << (ok ? "valid" : "invalid") << " (brute-force, " << kind << ")\n";
    return ok ? 0 : 1;
}

// --- bench -------------------------------------------------------------------

struct BenchJob {
    std::string graph_id;
    Graph g;
    std::string mode;
};

int run_bench(const std::string& suite, const std::string& out_path, int jobs,
              std::uint64_t seed) {
    std::uint64_t s = effective_seed(seed);
    if (jobs > 0) omp_set_num_threads(jobs);

    if (suite == "kernels") {
        // serial vs OpenMP kernels on a mid-size certified corpus
        Graph g = make_grid(40);
        auto td = oracle::min_fill_heuristic(g);
        auto time_it = [](auto&& f) {
            auto t0 = std::chrono::steady_clock::now();
            f();
            return ms_since(t0);
        };
        volatile bool sink = false;
        double serial = time_it([&] {
            for (int i = 0; i < 20; ++i) sink = validate_ok_serial(g, td);
        });
        double parallel = time_it([&] {
            for (int i = 0; i < 20; ++i) sink = validate_ok(g, td);
        });
        std::cout << "validate_ok      serial " << serial << " ms   omp " << parallel
                  << " ms\n";
        Graph h = make_random_gnm(17, 40, s);
        double ser_tw = time_it([&] { sink = oracle::exact_treewidth_serial(h).width >= 0; });
        double par_tw = time_it([&] { sink = oracle::exact_treewidth(h).width >= 0; });
        std::cout << "exact_treewidth  serial " << ser_tw << " ms   omp " << par_tw << " ms\n";
        (void)sink;
        return 0;
    }

    std::vector<BenchJob> list;
    auto add = [&](const std::string& id, Graph g) {
        for (const char* mode :
             {"slick", "small", "slick-small", "weak", "combined", "partition"})
            list.push_back({id, g, mode});
    };
    if (suite == "smoke") {
        add("grid4", make_grid(4));
        add("cycle24", make_cycle(24));
        add("fan20", make_fan(20));
    } else if (suite == "bounds") {
        add("grid8", make_grid(8));
        add("cycle120", make_cycle(120));
        add("fan100", make_fan(100));
        add("gnm120", make_random_gnm(120, 200, s));
        add("ktree150", make_random_partial_ktree(150, 4, 80, s + 1));
    } else {
        throw UserError("unknown bench suite: " + suite + " (smoke, bounds, kernels)");
    }

    std::vector<StatsRecord> stats(list.size());
    std::vector<std::string> errors(list.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(list.size()); ++i) {
        try {
            auto witness = oracle::width_witness(list[i].g);
            auto res = run_refine_job(list[i].g, list[i].mode, witness, std::nullopt,
                                      std::nullopt, list[i].graph_id, s);
            stats[i] = res.stats;
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    std::ostringstream lines;
    bool failed = false;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << list[i].graph_id << " " << list[i].mode << " FAILED: " << errors[i]
                      << "\n";
            failed = true;
            continue;
        }
        lines << stats[i].to_json().dump() << "\n";
        std::cout << stats[i].graph_id << " " << stats[i].mode << " width " << stats[i].width
                  << "/" << stats[i].width_bound << " order " << stats[i].order << " degree "
                  << stats[i].degree << " spread " << stats[i].max_spread << " ("
                  << stats[i].wall_ms << " ms)\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::app);
        if (!out) throw UserError("cannot write " + out_path);
        out << lines.str();
    }
    return failed ? 2 : 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"tree-decomposition refinement toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family as .gr");
    std::string gen_family;
    GenParams gen_params;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("family", gen_family,
                    "path|cycle|grid|fan|complete|random_gnm|random_ktree_partial|tree_random")
        ->required();
    gen->add_option("--n", gen_params.n, "vertex count (grid: side length)")->required();
    gen->add_option("--m", gen_params.m, "edge count (random_gnm)");
    gen->add_option("--k", gen_params.k, "backbone width (random_ktree_partial)");
    gen->add_option("--keep", gen_params.keep_percent, "percent of edges kept");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--out", gen_out, "output path (default stdout)");

    // refine
    auto* refine = app.add_subcommand("refine", "rebuild a decomposition with guarantees");
    std::string rf_mode, rf_in, rf_td, rf_out, rf_stats;
    int rf_k = -1, rf_d = -1;
    std::uint64_t rf_seed = 1;
    bool rf_no_verify = false;
    refine->add_option("--mode", rf_mode, "slick|small|slick-small|weak|combined|partition")
        ->required();
    refine->add_option("input", rf_in, "input .gr file")->required();
    refine->add_option("--k", rf_k, "width budget");
    refine->add_option("--d", rf_d, "slickness strength (weak mode)");
    refine->add_option("--td", rf_td, "width witness .td (min-fill/exact otherwise)");
    refine->add_option("-o,--out", rf_out, "output .td path (default stdout)");
    refine->add_option("--stats", rf_stats, "append a JSON-lines stats record here");
    refine->add_option("--seed", rf_seed, "seed recorded in stats");
    refine->add_flag("--no-verify", rf_no_verify, "skip the final validation pass");

    // verify
    auto* verify = app.add_subcommand("verify", "validate a .td against a .gr");
    std::string vf_gr, vf_td, vf_kind = "strong";
    int vf_slick = -1;
    bool vf_json = false;
    verify->add_option("graph", vf_gr, "input .gr")->required();
    verify->add_option("decomposition", vf_td, "input .td")->required();
    verify->add_option("--kind", vf_kind, "strong|weak|partition");
    verify->add_option("--slick", vf_slick, "also require s-slickness");
    verify->add_flag("--json", vf_json, "structured report");

    // separate
    auto* separate = app.add_subcommand("separate", "balanced separator engine");
    std::string sp_in, sp_td, sp_beta, sp_weights, sp_out;
    int sp_q = -1;
    separate->add_option("input", sp_in, "input .gr")->required();
    separate->add_option("--td", sp_td, "width witness .td");
    separate->add_option("--q", sp_q, "node budget (tree_dec_sep route)");
    separate->add_option("--beta", sp_beta, "balance parameter (gen_separation route)");
    separate->add_option("--weights", sp_weights, "vertex weights file: '<v> <p/q>' lines");
    separate->add_option("-o,--out", sp_out, "output path (default stdout)");

    // oracle
    auto* orac = app.add_subcommand("oracle", "exact ground truth at desk scale");
    auto* orac_tw = orac->add_subcommand("tw", "exact treewidth");
    std::string otw_in, otw_out;
    int otw_budget = 18;
    orac_tw->add_option("input", otw_in, "input .gr")->required();
    orac_tw->add_option("--budget", otw_budget, "max vertices");
    orac_tw->add_option("-o,--out", otw_out, "write witness .td here");
    auto* orac_verify = orac->add_subcommand("verify", "brute-force validation");
    std::string ov_gr, ov_td, ov_kind = "strong";
    orac_verify->add_option("graph", ov_gr)->required();
    orac_verify->add_option("decomposition", ov_td)->required();
    orac_verify->add_option("--kind", ov_kind, "strong|weak|partition");
    orac->require_subcommand(1);

    // bench
    auto* bench = app.add_subcommand("bench", "batch runner and kernel timings");
    std::string bn_suite, bn_out;
    int bn_jobs = 0;
    std::uint64_t bn_seed = 1;
    bench->add_option("--suite", bn_suite, "smoke|bounds|kernels")->required();
    bench->add_option("--out", bn_out, "append JSON-lines stats here");
    bench->add_option("--jobs", bn_jobs, "worker count (default: all cores)");
    bench->add_option("--seed", bn_seed, "corpus seed");

    std::vector<const char*> argv;
    argv.push_back("tdrefine");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (gen->parsed()) return run_gen(gen_family, gen_params, gen_seed, gen_out);
        if (refine->parsed())
            return run_refine_cmd(rf_in, rf_mode, rf_td,
                                  rf_k >= 0 ? std::optional<int>(rf_k) : std::nullopt,
                                  rf_d >= 0 ? std::optional<int>(rf_d) : std::nullopt, rf_out,
                                  rf_stats, rf_seed, rf_no_verify);
        if (verify->parsed())
            return run_verify(vf_gr, vf_td, vf_kind,
                              vf_slick >= 0 ? std::optional<int>(vf_slick) : std::nullopt,
                              vf_json);
        if (separate->parsed())
            return run_separate(sp_in, sp_td, sp_q >= 0 ? std::optional<int>(sp_q) : std::nullopt,
                                sp_beta, sp_weights, sp_out);
        if (orac->parsed()) {
            if (orac_tw->parsed()) return run_oracle_tw(otw_in, otw_budget, otw_out);
            if (orac_verify->parsed()) return run_oracle_verify(ov_gr, ov_td, ov_kind);
        }
        if (bench->parsed()) return run_bench(bn_suite, bn_out, bn_jobs, bn_seed);
        throw UserError("no subcommand given");
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CertificateError& e) {
        std::cerr << "internal certificate failure: " << e.what() << "\n";
        return 2;
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tdr
