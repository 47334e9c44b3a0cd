#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nbperc/bounds.hpp"
#include "nbperc/cycles.hpp"
#include "nbperc/error.hpp"
#include "nbperc/generators.hpp"
#include "nbperc/hashimoto.hpp"
#include "nbperc/percolation.hpp"
#include "nbperc/random.hpp"
#include "nbperc/report.hpp"
#include "nbperc/spectral.hpp"

namespace nbperc::cli {

namespace {

// Writes to `path` when given, otherwise to the fallback stream.
void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError(0, "cannot write '" + path + "'");
    f << text;
}

std::vector<VertexId> default_roots(const DiGraph& g, std::uint64_t seed) {
    std::vector<VertexId> roots(g.vertex_count());
    std::iota(roots.begin(), roots.end(), VertexId{0});
    constexpr std::size_t kMaxRoots = 256;
    if (roots.size() > kMaxRoots) {
        Rng rng(stream_seed(seed, 0x726f6f7473ull, 0));
        std::shuffle(roots.begin(), roots.end(), rng.engine());
        roots.resize(kMaxRoots);
        std::sort(roots.begin(), roots.end());
    }
    return roots;
}

struct GraphInput {
    std::string path;
    bool undirected = false;

    void add(CLI::App& cmd) {
        cmd.add_option("input", path, "Edge-list file")->required();
        cmd.add_flag("--undirected", undirected, "Treat each line as an undirected edge");
    }
    DiGraph load() const { return read_edge_list_file(path, undirected); }
};

// ---------------------------------------------------------------------------

struct AnalyzeCommand {
    GraphInput input;
    std::vector<double> p_grid;
    std::size_t cycles_max_len = 0;
    bool cycles = false;
    std::string format = "json";
    std::string output;
    bool left_pf = false;
    std::size_t trace_cutoff = 64;
    std::size_t max_iter = 0;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("analyze", "Spectral quantities and percolation bounds of a digraph");
        input.add(*cmd);
        cmd->add_option("--p", p_grid, "Probabilities at which to evaluate the bounds")->delimiter(',');
        cmd->add_option("--cycles", cycles_max_len, "Run the circuit census up to this length (0 = all)");
        cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("-o,--output", output, "Output file (default stdout)");
        cmd->add_flag("--left-pf", left_pf, "Include the left Perron vector in the JSON output");
        cmd->add_option("--trace-cutoff", trace_cutoff, "Series cutoff for the trace bound");
        cmd->add_option("--max-iter", max_iter, "Power-iteration budget per block (0 = automatic)");
        cmd->callback([this, cmd] { cycles = cmd->count("--cycles") > 0; });
        command = cmd;
    }

    int run(std::ostream& out) const {
        const DiGraph g = input.load();
        AnalysisOptions opts;
        opts.p_grid = p_grid;
        if (cycles) opts.cycles_max_len = cycles_max_len;
        opts.include_left_pf = left_pf;
        opts.bounds.trace_cutoff = trace_cutoff;
        opts.spectral.max_iter = max_iter;
        const AnalysisDocument doc = analyze_graph(g, opts);
        emit(output, out, format == "json" ? to_json(doc).dump(2) + "\n" : to_csv(doc));
        return kExitOk;
    }

    CLI::App* command = nullptr;
};

// ---------------------------------------------------------------------------

struct SimulateCommand {
    GraphInput input;
    double p_min = 0.0;
    double p_max = 1.0;
    std::size_t steps = 11;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    double giant_fraction = 0.01;
    bool coupled = true;
    std::vector<VertexId> roots;
    std::size_t m_max = 20;
    std::string format = "csv";
    std::string output;
    std::string summary_path;
    std::string outprob_path;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("simulate", "Monte-Carlo site percolation sweep");
        input.add(*cmd);
        cmd->add_option("--p-min", p_min)->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--p-max", p_max)->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--steps", steps, "Number of grid points")->check(CLI::PositiveNumber);
        cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed);
        cmd->add_option("--giant-fraction", giant_fraction)->check(CLI::Range(0.0, 1.0));
        cmd->add_flag("--coupled,!--independent", coupled, "Share per-vertex draws across the grid (default)");
        cmd->add_option("--roots", roots, "Roots for out-cluster probabilities")->delimiter(',');
        cmd->add_option("--m-max", m_max, "Largest cluster size m for out-cluster probabilities")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("-o,--output", output, "Per-trial CSV or JSON document (default stdout)");
        cmd->add_option("--summary", summary_path, "Per-p summary CSV");
        cmd->add_option("--outprob", outprob_path, "Out-cluster probability CSV");
        command = cmd;
    }

    int run(std::ostream& out) const {
        if (p_max < p_min) throw DomainError("--p-max must not be below --p-min");
        const DiGraph g = input.load();
        PercolationConfig cfg;
        for (std::size_t i = 0; i < steps; ++i)
            cfg.p_grid.push_back(steps == 1 ? p_min
                                            : p_min + (p_max - p_min) * static_cast<double>(i) /
                                                          static_cast<double>(steps - 1));
        cfg.trials = trials;
        cfg.master_seed = seed;
        cfg.giant_fraction = giant_fraction;
        cfg.coupled = coupled;
        const SweepResult sr = sweep(g, cfg);

        std::vector<OutProbEstimate> estimates;
        for (std::size_t i = 0; i < cfg.p_grid.size() && !roots.empty(); ++i) {
            auto e = estimate_out_prob(g, roots, cfg.p_grid[i], m_max, trials, stream_seed(seed, i, 0x6f7574ull));
            estimates.insert(estimates.end(), e.begin(), e.end());
        }

        if (format == "json") {
            nlohmann::json doc = {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                                  {"input_digest", input_digest(g)},
                                  {"sweep", to_json(sr)},
                                  {"out_prob", to_json(estimates)}};
            emit(output, out, doc.dump(2) + "\n");
        } else {
            emit(output, out, sweep_trials_csv(sr));
        }
        if (!summary_path.empty()) emit(summary_path, out, sweep_summary_csv(sr));
        if (!outprob_path.empty()) emit(outprob_path, out, out_prob_csv(estimates));
        return kExitOk;
    }

    CLI::App* command = nullptr;
};

// ---------------------------------------------------------------------------

struct BoundsCheckCommand {
    GraphInput input;
    std::vector<double> p_grid;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    std::size_t m_max = 20;
    std::vector<VertexId> roots;
    std::size_t trace_cutoff = 64;
    std::string output;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("bounds-check", "Compare the bounds against Monte-Carlo and exact counts");
        input.add(*cmd);
        cmd->add_option("--p", p_grid, "Probabilities to check")->delimiter(',')->required();
        cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed);
        cmd->add_option("--m-max", m_max)->check(CLI::PositiveNumber);
        cmd->add_option("--roots", roots, "Roots (default: all vertices, at most 256 sampled)")->delimiter(',');
        cmd->add_option("--trace-cutoff", trace_cutoff);
        cmd->add_option("-o,--output", output, "Output CSV (default stdout)");
        command = cmd;
    }

    int run(std::ostream& out) const {
        const DiGraph g = input.load();
        const HashimotoOperator h(g);
        const SpectralReport sr = analyze_spectrum(h);
        const std::vector<VertexId> root_list = roots.empty() ? default_roots(g, seed) : roots;

        std::optional<CycleReport> census;
        std::optional<std::vector<TraceCount>> traces;
        const std::size_t cutoff = std::max(trace_cutoff, g.vertex_count());
        if (g.vertex_count() <= CycleOptions{}.vertex_cap) {
            census = enumerate_elementary_circuits(g);
            try {
                traces = trace_powers(h, cutoff);
            } catch (const OverflowError&) {
            }
        }

        std::ostringstream csv;
        csv << "p,cluster_bound,max_mPm,max_mPm_minus_3se,cluster_verdict,improved_bound,improved_verdict,"
               "sac_expected,sac_trace,sac_trace_tail,sac_closed,sac_verdict\n";
        const std::string kVoid = "void";
        for (std::size_t i = 0; i < p_grid.size(); ++i) {
            const double p = p_grid[i];
            if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability outside [0, 1]");
            std::optional<double> t1, improved;
            if (p * static_cast<double>(sr.norm_row) < 1.0) t1 = out_component_probability_bound(p, sr.norm_row);
            if (sr.gamma_L && p * sr.rho_H < 1.0) improved = improved_out_bound(p, sr.rho_H, sr.gamma_L);

            double max_mp = 0.0, max_lower = 0.0;
            if (t1 || improved) {
                const auto est = estimate_out_prob(g, root_list, p, m_max, trials, stream_seed(seed, i, 0));
                for (const auto& e : est)
                    for (std::size_t m = 1; m <= m_max; ++m) {
                        const double md = static_cast<double>(m);
                        max_mp = std::max(max_mp, md * e.at(m));
                        max_lower = std::max(max_lower, md * e.at(m) - 3.0 * md * e.se(m));
                    }
            }
            auto verdict = [&](const std::optional<double>& bound) {
                return bound ? (max_lower <= *bound ? "pass" : "fail") : kVoid;
            };

            csv << format_double(p) << ',' << (t1 ? format_double(*t1) : kVoid) << ','
                << (t1 || improved ? format_double(max_mp) : kVoid) << ','
                << (t1 || improved ? format_double(max_lower) : kVoid) << ',' << verdict(t1) << ','
                << (improved ? format_double(*improved) : kVoid) << ',' << verdict(improved) << ',';

            if (p * sr.rho_H >= 1.0) {
                csv << (census ? format_double(expected_sac_count(*census, p)) : "skipped") << ",void,void,void,void\n";
                continue;
            }
            const double closed = sac_bound_closed(p, sr.rho_H, h.dimension());
            if (!census || !traces) {
                csv << "skipped,skipped,skipped," << format_double(closed) << ",skipped\n";
                continue;
            }
            const double expected = expected_sac_count(*census, p);
            const SeriesValue trace = sac_bound_trace(p, *traces, sr.rho_H, h.dimension());
            const bool ok = expected <= trace.value + 1e-12 && trace.value <= closed + 1e-9;
            csv << format_double(expected) << ',' << format_double(trace.value) << ','
                << format_double(trace.tail_bound) << ',' << format_double(closed) << ',' << (ok ? "pass" : "fail")
                << '\n';
        }
        emit(output, out, csv.str());
        return kExitOk;
    }

    CLI::App* command = nullptr;
};

// ---------------------------------------------------------------------------

struct GenCommand {
    std::string family;
    std::vector<double> params;
    std::uint64_t seed = 1;
    std::string output;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("gen", "Generate a graph family as an edge list");
        cmd->add_option("family", family, "cycle N | complete N | path N | star K | regular N D | er N Q | tree N")
            ->required()
            ->check(CLI::IsMember({"cycle", "complete", "path", "star", "regular", "er", "tree"}));
        cmd->add_option("params", params, "Family parameters")->required();
        cmd->add_option("--seed", seed);
        cmd->add_option("-o,--output", output, "Output file (default stdout)");
        command = cmd;
    }

    std::size_t count_param(std::size_t i) const {
        if (i >= params.size()) throw DomainError("'" + family + "' needs more parameters");
        const double x = params[i];
        if (!(x >= 0.0) || x != std::floor(x)) throw DomainError("parameter " + std::to_string(i + 1) + " must be a nonnegative integer");
        return static_cast<std::size_t>(x);
    }

    int run(std::ostream& out) const {
        const std::size_t expected = (family == "regular" || family == "er") ? 2 : 1;
        if (params.size() != expected)
            throw DomainError("'" + family + "' takes " + std::to_string(expected) + " parameter(s)");
        DiGraph g;
        if (family == "cycle") g = gen_cycle(count_param(0));
        else if (family == "complete") g = gen_complete_sym(count_param(0));
        else if (family == "path") g = gen_path_sym(count_param(0));
        else if (family == "star") g = gen_star_sym(count_param(0));
        else if (family == "regular") g = gen_random_regular_sym(count_param(0), count_param(1), seed);
        else if (family == "er") g = gen_erdos_renyi_digraph(count_param(0), params[1], seed);
        else g = gen_random_tree_sym(count_param(0), seed);
        emit(output, out, serialize_edge_list(g));
        return kExitOk;
    }

    CLI::App* command = nullptr;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-backtracking spectral bounds for percolation on digraphs", "nbperc"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    AnalyzeCommand analyze;
    SimulateCommand simulate;
    BoundsCheckCommand bounds_check;
    GenCommand gen;
    analyze.add(app);
    simulate.add(app);
    bounds_check.add(app);
    gen.add(app);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*analyze.command) return analyze.run(out);
        if (*simulate.command) return simulate.run(out);
        if (*bounds_check.command) return bounds_check.run(out);
        if (*gen.command) return gen.run(out);
    } catch (const NonConvergenceError& e) {
        err << "numeric failure: " << e.what() << " (bracket width " << e.width() << ")\n";
        return kExitNumeric;
    } catch (const OverflowError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace nbperc::cli
