#include "nbperc/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "nbperc/error.hpp"
#include "nbperc/hashimoto.hpp"

namespace nbperc {

using nlohmann::json;

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string input_digest(const DiGraph& g) {
    std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.tail != b.tail ? a.tail < b.tail : a.head < b.head; });
    std::uint64_t hash = 0xcbf29ce484222325ull;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            hash ^= c;
            hash *= 0x100000001b3ull;
        }
    };
    feed("#n " + std::to_string(g.vertex_count()) + "\n");
    for (const Arc& a : arcs) feed(std::to_string(a.tail) + " " + std::to_string(a.head) + "\n");
    char hex[17];
    for (int i = 15; i >= 0; --i) {
        hex[i] = "0123456789abcdef"[hash & 0xf];
        hash >>= 4;
    }
    hex[16] = '\0';
    return std::string("fnv1a64:") + hex;
}

AnalysisDocument analyze_graph(const DiGraph& g, const AnalysisOptions& options) {
    AnalysisDocument doc;
    doc.input_digest = input_digest(g);
    doc.include_left_pf = options.include_left_pf;

    const ComponentLabeling scc = strongly_connected_components(g);
    doc.graph.vertex_count = g.vertex_count();
    doc.graph.arc_count = g.arc_count();
    doc.graph.symmetric_pairs = symmetric_arc_pairs(g).size();
    doc.graph.scc_count = scc.count();
    doc.graph.strongly_connected = g.vertex_count() > 0 && scc.count() == 1;
    doc.graph.robustly_strongly_connected = is_robustly_strongly_connected(g);

    const HashimotoOperator h(g);
    doc.spectral = analyze_spectrum(h, options.spectral);
    doc.graph.olg_strongly_connected = doc.spectral.olg_strongly_connected;
    doc.bounds = evaluate_bounds(doc.spectral, h, options.p_grid, options.bounds);

    if (options.cycles_max_len) {
        CycleOptions co = options.cycle_limits;
        co.max_len = *options.cycles_max_len;
        doc.cycles = enumerate_elementary_circuits(g, co);
        for (const auto& pt : doc.bounds.points) doc.expected_sac.push_back(expected_sac_count(*doc.cycles, pt.p));
    }
    return doc;
}

// ---------------------------------------------------------------------------

namespace {

json number(double x) {
    if (std::isfinite(x)) return x;
    return format_double(x);
}

double read_number(const json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw ParseError(0, "expected a number, got '" + s + "'");
}

constexpr const char* kVoid = "void";

json optional_number(const std::optional<double>& x) { return x ? number(*x) : json(kVoid); }

std::optional<double> read_optional(const json& j) {
    if (j.is_string() && j.get<std::string>() == kVoid) return std::nullopt;
    return read_number(j);
}

RadiusMethod method_from_string(const std::string& s) {
    if (s == "power-shifted") return RadiusMethod::power_shifted;
    if (s == "gelfand-fallback") return RadiusMethod::gelfand_fallback;
    return RadiusMethod::nilpotent_detected;
}

json counts_json(const std::map<std::size_t, std::uint64_t>& m) {
    json j = json::object();
    for (const auto& [len, count] : m) j[std::to_string(len)] = count;
    return j;
}

std::map<std::size_t, std::uint64_t> counts_from_json(const json& j) {
    std::map<std::size_t, std::uint64_t> m;
    for (auto it = j.begin(); it != j.end(); ++it) m[std::stoull(it.key())] = it.value().get<std::uint64_t>();
    return m;
}

}  // namespace

json to_json(const AnalysisDocument& doc) {
    json j;
    j["tool"] = {{"name", kToolName}, {"version", doc.tool_version}};
    j["input_digest"] = doc.input_digest;
    const GraphSummary& g = doc.graph;
    j["graph"] = {{"n", g.vertex_count},
                  {"n_E", g.arc_count},
                  {"symmetric_pairs", g.symmetric_pairs},
                  {"scc_count", g.scc_count},
                  {"strongly_connected", g.strongly_connected},
                  {"robustly_strongly_connected", g.robustly_strongly_connected},
                  {"olg_strongly_connected", g.olg_strongly_connected}};

    const SpectralReport& s = doc.spectral;
    json sj = {{"rho_H", number(s.rho_H)},
               {"rho_H_bracket", {number(s.hashimoto.lower), number(s.hashimoto.upper)}},
               {"rho_H_method", to_string(s.hashimoto.method)},
               {"rho_A", number(s.rho_A)},
               {"rho_A_bracket", {number(s.adjacency.lower), number(s.adjacency.upper)}},
               {"rho_A_method", to_string(s.adjacency.method)},
               {"norm_row", s.norm_row},
               {"norm_col", s.norm_col},
               {"gamma_L", s.gamma_L ? number(*s.gamma_L) : json(nullptr)},
               {"iterations", s.iterations},
               {"residual", number(s.residual)},
               {"method", to_string(s.method)}};
    if (doc.include_left_pf && s.left_pf) {
        json xi = json::array();
        for (double x : *s.left_pf) xi.push_back(number(x));
        sj["left_pf"] = std::move(xi);
    }
    j["spectral"] = std::move(sj);

    json points = json::array();
    for (std::size_t i = 0; i < doc.bounds.points.size(); ++i) {
        const BoundsPoint& pt = doc.bounds.points[i];
        json pj = {{"p", number(pt.p)},
                   {"cluster_out", optional_number(pt.cluster_out)},
                   {"cluster_in", optional_number(pt.cluster_in)},
                   {"improved_out", optional_number(pt.improved_out)},
                   {"sac_closed", optional_number(pt.sac_closed)},
                   {"sac_trace", pt.sac_trace ? number(pt.sac_trace->value) : json(kVoid)},
                   {"sac_trace_tail", pt.sac_trace ? number(pt.sac_trace->tail_bound) : json(kVoid)}};
        if (i < doc.expected_sac.size()) pj["expected_sac"] = number(doc.expected_sac[i]);
        points.push_back(std::move(pj));
    }
    j["bounds"] = {{"pc_spectral", number(doc.bounds.pc.spectral)},
                   {"pc_out", number(doc.bounds.pc.out)},
                   {"pc_in", number(doc.bounds.pc.in)},
                   {"trace_cutoff", doc.bounds.trace_cutoff},
                   {"points", std::move(points)}};

    if (doc.cycles) {
        j["cycles"] = {{"circuit_count_by_length", counts_json(doc.cycles->circuit_count_by_length)},
                       {"sac_count_by_length", counts_json(doc.cycles->sac_count_by_length)},
                       {"sac_total", doc.cycles->sac_total()},
                       {"circuits", doc.cycles->circuits}};
    }
    return j;
}

AnalysisDocument analysis_from_json(const json& j) {
    AnalysisDocument doc;
    doc.tool_version = j.at("tool").at("version").get<std::string>();
    doc.input_digest = j.at("input_digest").get<std::string>();
    const json& g = j.at("graph");
    doc.graph.vertex_count = g.at("n").get<std::size_t>();
    doc.graph.arc_count = g.at("n_E").get<std::size_t>();
    doc.graph.symmetric_pairs = g.at("symmetric_pairs").get<std::size_t>();
    doc.graph.scc_count = g.at("scc_count").get<std::size_t>();
    doc.graph.strongly_connected = g.at("strongly_connected").get<bool>();
    doc.graph.robustly_strongly_connected = g.at("robustly_strongly_connected").get<bool>();
    doc.graph.olg_strongly_connected = g.at("olg_strongly_connected").get<bool>();

    const json& s = j.at("spectral");
    SpectralReport& sr = doc.spectral;
    sr.rho_H = sr.hashimoto.rho = read_number(s.at("rho_H"));
    sr.hashimoto.lower = read_number(s.at("rho_H_bracket").at(0));
    sr.hashimoto.upper = read_number(s.at("rho_H_bracket").at(1));
    sr.hashimoto.method = method_from_string(s.at("rho_H_method").get<std::string>());
    sr.rho_A = sr.adjacency.rho = read_number(s.at("rho_A"));
    sr.adjacency.lower = read_number(s.at("rho_A_bracket").at(0));
    sr.adjacency.upper = read_number(s.at("rho_A_bracket").at(1));
    sr.adjacency.method = method_from_string(s.at("rho_A_method").get<std::string>());
    sr.norm_row = s.at("norm_row").get<std::size_t>();
    sr.norm_col = s.at("norm_col").get<std::size_t>();
    if (!s.at("gamma_L").is_null()) sr.gamma_L = read_number(s.at("gamma_L"));
    sr.iterations = s.at("iterations").get<std::size_t>();
    sr.residual = read_number(s.at("residual"));
    sr.method = method_from_string(s.at("method").get<std::string>());
    sr.olg_strongly_connected = doc.graph.olg_strongly_connected;
    if (s.contains("left_pf")) {
        std::vector<double> xi;
        for (const json& x : s.at("left_pf")) xi.push_back(read_number(x));
        sr.left_pf = std::move(xi);
        doc.include_left_pf = true;
    }

    const json& b = j.at("bounds");
    doc.bounds.pc = {read_number(b.at("pc_spectral")), read_number(b.at("pc_out")), read_number(b.at("pc_in"))};
    doc.bounds.trace_cutoff = b.at("trace_cutoff").get<std::size_t>();
    for (const json& pj : b.at("points")) {
        BoundsPoint pt;
        pt.p = read_number(pj.at("p"));
        pt.cluster_out = read_optional(pj.at("cluster_out"));
        pt.cluster_in = read_optional(pj.at("cluster_in"));
        pt.improved_out = read_optional(pj.at("improved_out"));
        pt.sac_closed = read_optional(pj.at("sac_closed"));
        if (auto v = read_optional(pj.at("sac_trace")))
            pt.sac_trace = SeriesValue{*v, read_number(pj.at("sac_trace_tail"))};
        if (pj.contains("expected_sac")) doc.expected_sac.push_back(read_number(pj.at("expected_sac")));
        doc.bounds.points.push_back(pt);
    }

    if (j.contains("cycles")) {
        const json& c = j.at("cycles");
        CycleReport cr;
        cr.circuit_count_by_length = counts_from_json(c.at("circuit_count_by_length"));
        cr.sac_count_by_length = counts_from_json(c.at("sac_count_by_length"));
        cr.circuits = c.at("circuits").get<std::vector<std::vector<VertexId>>>();
        doc.cycles = std::move(cr);
    }
    return doc;
}

std::string to_csv(const AnalysisDocument& doc) {
    std::ostringstream out;
    out << "section,p,name,value\n";
    auto row = [&](const char* section, const std::string& p, const std::string& name, const std::string& value) {
        out << section << ',' << p << ',' << name << ',' << value << '\n';
    };
    auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string(kVoid); };

    row("tool", "", "version", doc.tool_version);
    row("tool", "", "input_digest", doc.input_digest);
    const GraphSummary& g = doc.graph;
    row("graph", "", "n", std::to_string(g.vertex_count));
    row("graph", "", "n_E", std::to_string(g.arc_count));
    row("graph", "", "symmetric_pairs", std::to_string(g.symmetric_pairs));
    row("graph", "", "scc_count", std::to_string(g.scc_count));
    row("graph", "", "strongly_connected", g.strongly_connected ? "true" : "false");
    row("graph", "", "robustly_strongly_connected", g.robustly_strongly_connected ? "true" : "false");
    row("graph", "", "olg_strongly_connected", g.olg_strongly_connected ? "true" : "false");

    const SpectralReport& s = doc.spectral;
    row("spectral", "", "rho_H", format_double(s.rho_H));
    row("spectral", "", "rho_H_lower", format_double(s.hashimoto.lower));
    row("spectral", "", "rho_H_upper", format_double(s.hashimoto.upper));
    row("spectral", "", "rho_H_method", std::string(to_string(s.hashimoto.method)));
    row("spectral", "", "rho_A", format_double(s.rho_A));
    row("spectral", "", "rho_A_lower", format_double(s.adjacency.lower));
    row("spectral", "", "rho_A_upper", format_double(s.adjacency.upper));
    row("spectral", "", "rho_A_method", std::string(to_string(s.adjacency.method)));
    row("spectral", "", "norm_row", std::to_string(s.norm_row));
    row("spectral", "", "norm_col", std::to_string(s.norm_col));
    row("spectral", "", "gamma_L", s.gamma_L ? format_double(*s.gamma_L) : "");
    row("spectral", "", "iterations", std::to_string(s.iterations));
    row("spectral", "", "residual", format_double(s.residual));
    row("spectral", "", "method", std::string(to_string(s.method)));

    row("bounds", "", "pc_spectral", format_double(doc.bounds.pc.spectral));
    row("bounds", "", "pc_out", format_double(doc.bounds.pc.out));
    row("bounds", "", "pc_in", format_double(doc.bounds.pc.in));
    row("bounds", "", "trace_cutoff", std::to_string(doc.bounds.trace_cutoff));
    for (std::size_t i = 0; i < doc.bounds.points.size(); ++i) {
        const BoundsPoint& pt = doc.bounds.points[i];
        const std::string p = format_double(pt.p);
        row("bounds", p, "cluster_out", opt(pt.cluster_out));
        row("bounds", p, "cluster_in", opt(pt.cluster_in));
        row("bounds", p, "improved_out", opt(pt.improved_out));
        row("bounds", p, "sac_closed", opt(pt.sac_closed));
        row("bounds", p, "sac_trace", pt.sac_trace ? format_double(pt.sac_trace->value) : kVoid);
        row("bounds", p, "sac_trace_tail", pt.sac_trace ? format_double(pt.sac_trace->tail_bound) : kVoid);
        if (i < doc.expected_sac.size()) row("bounds", p, "expected_sac", format_double(doc.expected_sac[i]));
    }
    if (doc.cycles) {
        for (const auto& [len, count] : doc.cycles->circuit_count_by_length)
            row("cycles", "", "circuits_length_" + std::to_string(len), std::to_string(count));
        for (const auto& [len, count] : doc.cycles->sac_count_by_length)
            row("cycles", "", "sac_length_" + std::to_string(len), std::to_string(count));
        row("cycles", "", "sac_total", std::to_string(doc.cycles->sac_total()));
    }
    return out.str();
}

// ---------------------------------------------------------------------------

std::string sweep_trials_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "p,trial,largest_scc,second_scc,largest_out,largest_in,giant_count\n";
    for (const auto& pt : result.points) {
        const std::string p = format_double(pt.p);
        for (std::size_t t = 0; t < pt.trials.size(); ++t) {
            const ComponentStats& s = pt.trials[t];
            out << p << ',' << t << ',' << s.largest_scc << ',' << s.second_scc << ',' << s.largest_out << ','
                << s.largest_in << ',' << s.giant_count << '\n';
        }
    }
    return out.str();
}

std::string sweep_summary_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "p,trials,largest_scc_mean,largest_scc_se,second_scc_mean,second_scc_se,largest_out_mean,largest_out_se,"
           "largest_in_mean,largest_in_se,giant_count_mean,giant_count_se,largest_scc_fraction\n";
    const double n = static_cast<double>(std::max<std::size_t>(result.vertex_count, 1));
    for (const auto& pt : result.points) {
        out << format_double(pt.p) << ',' << pt.trials.size();
        for (const Summary* s : {&pt.largest_scc, &pt.second_scc, &pt.largest_out, &pt.largest_in, &pt.giant_count})
            out << ',' << format_double(s->mean) << ',' << format_double(s->std_error);
        out << ',' << format_double(pt.largest_scc.mean / n) << '\n';
    }
    return out.str();
}

std::string out_prob_csv(const std::vector<OutProbEstimate>& estimates) {
    std::ostringstream out;
    out << "root,p,m,probability,std_error\n";
    for (const auto& e : estimates)
        for (std::size_t m = 1; m <= e.probability.size(); ++m)
            out << e.root << ',' << format_double(e.p) << ',' << m << ',' << format_double(e.at(m)) << ','
                << format_double(e.se(m)) << '\n';
    return out.str();
}

namespace {

json summary_json(const Summary& s) { return {{"mean", number(s.mean)}, {"se", number(s.std_error)}}; }

Summary summary_from_json(const json& j) { return {read_number(j.at("mean")), read_number(j.at("se"))}; }

}  // namespace

json to_json(const SweepResult& result) {
    json points = json::array();
    for (const auto& pt : result.points) {
        json trials = json::array();
        for (const auto& s : pt.trials)
            trials.push_back({{"largest_scc", s.largest_scc},
                              {"second_scc", s.second_scc},
                              {"largest_out", s.largest_out},
                              {"largest_in", s.largest_in},
                              {"giant_count", s.giant_count},
                              {"open_count", s.open_count}});
        points.push_back({{"p", number(pt.p)},
                          {"largest_scc", summary_json(pt.largest_scc)},
                          {"second_scc", summary_json(pt.second_scc)},
                          {"largest_out", summary_json(pt.largest_out)},
                          {"largest_in", summary_json(pt.largest_in)},
                          {"giant_count", summary_json(pt.giant_count)},
                          {"trials", std::move(trials)}});
    }
    return {{"n", result.vertex_count},
            {"giant_fraction", number(result.giant_fraction)},
            {"coupled", result.coupled},
            {"seed", result.master_seed},
            {"points", std::move(points)}};
}

SweepResult sweep_from_json(const json& j) {
    SweepResult r;
    r.vertex_count = j.at("n").get<std::size_t>();
    r.giant_fraction = read_number(j.at("giant_fraction"));
    r.coupled = j.at("coupled").get<bool>();
    r.master_seed = j.at("seed").get<std::uint64_t>();
    for (const json& pj : j.at("points")) {
        SweepPoint pt;
        pt.p = read_number(pj.at("p"));
        pt.largest_scc = summary_from_json(pj.at("largest_scc"));
        pt.second_scc = summary_from_json(pj.at("second_scc"));
        pt.largest_out = summary_from_json(pj.at("largest_out"));
        pt.largest_in = summary_from_json(pj.at("largest_in"));
        pt.giant_count = summary_from_json(pj.at("giant_count"));
        for (const json& tj : pj.at("trials")) {
            ComponentStats s;
            s.largest_scc = tj.at("largest_scc").get<std::size_t>();
            s.second_scc = tj.at("second_scc").get<std::size_t>();
            s.largest_out = tj.at("largest_out").get<std::size_t>();
            s.largest_in = tj.at("largest_in").get<std::size_t>();
            s.giant_count = tj.at("giant_count").get<std::size_t>();
            s.open_count = tj.at("open_count").get<std::size_t>();
            pt.trials.push_back(s);
        }
        r.points.push_back(std::move(pt));
    }
    return r;
}

json to_json(const std::vector<OutProbEstimate>& estimates) {
    json arr = json::array();
    for (const auto& e : estimates) {
        json probs = json::array(), ses = json::array();
        for (std::size_t m = 0; m < e.probability.size(); ++m) {
            probs.push_back(number(e.probability[m]));
            ses.push_back(number(e.std_error[m]));
        }
        arr.push_back({{"root", e.root},
                       {"p", number(e.p)},
                       {"trials", e.trials},
                       {"probability", std::move(probs)},
                       {"std_error", std::move(ses)}});
    }
    return arr;
}

}  // namespace nbperc
