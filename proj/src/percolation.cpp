#include "nbperc/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nbperc/detail/tarjan.hpp"
#include "nbperc/error.hpp"
#include "nbperc/parallel.hpp"

namespace nbperc {

std::string_view to_string(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::scc: return "scc";
        case ComponentKind::out: return "out";
        case ComponentKind::in: return "in";
    }
    return "unknown";
}

void PercolationConfig::validate() const {
    for (double p : p_grid)
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability " + std::to_string(p) + " outside [0, 1]");
    if (trials < 1) throw DomainError("trials must be >= 1");
    if (!(giant_fraction > 0.0 && giant_fraction < 1.0)) throw DomainError("giant_fraction must lie in (0, 1)");
}

std::vector<std::uint8_t> sample_open_set(std::size_t n, double p, Rng& rng) {
    std::vector<std::uint8_t> open(n);
    for (auto& o : open) o = rng.uniform() < p ? 1 : 0;
    return open;
}

namespace {

constexpr std::uint64_t kCoupledStream = std::numeric_limits<std::uint64_t>::max();

// Largest reachable mass over condensation sources.  The maximum reach is
// always attained at a source, since any node's reach is contained in the
// reach of its ancestors.
std::size_t largest_reach(const std::vector<std::vector<std::uint32_t>>& dag, const std::vector<std::size_t>& sizes,
                          const std::vector<std::uint32_t>& indegree) {
    const std::size_t c = sizes.size();
    std::vector<std::uint32_t> stamp(c, 0);
    std::vector<std::uint32_t> queue;
    std::size_t best = 0;
    std::uint32_t clock = 0;
    for (std::uint32_t s = 0; s < c; ++s) {
        if (indegree[s] != 0) continue;
        ++clock;
        queue.assign(1, s);
        stamp[s] = clock;
        std::size_t mass = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t x = queue[head];
            mass += sizes[x];
            for (std::uint32_t y : dag[x])
                if (stamp[y] != clock) {
                    stamp[y] = clock;
                    queue.push_back(y);
                }
        }
        best = std::max(best, mass);
    }
    return best;
}

ComponentStats measure(const DiGraph& g, std::span<const std::uint8_t> open, double giant_fraction,
                       std::size_t reference_n) {
    ComponentStats st;
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v) st.open_count += open[v] ? 1 : 0;
    if (st.open_count == 0) return st;

    const detail::TarjanResult scc = detail::tarjan(
        n, [&](VertexId v) { return g.out_degree(v); },
        [&](VertexId v, std::size_t k) { return g.arc(g.out_arcs(v)[k]).head; },
        [&](std::size_t v) { return open[v] != 0; });

    const double giant_size = giant_fraction * static_cast<double>(reference_n);
    for (std::size_t s : scc.sizes) {
        if (s > st.largest_scc) {
            st.second_scc = st.largest_scc;
            st.largest_scc = s;
        } else if (s > st.second_scc) {
            st.second_scc = s;
        }
        if (static_cast<double>(s) > giant_size) ++st.giant_count;
    }

    const std::size_t c = scc.sizes.size();
    std::vector<std::vector<std::uint32_t>> forward(c), backward(c);
    std::vector<std::uint32_t> indeg(c, 0), outdeg(c, 0);
    bool any_edge = false;
    for (const Arc& a : g.arcs()) {
        if (!open[a.tail] || !open[a.head]) continue;
        const std::uint32_t x = scc.component_of[a.tail], y = scc.component_of[a.head];
        if (x == y) continue;
        forward[x].push_back(y);
        backward[y].push_back(x);
        ++indeg[y];
        ++outdeg[x];
        any_edge = true;
    }
    if (!any_edge) {
        st.largest_out = st.largest_in = st.largest_scc;
        return st;
    }
    st.largest_out = largest_reach(forward, scc.sizes, indeg);
    st.largest_in = largest_reach(backward, scc.sizes, outdeg);
    return st;
}

Summary summarize(const std::vector<ComponentStats>& trials, std::size_t ComponentStats::*field) {
    Summary s;
    const double t = static_cast<double>(trials.size());
    if (trials.empty()) return s;
    double sum = 0.0;
    for (const auto& x : trials) sum += static_cast<double>(x.*field);
    s.mean = sum / t;
    if (trials.size() > 1) {
        double ss = 0.0;
        for (const auto& x : trials) {
            const double d = static_cast<double>(x.*field) - s.mean;
            ss += d * d;
        }
        s.std_error = std::sqrt(ss / (t - 1.0) / t);
    }
    return s;
}

}  // namespace

ComponentStats measure_components(const DiGraph& g_open, double giant_fraction, std::size_t reference_n) {
    const std::vector<std::uint8_t> all(g_open.vertex_count(), 1);
    return measure(g_open, all, giant_fraction, reference_n ? reference_n : g_open.vertex_count());
}

ComponentStats measure_open_components(const DiGraph& g, std::span<const std::uint8_t> open, double giant_fraction) {
    if (open.size() != g.vertex_count()) throw DimensionError("open mask size does not match graph order");
    return measure(g, open, giant_fraction, g.vertex_count());
}

SweepResult sweep(const DiGraph& g, const PercolationConfig& config) {
    config.validate();
    const std::size_t n = g.vertex_count();
    const std::size_t grid = config.p_grid.size();
    SweepResult result;
    result.vertex_count = n;
    result.giant_fraction = config.giant_fraction;
    result.coupled = config.coupled;
    result.master_seed = config.master_seed;
    result.points.resize(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        result.points[i].p = config.p_grid[i];
        result.points[i].trials.resize(config.trials);
    }

    const std::size_t workers = worker_count(config.threads);
    if (config.coupled) {
        parallel_for(config.trials, workers, [&](std::size_t t) {
            Rng rng(stream_seed(config.master_seed, kCoupledStream, t));
            std::vector<double> draw(n);
            for (auto& u : draw) u = rng.uniform();
            std::vector<std::uint8_t> open(n);
            for (std::size_t i = 0; i < grid; ++i) {
                const double p = config.p_grid[i];
                for (std::size_t v = 0; v < n; ++v) open[v] = draw[v] < p ? 1 : 0;
                result.points[i].trials[t] = measure(g, open, config.giant_fraction, n);
            }
        });
    } else {
        parallel_for(grid * config.trials, workers, [&](std::size_t job) {
            const std::size_t i = job / config.trials, t = job % config.trials;
            Rng rng(stream_seed(config.master_seed, i, t));
            const auto open = sample_open_set(n, config.p_grid[i], rng);
            result.points[i].trials[t] = measure(g, open, config.giant_fraction, n);
        });
    }

    for (auto& pt : result.points) {
        pt.largest_scc = summarize(pt.trials, &ComponentStats::largest_scc);
        pt.second_scc = summarize(pt.trials, &ComponentStats::second_scc);
        pt.largest_out = summarize(pt.trials, &ComponentStats::largest_out);
        pt.largest_in = summarize(pt.trials, &ComponentStats::largest_in);
        pt.giant_count = summarize(pt.trials, &ComponentStats::giant_count);
    }
    return result;
}

std::vector<OutProbEstimate> estimate_out_prob(const DiGraph& g, std::span<const VertexId> roots, double p,
                                               std::size_t m_max, std::size_t trials, std::uint64_t seed,
                                               std::size_t threads) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability outside [0, 1]");
    if (trials < 1) throw DomainError("trials must be >= 1");
    if (m_max < 1) throw DomainError("m_max must be >= 1");
    const std::size_t n = g.vertex_count();
    for (VertexId r : roots)
        if (r >= n) throw DomainError("root vertex " + std::to_string(r) + " out of range");

    // hits[chunk][root * m_max + (m-1)] = trials in the chunk where the root
    // reached >= m sites.  Integer counts make the merge order irrelevant.
    constexpr std::size_t kChunk = 256;
    const std::size_t chunks = (trials + kChunk - 1) / kChunk;
    std::vector<std::vector<std::uint64_t>> hits(chunks, std::vector<std::uint64_t>(roots.size() * m_max, 0));

    parallel_for(chunks, worker_count(threads), [&](std::size_t chunk) {
        std::vector<std::uint32_t> stamp(n, 0);
        std::uint32_t clock = 0;
        std::vector<VertexId> queue;
        auto& h = hits[chunk];
        const std::size_t end = std::min(trials, (chunk + 1) * kChunk);
        for (std::size_t t = chunk * kChunk; t < end; ++t) {
            Rng rng(stream_seed(seed, 0, t));
            const auto open = sample_open_set(n, p, rng);
            for (std::size_t r = 0; r < roots.size(); ++r) {
                const VertexId root = roots[r];
                if (!open[root]) continue;
                ++clock;
                queue.assign(1, root);
                stamp[root] = clock;
                for (std::size_t head = 0; head < queue.size() && queue.size() < m_max; ++head) {
                    for (ArcId a : g.out_arcs(queue[head])) {
                        const VertexId w = g.arc(a).head;
                        if (open[w] && stamp[w] != clock) {
                            stamp[w] = clock;
                            queue.push_back(w);
                            if (queue.size() >= m_max) break;
                        }
                    }
                }
                const std::size_t reached = std::min(queue.size(), m_max);
                for (std::size_t m = 1; m <= reached; ++m) ++h[r * m_max + m - 1];
            }
        }
    });

    std::vector<OutProbEstimate> out(roots.size());
    const double t = static_cast<double>(trials);
    for (std::size_t r = 0; r < roots.size(); ++r) {
        auto& e = out[r];
        e.root = roots[r];
        e.p = p;
        e.trials = trials;
        e.probability.resize(m_max);
        e.std_error.resize(m_max);
        for (std::size_t m = 0; m < m_max; ++m) {
            std::uint64_t count = 0;
            for (const auto& h : hits) count += h[r * m_max + m];
            const double q = static_cast<double>(count) / t;
            e.probability[m] = q;
            e.std_error[m] = std::sqrt(q * (1.0 - q) / t);
        }
    }
    return out;
}

OutProbEstimate estimate_out_prob(const DiGraph& g, VertexId root, double p, std::size_t m_max, std::size_t trials,
                                  std::uint64_t seed, std::size_t threads) {
    const VertexId roots[] = {root};
    return estimate_out_prob(g, roots, p, m_max, trials, seed, threads).front();
}

ThresholdEstimate estimate_threshold(const SweepResult& result, ThresholdCriterion criterion, ComponentKind target) {
    const auto& pts = result.points;
    if (pts.size() < 2) throw DomainError("threshold estimation needs at least two grid points");
    const double n = static_cast<double>(std::max<std::size_t>(result.vertex_count, 1));

    if (criterion == ThresholdCriterion::giant_fraction_crossing) {
        auto pick = [&](const SweepPoint& pt) -> const Summary& {
            switch (target) {
                case ComponentKind::out: return pt.largest_out;
                case ComponentKind::in: return pt.largest_in;
                default: return pt.largest_scc;
            }
        };
        const double level = result.giant_fraction;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const double f0 = pick(pts[i]).mean / n, f1 = pick(pts[i + 1]).mean / n;
            if (!(f0 < level && f1 >= level)) continue;
            const double dp = pts[i + 1].p - pts[i].p;
            const double slope = (f1 - f0) / dp;
            const double p_c = pts[i].p + (level - f0) / slope;
            const double se = std::max(pick(pts[i]).std_error, pick(pts[i + 1]).std_error) / n;
            return {p_c, 0.5 * std::abs(dp) + se / std::abs(slope)};
        }
        throw DomainError("largest " + std::string(to_string(target)) + " fraction never crosses " +
                          std::to_string(level) + " on the grid");
    }

    std::size_t k = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].second_scc.mean > pts[k].second_scc.mean) k = i;
    if (pts[k].second_scc.mean <= 0.0) throw DomainError("second-largest component is empty on the whole grid");
    if (k == 0 || k + 1 == pts.size()) {
        const double spacing = k == 0 ? pts[1].p - pts[0].p : pts[k].p - pts[k - 1].p;
        return {pts[k].p, std::abs(spacing)};
    }
    const double x0 = pts[k - 1].p, x1 = pts[k].p, x2 = pts[k + 1].p;
    const double y0 = pts[k - 1].second_scc.mean, y1 = pts[k].second_scc.mean, y2 = pts[k + 1].second_scc.mean;
    const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
    const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
    double p_c = x1;
    if (den != 0.0) p_c = std::clamp(x1 - 0.5 * num / den, x0, x2);
    return {p_c, 0.5 * std::max(x1 - x0, x2 - x1)};
}

std::vector<MultiplicityPoint> multiplicity_probe(const DiGraph& g, const PercolationConfig& config) {
    const SweepResult sr = sweep(g, config);
    std::vector<MultiplicityPoint> out;
    out.reserve(sr.points.size());
    for (const auto& pt : sr.points) {
        MultiplicityPoint mp;
        mp.p = pt.p;
        std::size_t multi = 0;
        double sum = 0.0;
        for (const auto& st : pt.trials) {
            const double ratio =
                st.largest_scc ? static_cast<double>(st.second_scc) / static_cast<double>(st.largest_scc) : 0.0;
            mp.ratios.push_back(ratio);
            mp.giant_counts.push_back(st.giant_count);
            mp.largest_scc.push_back(st.largest_scc);
            sum += ratio;
            if (st.giant_count >= 2) ++multi;
        }
        mp.mean_ratio = sum / static_cast<double>(pt.trials.size());
        mp.multi_giant_fraction = static_cast<double>(multi) / static_cast<double>(pt.trials.size());
        out.push_back(std::move(mp));
    }
    return out;
}

}  // namespace nbperc
