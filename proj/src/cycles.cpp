#include "nbperc/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nbperc/error.hpp"

namespace nbperc {

std::uint64_t CycleReport::sac_total() const {
    std::uint64_t total = 0;
    for (const auto& [len, count] : sac_count_by_length) total += count;
    return total;
}

namespace {

// Johnson (1975), on the subgraph of vertices >= start for each start vertex.
// A path cut by the length limit counts as "found a circuit" for the purpose
// of unblocking: unblocking too eagerly only costs time, never circuits.
class JohnsonSearch {
public:
    JohnsonSearch(const DiGraph& g, std::size_t max_len)
        : g_(g), max_len_(max_len), blocked_(g.vertex_count(), 0), block_map_(g.vertex_count()) {}

    void run(CycleReport& report) {
        report_ = &report;
        for (VertexId s = 0; s < g_.vertex_count(); ++s) {
            start_ = s;
            for (VertexId v = s; v < g_.vertex_count(); ++v) {
                blocked_[v] = 0;
                block_map_[v].clear();
            }
            circuit(s);
        }
    }

private:
    bool circuit(VertexId v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = 1;
        for (ArcId a : g_.out_arcs(v)) {
            const VertexId w = g_.arc(a).head;
            if (w < start_) continue;
            if (w == start_) {
                emit();
                found = true;
            } else if (path_.size() >= max_len_) {
                found = true;
            } else if (!blocked_[w]) {
                if (circuit(w)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (ArcId a : g_.out_arcs(v)) {
                const VertexId w = g_.arc(a).head;
                if (w < start_) continue;
                auto& list = block_map_[w];
                if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
            }
        }
        path_.pop_back();
        return found;
    }

    void unblock(VertexId u) {
        std::vector<VertexId> work{u};
        while (!work.empty()) {
            const VertexId x = work.back();
            work.pop_back();
            if (!blocked_[x]) continue;
            blocked_[x] = 0;
            for (VertexId w : block_map_[x]) work.push_back(w);
            block_map_[x].clear();
        }
    }

    void emit() {
        const std::size_t len = path_.size();
        report_->circuits.push_back(path_);
        ++report_->circuit_count_by_length[len];
        if (len >= 3) ++report_->sac_count_by_length[len];
    }

    const DiGraph& g_;
    std::size_t max_len_;
    std::vector<std::uint8_t> blocked_;
    std::vector<std::vector<VertexId>> block_map_;
    std::vector<VertexId> path_;
    VertexId start_ = 0;
    CycleReport* report_ = nullptr;
};

TraceCount gcd(TraceCount a, TraceCount b) {
    while (b != 0) {
        const TraceCount t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(std::size_t s) {
    if (s < 2) return false;
    for (std::size_t d = 2; d * d <= s; ++d)
        if (s % d == 0) return false;
    return true;
}

}  // namespace

CycleReport enumerate_elementary_circuits(const DiGraph& g, const CycleOptions& options) {
    if (g.vertex_count() > options.vertex_cap)
        throw CapExceededError("circuit enumeration limited to " + std::to_string(options.vertex_cap) +
                               " vertices, graph has " + std::to_string(g.vertex_count()));
    CycleReport report;
    const std::size_t max_len = options.max_len ? options.max_len : g.vertex_count();
    JohnsonSearch(g, max_len).run(report);
    return report;
}

double expected_sac_count(const CycleReport& report, double p) {
    double total = 0.0;
    for (const auto& [len, count] : report.sac_count_by_length)
        total += static_cast<double>(count) * std::pow(p, static_cast<double>(len));
    return total;
}

Rational nb_cycle_count(const HashimotoOperator& h, std::size_t s, const TraceOptions& options) {
    const TraceCount trace = trace_power(h, s, options);
    if (is_prime(s) && trace % s != 0)
        throw std::logic_error("Tr H^" + std::to_string(s) + " = " + to_string(trace) + " is not divisible by " +
                               std::to_string(s));
    const TraceCount d = gcd(trace, s);
    if (trace == 0) return {0, 1};
    return {trace / d, static_cast<TraceCount>(s) / d};
}

}  // namespace nbperc
