#include "flowlab/solvers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "flowlab/maxflow.hpp"

namespace flowlab {

Rational objective_value(const Instance& inst, const Routing& r, Objective obj) {
    Rational v;
    for (const auto& [id, p] : r.paths) {
        (void)p;
        const Demand& d = inst.demands.at(id);
        switch (obj) {
            case Objective::cardinality: v += Rational(1); break;
            case Objective::throughput: v += d.size; break;
            case Objective::profit: v += d.profit_or_default(); break;
        }
    }
    return v;
}

namespace {

// Hop-count BFS over edges with residual >= need and admissible class.
bool shortest_feasible_path(const Instance& inst, const std::vector<Rational>& residual,
                            int source, const Rational& need, int demand_class, Path& out) {
    const Graph& g = inst.graph;
    if (source == inst.sink) {
        out.edges.clear();
        return true;
    }
    std::vector<int> via(g.node_count(), -1);
    std::vector<char> seen(g.node_count(), 0);
    std::deque<int> q{source};
    seen[source] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int e : g.out_edges(u)) {
            if (residual[e] < need) continue;
            if (!inst.edge_admissible(e, demand_class)) continue;
            int v = g.directed() ? g.edge(e).v : g.other_end(e, u);
            if (seen[v]) continue;
            seen[v] = 1;
            via[v] = e;
            if (v == inst.sink) {
                out.edges.clear();
                for (int w = v; w != source;) {
                    out.edges.push_back(via[w]);
                    w = g.directed() ? g.edge(via[w]).u : g.other_end(via[w], w);
                }
                std::reverse(out.edges.begin(), out.edges.end());
                return true;
            }
            q.push_back(v);
        }
    }
    return false;
}

}  // namespace

SolveResult greedy_shortest_path_pack(const Instance& inst, const std::vector<int>& demand_ids,
                                      const SolverConfig& cfg) {
    if (inst.model != CapacityModel::edge)
        throw std::invalid_argument("greedy packing needs an edge-capacitated instance");
    SolveResult res;
    std::vector<Rational> residual = inst.capacity;
    std::vector<int> pending = demand_ids;
    std::sort(pending.begin(), pending.end());
    auto weight_of = [&](int id) {
        const Demand& d = inst.demands.at(id);
        switch (cfg.objective) {
            case Objective::throughput: return d.size;
            case Objective::profit: return d.profit_or_default();
            case Objective::cardinality: break;
        }
        return Rational(1);
    };
    int iteration = 0;
    while (!pending.empty()) {
        int best_id = -1;
        Path best_path;
        // shortest feasible path; length ties go to the heavier demand, then
        // to the smaller id (ids are scanned ascending)
        for (int id : pending) {
            const Demand& d = inst.demands.at(id);
            Path p;
            if (!shortest_feasible_path(inst, residual, d.source, d.size, d.prio_class, p))
                continue;
            if (best_id == -1 || p.edges.size() < best_path.edges.size() ||
                (p.edges.size() == best_path.edges.size() && weight_of(id) > weight_of(best_id))) {
                best_id = id;
                best_path = std::move(p);
            }
        }
        if (best_id == -1) break;
        for (int e : best_path.edges) residual[e] -= inst.demands[best_id].size;
        res.trace.push_back({iteration++, best_id, static_cast<int>(best_path.edges.size())});
        res.routing.paths.emplace(best_id, std::move(best_path));
        pending.erase(std::find(pending.begin(), pending.end(), best_id));
    }
    res.value = objective_value(inst, res.routing, cfg.objective);
    return res;
}

SolveResult greedy_priority(const Instance& inst) {
    if (!inst.has_priorities)
        throw std::invalid_argument("greedy_priority needs a priority instance");
    for (const Rational& c : inst.capacity)
        if (c != Rational(1))
            throw std::invalid_argument("greedy_priority needs unit capacities");
    for (const Demand& d : inst.demands)
        if (d.size != Rational(1))
            throw std::invalid_argument("greedy_priority needs unit demands");
    std::vector<int> ids(inst.demands.size());
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    // unit capacities: decrementing residual to zero deletes the edge
    return greedy_shortest_path_pack(inst, ids, {Objective::cardinality, Rational(2)});
}

SolveResult priority_by_class(const Instance& inst) {
    if (!inst.has_priorities)
        throw std::invalid_argument("priority_by_class needs a priority instance");
    int k = 0;
    for (int c : inst.edge_class) k = std::max(k, c);
    for (const Demand& d : inst.demands) k = std::max(k, d.prio_class);

    SolveResult best;
    bool have = false;
    for (int cls = 1; cls <= k; ++cls) {
        // class-cls demands on the subgraph of edges with class <= cls;
        // excluded edges get capacity floored to zero via omission
        std::vector<Rational> caps(inst.graph.edge_count(), Rational(0));
        bool any_edge = false;
        for (int e = 0; e < inst.graph.edge_count(); ++e)
            if (inst.edge_class[e] <= cls) {
                caps[e] = inst.capacity[e].floor();
                any_edge = true;
            }
        std::map<int, std::vector<int>> by_source;
        for (size_t i = 0; i < inst.demands.size(); ++i)
            if (inst.demands[i].prio_class == cls)
                by_source[inst.demands[i].source].push_back(static_cast<int>(i));
        if (by_source.empty() || !any_edge) continue;
        std::vector<std::pair<int, Rational>> sources;
        for (const auto& [s, list] : by_source)
            sources.emplace_back(s, Rational(static_cast<long>(list.size())));
        FlowAssignment f = max_flow(inst.graph, caps, sources, inst.sink);
        auto pieces = flow_decompose(inst.graph, f);

        Routing routing;
        std::map<int, size_t> cursor;
        for (auto& [path, amount] : pieces) {
            long copies = std::stol(amount.num().get_str());
            int start;
            if (inst.graph.directed()) {
                start = inst.graph.edge(path.edges.front()).u;
            } else {
                const Edge& e0 = inst.graph.edge(path.edges.front());
                if (path.edges.size() == 1) {
                    start = e0.u == inst.sink ? e0.v : e0.u;
                } else {
                    const Edge& e1 = inst.graph.edge(path.edges[1]);
                    start = (e0.u == e1.u || e0.u == e1.v) ? e0.v : e0.u;
                }
            }
            auto it = by_source.find(start);
            if (it == by_source.end()) continue;
            size_t& cur = cursor[start];
            for (long c = 0; c < copies && cur < it->second.size(); ++c, ++cur)
                routing.paths.emplace(it->second[cur], path);
        }
        Rational value = Rational(static_cast<long>(routing.paths.size()));
        if (!have || value > best.value) {
            best.routing = std::move(routing);
            best.value = value;
            have = true;
        }
    }
    if (!have) best.value = Rational(0);
    return best;
}

namespace {

SolveResult pick_better(SolveResult a, SolveResult b) {
    return b.value > a.value ? std::move(b) : std::move(a);
}

}  // namespace

SolveResult greedy_cardinality(const Instance& inst, const SolverConfig& cfg) {
    if (cfg.bin_base <= Rational(1)) throw std::invalid_argument("bin base must exceed 1");
    DerivedStats st = derived_stats(inst);
    SolverConfig card_cfg{Objective::cardinality, cfg.bin_base};

    std::vector<int> small;
    std::map<long, std::vector<int>> bins;  // r -> demands in [u_min*B^r, u_min*B^(r+1))
    for (size_t i = 0; i < inst.demands.size(); ++i) {
        const Rational& d = inst.demands[i].size;
        if (d <= st.u_min) {
            small.push_back(static_cast<int>(i));
            continue;
        }
        long r = 0;
        Rational lo = st.u_min;
        while (lo * cfg.bin_base <= d) {
            lo *= cfg.bin_base;
            ++r;
        }
        bins[r].push_back(static_cast<int>(i));
    }

    SolveResult best = greedy_shortest_path_pack(inst, small, card_cfg);
    for (const auto& [r, ids] : bins) {
        (void)r;
        best = pick_better(std::move(best), greedy_shortest_path_pack(inst, ids, card_cfg));
    }
    return best;
}

SolveResult greedy_throughput(const Instance& inst, const SolverConfig& cfg) {
    if (cfg.bin_base <= Rational(1)) throw std::invalid_argument("bin base must exceed 1");
    SolverConfig tput_cfg{Objective::throughput, cfg.bin_base};
    if (inst.demands.empty()) return SolveResult{{}, Rational(0), {}};
    DerivedStats st = derived_stats(inst);
    Rational cutoff = st.d_max / Rational(st.n);

    // bin s holds demands in (d_max/B^(s+1), d_max/B^s]
    std::map<long, std::vector<int>> bins;
    for (size_t i = 0; i < inst.demands.size(); ++i) {
        const Rational& d = inst.demands[i].size;
        if (d < cutoff) continue;  // too small to matter for throughput
        long s = 0;
        Rational hi = st.d_max;
        while (d * cfg.bin_base <= hi) {
            hi /= cfg.bin_base;
            ++s;
        }
        bins[s].push_back(static_cast<int>(i));
    }

    SolveResult best{{}, Rational(0), {}};
    for (const auto& [s, ids] : bins) {
        (void)s;
        best = pick_better(std::move(best), greedy_shortest_path_pack(inst, ids, tput_cfg));
    }
    return best;
}

}  // namespace flowlab
