#include "flowlab/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace flowlab {

namespace {

// Residual arc network. Arcs come in (arc, reverse) pairs at indices 2i/2i+1.
struct ArcNet {
    struct Arc {
        int to = -1;
        Rational resid;
        Rational cap;      // initial capacity, for flow recovery
        int edge = -1;     // original edge id, -1 for auxiliary arcs
        int dir = 0;       // +1 along canonical orientation, -1 against, 0 aux
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj;

    explicit ArcNet(int nodes) : adj(nodes) {}

    int add_pair(int u, int v, const Rational& cap_uv, const Rational& cap_vu, int edge, int dir) {
        int id = static_cast<int>(arcs.size());
        arcs.push_back({v, cap_uv, cap_uv, edge, dir});
        arcs.push_back({u, cap_vu, cap_vu, edge, -dir});
        adj[u].push_back(id);
        adj[v].push_back(id + 1);
        return id;
    }

    Rational augment_until_max(int s, int t) {
        Rational total;
        std::vector<int> parent(adj.size());
        for (;;) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[s] = -2;
            std::deque<int> q{s};
            while (!q.empty() && parent[t] == -1) {
                int u = q.front();
                q.pop_front();
                for (int a : adj[u]) {
                    int v = arcs[a].to;
                    if (parent[v] == -1 && arcs[a].resid.sign() > 0) {
                        parent[v] = a;
                        q.push_back(v);
                    }
                }
            }
            if (parent[t] == -1) break;
            Rational push;
            bool first = true;
            for (int v = t; v != s;) {
                int a = parent[v];
                if (first || arcs[a].resid < push) push = arcs[a].resid;
                first = false;
                v = arcs[a ^ 1].to;
            }
            for (int v = t; v != s;) {
                int a = parent[v];
                arcs[a].resid -= push;
                arcs[a ^ 1].resid += push;
                v = arcs[a ^ 1].to;
            }
            total += push;
        }
        return total;
    }

    // Net flow per original edge w.r.t. canonical orientation. Only the
    // canonically oriented arc of each pair is read: its cap - resid already
    // nets out pushes against it through the reverse arc.
    std::vector<Rational> edge_flows(int edge_count) const {
        std::vector<Rational> flow(edge_count, Rational(0));
        for (const Arc& a : arcs)
            if (a.edge >= 0 && a.dir > 0) flow[a.edge] += a.cap - a.resid;
        return flow;
    }
};

void check_sources(const std::vector<std::pair<int, Rational>>& sources, int sink) {
    for (const auto& [s, supply] : sources) {
        if (s == sink) throw std::invalid_argument("max_flow: sink among sources");
        if (supply.sign() < 0) throw std::invalid_argument("max_flow: negative supply limit");
    }
}

}  // namespace

FlowAssignment max_flow(const Graph& g, const std::vector<Rational>& edge_caps,
                        const std::vector<std::pair<int, Rational>>& sources, int sink) {
    check_sources(sources, sink);
    int n = g.node_count();
    ArcNet net(n + 1);
    int super = n;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (g.directed())
            net.add_pair(ed.u, ed.v, edge_caps.at(e), Rational(0), e, +1);
        else
            net.add_pair(ed.u, ed.v, edge_caps.at(e), edge_caps.at(e), e, +1);
    }
    for (const auto& [s, supply] : sources) net.add_pair(super, s, supply, Rational(0), -1, 0);
    FlowAssignment f;
    f.value = net.augment_until_max(super, sink);
    f.edge_flow = net.edge_flows(g.edge_count());
    f.sources = sources;
    f.sink = sink;
    return f;
}

FlowAssignment max_flow_node_capacitated(const Graph& g, const std::vector<Rational>& node_caps,
                                         const std::vector<std::pair<int, Rational>>& sources,
                                         int sink) {
    check_sources(sources, sink);
    int n = g.node_count();
    // v_in = v, v_out = v + n; every unit through v crosses the split arc,
    // including units born at v (supply enters v_in) or absorbed at v.
    ArcNet net(2 * n + 1);
    int super = 2 * n;
    Rational inf(0);
    for (const auto& [s, supply] : sources) {
        (void)s;
        inf += supply;
    }
    for (int v = 0; v < n; ++v) net.add_pair(v, v + n, node_caps.at(v), Rational(0), -1, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (g.directed()) {
            net.add_pair(ed.u + n, ed.v, inf, Rational(0), e, +1);
        } else {
            net.add_pair(ed.u + n, ed.v, inf, Rational(0), e, +1);
            net.add_pair(ed.v + n, ed.u, inf, Rational(0), e, -1);
        }
    }
    for (const auto& [s, supply] : sources) net.add_pair(super, s, supply, Rational(0), -1, 0);
    FlowAssignment f;
    f.value = net.augment_until_max(super, sink + n);
    f.edge_flow = net.edge_flows(g.edge_count());
    f.sources = sources;
    f.sink = sink;
    return f;
}

Rational max_flow_value(const Graph& g, const std::vector<Rational>& edge_caps,
                        const std::vector<std::pair<int, Rational>>& sources, int sink) {
    return max_flow(g, edge_caps, sources, sink).value;
}

namespace {

// Flow digraph view of an assignment: per edge, remaining amount and the
// direction it actually travels.
struct FlowDigraph {
    const Graph& g;
    std::vector<Rational> amount;
    std::vector<int> head, tail;
    std::vector<std::vector<int>> out;

    FlowDigraph(const Graph& g_, const std::vector<Rational>& edge_flow)
        : g(g_), amount(g_.edge_count()), head(g_.edge_count(), -1), tail(g_.edge_count(), -1),
          out(g_.node_count()) {
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            Rational f = edge_flow.at(e);
            if (f.sign() == 0) continue;
            if (f.sign() > 0) {
                amount[e] = f;
                tail[e] = ed.u;
                head[e] = ed.v;
            } else {
                amount[e] = -f;
                tail[e] = ed.v;
                head[e] = ed.u;
            }
            out[tail[e]].push_back(e);
        }
    }

    int next_edge(int v) const {
        for (int e : out[v])
            if (amount[e].sign() > 0) return e;
        return -1;
    }

    // Remove one cycle if present anywhere; returns true if one was removed.
    bool cancel_one_cycle() {
        int n = g.node_count();
        std::vector<int> state(n, 0), via(n, -1);
        for (int start = 0; start < n; ++start) {
            if (state[start] != 0) continue;
            // iterative walk; the flow digraph has out-degree chains
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int v = stack.back();
                int e = -1;
                for (int cand : out[v]) {
                    if (amount[cand].sign() <= 0) continue;
                    int h = head[cand];
                    if (state[h] == 2) continue;
                    e = cand;
                    break;
                }
                if (e == -1) {
                    state[v] = 2;
                    stack.pop_back();
                    continue;
                }
                state[v] = 1;
                via[v] = e;
                int h = head[e];
                if (state[h] == 1) {
                    // found a cycle through h
                    Rational push = amount[e];
                    for (int u = h; u != v;) {
                        push = min(push, amount[via[u]]);
                        u = head[via[u]];
                    }
                    amount[e] -= push;
                    for (int u = h; u != v;) {
                        amount[via[u]] -= push;
                        u = head[via[u]];
                    }
                    return true;
                }
                stack.push_back(h);
            }
        }
        return false;
    }
};

}  // namespace

std::vector<std::pair<Path, Rational>> flow_decompose(const Graph& g, const FlowAssignment& f) {
    FlowDigraph fd(g, f.edge_flow);
    while (fd.cancel_one_cycle()) {
    }
    // Surplus at each source = injected amount; peel source->sink paths.
    std::vector<std::pair<Path, Rational>> out;
    for (const auto& [s, supply] : f.sources) {
        (void)supply;
        for (;;) {
            // walk from s following positive flow
            Path p;
            Rational push;
            bool first = true;
            int v = s;
            Rational surplus;  // recompute outgoing-minus-incoming lazily: just try a walk
            int e0 = fd.next_edge(v);
            if (e0 == -1) break;
            // ensure s still has surplus: total out minus in > 0
            Rational outflow, inflow;
            for (int e = 0; e < g.edge_count(); ++e) {
                if (fd.amount[e].sign() <= 0) continue;
                if (fd.tail[e] == s) outflow += fd.amount[e];
                if (fd.head[e] == s) inflow += fd.amount[e];
            }
            if (!(outflow > inflow)) break;
            while (v != f.sink) {
                int e = fd.next_edge(v);
                if (e == -1) throw std::logic_error("flow_decompose: dead end before sink");
                p.edges.push_back(e);
                if (first || fd.amount[e] < push) push = fd.amount[e];
                first = false;
                v = fd.head[e];
            }
            push = min(push, outflow - inflow);
            for (int e : p.edges) fd.amount[e] -= push;
            out.emplace_back(std::move(p), push);
        }
    }
    return out;
}

Routing solve_unit_uniform(const Instance& inst) {
    if (inst.model != CapacityModel::edge)
        throw std::invalid_argument("solve_unit_uniform needs an edge-capacitated instance");
    if (inst.demands.empty()) return {};
    const Rational d = inst.demands.front().size;
    for (const Demand& dem : inst.demands)
        if (dem.size != d)
            throw std::invalid_argument("solve_unit_uniform requires demand spread exactly 1");

    // Scale demands to 1; fractional leftover capacity is unusable.
    std::vector<Rational> caps;
    caps.reserve(inst.graph.edge_count());
    for (const Rational& c : inst.capacity) caps.push_back((c / d).floor());

    std::map<int, std::vector<int>> by_source;
    for (size_t i = 0; i < inst.demands.size(); ++i)
        by_source[inst.demands[i].source].push_back(static_cast<int>(i));
    std::vector<std::pair<int, Rational>> sources;
    for (const auto& [s, ids] : by_source)
        sources.emplace_back(s, Rational(static_cast<long>(ids.size())));

    FlowAssignment f = max_flow(inst.graph, caps, sources, inst.sink);
    auto paths = flow_decompose(inst.graph, f);

    Routing routing;
    std::map<int, size_t> next_unrouted;  // per source, index into by_source list
    for (auto& [path, amount] : paths) {
        // amount is a nonnegative integer by integrality of the input
        if (!amount.is_integer()) throw std::logic_error("integral flow expected");
        long copies = std::stol(amount.num().get_str());
        int start = path.edges.empty()
                        ? f.sink
                        : (inst.graph.directed()
                               ? inst.graph.edge(path.edges.front()).u
                               : [&] {
                                     // undirected: endpoint of first edge not shared with second
                                     const Edge& e0 = inst.graph.edge(path.edges.front());
                                     if (path.edges.size() == 1) {
                                         // the endpoint that is not the sink
                                         return e0.u == inst.sink ? e0.v : e0.u;
                                     }
                                     const Edge& e1 = inst.graph.edge(path.edges[1]);
                                     return (e0.u == e1.u || e0.u == e1.v) ? e0.v : e0.u;
                                 }());
        auto it = by_source.find(start);
        if (it == by_source.end()) throw std::logic_error("decomposed path starts off-source");
        size_t& cursor = next_unrouted[start];
        for (long c = 0; c < copies && cursor < it->second.size(); ++c, ++cursor)
            routing.paths.emplace(it->second[cursor], path);
    }
    return routing;
}

}  // namespace flowlab
