#pragma once

// Test-side helpers kept independent of the library's search code so they can
// serve as oracles: a gadget-free half-grid, an exhaustive cut enumerator, an
// independent path counter and small random instance generators.

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "flowlab/instance.hpp"
#include "flowlab/oracle.hpp"
#include "flowlab/routing.hpp"

namespace flowlab::testutil {

inline Rational R(long n, long d = 1) { return Rational(n, d); }

// Plain G_N without gadget substitution: rows top to bottom, crossing nodes
// of degree four left intact, capacities 1 + i*delta on row/column i.
struct RawGrid {
    Instance inst;
    std::vector<int> s, corner, tcol;  // 1-based rank
    int t = -1;
};

inline RawGrid raw_half_grid(int N, const Rational& delta, Orientation orient) {
    RawGrid rg;
    Graph g(0, orient);
    std::vector<Rational> caps;
    std::map<std::pair<int, int>, int> cross;
    auto cap = [&](int i) { return Rational(1) + Rational(i) * delta; };

    rg.s.assign(N + 1, -1);
    rg.corner.assign(N + 1, -1);
    rg.tcol.assign(N + 1, -1);
    for (int i = 1; i <= N; ++i) {
        rg.s[i] = g.add_node();
        rg.corner[i] = g.add_node();
        rg.tcol[i] = g.add_node();
    }
    rg.t = g.add_node();
    for (int r = 2; r <= N; ++r)
        for (int c = 1; c < r; ++c) cross[{r, c}] = g.add_node();

    auto add = [&](int u, int v, const Rational& cp) {
        g.add_edge(u, v);
        caps.push_back(cp);
    };
    for (int i = 1; i <= N; ++i) {
        int prev = rg.s[i];
        for (int c = 1; c < i; ++c) {
            add(prev, cross[{i, c}], cap(i));
            prev = cross[{i, c}];
        }
        add(prev, rg.corner[i], cap(i));
    }
    for (int j = 1; j <= N; ++j) {
        int prev = rg.corner[j];
        for (int r = j + 1; r <= N; ++r) {
            add(prev, cross[{r, j}], cap(j));
            prev = cross[{r, j}];
        }
        add(prev, rg.tcol[j], cap(j));
        add(rg.tcol[j], rg.t, cap(j));
    }
    rg.inst.graph = g;
    rg.inst.model = CapacityModel::edge;
    rg.inst.capacity = caps;
    rg.inst.sink = rg.t;
    for (int i = 1; i <= N; ++i) rg.inst.demands.push_back(Demand{rg.s[i], cap(i), {}, 0});
    return rg;
}

// Exhaustive min-cut over all node subsets (<= ~20 nodes). Sources sit behind
// an implicit super-source: a source outside S contributes its supply.
template <class Num>
Num min_cut_enum(const Graph& g, const std::vector<Num>& caps,
                 const std::vector<std::pair<int, Num>>& sources, int sink) {
    int n = g.node_count();
    Num best{};
    bool first = true;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (mask & (1ul << sink)) continue;
        Num cut{};
        for (const auto& [s, supply] : sources)
            if (!(mask & (1ul << s))) cut += supply;
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            bool uin = mask & (1ul << ed.u), vin = mask & (1ul << ed.v);
            if (g.directed()) {
                if (uin && !vin) cut += caps[e];
            } else {
                if (uin != vin) cut += caps[e];
            }
        }
        if (first || cut < best) best = cut;
        first = false;
    }
    return best;
}

// Second, deliberately different enumerator: counts node-simple s->t paths by
// recursion over an adjacency matrix (multiplicity-aware).
inline long count_simple_paths_matrix(const Graph& g, int s, int t) {
    int n = g.node_count();
    std::vector<std::vector<long>> mult(n, std::vector<long>(n, 0));
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        mult[ed.u][ed.v] += 1;
        if (!g.directed()) mult[ed.v][ed.u] += 1;
    }
    std::vector<char> used(n, 0);
    std::function<long(int)> rec = [&](int v) -> long {
        if (v == t) return 1;
        used[v] = 1;
        long total = 0;
        for (int w = 0; w < n; ++w)
            if (mult[v][w] > 0 && !used[w]) total += mult[v][w] * rec(w);
        used[v] = 0;
        return total;
    };
    return rec(s);
}

// Random unit-capacity priority instance, n <= 10.
inline Instance random_priority_instance(std::mt19937& rng) {
    std::uniform_int_distribution<int> nd(3, 10);
    int n = nd(rng);
    Graph g(n, Orientation::undirected);
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::uniform_int_distribution<int> md(n - 1, 2 * n);
    std::uniform_int_distribution<int> kd(1, 3);
    int k = kd(rng);
    std::uniform_int_distribution<int> cd(1, k);
    int m = md(rng);
    Instance inst;
    std::vector<int> cls;
    for (int e = 0; e < m; ++e) {
        int u = vd(rng), v = vd(rng);
        if (u == v) v = (v + 1) % n;
        g.add_edge(u, v);
        cls.push_back(cd(rng));
    }
    inst.graph = g;
    inst.model = CapacityModel::edge;
    inst.capacity.assign(m, Rational(1));
    inst.sink = n - 1;
    inst.has_priorities = true;
    inst.edge_class = cls;
    std::uniform_int_distribution<int> dd(1, 6);
    int kD = dd(rng);
    for (int i = 0; i < kD; ++i) {
        int s = vd(rng);
        if (s == inst.sink) s = (s + 1) % n;
        inst.demands.push_back(Demand{s, Rational(1), {}, cd(rng)});
    }
    return inst;
}

// Random unit-demand instance with rational capacities (spread exactly 1).
inline Instance random_unit_instance(std::mt19937& rng, bool directed = false) {
    std::uniform_int_distribution<int> nd(3, 10);
    int n = nd(rng);
    Graph g(n, directed ? Orientation::directed : Orientation::undirected);
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::uniform_int_distribution<int> md(n, 2 * n);
    std::uniform_int_distribution<long> num(1, 7), den(1, 3);
    int m = md(rng);
    Instance inst;
    for (int e = 0; e < m; ++e) {
        int u = vd(rng), v = vd(rng);
        if (u == v) v = (v + 1) % n;
        g.add_edge(u, v);
        inst.capacity.push_back(Rational(num(rng), den(rng)));
    }
    inst.graph = g;
    inst.model = CapacityModel::edge;
    inst.sink = n - 1;
    std::uniform_int_distribution<int> dd(1, 6);
    int kD = dd(rng);
    for (int i = 0; i < kD; ++i) {
        int s = vd(rng);
        if (s == inst.sink) s = (s + 1) % n;
        inst.demands.push_back(Demand{s, Rational(1), {}, 0});
    }
    return inst;
}

// Random small node-capacitated instance for confluent brute-force checks.
inline Instance random_node_instance(std::mt19937& rng, bool directed = false) {
    std::uniform_int_distribution<int> nd(3, 6);
    int n = nd(rng);
    Graph g(n, directed ? Orientation::directed : Orientation::undirected);
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::uniform_int_distribution<int> md(n - 1, n + 2);
    std::uniform_int_distribution<long> num(1, 4), den(1, 2);
    int m = md(rng);
    Instance inst;
    inst.model = CapacityModel::node;
    for (int e = 0; e < m; ++e) {
        int u = vd(rng), v = vd(rng);
        if (u == v) v = (v + 1) % n;
        g.add_edge(u, v);
    }
    inst.graph = g;
    for (int v = 0; v < n; ++v) inst.capacity.push_back(Rational(num(rng), den(rng)));
    inst.sink = n - 1;
    std::uniform_int_distribution<int> dd(1, 3);
    int kD = dd(rng);
    for (int i = 0; i < kD; ++i) {
        int s = vd(rng);
        if (s == inst.sink) s = (s + 1) % n;
        inst.demands.push_back(Demand{s, Rational(num(rng), 2 * den(rng)), {}, 0});
    }
    return inst;
}

namespace detail {

// Visits every next-hop function (each non-sink node picks an outgoing edge
// or none) on graphs small enough to enumerate.
template <class Fn>
void for_each_hop_function(const Instance& inst, const Fn& fn) {
    const Graph& g = inst.graph;
    int n = g.node_count();
    std::vector<int> choice(n, -1);  // index into out_edges, -1 = none
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            ConfluentRouting cr;
            for (int w = 0; w < n; ++w)
                if (choice[w] >= 0) cr.next_hop[w] = g.out_edges(w)[choice[w]];
            fn(cr);
            return;
        }
        if (v == inst.sink) {
            rec(v + 1);
            return;
        }
        for (int c = -1; c < static_cast<int>(g.out_edges(v).size()); ++c) {
            choice[v] = c;
            rec(v + 1);
        }
        choice[v] = -1;
    };
    rec(0);
}

}  // namespace detail

// Literal exhaustive confluent optimum: every next-hop function crossed with
// every routed-demand subset, judged by check_confluent/objectives.
inline Rational brute_confluent_optimum(const Instance& inst, Objective obj) {
    Rational best(0);
    size_t k = inst.demands.size();
    detail::for_each_hop_function(inst, [&](const ConfluentRouting& hops) {
        for (unsigned sub = 1; sub < (1u << k); ++sub) {
            ConfluentRouting cr = hops;
            for (size_t i = 0; i < k; ++i)
                if (sub & (1u << i)) cr.routed.insert(static_cast<int>(i));
            if (!check_confluent(inst, cr).feasible()) continue;
            ObjectiveValues ov = objectives(inst, cr);
            Rational val = obj == Objective::cardinality ? Rational(ov.cardinality)
                           : obj == Objective::throughput ? ov.throughput
                                                          : ov.profit;
            if (val > best) best = val;
        }
    });
    return best;
}

// Exhaustive weak/strong congestion minima over all-demand hop functions.
struct BruteCongestion {
    std::optional<Rational> strong, weak;
};
inline BruteCongestion brute_congestion(const Instance& inst) {
    BruteCongestion out;
    detail::for_each_hop_function(inst, [&](const ConfluentRouting& hops) {
        ConfluentRouting cr = hops;
        for (size_t i = 0; i < inst.demands.size(); ++i) cr.routed.insert(static_cast<int>(i));
        CongestionResult res;
        try {
            res = congestion(inst, cr, CongestionMode::strong);
        } catch (const std::invalid_argument&) {
            return;  // some demand cannot even reach the sink on these hops
        }
        if (!out.weak || res.value < *out.weak) out.weak = res.value;
        if (res.strong_feasible() && (!out.strong || res.value < *out.strong))
            out.strong = res.value;
    });
    return out;
}

// All jointly feasible routings of the two given demands; fn receives each.
inline void for_each_feasible_pair(const Instance& inst, int a, int b,
                                   const std::function<void(const Routing&)>& fn) {
    OracleBudget budget;
    auto cands = [&](int id) {
        const Demand& d = inst.demands[id];
        auto edge_ok = [&](int e) {
            return inst.capacity[e] >= d.size && inst.edge_admissible(e, d.prio_class);
        };
        PathEnumeration pe = enumerate_paths(inst.graph, d.source, inst.sink, budget, edge_ok);
        return pe.paths;
    };
    for (const Path& pa : cands(a)) {
        for (const Path& pb : cands(b)) {
            Routing r;
            r.paths.emplace(a, pa);
            r.paths.emplace(b, pb);
            if (check_routing(inst, r).feasible()) fn(r);
        }
    }
}

}  // namespace flowlab::testutil
