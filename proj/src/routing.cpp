#include "flowlab/routing.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace flowlab {

bool resolve_walk(const Instance& inst, int source, const Path& path, std::vector<int>& nodes,
                  std::string& error) {
    const Graph& g = inst.graph;
    nodes.clear();
    nodes.push_back(source);
    std::unordered_set<int> used;
    int cur = source;
    for (int e : path.edges) {
        if (e < 0 || e >= g.edge_count()) {
            error = "edge id out of range";
            return false;
        }
        if (!used.insert(e).second) {
            error = "edge repeated on path";
            return false;
        }
        const Edge& ed = g.edge(e);
        if (g.directed()) {
            if (ed.u != cur) {
                error = "arc not traversed forward from current node";
                return false;
            }
            cur = ed.v;
        } else {
            if (!g.touches(e, cur)) {
                error = "consecutive edges do not share a node";
                return false;
            }
            cur = g.other_end(e, cur);
        }
        nodes.push_back(cur);
    }
    if (cur != inst.sink) {
        error = "path does not end at the sink";
        return false;
    }
    return true;
}

namespace {

// Per-element loads for a set of routed walks. Element = edge or node id
// depending on the instance's capacity model.
struct LoadMap {
    std::map<int, Rational> load;
    void add(int element, const Rational& amount) {
        auto [it, fresh] = load.emplace(element, amount);
        if (!fresh) it->second += amount;
    }
};

void add_walk_load(const Instance& inst, const Path& path, const std::vector<int>& nodes,
                   const Rational& amount, LoadMap& lm) {
    if (inst.model == CapacityModel::edge) {
        for (int e : path.edges) lm.add(e, amount);
    } else {
        for (int v : nodes) lm.add(v, amount);
    }
}

void capacity_violations(const Instance& inst, const LoadMap& lm, FeasibilityReport& rep) {
    const char* kind = inst.model == CapacityModel::edge ? "edge-capacity" : "node-capacity";
    for (const auto& [el, load] : lm.load) {
        const Rational& cap = inst.capacity.at(el);
        if (load > cap) rep.violations.push_back({kind, el, load, cap, ""});
    }
}

bool structural_check(const Instance& inst, const Routing& r, FeasibilityReport& rep,
                      std::map<int, std::vector<int>>& walks) {
    bool ok = true;
    for (const auto& [id, path] : r.paths) {
        if (id < 0 || id >= static_cast<int>(inst.demands.size())) {
            rep.violations.push_back({"structure", -1, {}, {}, "unknown demand id " + std::to_string(id + 1)});
            ok = false;
            continue;
        }
        std::vector<int> nodes;
        std::string err;
        if (!resolve_walk(inst, inst.demands[id].source, path, nodes, err)) {
            rep.violations.push_back(
                {"structure", -1, {}, {}, "demand " + std::to_string(id + 1) + ": " + err});
            ok = false;
            continue;
        }
        walks.emplace(id, std::move(nodes));
    }
    return ok;
}

}  // namespace

FeasibilityReport check_unsplittable(const Instance& inst, const Routing& r) {
    if (inst.model != CapacityModel::edge)
        throw std::invalid_argument("check_unsplittable needs an edge-capacitated instance");
    FeasibilityReport rep;
    std::map<int, std::vector<int>> walks;
    if (!structural_check(inst, r, rep, walks)) return rep;
    LoadMap lm;
    for (const auto& [id, nodes] : walks)
        add_walk_load(inst, r.paths.at(id), nodes, inst.demands[id].size, lm);
    capacity_violations(inst, lm, rep);
    return rep;
}

FeasibilityReport check_priority(const Instance& inst, const Routing& r) {
    if (!inst.has_priorities)
        throw std::invalid_argument("check_priority needs a priority instance");
    FeasibilityReport rep = check_unsplittable(inst, r);
    for (const auto& [id, path] : r.paths) {
        int cls = inst.demands.at(id).prio_class;
        for (int e : path.edges)
            if (e >= 0 && e < inst.graph.edge_count() && !inst.edge_admissible(e, cls))
                rep.violations.push_back({"priority", e, Rational(inst.edge_class[e]),
                                          Rational(cls),
                                          "demand " + std::to_string(id + 1) +
                                              " uses edge of worse class"});
    }
    return rep;
}

FeasibilityReport check_routing(const Instance& inst, const Routing& r) {
    if (inst.has_priorities) return check_priority(inst, r);
    if (inst.model == CapacityModel::edge) return check_unsplittable(inst, r);
    // Node-capacitated path routing: same walks, loads accumulate on nodes.
    FeasibilityReport rep;
    std::map<int, std::vector<int>> walks;
    if (!structural_check(inst, r, rep, walks)) return rep;
    LoadMap lm;
    for (const auto& [id, nodes] : walks)
        add_walk_load(inst, r.paths.at(id), nodes, inst.demands[id].size, lm);
    capacity_violations(inst, lm, rep);
    return rep;
}

Routing confluent_paths(const Instance& inst, const ConfluentRouting& r) {
    const Graph& g = inst.graph;
    Routing out;
    for (int id : r.routed) {
        if (id < 0 || id >= static_cast<int>(inst.demands.size()))
            throw std::invalid_argument("unknown demand id in confluent routing");
        int cur = inst.demands[id].source;
        Path p;
        std::unordered_set<int> seen{cur};
        while (cur != inst.sink) {
            auto it = r.next_hop.find(cur);
            if (it == r.next_hop.end())
                throw std::invalid_argument("node " + std::to_string(cur + 1) + " has no next hop");
            int e = it->second;
            if (e < 0 || e >= g.edge_count())
                throw std::invalid_argument("next hop edge id out of range");
            if (g.directed()) {
                if (g.edge(e).u != cur)
                    throw std::invalid_argument("next hop is not an outgoing edge");
                cur = g.edge(e).v;
            } else {
                if (!g.touches(e, cur))
                    throw std::invalid_argument("next hop edge not incident to node");
                cur = g.other_end(e, cur);
            }
            if (!seen.insert(cur).second)
                throw std::invalid_argument("next-hop cycle at node " + std::to_string(cur + 1));
            p.edges.push_back(e);
        }
        out.paths.emplace(id, std::move(p));
    }
    return out;
}

FeasibilityReport check_confluent(const Instance& inst, const ConfluentRouting& r) {
    if (inst.model != CapacityModel::node)
        throw std::invalid_argument("check_confluent needs a node-capacitated instance");
    FeasibilityReport rep;
    Routing paths;
    try {
        paths = confluent_paths(inst, r);
    } catch (const std::invalid_argument& e) {
        rep.violations.push_back({"structure", -1, {}, {}, e.what()});
        return rep;
    }
    LoadMap lm;
    for (const auto& [id, path] : paths.paths) {
        std::vector<int> nodes;
        std::string err;
        resolve_walk(inst, inst.demands[id].source, path, nodes, err);  // cannot fail here
        add_walk_load(inst, path, nodes, inst.demands[id].size, lm);
    }
    capacity_violations(inst, lm, rep);
    return rep;
}

bool is_edge_confluent(const Instance& inst, const Routing& r) {
    // Successor function: if every shared edge has the same successor edge in
    // both paths, shared suffixes follow by induction.
    constexpr int kEnd = -1;
    std::unordered_map<int, int> succ;
    for (const auto& [id, path] : r.paths) {
        (void)id;
        for (size_t i = 0; i < path.edges.size(); ++i) {
            int e = path.edges[i];
            int nxt = i + 1 < path.edges.size() ? path.edges[i + 1] : kEnd;
            auto [it, fresh] = succ.emplace(e, nxt);
            if (!fresh && it->second != nxt) return false;
        }
    }
    (void)inst;
    return true;
}

namespace {

ObjectiveValues tally(const Instance& inst, const std::vector<int>& routed_ids) {
    ObjectiveValues ov;
    for (int id : routed_ids) {
        const Demand& d = inst.demands.at(id);
        ov.cardinality += 1;
        ov.throughput += d.size;
        ov.profit += d.profit_or_default();
    }
    return ov;
}

}  // namespace

ObjectiveValues objectives(const Instance& inst, const Routing& r) {
    FeasibilityReport rep = check_routing(inst, r);
    if (!rep.feasible()) throw std::invalid_argument("objectives: routing is infeasible");
    std::vector<int> ids;
    for (const auto& [id, p] : r.paths) {
        (void)p;
        ids.push_back(id);
    }
    return tally(inst, ids);
}

ObjectiveValues objectives(const Instance& inst, const ConfluentRouting& r) {
    FeasibilityReport rep = check_confluent(inst, r);
    if (!rep.feasible()) throw std::invalid_argument("objectives: confluent routing is infeasible");
    return tally(inst, std::vector<int>(r.routed.begin(), r.routed.end()));
}

namespace {

CongestionResult congestion_impl(const Instance& inst, const Routing& paths, CongestionMode mode) {
    if (paths.paths.size() != inst.demands.size())
        throw std::invalid_argument("congestion requires all demands routed");
    CongestionResult res;
    res.mode = mode;
    LoadMap lm;
    std::map<int, std::vector<int>> walks;
    for (const auto& [id, path] : paths.paths) {
        std::vector<int> nodes;
        std::string err;
        if (!resolve_walk(inst, inst.demands.at(id).source, path, nodes, err))
            throw std::invalid_argument("congestion: demand " + std::to_string(id + 1) + ": " + err);
        add_walk_load(inst, path, nodes, inst.demands[id].size, lm);
        walks.emplace(id, std::move(nodes));
    }
    for (const auto& [el, load] : lm.load) {
        Rational ratio = load / inst.capacity.at(el);
        if (ratio > res.value) res.value = ratio;
    }
    if (mode == CongestionMode::strong) {
        for (const auto& [id, nodes] : walks) {
            const Rational& d = inst.demands.at(id).size;
            if (inst.model == CapacityModel::node) {
                for (int v : nodes)
                    if (inst.capacity.at(v) < d) res.strong_violations.emplace_back(id, v);
            } else {
                for (int e : paths.paths.at(id).edges)
                    if (inst.capacity.at(e) < d) res.strong_violations.emplace_back(id, e);
            }
        }
    }
    return res;
}

}  // namespace

CongestionResult congestion(const Instance& inst, const Routing& r, CongestionMode mode) {
    return congestion_impl(inst, r, mode);
}

CongestionResult congestion(const Instance& inst, const ConfluentRouting& r, CongestionMode mode) {
    if (r.routed.size() != inst.demands.size())
        throw std::invalid_argument("congestion requires all demands routed");
    return congestion_impl(inst, confluent_paths(inst, r), mode);
}

}  // namespace flowlab
