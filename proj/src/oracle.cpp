#include "flowlab/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace flowlab {

OracleBudget OracleBudget::from_env() {
    OracleBudget b;
    const char* env = std::getenv("FLOWLAB_ORACLE_BUDGET");
    if (!env) return b;
    long vals[3] = {b.max_search_nodes, b.max_paths_per_demand, b.time_limit_ms};
    int idx = 0;
    std::string s(env);
    size_t pos = 0;
    while (idx < 3 && pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string item =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!item.empty()) vals[idx] = std::stol(item);
        ++idx;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    b.max_search_nodes = vals[0];
    b.max_paths_per_demand = vals[1];
    b.time_limit_ms = vals[2];
    return b;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SearchLimits {
    long nodes_left;
    Clock::time_point deadline;
    bool blown = false;

    explicit SearchLimits(const OracleBudget& b)
        : nodes_left(b.max_search_nodes),
          deadline(Clock::now() + std::chrono::milliseconds(b.time_limit_ms)) {}

    bool tick() {
        if (blown) return false;
        if (--nodes_left < 0 || (nodes_left % 1024 == 0 && Clock::now() > deadline)) {
            blown = true;
            return false;
        }
        return true;
    }
};

long rational_to_long(const Rational& r) { return std::stol(r.num().get_str()); }

}  // namespace

PathEnumeration enumerate_paths(const Graph& g, int s, int t, const OracleBudget& budget,
                                const std::function<bool(int)>& edge_ok,
                                const std::function<bool(int)>& node_ok) {
    PathEnumeration out;
    if (node_ok && (!node_ok(s) || !node_ok(t))) return out;
    if (s == t) {
        out.paths.push_back(Path{});
        return out;
    }
    std::vector<char> visited(g.node_count(), 0);
    std::vector<int> cur;
    long steps = budget.max_search_nodes;
    std::function<void(int)> dfs = [&](int v) {
        if (--steps < 0) {
            out.complete = false;
            return;
        }
        if (v == t) {
            if (static_cast<long>(out.paths.size()) >= budget.max_paths_per_demand)
                out.complete = false;
            else
                out.paths.push_back(Path{cur});
            return;
        }
        visited[v] = 1;
        for (int e : g.out_edges(v)) {
            if (edge_ok && !edge_ok(e)) continue;
            int w = g.directed() ? g.edge(e).v : g.other_end(e, v);
            if (visited[w]) continue;
            if (node_ok && !node_ok(w)) continue;
            cur.push_back(e);
            dfs(w);
            cur.pop_back();
            if (!out.complete) {
                visited[v] = 0;
                return;
            }
        }
        visited[v] = 0;
    };
    dfs(s);
    std::sort(out.paths.begin(), out.paths.end(), [](const Path& a, const Path& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        return a.edges < b.edges;
    });
    return out;
}

namespace {

Rational demand_weight(const Demand& d, Objective obj) {
    switch (obj) {
        case Objective::cardinality: return Rational(1);
        case Objective::throughput: return d.size;
        case Objective::profit: return d.profit_or_default();
    }
    return Rational(0);
}

// ---------------------------------------------------------------------------
// Unsplittable / priority branch and bound.
// ---------------------------------------------------------------------------
struct PathSearch {
    const Instance& inst;
    Objective obj;
    SearchLimits limits;
    bool enumeration_complete = true;

    std::vector<int> order;  // demand ids, largest first (most constrained)
    std::vector<std::vector<Path>> candidates;
    std::vector<Rational> weight, suffix_weight;

    std::vector<Rational> residual;
    Rational best_value{-1};
    std::map<int, Path> best_assign, cur_assign;
    Rational cur_value;

    PathSearch(const Instance& i, Objective o, const OracleBudget& b) : inst(i), obj(o), limits(b) {
        order.resize(inst.demands.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
        std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
            return inst.demands[a].size > inst.demands[c].size;
        });
        candidates.resize(order.size());
        weight.resize(order.size());
        for (size_t k = 0; k < order.size(); ++k) {
            const Demand& d = inst.demands[order[k]];
            auto edge_ok = [&](int e) {
                return inst.capacity[e] >= d.size && inst.edge_admissible(e, d.prio_class);
            };
            PathEnumeration pe = enumerate_paths(inst.graph, d.source, inst.sink, b, edge_ok);
            if (!pe.complete) enumeration_complete = false;
            candidates[k] = std::move(pe.paths);
            weight[k] = demand_weight(d, obj);
        }
        suffix_weight.assign(order.size() + 1, Rational(0));
        for (size_t k = order.size(); k-- > 0;)
            suffix_weight[k] = suffix_weight[k + 1] + weight[k];
        residual = inst.capacity;
    }

    void run() { dfs(0); }

    void dfs(size_t k) {
        if (!limits.tick()) return;
        if (cur_value + suffix_weight[k] <= best_value) return;
        if (k == order.size()) {
            best_value = cur_value;
            best_assign = cur_assign;
            return;
        }
        int id = order[k];
        const Rational& need = inst.demands[id].size;
        for (const Path& p : candidates[k]) {
            bool fits = true;
            for (int e : p.edges)
                if (residual[e] < need) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            for (int e : p.edges) residual[e] -= need;
            cur_assign.emplace(id, p);
            cur_value += weight[k];
            dfs(k + 1);
            cur_value -= weight[k];
            cur_assign.erase(id);
            for (int e : p.edges) residual[e] += need;
            if (limits.blown) return;
        }
        dfs(k + 1);  // unrouted branch
    }
};

}  // namespace

OracleResult exact_unsplittable(const Instance& inst, Objective obj, const OracleBudget& budget) {
    if (inst.model != CapacityModel::edge)
        throw std::invalid_argument("exact_unsplittable needs an edge-capacitated instance");
    PathSearch search(inst, obj, budget);
    search.run();
    OracleResult res;
    res.optimum = search.best_value < Rational(0) ? Rational(0) : search.best_value;
    res.witness.paths = search.best_assign;
    res.status = (search.enumeration_complete && !search.limits.blown) ? OracleStatus::exact
                                                                       : OracleStatus::exhausted;
    return res;
}

OracleResult exact_priority(const Instance& inst, const OracleBudget& budget) {
    if (!inst.has_priorities)
        throw std::invalid_argument("exact_priority needs a priority instance");
    return exact_unsplittable(inst, Objective::cardinality, budget);
}

namespace {

// ---------------------------------------------------------------------------
// Confluent search. All demands at one source must follow one path, so the
// search assigns a path (or nothing) to each source group while keeping the
// union of paths a next-hop function, then optimizes how much each committed
// group sends. Node constraints aggregate by the subset of groups passing
// through; those subsets are subtrees of the routing forest, hence laminar,
// which makes the continuous relaxation a polymatroid solved exactly by
// greedy saturation - that is the pruning bound.
// ---------------------------------------------------------------------------
struct Group {
    int source = -1;
    std::vector<int> demand_ids;  // ascending
    Rational min_size, max_size, total;
    bool uniform = true;
};

std::vector<Group> group_demands(const Instance& inst) {
    std::map<int, Group> by_source;
    for (size_t i = 0; i < inst.demands.size(); ++i) {
        const Demand& d = inst.demands[i];
        Group& g = by_source[d.source];
        if (g.demand_ids.empty()) {
            g.source = d.source;
            g.min_size = g.max_size = d.size;
        } else {
            if (d.size != inst.demands[g.demand_ids.front()].size) g.uniform = false;
            g.min_size = min(g.min_size, d.size);
            g.max_size = max(g.max_size, d.size);
        }
        g.total += d.size;
        g.demand_ids.push_back(static_cast<int>(i));
    }
    std::vector<Group> out;
    out.reserve(by_source.size());
    for (auto& [s, g] : by_source) {
        (void)s;
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
        if (a.max_size != b.max_size) return a.max_size > b.max_size;
        return a.source < b.source;
    });
    return out;
}

struct ConfluentSearch {
    const Instance& inst;
    Objective obj;
    SearchLimits limits;
    bool enumeration_complete = true;

    std::vector<Group> groups;
    std::vector<std::vector<Path>> candidates;
    std::vector<std::vector<std::vector<int>>> cand_nodes;
    std::vector<Rational> full_weight;  // per group, all demands routed

    std::vector<int> chosen;  // candidate index, -1 unrouted, -2 undecided
    std::map<int, int> hops;
    std::map<int, Rational> min_load;
    Rational best_value{-1};
    ConfluentRouting best_witness;

    ConfluentSearch(const Instance& i, Objective o, const OracleBudget& b)
        : inst(i), obj(o), limits(b), groups(group_demands(i)) {
        candidates.resize(groups.size());
        cand_nodes.resize(groups.size());
        full_weight.resize(groups.size());
        for (size_t k = 0; k < groups.size(); ++k) {
            const Group& g = groups[k];
            if (!g.uniform && g.demand_ids.size() > 20)
                throw std::invalid_argument(
                    "exact_confluent: non-uniform co-located demand group too large");
            auto node_ok = [&](int v) { return inst.capacity[v] >= g.min_size; };
            PathEnumeration pe = enumerate_paths(inst.graph, g.source, inst.sink, b, {}, node_ok);
            if (!pe.complete) enumeration_complete = false;
            candidates[k] = std::move(pe.paths);
            cand_nodes[k].reserve(candidates[k].size());
            for (const Path& p : candidates[k]) {
                std::vector<int> nodes;
                std::string err;
                if (!resolve_walk(inst, g.source, p, nodes, err))
                    throw std::logic_error("enumerated path fails to walk: " + err);
                cand_nodes[k].push_back(std::move(nodes));
            }
            for (int id : g.demand_ids) full_weight[k] += demand_weight(inst.demands[id], obj);
        }
        chosen.assign(groups.size(), -2);
    }

    // Greedy polymatroid saturation over the committed paths' node
    // constraints; undecided groups count in full. For cardinality the
    // coefficient of group g is 1/min_size, so saturation runs smallest
    // packet first.
    Rational bound(size_t next) const {
        std::vector<size_t> committed;
        for (size_t k = 0; k < next; ++k)
            if (chosen[k] >= 0) committed.push_back(k);
        Rational total;
        for (size_t k = next; k < groups.size(); ++k) total += full_weight[k];
        if (committed.empty()) return total;
        if (obj == Objective::cardinality) {
            std::sort(committed.begin(), committed.end(), [&](size_t a, size_t b) {
                if (groups[a].min_size != groups[b].min_size)
                    return groups[a].min_size < groups[b].min_size;
                return a < b;
            });
        } else if (obj == Objective::profit) {
            for (size_t k : committed) total += full_weight[k];  // coarse but sound
            return total;
        }
        std::map<int, Rational> load;
        for (size_t k : committed) {
            const std::vector<int>& nodes = cand_nodes[k][chosen[k]];
            Rational room = groups[k].total;
            for (int v : nodes) {
                Rational used = load.count(v) ? load[v] : Rational(0);
                room = min(room, inst.capacity[v] - used);
            }
            if (room.sign() <= 0) continue;
            for (int v : nodes) load[v] += room;
            total += obj == Objective::throughput ? room : room / groups[k].min_size;
        }
        return total;
    }

    void run() { dfs(0); }

    bool commit_path(size_t k, int cand, std::vector<int>& added_hops) {
        const Path& p = candidates[k][cand];
        const std::vector<int>& nodes = cand_nodes[k][cand];
        for (size_t i = 0; i + 1 < nodes.size(); ++i) {
            auto it = hops.find(nodes[i]);
            if (it != hops.end() && it->second != p.edges[i]) return false;
        }
        for (int v : nodes) {
            Rational ml = groups[k].min_size + (min_load.count(v) ? min_load[v] : Rational(0));
            if (ml > inst.capacity[v]) return false;  // cannot even send one packet
        }
        for (size_t i = 0; i + 1 < nodes.size(); ++i)
            if (hops.emplace(nodes[i], p.edges[i]).second) added_hops.push_back(nodes[i]);
        for (int v : nodes) min_load[v] += groups[k].min_size;
        return true;
    }

    void uncommit_path(size_t k, int cand, const std::vector<int>& added_hops) {
        for (int v : added_hops) hops.erase(v);
        for (int v : cand_nodes[k][cand]) {
            min_load[v] -= groups[k].min_size;
            if (min_load[v].sign() == 0) min_load.erase(v);
        }
    }

    void dfs(size_t k) {
        if (!limits.tick()) return;
        if (bound(k) <= best_value) return;
        if (k == groups.size()) {
            optimize_quantities();
            return;
        }
        std::vector<int> added;
        for (size_t c = 0; c < candidates[k].size(); ++c) {
            added.clear();
            if (!commit_path(k, static_cast<int>(c), added)) continue;
            chosen[k] = static_cast<int>(c);
            dfs(k + 1);
            uncommit_path(k, static_cast<int>(c), added);
            chosen[k] = -2;
            if (limits.blown) return;
        }
        chosen[k] = -1;
        dfs(k + 1);
        chosen[k] = -2;
    }

    // ---- leaf: choose per-group routed subsets -------------------------
    struct Constraint {
        unsigned mask;
        Rational cap;
    };

    struct LeafState {
        std::vector<size_t> committed;
        std::vector<Constraint> cons;
        std::vector<Rational> slack;
        std::vector<long> counts;        // uniform groups: first `count` ids
        std::vector<unsigned> submasks;  // non-uniform groups: chosen subset
    };

    void optimize_quantities() {
        LeafState st;
        for (size_t k = 0; k < groups.size(); ++k)
            if (chosen[k] >= 0) st.committed.push_back(k);
        if (st.committed.size() >= 8 * sizeof(unsigned))
            throw std::invalid_argument("exact_confluent: too many sources for leaf optimizer");
        std::map<int, unsigned> node_mask;
        for (size_t gi = 0; gi < st.committed.size(); ++gi)
            for (int v : cand_nodes[st.committed[gi]][chosen[st.committed[gi]]])
                node_mask[v] |= 1u << gi;
        std::map<unsigned, Rational> agg;
        for (const auto& [v, mask] : node_mask) {
            auto [it, fresh] = agg.emplace(mask, inst.capacity[v]);
            if (!fresh) it->second = min(it->second, inst.capacity[v]);
        }
        for (const auto& [mask, cap] : agg) {
            st.cons.push_back({mask, cap});
            st.slack.push_back(cap);
        }
        st.counts.assign(st.committed.size(), 0);
        st.submasks.assign(st.committed.size(), 0);
        quantity_dfs(st, 0, Rational(0));
    }

    Rational quantity_bound(const LeafState& st, size_t gi) const {
        // same greedy saturation, over the aggregated constraints
        std::vector<size_t> rest;
        for (size_t j = gi; j < st.committed.size(); ++j) rest.push_back(j);
        if (obj == Objective::cardinality) {
            std::sort(rest.begin(), rest.end(), [&](size_t a, size_t b) {
                const Group& ga = groups[st.committed[a]];
                const Group& gb = groups[st.committed[b]];
                if (ga.min_size != gb.min_size) return ga.min_size < gb.min_size;
                return a < b;
            });
        } else if (obj == Objective::profit) {
            Rational total;
            for (size_t j : rest) total += full_weight[st.committed[j]];
            return total;
        }
        std::vector<Rational> s2 = st.slack;
        Rational total;
        for (size_t j : rest) {
            const Group& g = groups[st.committed[j]];
            Rational room = g.total;
            for (size_t ci = 0; ci < st.cons.size(); ++ci)
                if (st.cons[ci].mask & (1u << j)) room = min(room, s2[ci]);
            if (room.sign() <= 0) continue;
            for (size_t ci = 0; ci < st.cons.size(); ++ci)
                if (st.cons[ci].mask & (1u << j)) s2[ci] -= room;
            total += obj == Objective::throughput ? room : room / g.min_size;
        }
        return total;
    }

    void record_solution(const LeafState& st, const Rational& value) {
        best_value = value;
        ConfluentRouting w;
        for (size_t gi = 0; gi < st.committed.size(); ++gi) {
            const Group& g = groups[st.committed[gi]];
            if (g.uniform) {
                for (long c = 0; c < st.counts[gi]; ++c) w.routed.insert(g.demand_ids[c]);
            } else {
                for (size_t d = 0; d < g.demand_ids.size(); ++d)
                    if (st.submasks[gi] & (1u << d)) w.routed.insert(g.demand_ids[d]);
            }
            const std::vector<int>& nodes = cand_nodes[st.committed[gi]][chosen[st.committed[gi]]];
            const Path& p = candidates[st.committed[gi]][chosen[st.committed[gi]]];
            for (size_t i = 0; i + 1 < nodes.size(); ++i) w.next_hop.emplace(nodes[i], p.edges[i]);
        }
        best_witness = std::move(w);
    }

    void apply_amount(LeafState& st, size_t gi, const Rational& sz, int sign) {
        for (size_t ci = 0; ci < st.cons.size(); ++ci)
            if (st.cons[ci].mask & (1u << gi))
                st.slack[ci] += sign > 0 ? -sz : sz;
    }

    void quantity_dfs(LeafState& st, size_t gi, const Rational& value) {
        if (!limits.tick()) return;
        if (gi == st.committed.size()) {
            // every committed group must send something; all-zero variants are
            // covered by the branch where the group was left unrouted
            if (value > best_value) record_solution(st, value);
            return;
        }
        if (value + quantity_bound(st, gi) <= best_value) return;
        const Group& g = groups[st.committed[gi]];
        if (!g.uniform) {
            std::vector<std::pair<Rational, unsigned>> opts;
            for (unsigned sub = 1; sub < (1u << g.demand_ids.size()); ++sub) {
                Rational wgt;
                for (size_t d = 0; d < g.demand_ids.size(); ++d)
                    if (sub & (1u << d)) wgt += demand_weight(inst.demands[g.demand_ids[d]], obj);
                opts.emplace_back(wgt, sub);
            }
            std::sort(opts.begin(), opts.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
            });
            for (const auto& [wgt, sub] : opts) {
                Rational sz;
                for (size_t d = 0; d < g.demand_ids.size(); ++d)
                    if (sub & (1u << d)) sz += inst.demands[g.demand_ids[d]].size;
                bool ok = true;
                for (size_t ci = 0; ci < st.cons.size(); ++ci)
                    if ((st.cons[ci].mask & (1u << gi)) && st.slack[ci] < sz) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                apply_amount(st, gi, sz, +1);
                st.submasks[gi] = sub;
                quantity_dfs(st, gi + 1, value + wgt);
                st.submasks[gi] = 0;
                apply_amount(st, gi, sz, -1);
                if (limits.blown) return;
            }
            return;
        }
        const Rational unit = g.min_size;
        Rational room = g.total;
        for (size_t ci = 0; ci < st.cons.size(); ++ci)
            if (st.cons[ci].mask & (1u << gi)) room = min(room, st.slack[ci]);
        long kmax = 0;
        if (room.sign() > 0) {
            Rational cnt = (room / unit).floor();
            Rational gsize(static_cast<long>(g.demand_ids.size()));
            kmax = cnt >= gsize ? static_cast<long>(g.demand_ids.size()) : rational_to_long(cnt);
        }
        for (long cq = kmax; cq >= 1; --cq) {
            Rational sz = unit * Rational(cq);
            Rational wgt;
            switch (obj) {
                case Objective::cardinality: wgt = Rational(cq); break;
                case Objective::throughput: wgt = sz; break;
                case Objective::profit:
                    for (long d = 0; d < cq; ++d)
                        wgt += inst.demands[g.demand_ids[d]].profit_or_default();
                    break;
            }
            apply_amount(st, gi, sz, +1);
            st.counts[gi] = cq;
            quantity_dfs(st, gi + 1, value + wgt);
            st.counts[gi] = 0;
            apply_amount(st, gi, sz, -1);
            if (limits.blown) return;
        }
    }
};

}  // namespace

ConfluentOracleResult exact_confluent(const Instance& inst, Objective obj,
                                      const OracleBudget& budget) {
    if (inst.model != CapacityModel::node)
        throw std::invalid_argument("exact_confluent needs a node-capacitated instance");
    ConfluentSearch search(inst, obj, budget);
    search.run();
    ConfluentOracleResult res;
    res.optimum = search.best_value < Rational(0) ? Rational(0) : search.best_value;
    res.witness = search.best_witness;
    res.status = (search.enumeration_complete && !search.limits.blown) ? OracleStatus::exact
                                                                       : OracleStatus::exhausted;
    return res;
}

namespace {

// Full-routing congestion: every source group commits one path; minimize the
// worst load/capacity ratio. Partial ratios only grow, so the best value
// prunes subtrees.
struct CongestionSearch {
    const Instance& inst;
    bool strong;
    SearchLimits limits;
    bool enumeration_complete = true;

    std::vector<Group> groups;
    std::vector<std::vector<Path>> candidates;
    std::vector<std::vector<std::vector<int>>> cand_nodes;

    std::map<int, int> hops;
    std::map<int, Rational> load;
    std::vector<int> chosen;

    bool found = false;
    Rational best_value;
    ConfluentRouting best_witness;

    CongestionSearch(const Instance& i, bool strong_, const OracleBudget& b)
        : inst(i), strong(strong_), limits(b), groups(group_demands(i)) {
        candidates.resize(groups.size());
        cand_nodes.resize(groups.size());
        for (size_t k = 0; k < groups.size(); ++k) {
            const Group& g = groups[k];
            std::function<bool(int)> node_ok;
            if (strong) {
                Rational maxsz = g.max_size;
                node_ok = [this, maxsz](int v) { return inst.capacity[v] >= maxsz; };
            }
            PathEnumeration pe = enumerate_paths(inst.graph, g.source, inst.sink, b, {}, node_ok);
            if (!pe.complete) enumeration_complete = false;
            candidates[k] = std::move(pe.paths);
            cand_nodes[k].reserve(candidates[k].size());
            for (const Path& p : candidates[k]) {
                std::vector<int> nodes;
                std::string err;
                if (!resolve_walk(inst, g.source, p, nodes, err))
                    throw std::logic_error("enumerated path fails to walk: " + err);
                cand_nodes[k].push_back(std::move(nodes));
            }
        }
        chosen.assign(groups.size(), -1);
    }

    Rational current_max_ratio() const {
        Rational r(0);
        for (const auto& [v, ld] : load) r = max(r, ld / inst.capacity[v]);
        return r;
    }

    void run() { dfs(0); }

    void dfs(size_t k) {
        if (!limits.tick()) return;
        if (found && current_max_ratio() >= best_value) return;
        if (k == groups.size()) {
            Rational v = current_max_ratio();
            if (!found || v < best_value) {
                found = true;
                best_value = v;
                ConfluentRouting w;
                for (size_t gi = 0; gi < groups.size(); ++gi) {
                    for (int id : groups[gi].demand_ids) w.routed.insert(id);
                    const std::vector<int>& nodes = cand_nodes[gi][chosen[gi]];
                    const Path& p = candidates[gi][chosen[gi]];
                    for (size_t i = 0; i + 1 < nodes.size(); ++i)
                        w.next_hop.emplace(nodes[i], p.edges[i]);
                }
                best_witness = std::move(w);
            }
            return;
        }
        for (size_t c = 0; c < candidates[k].size(); ++c) {
            const Path& p = candidates[k][c];
            const std::vector<int>& nodes = cand_nodes[k][c];
            bool consistent = true;
            for (size_t i = 0; i + 1 < nodes.size(); ++i) {
                auto it = hops.find(nodes[i]);
                if (it != hops.end() && it->second != p.edges[i]) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            std::vector<int> added;
            for (size_t i = 0; i + 1 < nodes.size(); ++i)
                if (hops.emplace(nodes[i], p.edges[i]).second) added.push_back(nodes[i]);
            for (int v : nodes) load[v] += groups[k].total;
            chosen[k] = static_cast<int>(c);
            dfs(k + 1);
            chosen[k] = -1;
            for (int v : nodes) {
                load[v] -= groups[k].total;
                if (load[v].sign() == 0) load.erase(v);
            }
            for (int v : added) hops.erase(v);
            if (limits.blown) return;
        }
    }
};

}  // namespace

StrongCongestionResult exact_strong_congestion(const Instance& inst, const OracleBudget& budget) {
    if (inst.model != CapacityModel::node)
        throw std::invalid_argument("exact_strong_congestion needs a node-capacitated instance");
    StrongCongestionResult res;
    CongestionSearch strong(inst, true, budget);
    strong.run();
    CongestionSearch weak(inst, false, budget);
    weak.run();
    bool exact = strong.enumeration_complete && !strong.limits.blown &&
                 weak.enumeration_complete && !weak.limits.blown;
    res.status = exact ? OracleStatus::exact : OracleStatus::exhausted;
    if (strong.found) {
        res.strong = strong.best_value;
        res.strong_witness = strong.best_witness;
    }
    if (weak.found) {
        res.weak_feasible = true;
        res.weak = weak.best_value;
        res.weak_witness = weak.best_witness;
    }
    return res;
}

}  // namespace flowlab
