#pragma once

#include <functional>
#include <optional>

#include "flowlab/instance.hpp"
#include "flowlab/routing.hpp"

namespace flowlab {

// Budgets bound the exponential searches. Exceeding any of them yields an
// explicit `exhausted` status with the best value found so far, never a
// silently wrong answer.
struct OracleBudget {
    long max_paths_per_demand = 200000;
    long max_search_nodes = 4000000;
    long time_limit_ms = 300000;

    // FLOWLAB_ORACLE_BUDGET=<nodes>[,<paths>[,<ms>]] overrides the defaults.
    static OracleBudget from_env();
};

enum class OracleStatus { exact, exhausted };

struct OracleResult {
    Rational optimum;
    Routing witness;
    OracleStatus status = OracleStatus::exact;
};

struct ConfluentOracleResult {
    Rational optimum;
    ConfluentRouting witness;
    OracleStatus status = OracleStatus::exact;
};

struct PathEnumeration {
    std::vector<Path> paths;  // sorted by (length, edge ids)
    bool complete = true;
};

// All node-simple s->t paths (directed: arcs followed forward), truncated by
// the budget. Optional predicates restrict usable edges/nodes.
PathEnumeration enumerate_paths(const Graph& g, int s, int t, const OracleBudget& budget,
                                const std::function<bool(int)>& edge_ok = {},
                                const std::function<bool(int)>& node_ok = {});

// Branch-and-bound over (demand -> path | unrouted) assignments with
// residual-capacity pruning. Demands are processed largest first, candidate
// paths shortest first.
OracleResult exact_unsplittable(const Instance& inst, Objective obj, const OracleBudget& budget);

// Cardinality optimum over priority-admissible path assignments.
OracleResult exact_priority(const Instance& inst, const OracleBudget& budget);

// Exact confluent optimum: searches next-hop assignments source by source
// (branching only at nodes that actually carry flow) and then picks the best
// routable subset of each source's demands.
ConfluentOracleResult exact_confluent(const Instance& inst, Objective obj,
                                      const OracleBudget& budget);

struct StrongCongestionResult {
    std::optional<Rational> strong;  // empty: no strong-admissible tree exists
    Rational weak;
    bool weak_feasible = false;  // false only if no all-demand tree exists at all
    ConfluentRouting strong_witness, weak_witness;
    OracleStatus status = OracleStatus::exact;
};

// Minimum congestion (max load/capacity ratio) over confluent routings of
// ALL demands; the strong variant additionally requires every node on a
// demand's path to have capacity at least that demand's size.
StrongCongestionResult exact_strong_congestion(const Instance& inst, const OracleBudget& budget);

}  // namespace flowlab
