#pragma once

#include <vector>

#include "flowlab/instance.hpp"
#include "flowlab/routing.hpp"

namespace flowlab {

struct SolverConfig {
    Objective objective = Objective::cardinality;
    Rational bin_base = Rational(2);  // must be > 1
};

struct TraceEntry {
    int iteration = 0;
    int demand = -1;
    int path_len = 0;
};

struct SolveResult {
    Routing routing;
    Rational value;
    std::vector<TraceEntry> trace;
};

Rational objective_value(const Instance& inst, const Routing& r, Objective obj);

// Repeatedly routes the demand with the shortest feasible path in the
// residual graph (feasible: every edge has residual >= d_i and an admissible
// priority class when priorities are present). Ties break by demand id;
// shortest paths are hop-count BFS with edges scanned in id order, so the
// whole run is deterministic.
SolveResult greedy_shortest_path_pack(const Instance& inst, const std::vector<int>& demand_ids,
                                      const SolverConfig& cfg = {});

// Greedy for unit-demand unit-capacity priority instances: routing a demand
// deletes its path's edges. Rejects anything else.
SolveResult greedy_priority(const Instance& inst);

// For each priority class i, solve integral max flow for the class-i demands
// on the subgraph of edges with class <= i; return the best single class.
// Value >= OPT / k.
SolveResult priority_by_class(const Instance& inst);

// Cardinality: demands <= u_min form one greedy sub-instance; the rest are
// binned geometrically from u_min and each bin is packed separately; the best
// candidate wins.
SolveResult greedy_cardinality(const Instance& inst, const SolverConfig& cfg = {});

// Throughput: demands below d_max/n are discarded, the rest fall into at most
// log base-2 of n geometric bins below d_max; each bin is packed greedily
// with profit = size and the best bin wins.
SolveResult greedy_throughput(const Instance& inst, const SolverConfig& cfg = {});

}  // namespace flowlab
