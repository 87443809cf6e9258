#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "flowlab/instance.hpp"

namespace flowlab {

// Ordered edge ids forming a walk; traversal direction is implicit (an
// undirected edge is a single object, never double-counted).
struct Path {
    std::vector<int> edges;
    bool operator==(const Path&) const = default;
    bool operator<(const Path& o) const { return edges < o.edges; }
};

// Partial per-demand path assignment; absent id = unrouted.
struct Routing {
    std::map<int, Path> paths;
    bool operator==(const Routing&) const = default;
};

// Next-hop selection: at most one outgoing edge per node. `routed` lists the
// demand ids whose packets follow the hops from their source.
struct ConfluentRouting {
    std::map<int, int> next_hop;
    std::set<int> routed;
    bool operator==(const ConfluentRouting&) const = default;
};

struct Violation {
    std::string kind;  // edge-capacity | node-capacity | priority | structure
    int element = -1;  // edge or node id (0-based); -1 for purely structural
    Rational load, cap;
    std::string detail;
};

struct FeasibilityReport {
    std::vector<Violation> violations;
    bool feasible() const { return violations.empty(); }
};

// Node sequence visited by a demand's path (source first, sink last).
// Returns false and fills `error` if the edge list is not a source->sink walk
// (directed edges must be traversed forward; no edge repeats).
bool resolve_walk(const Instance& inst, int source, const Path& path, std::vector<int>& nodes,
                  std::string& error);

FeasibilityReport check_unsplittable(const Instance& inst, const Routing& r);
FeasibilityReport check_confluent(const Instance& inst, const ConfluentRouting& r);
FeasibilityReport check_priority(const Instance& inst, const Routing& r);

// Dispatches on capacity model / priorities.
FeasibilityReport check_routing(const Instance& inst, const Routing& r);

// Paths induced by following next hops from every routed demand's source.
// Throws std::invalid_argument on structural failure (cycle, missing hop).
Routing confluent_paths(const Instance& inst, const ConfluentRouting& r);

// True iff any two routed paths sharing an edge follow identical suffixes
// from that edge on (they may still meet and diverge at nodes).
bool is_edge_confluent(const Instance& inst, const Routing& r);

enum class Objective { cardinality, throughput, profit };

struct ObjectiveValues {
    long cardinality = 0;
    Rational throughput, profit;
};

// Rejects infeasible input (std::invalid_argument).
ObjectiveValues objectives(const Instance& inst, const Routing& r);
ObjectiveValues objectives(const Instance& inst, const ConfluentRouting& r);

enum class CongestionMode { weak, strong };

struct CongestionResult {
    CongestionMode mode = CongestionMode::weak;
    Rational value;  // max over capacitated elements of load/capacity
    std::vector<std::pair<int, int>> strong_violations;  // (demand, element)
    bool strong_feasible() const { return strong_violations.empty(); }
};

// Congestion is about routing everything: throws if any demand is unrouted.
CongestionResult congestion(const Instance& inst, const Routing& r, CongestionMode mode);
CongestionResult congestion(const Instance& inst, const ConfluentRouting& r, CongestionMode mode);

}  // namespace flowlab
