#pragma once

#include <utility>
#include <vector>

#include "flowlab/instance.hpp"
#include "flowlab/routing.hpp"

namespace flowlab {

// Exact-rational flow. edge_flow is signed: positive along the arc for
// directed edges, positive from the lower to the higher endpoint id for
// undirected ones. Conservation holds at every node except the listed
// sources and the sink.
struct FlowAssignment {
    std::vector<Rational> edge_flow;
    Rational value;
    std::vector<std::pair<int, Rational>> sources;  // (node, supply limit)
    int sink = -1;
};

// Shortest-augmenting-path max flow over exact rationals; multiple sources
// are handled through an implicit super-source with the given supply limits.
// Integral inputs yield an integral flow. Throws if the sink is a source.
FlowAssignment max_flow(const Graph& g, const std::vector<Rational>& edge_caps,
                        const std::vector<std::pair<int, Rational>>& sources, int sink);

// Same, but capacities sit on nodes (handled by node splitting). Flow through
// a node, including flow originating or terminating there, is limited by its
// capacity. Edges are uncapacitated.
FlowAssignment max_flow_node_capacitated(const Graph& g, const std::vector<Rational>& node_caps,
                                         const std::vector<std::pair<int, Rational>>& sources,
                                         int sink);

// Path decomposition: at most m paths whose per-edge totals equal |flow(e)|
// and whose amounts sum to the value. Flow cycles are canceled first.
std::vector<std::pair<Path, Rational>> flow_decompose(const Graph& g, const FlowAssignment& f);

// Exact solver for unit demand spread (d_max = d_min): scale demands to 1,
// round capacities down, run integral max flow and hand the unit paths to
// demands. Optimal for cardinality and throughput alike.
Routing solve_unit_uniform(const Instance& inst);

// Value of the maximum flow routable to the sink when each listed source
// offers at most its supply. Convenience wrapper used by per-class solvers.
Rational max_flow_value(const Graph& g, const std::vector<Rational>& edge_caps,
                        const std::vector<std::pair<int, Rational>>& sources, int sink);

}  // namespace flowlab
