#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flowlab/graph.hpp"
#include "flowlab/rational.hpp"

namespace flowlab {

enum class CapacityModel { edge, node };

struct Demand {
    int source = -1;
    Rational size;
    std::optional<Rational> profit;  // absent: 1 for cardinality, d_i for throughput
    int prio_class = 0;              // 0 = none; otherwise >= 1, class 1 is best

    Rational profit_or_default() const { return profit ? *profit : size; }
    bool operator==(const Demand&) const = default;
};

// A single-sink flow instance. Exactly one of edge/node capacities is in
// force, selected by `model`; `capacity` is indexed by edge id or node id
// accordingly. Immutable once built (generators and the parser are the only
// writers), so instances can be shared freely across threads.
struct Instance {
    Graph graph;
    CapacityModel model = CapacityModel::edge;
    std::vector<Rational> capacity;
    int sink = -1;
    std::vector<Demand> demands;
    bool has_priorities = false;
    std::vector<int> edge_class;  // parallel to edges when has_priorities

    const Rational& edge_cap(int e) const { return capacity.at(e); }
    const Rational& node_cap(int v) const { return capacity.at(v); }

    bool edge_admissible(int e, int demand_class) const {
        return !has_priorities || edge_class.at(e) <= demand_class;
    }

    bool operator==(const Instance&) const = default;
};

struct DerivedStats {
    Rational d_max, d_min, u_min;
    Rational spread;      // d_max / d_min (1 when no demands)
    Rational bottleneck;  // d_max / u_min
    int n = 0, m = 0, k = 0;
};

// Always recomputed, never cached on the instance.
DerivedStats derived_stats(const Instance& inst);

// Returns one message per violated invariant; empty means the instance is
// well-formed. Ids in messages are 1-based to match the file format.
std::vector<std::string> validate(const Instance& inst);

}  // namespace flowlab
