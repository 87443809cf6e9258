#include "flowlab/instance.hpp"

namespace flowlab {

DerivedStats derived_stats(const Instance& inst) {
    DerivedStats s;
    s.n = inst.graph.node_count();
    s.m = inst.graph.edge_count();
    s.k = static_cast<int>(inst.demands.size());
    bool first = true;
    for (const Demand& d : inst.demands) {
        if (first || d.size > s.d_max) s.d_max = d.size;
        if (first || d.size < s.d_min) s.d_min = d.size;
        first = false;
    }
    first = true;
    for (const Rational& c : inst.capacity) {
        if (first || c < s.u_min) s.u_min = c;
        first = false;
    }
    s.spread = (s.k > 0 && !s.d_min.is_zero()) ? s.d_max / s.d_min : Rational(1);
    s.bottleneck = (s.k > 0 && !s.u_min.is_zero()) ? s.d_max / s.u_min : Rational(0);
    return s;
}

std::vector<std::string> validate(const Instance& inst) {
    std::vector<std::string> diags;
    auto flag = [&diags](const std::string& msg) { diags.push_back(msg); };

    const Graph& g = inst.graph;
    const int n = g.node_count();
    const int m = g.edge_count();

    for (int e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
            flag("edge " + std::to_string(e + 1) + " has dangling endpoint");
        else if (!g.directed() && ed.u > ed.v)
            flag("edge " + std::to_string(e + 1) + " not in canonical endpoint order");
    }

    size_t want_caps = inst.model == CapacityModel::edge ? static_cast<size_t>(m)
                                                         : static_cast<size_t>(n);
    if (inst.capacity.size() != want_caps) {
        flag("capacity table has " + std::to_string(inst.capacity.size()) + " entries, expected " +
             std::to_string(want_caps));
    } else {
        const char* what = inst.model == CapacityModel::edge ? "edge " : "node ";
        for (size_t i = 0; i < inst.capacity.size(); ++i)
            if (inst.capacity[i].sign() <= 0)
                flag(what + std::to_string(i + 1) + ": capacity must be positive");
    }

    if (inst.sink < 0 || inst.sink >= n) flag("sink node id out of range");

    for (size_t i = 0; i < inst.demands.size(); ++i) {
        const Demand& d = inst.demands[i];
        std::string id = std::to_string(i + 1);
        if (d.source < 0 || d.source >= n)
            flag("demand " + id + " has dangling source");
        else if (d.source == inst.sink)
            flag("demand " + id + " located at sink");
        if (d.size.sign() <= 0) flag("demand " + id + " size must be positive");
        if (d.profit && d.profit->sign() < 0) flag("demand " + id + " profit must be nonnegative");
        if (inst.has_priorities && d.prio_class < 1)
            flag("demand " + id + " missing priority class");
        if (!inst.has_priorities && d.prio_class != 0)
            flag("demand " + id + " has priority class but instance has no priorities");
    }

    if (inst.has_priorities) {
        if (inst.model != CapacityModel::edge) flag("priorities require edge capacities");
        if (inst.edge_class.size() != static_cast<size_t>(m)) {
            flag("edge priority table has " + std::to_string(inst.edge_class.size()) +
                 " entries, expected " + std::to_string(m));
        } else {
            for (int e = 0; e < m; ++e)
                if (inst.edge_class[e] < 1)
                    flag("edge " + std::to_string(e + 1) + " missing priority class");
        }
    } else if (!inst.edge_class.empty()) {
        flag("edge priority table present but instance has no priorities");
    }

    return diags;
}

}  // namespace flowlab
