#include "flowlab/crossing.hpp"

#include <stdexcept>
#include <unordered_set>

namespace flowlab {

std::vector<CrossingRecord> crossing_pairs(const GridMetadata& meta, const Instance& inst,
                                           const Routing& r) {
    const int m = inst.graph.edge_count();
    const int n = inst.graph.node_count();
    for (const GadgetSite& s : meta.sites) {
        for (int v : s.nodes)
            if (v < 0 || v >= n) throw std::invalid_argument("metadata node id outside instance");
        for (int e : {s.top, s.bottom, s.left, s.right})
            if (e >= m) throw std::invalid_argument("metadata edge id outside instance");
    }

    std::vector<std::pair<int, std::unordered_set<int>>> edge_sets;
    for (const auto& [id, path] : r.paths) {
        edge_sets.emplace_back(id, std::unordered_set<int>(path.edges.begin(), path.edges.end()));
        for (int e : path.edges)
            if (e < 0 || e >= m) throw std::invalid_argument("routing edge id outside instance");
    }

    std::vector<CrossingRecord> out;
    for (const GadgetSite& s : meta.sites) {
        if (!s.is_grid_crossing()) continue;
        std::vector<int> horizontal, vertical;
        for (const auto& [id, edges] : edge_sets) {
            bool left = s.left >= 0 && edges.count(s.left);
            bool right = s.right >= 0 && edges.count(s.right);
            bool top = s.top >= 0 && edges.count(s.top);
            bool bottom = s.bottom >= 0 && edges.count(s.bottom);
            if (left && right && !(top || bottom)) horizontal.push_back(id);
            if (top && bottom && !(left || right)) vertical.push_back(id);
        }
        for (int h : horizontal)
            for (int v : vertical)
                if (h != v)
                    out.push_back({std::min(h, v), std::max(h, v), s.row, s.col});
    }
    return out;
}

}  // namespace flowlab
