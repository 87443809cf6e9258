#pragma once

#include <stdexcept>
#include <vector>

namespace flowlab {

enum class Orientation { directed, undirected };

struct Edge {
    int u = -1;
    int v = -1;
    bool operator==(const Edge&) const = default;
};

// Multigraph with dense 0-based edge ids. Undirected edges are stored with
// canonical endpoint order (u <= v); traversal direction of a path is implied
// by the walk, not by storage. Parallel edges are allowed.
class Graph {
public:
    Graph() = default;
    Graph(int nodes, Orientation o) : orient_(o), out_(nodes), in_(nodes) {}

    int add_node() {
        out_.emplace_back();
        in_.emplace_back();
        return static_cast<int>(out_.size()) - 1;
    }

    int add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
            throw std::out_of_range("edge endpoint out of range");
        if (orient_ == Orientation::undirected && u > v) std::swap(u, v);
        int id = static_cast<int>(edges_.size());
        edges_.push_back({u, v});
        out_[u].push_back(id);
        if (orient_ == Orientation::directed) {
            in_[v].push_back(id);
        } else if (v != u) {
            out_[v].push_back(id);
        }
        return id;
    }

    int node_count() const { return static_cast<int>(out_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    Orientation orientation() const { return orient_; }
    bool directed() const { return orient_ == Orientation::directed; }

    const Edge& edge(int e) const { return edges_.at(e); }

    int other_end(int e, int at) const {
        const Edge& ed = edges_.at(e);
        if (ed.u == at) return ed.v;
        if (ed.v == at) return ed.u;
        throw std::invalid_argument("node not an endpoint of edge");
    }

    bool touches(int e, int at) const {
        const Edge& ed = edges_.at(e);
        return ed.u == at || ed.v == at;
    }

    // Edges usable when leaving `v`: outgoing arcs if directed, all incident
    // edges otherwise.
    const std::vector<int>& out_edges(int v) const { return out_.at(v); }
    // Directed only; undirected graphs keep everything in out_edges.
    const std::vector<int>& in_edges(int v) const { return in_.at(v); }

    bool operator==(const Graph&) const = default;

private:
    Orientation orient_ = Orientation::undirected;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_, in_;
};

}  // namespace flowlab
