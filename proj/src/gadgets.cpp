#include "flowlab/gadgets.hpp"

#include <functional>
#include <stdexcept>

namespace flowlab {

Gadget make_gadget(GadgetKind kind, DisjointnessModel model, const Rational& alpha,
                   const Rational& beta) {
    if (!(alpha.sign() > 0) || beta < alpha)
        throw std::invalid_argument("make_gadget requires beta >= alpha > 0");
    Gadget g;
    g.kind = kind;
    g.model = model;
    g.alpha = alpha;
    g.beta = beta;

    auto add = [&g](int from, int to, CapClass cls) {
        g.graph.add_edge(from, to);
        g.oriented.push_back({from, to});
        g.edge_class.push_back(cls);
    };

    auto star = [&] {
        g.graph = Graph(5, Orientation::undirected);
        g.x1 = 0; g.y1 = 1; g.x2 = 2; g.y2 = 3;
        int c = 4;
        add(g.x1, c, CapClass::alpha);
        add(c, g.y1, CapClass::alpha);
        add(g.x2, c, CapClass::beta);
        add(c, g.y2, CapClass::beta);
    };

    if (model == DisjointnessModel::edge) {
        if (kind == GadgetKind::yes) {
            star();  // x1-c-y1 and x2-c-y2 are edge-disjoint through c
        } else {
            g.graph = Graph(6, Orientation::undirected);
            g.x1 = 0; g.y1 = 1; g.x2 = 2; g.y2 = 3;
            int a = 4, b = 5;
            add(g.x1, a, CapClass::alpha);
            add(g.x2, a, CapClass::beta);
            add(a, b, CapClass::beta);  // the cut edge every pair must share
            add(b, g.y1, CapClass::alpha);
            add(b, g.y2, CapClass::beta);
        }
    } else {
        if (kind == GadgetKind::yes) {
            g.graph = Graph(6, Orientation::undirected);
            g.x1 = 0; g.y1 = 1; g.x2 = 2; g.y2 = 3;
            int u = 4, v = 5;
            add(g.x1, u, CapClass::alpha);
            add(u, g.y1, CapClass::alpha);
            add(g.x2, v, CapClass::beta);
            add(v, g.y2, CapClass::beta);
        } else {
            star();  // the center is a cut vertex shared by every pair
        }
    }
    return g;
}

namespace {

void all_simple_paths(const Graph& g, int s, int t, const std::vector<char>& edge_ok,
                      std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::vector<char> visited(g.node_count(), 0);
    std::function<void(int)> dfs = [&](int v) {
        if (v == t) {
            out.push_back(cur);
            return;
        }
        visited[v] = 1;
        for (int e : g.out_edges(v)) {
            if (!edge_ok[e]) continue;
            int w = g.other_end(e, v);
            if (visited[w]) continue;
            cur.push_back(e);
            dfs(w);
            cur.pop_back();
        }
        visited[v] = 0;
    };
    dfs(s);
}

}  // namespace

bool gadget_has_disjoint_pair(const Gadget& g) {
    std::vector<char> any(g.graph.edge_count(), 1);
    std::vector<char> beta_only(g.graph.edge_count(), 0);
    for (int e = 0; e < g.graph.edge_count(); ++e)
        beta_only[e] = g.edge_class[e] == CapClass::beta;

    std::vector<std::vector<int>> p1s, p2s;
    all_simple_paths(g.graph, g.x1, g.y1, any, p1s);
    all_simple_paths(g.graph, g.x2, g.y2, beta_only, p2s);

    auto nodes_of = [&](const std::vector<int>& path, int start) {
        std::vector<int> nodes{start};
        int cur = start;
        for (int e : path) {
            cur = g.graph.other_end(e, cur);
            nodes.push_back(cur);
        }
        return nodes;
    };

    for (const auto& p1 : p1s) {
        for (const auto& p2 : p2s) {
            bool clash = false;
            if (g.model == DisjointnessModel::edge) {
                for (int e1 : p1)
                    for (int e2 : p2)
                        if (e1 == e2) clash = true;
            } else {
                for (int a : nodes_of(p1, g.x1))
                    for (int b : nodes_of(p2, g.x2))
                        if (a == b) clash = true;
            }
            if (!clash) return true;
        }
    }
    return false;
}

}  // namespace flowlab
