#include "flowlab/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace flowlab {

namespace {

struct Builder {
    Graph g;
    CapacityModel model;
    std::vector<Rational> ncap, ecap;
    std::vector<int> eclass;
    bool priorities = false;

    Builder(Orientation o, CapacityModel m) : g(0, o), model(m) {}

    int node(const Rational& cap = Rational(0)) {
        int v = g.add_node();
        if (model == CapacityModel::node) ncap.push_back(cap);
        return v;
    }

    int edge(int u, int v, const Rational& cap = Rational(0), int cls = 0) {
        int e = g.add_edge(u, v);
        if (model == CapacityModel::edge) ecap.push_back(cap);
        eclass.push_back(cls);
        if (cls > 0) priorities = true;
        return e;
    }

    Instance finish(int sink, std::vector<Demand> demands) {
        Instance inst;
        inst.graph = g;
        inst.model = model;
        inst.capacity = model == CapacityModel::edge ? ecap : ncap;
        inst.sink = sink;
        inst.demands = std::move(demands);
        inst.has_priorities = priorities;
        if (priorities) inst.edge_class = eclass;
        return inst;
    }
};

enum class SubstStyle { edge_caps, node_split, confluent };

// A gadget instantiated inside the host instance.
struct BuiltGadget {
    int in_x1 = -1, out_y1 = -1, in_x2 = -1, out_y2 = -1;  // boundary attach nodes
    std::vector<int> vert, horiz;  // canonical through-paths (YES gadgets only)
    std::vector<int> nodes;
};

// Expands the abstract gadget into builder nodes/edges.
//   edge_caps: one node per gadget node, edges carry their class capacity
//              (or unit capacity plus a priority class).
//   node_split: in/out node pair per gadget node joined by a capacity-C arc,
//               gadget edges become capacity-C arcs (directed hosts only).
//   confluent: every gadget edge is subdivided, the new node inherits the
//              class capacity; terminals x1/y1 get alpha, x2/y2 beta,
//              interior nodes the largest incident class.
BuiltGadget build_gadget(Builder& b, const Gadget& gd, SubstStyle style, const Rational& cap_alpha,
                         const Rational& cap_beta, int cls_alpha, int cls_beta,
                         const Rational& uniform_c, const Rational& unit_cap) {
    const Graph& ag = gd.graph;
    int na = ag.node_count();
    std::vector<int> nin(na, -1), nout(na, -1), split(na, -1);
    std::vector<std::vector<int>> built(ag.edge_count());
    BuiltGadget out;

    auto class_cap = [&](CapClass c) { return c == CapClass::alpha ? cap_alpha : cap_beta; };
    auto class_cls = [&](CapClass c) { return c == CapClass::alpha ? cls_alpha : cls_beta; };

    auto node_capacity = [&](int w) {
        if (w == gd.x1 || w == gd.y1) return cap_alpha;
        if (w == gd.x2 || w == gd.y2) return cap_beta;
        Rational m = cap_alpha;
        for (int e : ag.out_edges(w)) m = max(m, class_cap(gd.edge_class[e]));
        return m;
    };

    for (int w = 0; w < na; ++w) {
        switch (style) {
            case SubstStyle::edge_caps:
                nin[w] = nout[w] = b.node();
                out.nodes.push_back(nin[w]);
                break;
            case SubstStyle::node_split:
                nin[w] = b.node();
                nout[w] = b.node();
                split[w] = b.edge(nin[w], nout[w], uniform_c);
                out.nodes.push_back(nin[w]);
                out.nodes.push_back(nout[w]);
                break;
            case SubstStyle::confluent:
                nin[w] = nout[w] = b.node(node_capacity(w));
                out.nodes.push_back(nin[w]);
                break;
        }
    }
    for (int e = 0; e < ag.edge_count(); ++e) {
        const Edge& ed = gd.oriented[e];  // intended flow direction
        CapClass cc = gd.edge_class[e];
        switch (style) {
            case SubstStyle::edge_caps: {
                Rational cap = cls_alpha > 0 ? unit_cap : class_cap(cc);
                built[e] = {b.edge(nout[ed.u], nin[ed.v], cap, class_cls(cc))};
                break;
            }
            case SubstStyle::node_split:
                built[e] = {b.edge(nout[ed.u], nin[ed.v], uniform_c)};
                break;
            case SubstStyle::confluent: {
                int m = b.node(class_cap(cc));
                out.nodes.push_back(m);
                built[e] = {b.edge(nout[ed.u], m), b.edge(m, nin[ed.v])};
                break;
            }
        }
    }

    out.in_x1 = nin[gd.x1];
    out.out_y1 = nout[gd.y1];
    out.in_x2 = nin[gd.x2];
    out.out_y2 = nout[gd.y2];

    if (gd.kind == GadgetKind::yes) {
        // Abstract through-paths: alpha edges carry x1->y1, beta edges x2->y2.
        auto abstract_path = [&](int from, int to, CapClass klass) {
            std::vector<int> path;
            std::vector<char> vis(na, 0);
            std::function<bool(int)> dfs = [&](int v) {
                if (v == to) return true;
                vis[v] = 1;
                for (int e : ag.out_edges(v)) {
                    if (gd.edge_class[e] != klass) continue;
                    int w = ag.other_end(e, v);
                    if (vis[w]) continue;
                    path.push_back(e);
                    if (dfs(w)) return true;
                    path.pop_back();
                }
                return false;
            };
            if (!dfs(from)) throw std::logic_error("YES gadget lost its through-path");
            return path;
        };
        auto translate = [&](const std::vector<int>& abstract, int start) {
            std::vector<int> res;
            if (split[start] != -1) res.push_back(split[start]);
            int cur = start;
            for (int e : abstract) {
                const Edge& ed = gd.oriented[e];
                if (cur == ed.u) {
                    for (int be : built[e]) res.push_back(be);
                    cur = ed.v;
                } else {
                    for (auto it = built[e].rbegin(); it != built[e].rend(); ++it)
                        res.push_back(*it);
                    cur = ed.u;
                }
                if (split[cur] != -1) res.push_back(split[cur]);
            }
            return res;
        };
        out.vert = translate(abstract_path(gd.x1, gd.y1, CapClass::alpha), gd.x1);
        out.horiz = translate(abstract_path(gd.x2, gd.y2, CapClass::beta), gd.x2);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Triangular half-grid skeleton shared by the graded, priority and composite
// families. Rows are numbered top to bottom, columns left to right; row i
// runs from s_i across the crossings with columns 1..i-1 to the corner (i,i),
// column j runs from the corner down across rows j+1..N to t_j and the sink.
// capval[i] is the capacity (1-based rank) of row/column i; crossing (r,c)
// with c < r gets alpha = capval[c] (vertical side) and beta = capval[r].
// ---------------------------------------------------------------------------
struct GridSkeleton {
    std::vector<int> s, corner, tcol;  // 1-based rank -> node id
    int sink = -1;
    std::vector<GadgetSite> sites;
    // full canonical edge sequences (YES gadgets only)
    std::vector<std::vector<int>> row_path, col_path;  // s_i -> corner i; corner j -> t
};

struct GridConfig {
    int N = 0;
    std::vector<Rational> capval;  // 1-based
    FamilySpec spec;
    bool priority_mode = false;    // unit caps, classes N-rank+1
    SubstStyle style = SubstStyle::edge_caps;
    DisjointnessModel model = DisjointnessModel::edge;
};

int rank_class(int N, int rank) { return N - rank + 1; }

GridSkeleton build_grid(Builder& b, const GridConfig& cfg) {
    const int N = cfg.N;
    GridSkeleton sk;
    sk.s.assign(N + 1, -1);
    sk.corner.assign(N + 1, -1);
    sk.tcol.assign(N + 1, -1);
    sk.row_path.assign(N + 1, {});
    sk.col_path.assign(N + 1, {});

    auto cap = [&](int rank) { return cfg.priority_mode ? Rational(1) : cfg.capval[rank]; };
    auto cls = [&](int rank) { return cfg.priority_mode ? rank_class(N, rank) : 0; };

    Rational sink_cap;
    for (int i = 1; i <= N; ++i) sink_cap += cap(i);

    for (int i = 1; i <= N; ++i) {
        sk.s[i] = b.node(cap(i));
        sk.corner[i] = b.node(cap(i));
        sk.tcol[i] = b.node(cap(i));
    }
    sk.sink = b.node(sink_cap);

    std::map<std::pair<int, int>, BuiltGadget> gadgets;
    for (int r = 2; r <= N; ++r) {
        for (int c = 1; c < r; ++c) {
            Rational alpha = cap(c), beta = cap(r);
            Gadget gd = make_gadget(cfg.spec.gadget, cfg.model, alpha, beta);
            BuiltGadget built = build_gadget(b, gd, cfg.style, alpha, beta, cls(c), cls(r),
                                             /*uniform C*/ beta, Rational(1));
            GadgetSite site;
            site.row = r;
            site.col = c;
            site.nodes = built.nodes;
            site.x1 = built.in_x1;
            site.y1 = built.out_y1;
            site.x2 = built.in_x2;
            site.y2 = built.out_y2;
            sk.sites.push_back(site);
            gadgets.emplace(std::make_pair(r, c), std::move(built));
        }
    }
    auto site_of = [&](int r, int c) -> GadgetSite& {
        for (GadgetSite& s : sk.sites)
            if (s.row == r && s.col == c) return s;
        throw std::logic_error("missing site");
    };

    const bool yes = cfg.spec.gadget == GadgetKind::yes;

    // rows: s_i -> X(i,1) -> ... -> X(i,i-1) -> corner(i)
    for (int i = 1; i <= N; ++i) {
        int prev = sk.s[i];
        auto& path = sk.row_path[i];
        for (int c = 1; c < i; ++c) {
            BuiltGadget& gb = gadgets.at({i, c});
            int e = b.edge(prev, gb.in_x2, cap(i), cls(i));
            site_of(i, c).left = e;
            path.push_back(e);
            if (yes) path.insert(path.end(), gb.horiz.begin(), gb.horiz.end());
            prev = gb.out_y2;
        }
        int e = b.edge(prev, sk.corner[i], cap(i), cls(i));
        path.push_back(e);
        if (i > 1) site_of(i, i - 1).right = e;
        // fix up the `right` of interior gadgets: edge into the NEXT gadget
        for (int c = 1; c + 1 < i; ++c) site_of(i, c).right = site_of(i, c + 1).left;
    }

    // columns: corner(j) -> X(j+1,j) -> ... -> X(N,j) -> t_j -> t
    for (int j = 1; j <= N; ++j) {
        int prev = sk.corner[j];
        auto& path = sk.col_path[j];
        for (int r = j + 1; r <= N; ++r) {
            BuiltGadget& gb = gadgets.at({r, j});
            int e = b.edge(prev, gb.in_x1, cap(j), cls(j));
            site_of(r, j).top = e;
            path.push_back(e);
            if (yes) path.insert(path.end(), gb.vert.begin(), gb.vert.end());
            prev = gb.out_y1;
        }
        int e = b.edge(prev, sk.tcol[j], cap(j), cls(j));
        path.push_back(e);
        if (j < N) site_of(N, j).bottom = e;
        for (int r = j + 1; r < N; ++r) site_of(r, j).bottom = site_of(r + 1, j).top;
        path.push_back(b.edge(sk.tcol[j], sk.sink, cap(j), cls(j)));
    }
    return sk;
}

Routing grid_canonical(const GridSkeleton& sk, int N) {
    Routing canon;
    for (int i = 1; i <= N; ++i) {
        Path p;
        p.edges = sk.row_path[i];
        p.edges.insert(p.edges.end(), sk.col_path[i].begin(), sk.col_path[i].end());
        canon.paths.emplace(i - 1, std::move(p));
    }
    return canon;
}

void fill_common_meta(GridMetadata& meta, const FamilySpec& spec) {
    meta.gadget = spec.gadget;
    meta.flavor = spec.flavor;
    meta.orientation = spec.orientation;
    meta.params["gadget"] = spec.gadget == GadgetKind::yes ? "yes" : "no";
    meta.params["flavor"] = spec.flavor == Flavor::unsplittable ? "unsplittable"
                            : spec.flavor == Flavor::confluent  ? "confluent"
                                                                : "priority";
    meta.params["dir"] =
        spec.orientation == Orientation::directed ? "directed" : "undirected";
}

SubstStyle pick_style(const FamilySpec& spec, DisjointnessModel& model) {
    if (spec.flavor == Flavor::confluent) {
        model = DisjointnessModel::node;
        return SubstStyle::confluent;
    }
    if (spec.orientation == Orientation::directed && spec.flavor == Flavor::unsplittable) {
        model = DisjointnessModel::node;
        return SubstStyle::node_split;
    }
    model = DisjointnessModel::edge;
    return SubstStyle::edge_caps;
}

}  // namespace

GenResult gen_half_grid(int N, const Rational& delta, const FamilySpec& spec) {
    if (N < 2) throw std::invalid_argument("half-grid needs N >= 2");
    if (delta.sign() <= 0) throw std::invalid_argument("half-grid needs delta > 0");
    if (spec.flavor == Flavor::priority)
        throw std::invalid_argument("use the priority half-grid generator for priority flavor");

    GridConfig cfg;
    cfg.N = N;
    cfg.spec = spec;
    cfg.style = pick_style(spec, cfg.model);
    cfg.capval.assign(N + 1, Rational(0));
    for (int i = 1; i <= N; ++i) cfg.capval[i] = Rational(1) + Rational(i) * delta;

    Builder b(spec.orientation,
              spec.flavor == Flavor::confluent ? CapacityModel::node : CapacityModel::edge);
    GridSkeleton sk = build_grid(b, cfg);

    std::vector<Demand> demands(N);
    for (int i = 1; i <= N; ++i) demands[i - 1] = Demand{sk.s[i], cfg.capval[i], {}, 0};

    GenResult out;
    out.instance = b.finish(sk.sink, std::move(demands));
    GridMetadata& meta = out.meta;
    meta.family = "half-grid";
    fill_common_meta(meta, spec);
    meta.params["n"] = std::to_string(N);
    meta.params["delta"] = delta.str();
    meta.sites = sk.sites;
    meta.yes_card = Rational(N);
    meta.yes_tput = Rational(0);
    for (int i = 1; i <= N; ++i) meta.yes_tput += cfg.capval[i];
    meta.no_card = Rational(1);
    meta.no_tput = cfg.capval[N];
    meta.yes_value = meta.yes_card;
    meta.no_value = meta.no_card;
    if (spec.gadget == GadgetKind::yes) {
        meta.has_canonical = true;
        if (spec.flavor == Flavor::confluent) {
            meta.canonical_is_confluent = true;
            Routing paths = grid_canonical(sk, N);
            ConfluentRouting cr;
            for (const auto& [id, path] : paths.paths) {
                cr.routed.insert(id);
                int cur = out.instance.demands[id].source;
                for (int e : path.edges) {
                    cr.next_hop.emplace(cur, e);
                    cur = out.instance.graph.other_end(e, cur);
                }
            }
            meta.canonical_confluent = std::move(cr);
        } else {
            meta.canonical_paths = grid_canonical(sk, N);
        }
    }
    return out;
}

GenResult gen_priority_half_grid(int N, const FamilySpec& spec) {
    if (N < 2) throw std::invalid_argument("priority half-grid needs N >= 2");
    if (spec.flavor != Flavor::priority)
        throw std::invalid_argument("priority half-grid is priority-flavored");

    GridConfig cfg;
    cfg.N = N;
    cfg.spec = spec;
    cfg.priority_mode = true;
    cfg.style = SubstStyle::edge_caps;
    cfg.model = DisjointnessModel::edge;
    cfg.capval.assign(N + 1, Rational(1));

    Builder b(spec.orientation, CapacityModel::edge);
    GridSkeleton sk = build_grid(b, cfg);

    std::vector<Demand> demands(N);
    for (int i = 1; i <= N; ++i)
        demands[i - 1] = Demand{sk.s[i], Rational(1), {}, rank_class(N, i)};

    GenResult out;
    out.instance = b.finish(sk.sink, std::move(demands));
    GridMetadata& meta = out.meta;
    meta.family = "priority-half-grid";
    fill_common_meta(meta, spec);
    meta.params["n"] = std::to_string(N);
    meta.sites = sk.sites;
    meta.yes_card = meta.yes_tput = Rational(N);
    meta.no_card = meta.no_tput = Rational(1);
    meta.yes_value = meta.yes_card;
    meta.no_value = meta.no_card;
    if (spec.gadget == GadgetKind::yes) {
        meta.has_canonical = true;
        meta.canonical_paths = grid_canonical(sk, N);
    }
    return out;
}

GenResult gen_nba_half_grid(int N, long packets, const FamilySpec& spec) {
    if (N < 2) throw std::invalid_argument("nba half-grid needs N >= 2");
    if (spec.flavor != Flavor::confluent)
        throw std::invalid_argument("nba half-grid is confluent-flavored");

    // Rows bottom to top, columns right to left; row i crosses the smaller
    // columns i+1..N on its way right and column i descends through rows
    // i-1..1. Everything rank i carries capacity 1/i.
    std::vector<Rational> w(N + 1, Rational(0));
    for (int i = 1; i <= N; ++i) w[i] = Rational(1) / Rational(i);

    Builder b(spec.orientation, CapacityModel::node);
    GridSkeleton sk;
    sk.s.assign(N + 1, -1);
    sk.corner.assign(N + 1, -1);
    sk.tcol.assign(N + 1, -1);
    sk.row_path.assign(N + 1, {});
    sk.col_path.assign(N + 1, {});

    Rational harmonic;
    for (int i = 1; i <= N; ++i) harmonic += w[i];

    for (int i = 1; i <= N; ++i) {
        sk.s[i] = b.node(w[i]);
        sk.corner[i] = b.node(w[i]);
        sk.tcol[i] = b.node(w[i]);
    }
    sk.sink = b.node(harmonic);

    std::map<std::pair<int, int>, BuiltGadget> gadgets;  // (row a, col b), a < b
    for (int a = 1; a < N; ++a) {
        for (int bcol = a + 1; bcol <= N; ++bcol) {
            Rational alpha = w[bcol], beta = w[a];
            Gadget gd = make_gadget(spec.gadget, DisjointnessModel::node, alpha, beta);
            BuiltGadget built = build_gadget(b, gd, SubstStyle::confluent, alpha, beta, 0, 0,
                                             beta, Rational(1));
            GadgetSite site;
            site.row = a;
            site.col = bcol;
            site.nodes = built.nodes;
            site.x1 = built.in_x1;
            site.y1 = built.out_y1;
            site.x2 = built.in_x2;
            site.y2 = built.out_y2;
            sk.sites.push_back(site);
            gadgets.emplace(std::make_pair(a, bcol), std::move(built));
        }
    }
    auto site_of = [&](int r, int c) -> GadgetSite& {
        for (GadgetSite& s : sk.sites)
            if (s.row == r && s.col == c) return s;
        throw std::logic_error("missing site");
    };
    const bool yes = spec.gadget == GadgetKind::yes;

    // rows: s_i -> X(i,N) -> X(i,N-1) -> ... -> X(i,i+1) -> corner(i)
    for (int i = 1; i <= N; ++i) {
        int prev = sk.s[i];
        auto& path = sk.row_path[i];
        for (int c = N; c > i; --c) {
            BuiltGadget& gb = gadgets.at({i, c});
            int e = b.edge(prev, gb.in_x2);
            site_of(i, c).left = e;
            path.push_back(e);
            if (yes) path.insert(path.end(), gb.horiz.begin(), gb.horiz.end());
            prev = gb.out_y2;
        }
        int e = b.edge(prev, sk.corner[i]);
        path.push_back(e);
        if (i < N) site_of(i, i + 1).right = e;
        for (int c = N; c > i + 1; --c) site_of(i, c).right = site_of(i, c - 1).left;
    }
    // columns: corner(j) -> X(j-1,j) -> ... -> X(1,j) -> t_j -> t
    for (int j = 1; j <= N; ++j) {
        int prev = sk.corner[j];
        auto& path = sk.col_path[j];
        for (int r = j - 1; r >= 1; --r) {
            BuiltGadget& gb = gadgets.at({r, j});
            int e = b.edge(prev, gb.in_x1);
            site_of(r, j).top = e;
            path.push_back(e);
            if (yes) path.insert(path.end(), gb.vert.begin(), gb.vert.end());
            prev = gb.out_y1;
        }
        int e = b.edge(prev, sk.tcol[j]);
        path.push_back(e);
        if (j > 1) site_of(1, j).bottom = e;
        for (int r = j - 1; r > 1; --r) site_of(r, j).bottom = site_of(r - 1, j).top;
        path.push_back(b.edge(sk.tcol[j], sk.sink));
    }

    int n = b.g.node_count();
    if (packets == 0) packets = n + 1;  // smallest count making every packet < 1/n
    if (Rational(1, packets) > w[N])
        throw std::invalid_argument("packet count too small: packet size exceeds u_min");

    std::vector<Demand> demands;
    demands.reserve(static_cast<size_t>(N) * packets);
    for (int i = 1; i <= N; ++i) {
        Rational size = w[i] / Rational(packets);
        for (long p = 0; p < packets; ++p) demands.push_back(Demand{sk.s[i], size, {}, 0});
    }

    GenResult out;
    out.instance = b.finish(sk.sink, std::move(demands));
    GridMetadata& meta = out.meta;
    meta.family = "nba-half-grid";
    fill_common_meta(meta, spec);
    meta.params["n"] = std::to_string(N);
    meta.params["packets"] = std::to_string(packets);
    meta.sites = sk.sites;
    meta.yes_card = Rational(static_cast<long>(N) * packets);
    meta.yes_tput = harmonic;
    meta.no_card = meta.yes_card;  // cardinality carries no gap here
    meta.no_tput = Rational(2);
    meta.yes_value = meta.yes_tput;
    meta.no_value = meta.no_tput;
    if (yes) {
        meta.has_canonical = true;
        meta.canonical_is_confluent = true;
        ConfluentRouting cr;
        for (size_t id = 0; id < out.instance.demands.size(); ++id) cr.routed.insert(id);
        for (int i = 1; i <= N; ++i) {
            std::vector<int> edges = sk.row_path[i];
            edges.insert(edges.end(), sk.col_path[i].begin(), sk.col_path[i].end());
            int cur = sk.s[i];
            for (int e : edges) {
                cr.next_hop.emplace(cur, e);
                cur = out.instance.graph.other_end(e, cur);
            }
        }
        meta.canonical_confluent = std::move(cr);
    }
    return out;
}

namespace {

// One Azar-Regev chain: blocks k = 1..q with demand base*2^(k-1) at x2(k),
// a high parallel edge (capacity the block's demand) and a low parallel edge
// (capacity the total upstream demand, absent for block 1) into the next
// block's x1, the last pair landing on `exit_node`. Appends demands in block
// order and returns per-demand canonical path pieces ending at exit_node.
struct ArChainResult {
    std::vector<std::vector<int>> canon;  // per block demand
    std::vector<GadgetSite> sites;
};

ArChainResult build_ar_chain(Builder& b, int path_index, int q, const Rational& base,
                             int exit_node, const FamilySpec& spec,
                             std::vector<Demand>& demands) {
    ArChainResult res;
    std::vector<BuiltGadget> blocks(q + 1);
    std::vector<Rational> dsize(q + 1);
    DisjointnessModel model = spec.orientation == Orientation::directed
                                  ? DisjointnessModel::node
                                  : DisjointnessModel::edge;
    SubstStyle style = spec.orientation == Orientation::directed ? SubstStyle::node_split
                                                                 : SubstStyle::edge_caps;
    for (int k = 1; k <= q; ++k) {
        dsize[k] = base * Rational::pow2(k - 1);
        Rational beta = dsize[k];
        Rational alpha = k == 1 ? beta : dsize[k] - base;  // upstream total; clamp block 1
        Gadget gd = make_gadget(spec.gadget, model, alpha, beta);
        blocks[k] = build_gadget(b, gd, style, alpha, beta, 0, 0, beta, Rational(1));
        GadgetSite site;
        site.row = -path_index;
        site.col = k;
        site.nodes = blocks[k].nodes;
        site.x1 = blocks[k].in_x1;
        site.y1 = blocks[k].out_y1;
        site.x2 = blocks[k].in_x2;
        site.y2 = blocks[k].out_y2;
        res.sites.push_back(site);
    }
    // wiring: high edge y2(k) -> x1(k+1), low edge y1(k) -> x1(k+1)
    std::vector<int> high(q + 1, -1), low(q + 1, -1);
    for (int k = 1; k <= q; ++k) {
        int to = k < q ? blocks[k + 1].in_x1 : exit_node;
        high[k] = b.edge(blocks[k].out_y2, to, dsize[k]);
        res.sites[k - 1].right = high[k];
        if (k > 1) {
            low[k] = b.edge(blocks[k].out_y1, to, dsize[k] - base);
            res.sites[k - 1].bottom = low[k];
        }
        if (k < q) {
            res.sites[k].top = high[k];
            res.sites[k].left = low[k] == -1 ? -1 : low[k];
        }
    }
    for (int k = 1; k <= q; ++k) {
        demands.push_back(Demand{blocks[k].in_x2, dsize[k], {}, 0});
        if (spec.gadget == GadgetKind::yes) {
            std::vector<int> canon = blocks[k].horiz;
            canon.push_back(high[k]);
            for (int b2 = k + 1; b2 <= q; ++b2) {
                canon.insert(canon.end(), blocks[b2].vert.begin(), blocks[b2].vert.end());
                canon.push_back(low[b2]);
            }
            res.canon.push_back(std::move(canon));
        }
    }
    return res;
}

}  // namespace

GenResult gen_azar_regev(int ell, const FamilySpec& spec) {
    if (ell < 2) throw std::invalid_argument("azar-regev needs ell >= 2");
    if (spec.flavor != Flavor::unsplittable)
        throw std::invalid_argument("azar-regev is unsplittable-flavored");

    Builder b(spec.orientation, CapacityModel::edge);
    int sink = b.node();
    std::vector<Demand> demands;
    ArChainResult chain = build_ar_chain(b, 1, ell - 1, Rational(1), sink, spec, demands);

    GenResult out;
    out.instance = b.finish(sink, std::move(demands));
    GridMetadata& meta = out.meta;
    meta.family = "azar-regev";
    fill_common_meta(meta, spec);
    meta.params["ell"] = std::to_string(ell);
    meta.sites = chain.sites;
    meta.yes_card = Rational(ell - 1);
    meta.yes_tput = Rational::pow2(ell - 1) - Rational(1);
    meta.no_card = Rational(1);
    meta.no_tput = Rational::pow2(ell - 2);
    meta.yes_value = meta.yes_card;
    meta.no_value = meta.no_card;
    if (spec.gadget == GadgetKind::yes) {
        meta.has_canonical = true;
        for (size_t i = 0; i < chain.canon.size(); ++i)
            meta.canonical_paths.paths.emplace(static_cast<int>(i), Path{chain.canon[i]});
    }
    return out;
}

GenResult gen_grid_paths(int p, int q, const FamilySpec& spec) {
    if (p < 2 || q < 1) throw std::invalid_argument("grid-paths needs p >= 2, q >= 1");
    if (spec.flavor != Flavor::unsplittable)
        throw std::invalid_argument("grid-paths is unsplittable-flavored");

    GridConfig cfg;
    cfg.N = p;
    cfg.spec = spec;
    cfg.style = pick_style(spec, cfg.model);
    cfg.capval.assign(p + 1, Rational(0));
    for (int i = 1; i <= p; ++i)
        cfg.capval[i] = Rational::pow2((i - 1) * q) * (Rational::pow2(q) - Rational(1));

    Builder b(spec.orientation, CapacityModel::edge);
    GridSkeleton sk = build_grid(b, cfg);

    std::vector<Demand> demands;
    std::vector<ArChainResult> chains;
    for (int i = 1; i <= p; ++i)
        chains.push_back(
            build_ar_chain(b, i, q, Rational::pow2((i - 1) * q), sk.s[i], spec, demands));

    GenResult out;
    out.instance = b.finish(sk.sink, std::move(demands));
    GridMetadata& meta = out.meta;
    meta.family = "grid-paths";
    fill_common_meta(meta, spec);
    meta.params["p"] = std::to_string(p);
    meta.params["q"] = std::to_string(q);
    meta.params["spread"] = Rational::pow2(static_cast<unsigned long>(p) * q - 1).str();
    meta.sites = sk.sites;
    for (int i = 1; i <= p; ++i)
        meta.sites.insert(meta.sites.end(), chains[i - 1].sites.begin(),
                          chains[i - 1].sites.end());
    meta.yes_card = Rational(static_cast<long>(p) * q);
    meta.yes_tput = Rational(0);
    for (int i = 1; i <= p; ++i) meta.yes_tput += cfg.capval[i];
    meta.no_card = Rational(1);
    meta.no_tput = Rational::pow2(static_cast<unsigned long>(p) * q - 1);
    meta.yes_value = meta.yes_card;
    meta.no_value = meta.no_card;
    if (spec.gadget == GadgetKind::yes) {
        meta.has_canonical = true;
        int id = 0;
        for (int i = 1; i <= p; ++i) {
            for (int k = 1; k <= q; ++k, ++id) {
                std::vector<int> edges = chains[i - 1].canon[k - 1];
                edges.insert(edges.end(), sk.row_path[i].begin(), sk.row_path[i].end());
                edges.insert(edges.end(), sk.col_path[i].begin(), sk.col_path[i].end());
                meta.canonical_paths.paths.emplace(id, Path{std::move(edges)});
            }
        }
    }
    return out;
}

const Routing& canonical_routing(const GridMetadata& meta) {
    if (!meta.has_canonical || meta.canonical_is_confluent)
        throw std::invalid_argument("no canonical path routing for this metadata");
    return meta.canonical_paths;
}

const ConfluentRouting& canonical_confluent_routing(const GridMetadata& meta) {
    if (!meta.has_canonical || !meta.canonical_is_confluent)
        throw std::invalid_argument("no canonical confluent routing for this metadata");
    return meta.canonical_confluent;
}

}  // namespace flowlab
