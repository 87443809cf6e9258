#pragma once

#include <vector>

#include "flowlab/graph.hpp"
#include "flowlab/rational.hpp"

namespace flowlab {

enum class GadgetKind { yes, no };
enum class DisjointnessModel { edge, node };
enum class CapClass { alpha, beta };

// A 2-disjoint-paths gadget: terminal-labeled fragment with two capacity
// classes. YES gadgets admit an x1->y1 path and an x2->y2 path, disjoint in
// the gadget's model, with the x2->y2 path confined to beta-class edges.
// NO gadgets admit no such pair even if the x1->y1 path ignores classes.
struct Gadget {
    Graph graph;  // undirected fragment; builders orient it as needed
    int x1 = -1, y1 = -1, x2 = -1, y2 = -1;
    std::vector<CapClass> edge_class;
    // Intended flow orientation per edge (x-terminals toward y-terminals);
    // directed hosts instantiate edges this way round.
    std::vector<Edge> oriented;
    GadgetKind kind = GadgetKind::yes;
    DisjointnessModel model = DisjointnessModel::edge;
    Rational alpha, beta;

    Rational class_value(CapClass c) const { return c == CapClass::alpha ? alpha : beta; }
};

// The built-in explicit gadgets (beta >= alpha > 0 required):
//   YES(edge): star x1-c, c-y1 (alpha) and x2-c, c-y2 (beta); the two paths
//              share only the node c.
//   NO(edge):  bowtie x1-a (alpha), x2-a (beta), a-b (beta), b-y1 (alpha),
//              b-y2 (beta); a-b is a cut edge every pair must share.
//   YES(node): two vertex-disjoint 2-edge paths x1-u-y1 (alpha), x2-v-y2 (beta).
//   NO(node):  star through a single center, which every pair must share.
Gadget make_gadget(GadgetKind kind, DisjointnessModel model, const Rational& alpha,
                   const Rational& beta);

// Brute-force disjoint-pair search used by tests and sanity checks: does some
// x1->y1 path (any class) coexist with an x2->y2 path over beta edges only,
// disjoint in the gadget's model?
bool gadget_has_disjoint_pair(const Gadget& g);

}  // namespace flowlab
