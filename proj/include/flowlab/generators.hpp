#pragma once

#include "flowlab/instance.hpp"
#include "flowlab/metadata.hpp"

namespace flowlab {

// Flavor, orientation and gadget kind for a generated family. Numeric
// parameters are operation arguments. Supported combinations:
//   half-grid:          unsplittable | confluent, both orientations
//   nba-half-grid:      confluent, both orientations
//   azar-regev:         unsplittable, both orientations
//   grid-paths:         unsplittable, both orientations
//   priority-half-grid: priority, both orientations
// Undirected unsplittable and priority instances use edge-disjointness
// gadgets carrying their class capacities; confluent instances use
// node-disjointness gadgets with subdivided edges and node capacities on the
// terminals; directed unsplittable instances use node-disjointness gadgets
// with uniform internal capacity and node splitting.
struct FamilySpec {
    Flavor flavor = Flavor::unsplittable;
    Orientation orientation = Orientation::undirected;
    GadgetKind gadget = GadgetKind::yes;
};

struct GenResult {
    Instance instance;
    GridMetadata meta;
};

// Triangular half-grid with demand c_i = 1 + i*delta at s_i, row/column i
// capacity c_i and a gadget at each of the N(N-1)/2 degree-4 crossings.
GenResult gen_half_grid(int N, const Rational& delta, const FamilySpec& spec);

// Harmonic half-grid under the no-bottleneck assumption: row/column i has
// capacity 1/i and s_i holds `packets` equal packets totalling 1/i
// (packets = 0 picks the smallest count that makes every packet < 1/n).
GenResult gen_nba_half_grid(int N, long packets, const FamilySpec& spec);

// Chain of ell-1 gadget blocks with doubling demands 2^(j-1) and paired
// high/low parallel edges out of each block.
GenResult gen_azar_regev(int ell, const FamilySpec& spec);

// p Azar-Regev paths with q demands each feeding a p x p half-grid whose
// hooked path i carries capacity tau_i = 2^((i-1)q) * (2^q - 1).
GenResult gen_grid_paths(int p, int q, const FamilySpec& spec);

// Half-grid with unit capacities and demands; magnitudes become priority
// classes (larger original capacity = better class, class 1 best).
GenResult gen_priority_half_grid(int N, const FamilySpec& spec);

}  // namespace flowlab
