#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowlab/gadgets.hpp"
#include "flowlab/routing.hpp"

namespace flowlab {

enum class Flavor { unsplittable, confluent, priority };

// Where a gadget landed in the host instance. Grid crossings carry their
// (row, col) coordinate; Azar-Regev blocks use row = -(path index) and
// col = block index so the two kinds cannot collide.
struct GadgetSite {
    int row = 0, col = 0;
    std::vector<int> nodes;                        // instance node ids
    int x1 = -1, y1 = -1, x2 = -1, y2 = -1;        // terminal entry nodes
    int top = -1, bottom = -1, left = -1, right = -1;  // boundary edge ids, -1 absent
    bool is_grid_crossing() const { return row > 0; }
};

// Everything a consumer needs to interpret a generated instance without
// re-deriving the construction: gadget placement, the intended-optimal
// routing (YES gadgets only) and the value bounds of both gadget kinds.
struct GridMetadata {
    std::string family;
    std::map<std::string, std::string> params;
    GadgetKind gadget = GadgetKind::yes;
    Flavor flavor = Flavor::unsplittable;
    Orientation orientation = Orientation::undirected;
    std::vector<GadgetSite> sites;

    Rational yes_value, no_value;  // headline gap bounds for the family
    Rational yes_card, yes_tput, no_card, no_tput;

    // canonical routing; present only for YES instances
    bool has_canonical = false;
    bool canonical_is_confluent = false;
    Routing canonical_paths;
    ConfluentRouting canonical_confluent;
};

// The intended optimal routing recorded by the generator. Throws
// std::invalid_argument for NO-gadget metadata.
const Routing& canonical_routing(const GridMetadata& meta);
const ConfluentRouting& canonical_confluent_routing(const GridMetadata& meta);

}  // namespace flowlab
