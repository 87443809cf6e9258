#pragma once

#include <vector>

#include "flowlab/instance.hpp"
#include "flowlab/metadata.hpp"

namespace flowlab {

struct CrossingRecord {
    int demand_a = -1, demand_b = -1;  // a < b
    int row = 0, col = 0;
    bool operator==(const CrossingRecord&) const = default;
};

// Every demand pair whose paths cross at a grid crossing: one path passes
// through horizontally (uses the site's left and right boundary edges), the
// other vertically (top and bottom). Bending or touching at a site does not
// count. Throws std::invalid_argument on metadata/instance mismatch.
std::vector<CrossingRecord> crossing_pairs(const GridMetadata& meta, const Instance& inst,
                                           const Routing& r);

}  // namespace flowlab
