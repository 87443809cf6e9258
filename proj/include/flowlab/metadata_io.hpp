#pragma once

#include <iosfwd>
#include <string>

#include "flowlab/metadata.hpp"

namespace flowlab {

// Sidecar metadata file:
//   meta family=<name> params=<k:v,...> yes_value=<rat> no_value=<rat>
//   bounds yes_card=<rat> yes_tput=<rat> no_card=<rat> no_tput=<rat>
//   gadget <row> <col> nodes=<id,...> x1= y1= x2= y2= top= bottom= left= right=
// Node/edge ids are 1-based; absent boundary edges are written as 0. The
// canonical routing lives in its own routing file, not here.
std::string serialize_metadata(const GridMetadata& meta);
GridMetadata read_metadata(std::istream& in);
GridMetadata read_metadata_text(const std::string& text);

}  // namespace flowlab
