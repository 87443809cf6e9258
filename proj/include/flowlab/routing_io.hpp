#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "flowlab/routing.hpp"

namespace flowlab {

// Routing file: `r <demand-id> <edge-id>...` per routed demand. Confluent
// routings use `nh <node-id> <edge-id>` per selected hop plus bare
// `r <demand-id>` lines for the routed set. Ids are 1-based, '#' comments.
struct RoutingFile {
    std::optional<Routing> paths;
    std::optional<ConfluentRouting> confluent;
};

RoutingFile read_routing(std::istream& in);
RoutingFile read_routing_text(const std::string& text);

std::string serialize_routing(const Routing& r);
std::string serialize_routing(const ConfluentRouting& r);

// One `VIOLATION <kind> <id> load=<rat> cap=<rat>` line per violation.
std::string format_report(const FeasibilityReport& rep);

}  // namespace flowlab
