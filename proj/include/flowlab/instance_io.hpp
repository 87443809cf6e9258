#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "flowlab/instance.hpp"

namespace flowlab {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Line-oriented instance format ('#' starts a comment, ids are 1-based):
//   p ssf <directed|undirected> <edge|node> <n> <m> <k>
//   a <edge-id> <u> <v> [<capacity>] [prio <class>]   capacity only in edge model
//   c <node-id> <capacity>                            node model only, one per node
//   t <node-id>
//   d <demand-id> <source> <size> [profit <rational>] [prio <class>]
// Rationals are integers or p/q. Throws ParseError with the offending line;
// the returned instance additionally passed validate().
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);

// Deterministic canonical form: sections in header/a/c/t/d order, ids
// ascending, rationals never decimal. parse(serialize(i)) == i.
std::string serialize_instance(const Instance& inst);

}  // namespace flowlab
