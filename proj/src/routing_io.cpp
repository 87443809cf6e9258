#include "flowlab/routing_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace flowlab {

namespace {

long to_id(const std::string& tok) {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size() || v < 1) throw std::runtime_error("bad id '" + tok + "' in routing file");
    return v;
}

}  // namespace

RoutingFile read_routing(std::istream& in) {
    Routing paths;
    ConfluentRouting conf;
    bool saw_nh = false, saw_path_edges = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream iss(line.substr(0, line.find('#')));
        std::string kind;
        if (!(iss >> kind)) continue;
        if (kind == "r") {
            std::string tok;
            if (!(iss >> tok)) throw std::runtime_error("line " + std::to_string(lineno) + ": r line without demand id");
            int id = static_cast<int>(to_id(tok)) - 1;
            Path p;
            while (iss >> tok) p.edges.push_back(static_cast<int>(to_id(tok)) - 1);
            if (!p.edges.empty()) saw_path_edges = true;
            if (paths.paths.count(id) || conf.routed.count(id))
                throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate demand id");
            paths.paths.emplace(id, p);
            conf.routed.insert(id);
        } else if (kind == "nh") {
            std::string vtok, etok;
            if (!(iss >> vtok >> etok))
                throw std::runtime_error("line " + std::to_string(lineno) + ": nh line needs node and edge");
            int v = static_cast<int>(to_id(vtok)) - 1;
            int e = static_cast<int>(to_id(etok)) - 1;
            if (!conf.next_hop.emplace(v, e).second)
                throw std::runtime_error("line " + std::to_string(lineno) + ": node " + vtok +
                                         " has two next hops");
            saw_nh = true;
        } else {
            throw std::runtime_error("line " + std::to_string(lineno) + ": unknown routing line '" +
                                     kind + "'");
        }
    }
    if (saw_nh && saw_path_edges)
        throw std::runtime_error("routing file mixes explicit paths with next hops");
    RoutingFile rf;
    if (saw_nh)
        rf.confluent = std::move(conf);
    else
        rf.paths = std::move(paths);
    return rf;
}

RoutingFile read_routing_text(const std::string& text) {
    std::istringstream iss(text);
    return read_routing(iss);
}

std::string serialize_routing(const Routing& r) {
    std::ostringstream os;
    for (const auto& [id, path] : r.paths) {
        os << "r " << id + 1;
        for (int e : path.edges) os << ' ' << e + 1;
        os << '\n';
    }
    return os.str();
}

std::string serialize_routing(const ConfluentRouting& r) {
    std::ostringstream os;
    for (int id : r.routed) os << "r " << id + 1 << '\n';
    for (const auto& [v, e] : r.next_hop) os << "nh " << v + 1 << ' ' << e + 1 << '\n';
    return os.str();
}

std::string format_report(const FeasibilityReport& rep) {
    std::ostringstream os;
    for (const Violation& v : rep.violations) {
        os << "VIOLATION " << v.kind << ' ' << v.element + 1 << " load=" << v.load
           << " cap=" << v.cap;
        if (!v.detail.empty()) os << " # " << v.detail;
        os << '\n';
    }
    return os.str();
}

}  // namespace flowlab
