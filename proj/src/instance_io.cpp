#include "flowlab/instance_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace flowlab {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream iss(body);
    std::vector<std::string> tok;
    std::string t;
    while (iss >> t) tok.push_back(t);
    return tok;
}

int parse_id(const std::string& tok, int line, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < 1) throw std::invalid_argument("");
        return static_cast<int>(v);
    } catch (...) {
        throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    }
}

Rational parse_rat(const std::string& tok, int line, const char* what) {
    auto r = Rational::parse(tok);
    if (!r) throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    return *r;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    Instance inst;
    bool have_header = false, have_sink = false;
    int n = 0, m = 0, k = 0;
    int lineno = 0;
    std::vector<bool> edge_seen, demand_seen, node_cap_seen;
    std::string line;

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;

        if (tok[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (tok.size() != 7 || tok[1] != "ssf")
                throw ParseError(lineno, "header must be 'p ssf <dir> <model> <n> <m> <k>'");
            Orientation orient;
            if (tok[2] == "directed") orient = Orientation::directed;
            else if (tok[2] == "undirected") orient = Orientation::undirected;
            else throw ParseError(lineno, "orientation must be directed|undirected");
            if (tok[3] == "edge") inst.model = CapacityModel::edge;
            else if (tok[3] == "node") inst.model = CapacityModel::node;
            else throw ParseError(lineno, "capacity model must be edge|node");
            n = parse_id(tok[4], lineno, "node count");
            auto count = [lineno](const std::string& t, const char* what) {
                try {
                    size_t pos = 0;
                    long v = std::stol(t, &pos);
                    if (pos != t.size() || v < 0) throw std::invalid_argument("");
                    return static_cast<int>(v);
                } catch (...) {
                    throw ParseError(lineno, std::string("bad ") + what + " '" + t + "'");
                }
            };
            m = count(tok[5], "edge count");
            k = count(tok[6], "demand count");
            inst.graph = Graph(n, orient);
            edge_seen.assign(m, false);
            demand_seen.assign(k, false);
            node_cap_seen.assign(n, false);
            inst.capacity.assign(inst.model == CapacityModel::edge ? m : n, Rational(0));
            inst.edge_class.assign(m, 0);
            // demands filled in by 'd' lines
            inst.demands.assign(k, Demand{});
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "missing 'p ssf' header");

        if (tok[0] == "a") {
            size_t base = inst.model == CapacityModel::edge ? 5 : 4;
            if (tok.size() < base) throw ParseError(lineno, "edge line too short");
            int id = parse_id(tok[1], lineno, "edge id");
            if (id > m) throw ParseError(lineno, "edge id exceeds header count");
            if (edge_seen[id - 1]) throw ParseError(lineno, "duplicate edge id");
            int u = parse_id(tok[2], lineno, "node id");
            int v = parse_id(tok[3], lineno, "node id");
            if (u > n || v > n) throw ParseError(lineno, "dangling node id in edge");
            // edges must appear in id order so that graph edge ids line up
            if (id != 1 && !edge_seen[id - 2])
                throw ParseError(lineno, "edge ids must be dense and ascending");
            edge_seen[id - 1] = true;
            inst.graph.add_edge(u - 1, v - 1);
            size_t next = 4;
            if (inst.model == CapacityModel::edge) {
                Rational cap = parse_rat(tok[4], lineno, "capacity");
                if (cap.sign() <= 0) throw ParseError(lineno, "capacity must be positive");
                inst.capacity[id - 1] = cap;
                next = 5;
            }
            while (next < tok.size()) {
                if (tok[next] == "prio" && next + 1 < tok.size()) {
                    inst.edge_class[id - 1] = parse_id(tok[next + 1], lineno, "priority class");
                    inst.has_priorities = true;
                    next += 2;
                } else {
                    throw ParseError(lineno, "unexpected token '" + tok[next] + "'");
                }
            }
            continue;
        }

        if (tok[0] == "c") {
            if (inst.model != CapacityModel::node)
                throw ParseError(lineno, "node capacity line in edge-capacitated instance");
            if (tok.size() != 3) throw ParseError(lineno, "node capacity line must be 'c <id> <cap>'");
            int v = parse_id(tok[1], lineno, "node id");
            if (v > n) throw ParseError(lineno, "dangling node id");
            if (node_cap_seen[v - 1]) throw ParseError(lineno, "duplicate node capacity");
            Rational cap = parse_rat(tok[2], lineno, "capacity");
            if (cap.sign() <= 0) throw ParseError(lineno, "capacity must be positive");
            node_cap_seen[v - 1] = true;
            inst.capacity[v - 1] = cap;
            continue;
        }

        if (tok[0] == "t") {
            if (have_sink) throw ParseError(lineno, "duplicate sink line");
            if (tok.size() != 2) throw ParseError(lineno, "sink line must be 't <id>'");
            int v = parse_id(tok[1], lineno, "node id");
            if (v > n) throw ParseError(lineno, "dangling node id for sink");
            inst.sink = v - 1;
            have_sink = true;
            continue;
        }

        if (tok[0] == "d") {
            if (tok.size() < 4) throw ParseError(lineno, "demand line too short");
            int id = parse_id(tok[1], lineno, "demand id");
            if (id > k) throw ParseError(lineno, "demand id exceeds header count");
            if (demand_seen[id - 1]) throw ParseError(lineno, "duplicate demand id");
            demand_seen[id - 1] = true;
            Demand d;
            int src = parse_id(tok[2], lineno, "node id");
            if (src > n) throw ParseError(lineno, "dangling node id in demand");
            d.source = src - 1;
            d.size = parse_rat(tok[3], lineno, "demand size");
            if (d.size.sign() <= 0) throw ParseError(lineno, "demand size must be positive");
            size_t next = 4;
            while (next < tok.size()) {
                if (tok[next] == "profit" && next + 1 < tok.size()) {
                    d.profit = parse_rat(tok[next + 1], lineno, "profit");
                    next += 2;
                } else if (tok[next] == "prio" && next + 1 < tok.size()) {
                    d.prio_class = parse_id(tok[next + 1], lineno, "priority class");
                    inst.has_priorities = true;
                    next += 2;
                } else {
                    throw ParseError(lineno, "unexpected token '" + tok[next] + "'");
                }
            }
            inst.demands[id - 1] = d;
            continue;
        }

        throw ParseError(lineno, "unknown line type '" + tok[0] + "'");
    }

    if (!have_header) throw ParseError(lineno, "missing 'p ssf' header");
    if (!have_sink) throw ParseError(lineno, "missing sink line");
    for (int e = 0; e < m; ++e)
        if (!edge_seen[e]) throw ParseError(lineno, "edge " + std::to_string(e + 1) + " missing");
    for (int i = 0; i < k; ++i)
        if (!demand_seen[i])
            throw ParseError(lineno, "demand " + std::to_string(i + 1) + " missing");
    if (inst.model == CapacityModel::node)
        for (int v = 0; v < n; ++v)
            if (!node_cap_seen[v])
                throw ParseError(lineno, "node " + std::to_string(v + 1) + " missing capacity");
    if (!inst.has_priorities) inst.edge_class.clear();

    std::vector<std::string> diags = validate(inst);
    if (!diags.empty()) throw ParseError(lineno, "semantic error: " + diags.front());
    return inst;
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_instance(iss);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    const Graph& g = inst.graph;
    os << "p ssf " << (g.directed() ? "directed" : "undirected") << ' '
       << (inst.model == CapacityModel::edge ? "edge" : "node") << ' ' << g.node_count() << ' '
       << g.edge_count() << ' ' << inst.demands.size() << '\n';
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        os << "a " << e + 1 << ' ' << ed.u + 1 << ' ' << ed.v + 1;
        if (inst.model == CapacityModel::edge) os << ' ' << inst.capacity[e];
        if (inst.has_priorities) os << " prio " << inst.edge_class[e];
        os << '\n';
    }
    if (inst.model == CapacityModel::node)
        for (int v = 0; v < g.node_count(); ++v)
            os << "c " << v + 1 << ' ' << inst.capacity[v] << '\n';
    os << "t " << inst.sink + 1 << '\n';
    for (size_t i = 0; i < inst.demands.size(); ++i) {
        const Demand& d = inst.demands[i];
        os << "d " << i + 1 << ' ' << d.source + 1 << ' ' << d.size;
        if (d.profit) os << " profit " << *d.profit;
        if (d.prio_class > 0) os << " prio " << d.prio_class;
        os << '\n';
    }
    return os.str();
}

}  // namespace flowlab
