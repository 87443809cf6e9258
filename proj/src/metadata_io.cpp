#include "flowlab/metadata_io.hpp"

#include <istream>
#include <sstream>

namespace flowlab {

namespace {

std::string join_params(const std::map<std::string, std::string>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ',';
        out += k + ":" + v;
    }
    return out.empty() ? "-" : out;
}

std::map<std::string, std::string> split_params(const std::string& text) {
    std::map<std::string, std::string> out;
    if (text == "-") return out;
    std::istringstream iss(text);
    std::string item;
    while (std::getline(iss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::runtime_error("bad params item '" + item + "'");
        out[item.substr(0, colon)] = item.substr(colon + 1);
    }
    return out;
}

std::string kv_value(const std::string& tok, const char* key) {
    std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw std::runtime_error("expected '" + prefix + "...', got '" + tok + "'");
    return tok.substr(prefix.size());
}

Rational kv_rat(const std::string& tok, const char* key) {
    auto r = Rational::parse(kv_value(tok, key));
    if (!r) throw std::runtime_error("bad rational in '" + tok + "'");
    return *r;
}

}  // namespace

std::string serialize_metadata(const GridMetadata& meta) {
    std::ostringstream os;
    os << "meta family=" << meta.family << " params=" << join_params(meta.params)
       << " yes_value=" << meta.yes_value << " no_value=" << meta.no_value << '\n';
    os << "bounds yes_card=" << meta.yes_card << " yes_tput=" << meta.yes_tput
       << " no_card=" << meta.no_card << " no_tput=" << meta.no_tput << '\n';
    for (const GadgetSite& s : meta.sites) {
        os << "gadget " << s.row << ' ' << s.col << " nodes=";
        for (size_t i = 0; i < s.nodes.size(); ++i) {
            if (i) os << ',';
            os << s.nodes[i] + 1;
        }
        os << " x1=" << s.x1 + 1 << " y1=" << s.y1 + 1 << " x2=" << s.x2 + 1
           << " y2=" << s.y2 + 1 << " top=" << s.top + 1 << " bottom=" << s.bottom + 1
           << " left=" << s.left + 1 << " right=" << s.right + 1 << '\n';
    }
    return os.str();
}

GridMetadata read_metadata(std::istream& in) {
    GridMetadata meta;
    std::string line;
    bool have_meta = false;
    while (std::getline(in, line)) {
        std::istringstream iss(line.substr(0, line.find('#')));
        std::string kind;
        if (!(iss >> kind)) continue;
        if (kind == "meta") {
            std::string fam, params, yv, nv;
            if (!(iss >> fam >> params >> yv >> nv)) throw std::runtime_error("bad meta line");
            meta.family = kv_value(fam, "family");
            meta.params = split_params(kv_value(params, "params"));
            meta.yes_value = kv_rat(yv, "yes_value");
            meta.no_value = kv_rat(nv, "no_value");
            have_meta = true;
            auto it = meta.params.find("gadget");
            if (it != meta.params.end())
                meta.gadget = it->second == "no" ? GadgetKind::no : GadgetKind::yes;
            it = meta.params.find("flavor");
            if (it != meta.params.end())
                meta.flavor = it->second == "confluent"    ? Flavor::confluent
                              : it->second == "priority" ? Flavor::priority
                                                           : Flavor::unsplittable;
            it = meta.params.find("dir");
            if (it != meta.params.end())
                meta.orientation = it->second == "directed" ? Orientation::directed
                                                            : Orientation::undirected;
        } else if (kind == "bounds") {
            std::string a, b, c, d;
            if (!(iss >> a >> b >> c >> d)) throw std::runtime_error("bad bounds line");
            meta.yes_card = kv_rat(a, "yes_card");
            meta.yes_tput = kv_rat(b, "yes_tput");
            meta.no_card = kv_rat(c, "no_card");
            meta.no_tput = kv_rat(d, "no_tput");
        } else if (kind == "gadget") {
            GadgetSite s;
            std::string tok;
            if (!(iss >> s.row >> s.col)) throw std::runtime_error("bad gadget line");
            while (iss >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) throw std::runtime_error("bad gadget field " + tok);
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "nodes") {
                    std::istringstream ns(val);
                    std::string id;
                    while (std::getline(ns, id, ',')) s.nodes.push_back(std::stoi(id) - 1);
                } else {
                    int v = std::stoi(val) - 1;
                    if (key == "x1") s.x1 = v;
                    else if (key == "y1") s.y1 = v;
                    else if (key == "x2") s.x2 = v;
                    else if (key == "y2") s.y2 = v;
                    else if (key == "top") s.top = v;
                    else if (key == "bottom") s.bottom = v;
                    else if (key == "left") s.left = v;
                    else if (key == "right") s.right = v;
                    else throw std::runtime_error("unknown gadget field " + key);
                }
            }
            meta.sites.push_back(std::move(s));
        } else {
            throw std::runtime_error("unknown metadata line '" + kind + "'");
        }
    }
    if (!have_meta) throw std::runtime_error("metadata file missing meta line");
    return meta;
}

GridMetadata read_metadata_text(const std::string& text) {
    std::istringstream iss(text);
    return read_metadata(iss);
}

}  // namespace flowlab
