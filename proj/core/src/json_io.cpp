#include "cfock/json_io.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>
#include <stdexcept>

namespace cfock {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

long to_long(const json& v, const char* what) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) bad(std::string(what) + ": expected an integer");
    return v.get<long>();
}

json laurent_json(const LaurentPoly& p) {
    json o = json::object();
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    for (const auto& [e, c] : p.terms()) {
        if (c >= lo && c <= hi)
            o[std::to_string(e)] = c.convert_to<long long>();
        else
            o[std::to_string(e)] = c.str();
    }
    return o;
}

LaurentPoly laurent_from(const json& o) {
    if (!o.is_object()) bad("Laurent polynomial: expected an object");
    LaurentPoly p;
    for (const auto& [key, value] : o.items()) {
        long exp = 0;
        try {
            std::size_t used = 0;
            exp = std::stol(key, &used);
            if (used != key.size()) bad("Laurent polynomial: bad exponent key");
        } catch (const std::logic_error&) {
            bad("Laurent polynomial: bad exponent key '" + key + "'");
        }
        Int coeff;
        if (value.is_number_integer() || value.is_number_unsigned()) {
            coeff = Int(value.get<long long>());
        } else if (value.is_string()) {
            try {
                coeff = Int(value.get<std::string>());
            } catch (const std::runtime_error&) {
                bad("Laurent polynomial: bad coefficient string");
            }
        } else {
            bad("Laurent polynomial: coefficient must be an integer or decimal string");
        }
        p += LaurentPoly::monomial(coeff, exp);
    }
    return p;
}

json weight_json(const WeightVector& w) {
    json o = json::object();
    o["h"] = w.h;
    o["d"] = w.d;
    return o;
}

WeightVector weight_from(const json& o) {
    if (!o.is_object() || !o.contains("h") || !o.contains("d")) bad("weight: expected {\"h\": [..], \"d\": m}");
    if (!o["h"].is_array()) bad("weight: h must be an array");
    WeightVector w;
    for (const auto& v : o["h"]) w.h.push_back(to_long(v, "weight h entry"));
    w.d = to_long(o["d"], "weight d");
    return w;
}

json diagram_json(const Diagram& y) {
    json o = json::object();
    o["n"] = y.n();
    o["charge"] = y.charge();
    o["columns"] = y.depths();
    return o;
}

Diagram diagram_from(const json& o, std::optional<int> n_hint, std::optional<int> charge_hint) {
    if (!o.is_object()) bad("diagram: expected an object");
    int n;
    if (o.contains("n"))
        n = static_cast<int>(to_long(o["n"], "diagram n"));
    else if (n_hint)
        n = *n_hint;
    else
        bad("diagram: missing n");
    int charge;
    if (o.contains("charge"))
        charge = static_cast<int>(to_long(o["charge"], "diagram charge"));
    else if (charge_hint)
        charge = *charge_hint;
    else
        bad("diagram: missing charge");
    std::vector<int> depths;
    if (o.contains("columns")) {
        if (!o["columns"].is_array()) bad("diagram: columns must be an array");
        for (const auto& v : o["columns"]) depths.push_back(static_cast<int>(to_long(v, "diagram column")));
    }
    return Diagram(n, charge, std::move(depths));
}

json combination_json(const Combination& v) {
    json arr = json::array();
    for (const auto& [y, c] : v.terms()) {
        json item = json::object();
        item["diagram"] = diagram_json(y);
        item["coeff"] = laurent_json(c);
        arr.push_back(std::move(item));
    }
    return arr;
}

json graph_json(const CrystalGraph& g) {
    json o = json::object();
    o["root"] = diagram_json(g.root());
    json nodes = json::array();
    for (const Diagram& y : g.nodes) nodes.push_back(diagram_json(y));
    o["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const CrystalEdge& e : g.edges) {
        json edge = json::object();
        edge["src"] = e.src;
        edge["i"] = e.colour;
        edge["dst"] = e.dst;
        edges.push_back(std::move(edge));
    }
    o["edges"] = std::move(edges);
    return o;
}

}  // namespace

std::string to_json(const LaurentPoly& p) { return laurent_json(p).dump(); }

LaurentPoly laurent_from_json(const std::string& text) { return laurent_from(parse(text)); }

std::string to_json(const WeightVector& w) { return weight_json(w).dump(); }

WeightVector weight_from_json(const std::string& text) { return weight_from(parse(text)); }

std::string to_json(const Diagram& y) { return diagram_json(y).dump(); }

Diagram diagram_from_json(const std::string& text, std::optional<int> n_hint,
                          std::optional<int> charge_hint) {
    return diagram_from(parse(text), n_hint, charge_hint);
}

std::string to_json(const Combination& v) { return combination_json(v).dump(); }

Combination combination_from_json(const std::string& text, int n, int charge) {
    const json arr = parse(text);
    if (!arr.is_array()) bad("combination: expected an array");
    Combination v(n, charge);
    for (const auto& item : arr) {
        if (!item.is_object() || !item.contains("diagram") || !item.contains("coeff"))
            bad("combination: entries must be {\"diagram\": .., \"coeff\": ..}");
        v.add_term(diagram_from(item["diagram"], n, charge), laurent_from(item["coeff"]));
    }
    return v;
}

std::string to_json(const Report& r) {
    json o = json::object();
    o["checked"] = r.checked;
    json failures = json::array();
    for (const RelationFailure& f : r.failures) {
        json item = json::object();
        item["diagram"] = diagram_json(f.diagram);
        item["relation"] = f.relation;
        item["detail"] = f.detail;
        failures.push_back(std::move(item));
    }
    o["failures"] = std::move(failures);
    return o.dump();
}

std::string to_json(const CrystalGraph& g) { return graph_json(g).dump(); }

CrystalGraph graph_from_json(const std::string& text) {
    const json o = parse(text);
    if (!o.is_object() || !o.contains("root") || !o.contains("nodes") || !o.contains("edges"))
        bad("graph: expected {\"root\": .., \"nodes\": [..], \"edges\": [..]}");
    const Diagram root = diagram_from(o["root"], std::nullopt, std::nullopt);
    CrystalGraph g{root.n(), root.charge(), 0, {}, {}, {}};
    if (!o["nodes"].is_array() || !o["edges"].is_array()) bad("graph: nodes and edges must be arrays");
    for (const auto& item : o["nodes"])
        g.nodes.push_back(diagram_from(item, root.n(), root.charge()));
    if (g.nodes.empty() || !(g.nodes.front() == root)) bad("graph: nodes must start at the root");
    for (const auto& item : o["edges"]) {
        if (!item.is_object() || !item.contains("src") || !item.contains("i") || !item.contains("dst"))
            bad("graph: edges must be {\"src\": a, \"i\": c, \"dst\": b}");
        CrystalEdge e{static_cast<std::size_t>(to_long(item["src"], "edge src")),
                      static_cast<int>(to_long(item["i"], "edge label")),
                      static_cast<std::size_t>(to_long(item["dst"], "edge dst"))};
        if (e.src >= g.nodes.size() || e.dst >= g.nodes.size()) bad("graph: edge index out of range");
        g.edges.push_back(e);
    }
    // rebuild the level index from box counts; nodes must be grouped by level
    long level = 0;
    g.level_start = {0};
    for (std::size_t idx = 0; idx < g.nodes.size(); ++idx) {
        const long boxes = g.nodes[idx].box_count();
        if (boxes < level) bad("graph: nodes are not grouped by level");
        while (level < boxes) {
            g.level_start.push_back(idx);
            ++level;
        }
    }
    g.level_start.push_back(g.nodes.size());
    g.depth = static_cast<int>(level);
    return g;
}

std::string to_json(const std::map<WeightVector, long>& table) {
    json arr = json::array();
    for (const auto& [w, count] : table) {
        json item = json::object();
        item["weight"] = weight_json(w);
        item["count"] = count;
        arr.push_back(std::move(item));
    }
    return arr.dump();
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box];\n";
    for (std::size_t idx = 0; idx < g.nodes.size(); ++idx)
        out << "  n" << idx << " [label=\"" << node_label(g.nodes[idx]) << "\"];\n";
    for (const CrystalEdge& e : g.edges)
        out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.colour << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string to_text(const CrystalGraph& g) {
    std::ostringstream out;
    out << "component of " << node_label(g.root()) << " (n=" << g.n << "), depth " << g.depth
        << ": " << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
    for (int level = 0; level <= g.depth; ++level) {
        out << "level " << level << ":";
        for (std::size_t idx = g.level_start[level]; idx < g.level_start[level + 1]; ++idx)
            out << " " << node_label(g.nodes[idx]);
        out << "\n";
    }
    out << "edges:\n";
    for (const CrystalEdge& e : g.edges)
        out << "  " << node_label(g.nodes[e.src]) << " -" << e.colour << "-> "
            << node_label(g.nodes[e.dst]) << "\n";
    return out.str();
}

std::string to_text(const std::map<WeightVector, long>& table) {
    std::ostringstream out;
    for (const auto& [w, count] : table) {
        out << "h=(";
        for (std::size_t i = 0; i < w.h.size(); ++i) {
            if (i > 0) out << ",";
            out << w.h[i];
        }
        out << ") d=" << w.d << ": " << count << "\n";
    }
    return out.str();
}

std::string to_text(const Combination& v) {
    return v.str() + "\n";
}

}  // namespace cfock
