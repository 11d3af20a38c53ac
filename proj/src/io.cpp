#include "lpa/io.hpp"

#include <sstream>

#include "lpa/error.hpp"

namespace lpa::io {

namespace {

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object()) throw ParseError("expected a JSON object");
    const auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError("\"" + where + "\" must be an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw ParseError("\"" + where + "\"[" + std::to_string(i) + "] must be a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

std::vector<std::string> optional_list(const Json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) return {};
    return string_list(*it, key);
}

Multiplicity load_mult(const Json& j, std::size_t row) {
    const std::string where = "edges[" + std::to_string(row) + "][2]";
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "omega" || s == "ω") return Multiplicity::omega();
        throw ParseError(where + ": unknown multiplicity \"" + s + "\"");
    }
    if (j.is_number_unsigned()) return Multiplicity(j.get<std::uint64_t>());
    if (j.is_number_integer()) throw ParseError(where + ": negative multiplicity");
    throw ParseError(where + ": multiplicity must be a nonnegative integer or \"inf\"");
}

Json mult_to_json(Multiplicity m) {
    if (m.is_omega()) return "inf";
    return m.count();
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string set_label(const Graph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](VertexId v) {
        if (!first) out += ",";
        out += g.name(v);
        first = false;
    });
    return out + "}";
}

std::string pair_label(const Graph& g, const AdmissiblePair& p) {
    return "(" + set_label(g, p.h) + ", " + set_label(g, p.s) + ")";
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Graph load_graph(const Json& doc) {
    const auto vertices = string_list(field(doc, "vertices"), "vertices");
    std::vector<EdgeSpec> edges;
    const auto it = doc.find("edges");
    if (it != doc.end()) {
        if (!it->is_array()) throw ParseError("\"edges\" must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& e = (*it)[i];
            if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string()) {
                throw ParseError("edges[" + std::to_string(i) + "] must be [source, target, multiplicity]");
            }
            edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(), load_mult(e[2], i)});
        }
    }
    return Graph(vertices, edges);
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json::array({e.source, e.target, mult_to_json(e.mult)}));
    return Json{{"vertices", g.names()}, {"edges", edges}};
}

AdmissiblePair load_pair(const Graph& g, const Json& doc) {
    const auto h = string_list(field(doc, "H"), "H");
    const auto s = optional_list(doc, "S");
    return {g.to_set(h), g.to_set(s)};
}

Json pair_to_json(const Graph& g, const AdmissiblePair& p) {
    return Json{{"H", g.to_names(p.h)}, {"S", g.to_names(p.s)}};
}

FieldSpec load_field(const Json& doc) {
    if (doc.is_string()) return FieldSpec::parse(doc.get<std::string>());
    if (doc.is_object()) {
        const Json& p = field(doc, "p");
        if (!p.is_number_unsigned()) throw ParseError("\"field\".p must be a positive integer");
        return FieldSpec::prime(p.get<std::uint32_t>());
    }
    throw ParseError("\"field\" must be \"Q\", \"F<p>\" or {\"p\": <p>}");
}

Json field_to_json(FieldSpec f) {
    if (f.is_rationals()) return "Q";
    return Json{{"p", f.characteristic()}};
}

IdealInput load_ideal(const Json& doc) {
    IdealInput out;
    out.doc.h = string_list(field(doc, "H"), "H");
    out.doc.s = optional_list(doc, "S");
    if (const auto it = doc.find("polyparts"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("\"polyparts\" must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& p = (*it)[i];
            const std::string where = "polyparts[" + std::to_string(i) + "]";
            const Json& f = field(p, "f");
            if (!f.is_string()) throw ParseError(where + ".f must be a string");
            out.doc.parts.push_back({string_list(field(p, "cycle"), where + ".cycle"), f.get<std::string>()});
        }
    }
    if (const auto it = doc.find("field"); it != doc.end()) out.field = load_field(*it);
    return out;
}

Json cycle_to_json(const Graph& g, const Cycle& c) {
    Json out = Json::array();
    for (auto v : c.vertices()) out.push_back(g.name(v));
    return out;
}

Json ideal_to_json(const Graph& g, const IdealRep& i) {
    Json parts = Json::array();
    for (const auto& p : i.parts) parts.push_back(Json{{"cycle", cycle_to_json(g, p.cycle)}, {"f", p.f.to_string()}});
    Json out = pair_to_json(g, i.pair);
    out["polyparts"] = parts;
    out["field"] = field_to_json(i.field);
    return out;
}

FinPoset load_poset(const Json& doc) {
    const auto elements = string_list(field(doc, "elements"), "elements");
    std::vector<std::pair<std::size_t, std::size_t>> lt;
    if (const auto it = doc.find("lt"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("\"lt\" must be an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& r = (*it)[i];
            if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string()) {
                throw ParseError("lt[" + std::to_string(i) + "] must be [lower, upper]");
            }
            auto find = [&](const std::string& name) {
                const auto pos = std::find(elements.begin(), elements.end(), name);
                if (pos == elements.end()) throw ParseError("lt[" + std::to_string(i) + "]: unknown element " + name);
                return static_cast<std::size_t>(pos - elements.begin());
            };
            lt.emplace_back(find(r[0].get<std::string>()), find(r[1].get<std::string>()));
        }
    }
    try {
        return FinPoset(elements, lt);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

Json poset_to_json(const FinPoset& p) {
    Json lt = Json::array();
    for (auto [a, b] : p.relations()) lt.push_back(Json::array({p.name(a), p.name(b)}));
    return Json{{"elements", p.elements()}, {"lt", lt}};
}

Json spec_to_json(const Graph& g, const SpecPoset& s) {
    Json nodes = Json::array();
    for (std::size_t k = 0; k < s.size(); ++k) {
        const SpecNode& n = s.node(k);
        Json j = pair_to_json(g, n.pair);
        j["id"] = k;
        j["key"] = n.key(g);
        j["kind"] = n.is_family() ? "family" : "graded";
        j["case"] = static_cast<int>(n.prime_case);
        if (n.u) j["u"] = g.name(*n.u);
        if (n.cycle) j["cycle"] = cycle_to_json(g, *n.cycle);
        nodes.push_back(j);
    }
    Json leq = Json::array();
    for (std::size_t a = 0; a < s.size(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < s.size(); ++b) row.push_back(s.leq(a, b) ? 1 : 0);
        leq.push_back(row);
    }
    Json cov = Json::array();
    for (auto [a, b] : covers(s)) cov.push_back(Json::array({a, b}));
    return Json{{"nodes", nodes}, {"leq", leq}, {"covers", cov}};
}

std::string lattice_dot(const Graph& g, const PairLattice& lattice) {
    std::ostringstream out;
    out << "digraph pairs {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < lattice.size(); ++k) {
        out << "  n" << k << " [label=" << quote(pair_label(g, lattice.pairs()[k])) << "];\n";
    }
    for (auto [a, b] : lattice.covers()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string spec_dot(const Graph& g, const SpecPoset& s) {
    std::ostringstream out;
    out << "digraph spec {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < s.size(); ++k) {
        out << "  n" << k << " [label=" << quote(s.node(k).key(g));
        if (s.node(k).is_family()) out << ", peripheries=2";
        out << "];\n";
    }
    for (auto [a, b] : covers(s)) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string poset_dot(const FinPoset& p) {
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < p.size(); ++k) out << "  n" << k << " [label=" << quote(p.name(k)) << "];\n";
    for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace lpa::io
