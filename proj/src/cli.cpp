#include "lpa/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lpa/error.hpp"
#include "lpa/sweep.hpp"

namespace lpa::cli {

namespace {

using io::Json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write " + path);
}

Json read_json(const std::string& path) { return io::parse_json(read_file(path)); }

/// A document argument is a file path, or inline JSON when it starts with '{'.
Json document(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return io::parse_json(arg);
    return read_json(arg);
}

std::size_t parse_cap(const std::string& text, const std::string& where) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || v == 0 || text.front() == '-') throw CLI::ValidationError(where, "must be a positive integer");
    return static_cast<std::size_t>(v);
}

std::vector<Multiplicity> parse_mults(const std::string& text) {
    std::vector<Multiplicity> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "inf" || item == "omega") {
            out.push_back(Multiplicity::omega());
            continue;
        }
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (item.empty() || pos != item.size() || item.front() == '-') {
            throw CLI::ValidationError("--mults", "bad multiplicity \"" + item + "\"");
        }
        out.push_back(Multiplicity(v));
    }
    if (out.empty()) throw CLI::ValidationError("--mults", "needs at least one multiplicity");
    return out;
}

Json witness_to_json(const Graph& g, const PrimeWitness& w) {
    Json j{{"case", static_cast<int>(w.kind)}, {"kind", to_string(w.kind)}};
    if (w.u) j["u"] = g.name(*w.u);
    if (w.cycle) j["cycle"] = io::cycle_to_json(g, *w.cycle);
    if (w.f) j["f"] = w.f->to_string();
    return j;
}

struct Options {
    std::optional<std::string> cap_flag;
    std::optional<std::string> field_flag;
    std::string graph, doc_a, doc_b, pair, dot, out;
    int max_degree = 2;
    bool max_degree_given = false;
    std::size_t max_vertices = 3;
    std::string mults = "0,1,2,inf";
};

struct Loaded {
    IdealRep ideal;
    std::vector<std::string> warnings;
};

Loaded load_ideal(const Graph& g, const std::string& arg, const Options& o, std::size_t cap) {
    const auto in = io::load_ideal(document(arg));
    FieldSpec field = FieldSpec::rationals();
    if (o.field_flag) {
        field = FieldSpec::parse(*o.field_flag);
    } else if (in.field) {
        field = *in.field;
    }
    auto v = validate(g, in.doc, field, cap);
    return {std::move(v.ideal), std::move(v.warnings)};
}

Json with_warnings(Json j, const std::vector<std::string>& warnings) {
    if (!warnings.empty()) j["warnings"] = warnings;
    return j;
}

Json dispatch(const std::string& cmd, const Options& o, std::size_t cap) {
    if (cmd == "realize" || cmd == "props" || cmd == "verify-realization") {
        const FinPoset p = io::load_poset(document(o.graph));
        if (cmd == "realize") {
            const Json graph = io::graph_to_json(realize(p));
            if (!o.out.empty()) write_file(o.out, graph.dump(2) + "\n");
            return Json{{"graph", graph}};
        }
        if (cmd == "props") {
            if (!o.dot.empty()) write_file(o.dot, io::poset_dot(p));
            const auto r = check_properties(p);
            Json j{{"GLB", r.glb}, {"DC", r.dc}, {"DD", r.dd}, {"KAP", r.kap}, {"R", Json::array()}};
            auto names = [&](VertexSet s) {
                Json a = Json::array();
                s.for_each([&](VertexId x) { a.push_back(p.name(x)); });
                return a;
            };
            j["R"] = names(r_set(p));
            Json failures = Json::object();
            if (r.glb_failure) failures["GLB"] = names(*r.glb_failure);
            if (r.dc_failure) failures["DC"] = Json{{"subset", names(r.dc_failure->first)}, {"element", p.name(r.dc_failure->second)}};
            if (r.dd_failure) failures["DD"] = names(*r.dd_failure);
            if (r.kap_failure) failures["KAP"] = Json::array({p.name(r.kap_failure->first), p.name(r.kap_failure->second)});
            j["failures"] = failures;
            Json pairs = Json::array();
            for (const auto& w : r.kap_pairs) {
                pairs.push_back(Json{{"p", p.name(w.p)}, {"q", p.name(w.q)}, {"p2", p.name(w.p2)}, {"q2", p.name(w.q2)}});
            }
            j["kaplansky_pairs"] = pairs;
            return j;
        }
        const auto r = verify_realization(p, cap);
        const Graph g = realize(p);
        Json mapping = Json::array();
        for (std::size_t e = 0; e < r.pairs.size(); ++e) {
            Json m = io::pair_to_json(g, r.pairs[e]);
            m["element"] = p.name(e);
            m["node"] = r.mapping[e];
            mapping.push_back(m);
        }
        Json j{{"verified", r.ok}, {"mapping", mapping}};
        if (!r.ok) j["reason"] = r.reason;
        return j;
    }

    if (cmd == "sweep") {
        const auto r = run_sweep(o.max_vertices, parse_mults(o.mults), cap);
        Json j{{"graphs", r.graphs},
               {"condition_k", r.condition_k},
               {"k_mismatches", r.k_mismatches},
               {"regular", r.regular},
               {"regularity_mismatches", r.regularity_mismatches},
               {"kaplansky_pairs", r.kap_pairs},
               {"kaplansky_failures", r.kap_failures},
               {"union_prime_chains", r.union_prime_chains}};
        if (r.first_failure) j["first_failure"] = io::graph_to_json(*r.first_failure);
        return j;
    }

    const Graph g = io::load_graph(document(o.graph));

    if (cmd == "hss") {
        Json sets = Json::array();
        for (VertexSet h : enumerate_hss(g, cap)) sets.push_back(g.to_names(h));
        return Json{{"hss", sets}, {"count", sets.size()}};
    }
    if (cmd == "pairs") {
        const PairLattice lattice(g, cap);
        if (!o.dot.empty()) write_file(o.dot, io::lattice_dot(g, lattice));
        Json pairs = Json::array();
        for (const auto& p : lattice.pairs()) pairs.push_back(io::pair_to_json(g, p));
        Json cov = Json::array();
        for (auto [a, b] : lattice.covers()) cov.push_back(Json::array({a, b}));
        return Json{{"pairs", pairs}, {"covers", cov}, {"count", lattice.size()}};
    }
    if (cmd == "quotient") {
        const AdmissiblePair p = io::load_pair(g, document(o.pair));
        const auto q = quotient(g, p);
        if (!q) return Json{{"graph", nullptr}, {"empty", true}};
        Json origin = Json::array();
        for (VertexId v = 0; v < q->graph.size(); ++v) {
            origin.push_back(Json{{"vertex", q->graph.name(v)},
                                  {"source", g.name(q->source_vertex[v])},
                                  {"primed", q->origin[v] == QuotientVertexOrigin::primed}});
        }
        return Json{{"graph", io::graph_to_json(q->graph)}, {"origin", origin}, {"empty", false}};
    }
    if (cmd == "spec") {
        const SpecPoset s = compute_spec(g, cap);
        if (!o.dot.empty()) write_file(o.dot, io::spec_dot(g, s));
        Json j = io::spec_to_json(g, s);
        const FieldSpec field = o.field_flag ? FieldSpec::parse(*o.field_flag) : FieldSpec::rationals();
        j["field"] = io::field_to_json(field);
        if (!field.is_rationals()) {
            j["max_degree"] = o.max_degree;
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (!s.node(k).is_family()) continue;
                const auto inst = instantiate(s.node(k), field, o.max_degree);
                Json names = Json::array();
                for (const auto& i : inst) names.push_back(i.parts.front().f.to_string());
                bool antichain = true;
                for (std::size_t a = 0; a < inst.size(); ++a) {
                    for (std::size_t b = 0; b < inst.size(); ++b) antichain = antichain && (a == b || !contains(inst[b], inst[a]));
                }
                j["nodes"][k]["instances"] = names;
                j["nodes"][k]["instances_incomparable"] = antichain;
            }
        } else if (o.max_degree_given) {
            throw Unsupported("family instances can only be enumerated over a prime field");
        }
        return j;
    }
    if (cmd == "regular") {
        const auto r = regularity_report(g, cap);
        Json w = Json::array();
        for (const auto& x : r.witnesses) {
            Json e = io::pair_to_json(g, x.pair);
            e["quotient_acyclic"] = x.quotient_acyclic;
            w.push_back(e);
        }
        return Json{{"regular", r.regular}, {"witnesses", w}, {"consistent", r.consistent}};
    }

    const Loaded a = load_ideal(g, o.doc_a, o, cap);
    if (cmd == "semiprime") {
        Json parts = Json::array();
        for (const auto& p : a.ideal.parts) {
            parts.push_back(Json{{"cycle", io::cycle_to_json(g, p.cycle)}, {"f", p.f.to_string()}, {"squarefree", is_squarefree(p.f)}});
        }
        return with_warnings(Json{{"semiprime", is_semiprime(a.ideal)}, {"ideal", io::ideal_to_json(g, a.ideal)}, {"parts", parts}},
                             a.warnings);
    }
    if (cmd == "prime") {
        if (!is_proper(g, a.ideal)) {
            return with_warnings(Json{{"prime", false}, {"reason", "the ideal is the whole algebra"}, {"ideal", io::ideal_to_json(g, a.ideal)}},
                                 a.warnings);
        }
        const auto v = classify_prime(g, a.ideal);
        Json j{{"prime", v.is_prime()}, {"ideal", io::ideal_to_json(g, a.ideal)}};
        if (v.witness) {
            j["witness"] = witness_to_json(g, *v.witness);
        } else {
            j["reason"] = v.reason;
        }
        return with_warnings(j, a.warnings);
    }

    const Loaded b = load_ideal(g, o.doc_b, o, cap);
    std::vector<std::string> warnings = a.warnings;
    warnings.insert(warnings.end(), b.warnings.begin(), b.warnings.end());
    const PairLattice lattice(g, cap);
    const IdealRep r = cmd == "sum" ? sum(g, lattice, a.ideal, b.ideal) : intersect(g, lattice, a.ideal, b.ideal);
    return with_warnings(Json{{"ideal", io::ideal_to_json(g, r)}, {"describe", describe(g, r)}}, warnings);
}

}  // namespace

std::string CommandResult::render() const {
    if (!text.empty()) return text;
    if (code != ok) return "";
    return payload.dump(2) + "\n";
}

CommandResult run(const std::vector<std::string>& argv) {
    CLI::App app{"Ideal lattices, prime spectra and poset realizations of Leavitt path algebras", "lpa"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option_function<std::string>("--cap", [&](const std::string& v) { o.cap_flag = v; },
                                          "Enumeration cap (default 4096, or LPA_CAP)");

    auto graph_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("graph", o.graph, "Graph document (path, - or inline JSON)")->required();
        return c;
    };
    auto poset_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("poset", o.graph, "Poset document (path, - or inline JSON)")->required();
        return c;
    };

    graph_cmd("hss", "List hereditary saturated sets");
    graph_cmd("pairs", "Admissible pair lattice")->add_option("--dot", o.dot, "Write the Hasse diagram as DOT");
    graph_cmd("quotient", "Quotient graph by an admissible pair")->add_option("--pair", o.pair, "Pair document")->required();
    auto* spec = graph_cmd("spec", "Prime spectrum poset");
    spec->add_option("--dot", o.dot, "Write the Hasse diagram as DOT");
    spec->add_option_function<std::string>("--field", [&](const std::string& v) { o.field_flag = v; }, "Field for family instances");
    spec->add_option_function<int>("--max-degree", [&](int d) { o.max_degree = d; o.max_degree_given = true; },
                                   "Instance degree bound")
        ->check(CLI::Range(1, 16));
    for (const char* name : {"semiprime", "prime"}) {
        auto* c = graph_cmd(name, name == std::string("prime") ? "Classify an ideal as prime" : "Decide semiprimeness");
        c->add_option("ideal", o.doc_a, "Ideal document")->required();
        c->add_option_function<std::string>("--field", [&](const std::string& v) { o.field_flag = v; }, "Override the field");
    }
    for (const char* name : {"sum", "intersect"}) {
        auto* c = graph_cmd(name, name == std::string("sum") ? "Sum of two ideals" : "Intersection of two ideals");
        c->add_option("a", o.doc_a, "First ideal document")->required();
        c->add_option("b", o.doc_b, "Second ideal document")->required();
        c->add_option_function<std::string>("--field", [&](const std::string& v) { o.field_flag = v; }, "Override the field");
    }
    poset_cmd("realize", "Graph whose spectrum is the poset")->add_option("--out", o.out, "Write the graph document here");
    poset_cmd("props", "Check GLB, DC, DD and KAP")->add_option("--dot", o.dot, "Write the Hasse diagram as DOT");
    poset_cmd("verify-realization", "Check the spectrum of the realizing graph");
    graph_cmd("regular", "Regularity with per-prime quotient witnesses");
    auto* sweep = app.add_subcommand("sweep", "Equivalence suites over all small graphs");
    sweep->add_option("--max-vertices", o.max_vertices, "Largest vertex count")->check(CLI::Range(1, 4));
    sweep->add_option("--mults", o.mults, "Comma-separated multiplicities, e.g. 0,1,2,inf");

    CommandResult result;
    std::vector<const char*> raw;
    for (const auto& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp&) {
        result.text = app.help();
        return result;
    } catch (const CLI::Success&) {
        result.text = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.code = usage;
        result.message = e.what();
        return result;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        std::size_t cap = kDefaultCap;
        if (const char* env = std::getenv("LPA_CAP"); env != nullptr && *env != '\0') cap = parse_cap(env, "LPA_CAP");
        if (o.cap_flag) cap = parse_cap(*o.cap_flag, "--cap");
        result.payload = dispatch(cmd, o, cap);
    } catch (const CLI::ValidationError& e) {
        result.code = usage;
        result.message = e.what();
    } catch (const ParseError& e) {
        result.code = bad_document;
        result.message = e.what();
    } catch (const InvalidArgument& e) {
        result.code = bad_document;
        result.message = e.what();
    } catch (const CapExceeded& e) {
        result.code = cap_exceeded;
        result.message = e.what();
    } catch (const Unsupported& e) {
        result.code = failure;
        result.message = std::string("unsupported: ") + e.what();
    } catch (const IoError& e) {
        result.code = failure;
        result.message = e.what();
    } catch (const std::exception& e) {
        result.code = failure;
        result.message = e.what();
    }
    return result;
}

}  // namespace lpa::cli
