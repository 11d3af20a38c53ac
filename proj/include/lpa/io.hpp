#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpa/graph.hpp"
#include "lpa/hss.hpp"
#include "lpa/ideal.hpp"
#include "lpa/poly.hpp"
#include "lpa/poset.hpp"
#include "lpa/spectrum.hpp"

namespace lpa::io {

using Json = nlohmann::json;

/// Parses JSON text; ParseError with the parser's position on failure.
Json parse_json(const std::string& text);

// Graph document: {"vertices":[...],"edges":[[source,target,mult],...]} with
// mult a nonnegative integer or "inf".
Graph load_graph(const Json& doc);
Json graph_to_json(const Graph& g);

// Pair document: {"H":[...],"S":[...]}; S may be omitted.
AdmissiblePair load_pair(const Graph& g, const Json& doc);
Json pair_to_json(const Graph& g, const AdmissiblePair& p);

// Field: "Q", "F2", "GF(3)", ... or {"p":3}.
FieldSpec load_field(const Json& doc);
Json field_to_json(FieldSpec f);

struct IdealInput {
    IdealDocument doc;
    /// The document's "field" entry, if present.
    std::optional<FieldSpec> field;
};

// Ideal document: {"H":[...],"S":[...],"polyparts":[{"cycle":[...],"f":"..."}],"field":...}.
IdealInput load_ideal(const Json& doc);
Json ideal_to_json(const Graph& g, const IdealRep& i);

// Poset document: {"elements":[...],"lt":[[a,b],...]}.
FinPoset load_poset(const Json& doc);
Json poset_to_json(const FinPoset& p);

Json cycle_to_json(const Graph& g, const Cycle& c);
Json spec_to_json(const Graph& g, const SpecPoset& s);

std::string lattice_dot(const Graph& g, const PairLattice& lattice);
/// Family nodes are drawn double-bordered.
std::string spec_dot(const Graph& g, const SpecPoset& s);
std::string poset_dot(const FinPoset& p);

}  // namespace lpa::io
