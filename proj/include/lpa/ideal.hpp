#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/hss.hpp"
#include "lpa/poly.hpp"

namespace lpa {

/// A summand <f(c)> of a non-graded ideal: a cycle without exits in the
/// quotient by the graded part, and a monic polynomial with f(0) != 0.
struct PolyPart {
    Cycle cycle;
    Poly f;

    bool operator==(const PolyPart&) const = default;
};

/// Canonical generator data of an ideal: I(H, S) + sum of <f_i(c_i)>.
///
/// Parts are sorted by cycle, have pairwise disjoint vertex sets, and none
/// lies inside H. Two representations are equal iff the ideals are.
struct IdealRep {
    AdmissiblePair pair;
    std::vector<PolyPart> parts;
    FieldSpec field = FieldSpec::rationals();

    static IdealRep graded(const AdmissiblePair& p, FieldSpec field) { return {p, {}, field}; }
    bool operator==(const IdealRep&) const = default;
};

/// Ideal generator data by vertex names, as read from a document.
struct IdealDocument {
    struct Part {
        std::vector<std::string> cycle;
        std::string f;
    };
    std::vector<std::string> h;
    std::vector<std::string> s;
    std::vector<Part> parts;
};

struct Validated {
    IdealRep ideal;
    std::vector<std::string> warnings;
};

/// Out-degree of ambient vertex `v` (outside H) in E \ (H, S).
Multiplicity quotient_out_degree(const Graph& g, const AdmissiblePair& p, VertexId v);

/// Cycles of E \ (H, S) without exits, as cycles of the ambient graph.
std::vector<Cycle> exit_free_cycles(const Graph& g, const AdmissiblePair& p);

/// Brings generator data into canonical form: parts whose cycle lies in H
/// are dropped, constant parts promote the cycle's vertices into the graded
/// part, polynomials are made monic. Throws InvalidArgument when a cycle
/// has an exit in the quotient, a constant term vanishes, or two cycles
/// share vertices.
IdealRep canonicalize(const Graph& g, const PairLattice& lattice, AdmissiblePair pair, std::vector<PolyPart> parts,
                      FieldSpec field, std::vector<std::string>* warnings = nullptr);

/// Resolves names, checks admissibility and canonical-form constraints.
Validated validate(const Graph& g, const IdealDocument& doc, FieldSpec field, std::size_t cap = kDefaultCap);

inline bool is_graded(const IdealRep& i) { return i.parts.empty(); }
inline IdealRep graded_part(const IdealRep& i) { return IdealRep::graded(i.pair, i.field); }
inline bool is_proper(const Graph& g, const IdealRep& i) { return i.pair.h != g.all(); }

/// Every polynomial part is square-free; graded ideals are semiprime.
bool is_semiprime(const IdealRep& i);

enum class PrimeCase { graded_directed = 1, breaking_minus_u = 2, wk_poly = 3 };
const char* to_string(PrimeCase c);

struct PrimeWitness {
    PrimeCase kind;
    /// The excluded breaking vertex (case 2) or the cycle source (case 3).
    std::optional<VertexId> u;
    std::optional<Cycle> cycle;
    std::optional<Poly> f;
};

struct PrimeVerdict {
    std::optional<PrimeWitness> witness;
    /// First failed clause when not prime.
    std::string reason;

    bool is_prime() const { return witness.has_value(); }
};

/// Decides primeness by the three-case classification. Throws
/// InvalidArgument for the improper ideal and Unsupported when
/// irreducibility cannot be decided.
PrimeVerdict classify_prime(const Graph& g, const IdealRep& i);

/// B within A.
bool contains(const IdealRep& a, const IdealRep& b);

IdealRep sum(const Graph& g, const PairLattice& lattice, const IdealRep& a, const IdealRep& b);

/// Supported when one side contains the other, both are graded, or both
/// have the same graded part and polynomial parts on the same cycles.
/// Throws Unsupported otherwise.
IdealRep intersect(const Graph& g, const PairLattice& lattice, const IdealRep& a, const IdealRep& b);

/// Human-readable form such as "I({h},{w}) + <x+1 @ (w)>".
std::string describe(const Graph& g, const IdealRep& i);

}  // namespace lpa
