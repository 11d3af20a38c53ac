#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/hss.hpp"
#include "lpa/ideal.hpp"

namespace lpa {

enum class SpecNodeKind { graded, family };

/// A prime of L_K(E): either a graded prime I(H, S), or the symbolic family
/// { I(H, B_H) + <f(c)> : f irreducible } attached to a WK cycle c.
struct SpecNode {
    SpecNodeKind kind;
    AdmissiblePair pair;
    PrimeCase prime_case;
    /// Excluded breaking vertex (case 2) or cycle source (family).
    std::optional<VertexId> u;
    std::optional<Cycle> cycle;

    bool is_family() const { return kind == SpecNodeKind::family; }
    /// The graded prime itself, or the graded part shared by the family.
    IdealRep graded_ideal(FieldSpec field) const { return IdealRep::graded(pair, field); }
    /// The family member at irreducible f.
    IdealRep instance(const Poly& f) const;
    /// Deterministic display key, e.g. "I({h},{w})" or "I({h},{w})+<f(w)>".
    std::string key(const Graph& g) const;
};

/// Finite poset of spectrum nodes; leq follows ideal inclusion, with family
/// nodes compared through all of their instances.
class SpecPoset {
public:
    SpecPoset(std::vector<SpecNode> nodes);

    const std::vector<SpecNode>& nodes() const { return nodes_; }
    const SpecNode& node(std::size_t i) const { return nodes_.at(i); }
    std::size_t size() const { return nodes_.size(); }
    bool leq(std::size_t a, std::size_t b) const { return leq_.at(a * nodes_.size() + b); }
    bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    bool is_chain() const;
    std::size_t family_count() const;

private:
    std::vector<SpecNode> nodes_;
    std::vector<bool> leq_;
};

/// The order between two nodes as ideal inclusion.
bool spec_leq(const SpecNode& a, const SpecNode& b);

/// All primes, by the three cases of the classification, sorted by
/// (pair, graded before family, cycle).
SpecPoset compute_spec(const Graph& g, std::size_t cap = kDefaultCap);

/// Hasse cover pairs (lower, upper), sorted.
std::vector<std::pair<std::size_t, std::size_t>> covers(const SpecPoset& s);

/// For a < b, a cover p' < q' with a <= p' < q' <= b, found by first taking
/// the least step x above a, then p' maximal below b avoiding x and q'
/// minimal above p' and x. Throws InvalidArgument unless a < b.
std::pair<std::size_t, std::size_t> kaplansky_pair(const SpecPoset& s, std::size_t a, std::size_t b);

/// Chains of the spectrum whose union is not a prime. Each chain's union is
/// its largest member; chains of graded primes additionally have their sum
/// recomputed and classified. Empty for every finite graph.
std::vector<std::vector<std::size_t>> union_prime_scan(const Graph& g, const SpecPoset& s, const PairLattice& lattice,
                                                       std::size_t max_chains = std::size_t{1} << 20);

struct RegularityWitness {
    AdmissiblePair pair;
    bool quotient_acyclic;
};

/// Regularity holds iff the graph is acyclic; the witnesses record, for each
/// graded prime, whether its quotient graph is acyclic.
struct RegularityReport {
    bool regular;
    std::vector<RegularityWitness> witnesses;
    /// regular == (every witness acyclic).
    bool consistent;
};

RegularityReport regularity_report(const Graph& g, std::size_t cap = kDefaultCap);

/// Family members at every monic irreducible with nonzero constant term of
/// degree 1..max_degree over a prime field.
std::vector<IdealRep> instantiate(const SpecNode& family, FieldSpec field, int max_degree);

/// Semiprimeness straight from the definition: intersect every minimal
/// prime above `i` (graded primes and family members at the irreducible
/// factors of its parts) and compare with `i`. Needs a prime field and
/// part degrees at most degree_bound; throws Unsupported otherwise or when
/// an intersection falls outside the supported shapes.
bool semiprime_oracle(const Graph& g, const SpecPoset& spec, const PairLattice& lattice, const IdealRep& i,
                      int degree_bound);

}  // namespace lpa
