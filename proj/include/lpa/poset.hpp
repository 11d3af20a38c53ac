#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/hss.hpp"
#include "lpa/vertex_set.hpp"

namespace lpa {

/// A finite partial order on at most 64 named elements. Subsets are
/// VertexSet bitmasks over element indices.
class FinPoset {
public:
    /// `lt` lists generating relations a < b by index; the transitive
    /// closure is taken. Throws InvalidArgument on duplicate names, an
    /// out-of-range index or a cycle.
    FinPoset(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& lt);

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name(std::size_t i) const { return elements_.at(i); }
    std::size_t index(const std::string& name) const;
    VertexSet all() const { return VertexSet::all(size()); }

    bool lt(std::size_t a, std::size_t b) const { return below_[b].contains(static_cast<VertexId>(a)); }
    bool leq(std::size_t a, std::size_t b) const { return a == b || lt(a, b); }
    /// Elements strictly below / strictly above `a`.
    VertexSet strictly_below(std::size_t a) const { return below_.at(a); }
    VertexSet strictly_above(std::size_t a) const;

    /// Hasse cover pairs (lower, upper), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;
    /// All strict relations (a, b) with a < b, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> relations() const;

private:
    std::vector<std::string> elements_;
    std::vector<VertexSet> below_;
};

/// Every pair of members has a common lower bound inside `s`; false for
/// the empty set.
bool is_downward_directed(const FinPoset& p, VertexSet s);

/// All nonempty downward directed subsets of `within`, in canonical order.
/// Throws CapExceeded if `within` has more than `bound` elements.
std::vector<VertexSet> downward_directed_subsets(const FinPoset& p, VertexSet within, std::size_t bound);

/// The greatest lower bound of a nonempty subset, if any.
std::optional<std::size_t> glb(const FinPoset& p, VertexSet s);

/// The least element of `s`, if any.
std::optional<std::size_t> least_element(const FinPoset& p, VertexSet s);

inline constexpr std::size_t kDefaultPosetBound = 12;

/// R(P): elements that are not the glb of a downward directed subset
/// lacking a least element.
VertexSet r_set(const FinPoset& p, std::size_t bound = kDefaultPosetBound);

struct KaplanskyWitness {
    std::size_t p, q;
    std::size_t p2, q2;
};

struct PropertyReport {
    bool glb = true;
    bool dc = true;
    bool dd = true;
    bool kap = true;
    /// First failure of each property.
    std::optional<VertexSet> glb_failure;
    std::optional<std::pair<VertexSet, std::size_t>> dc_failure;
    std::optional<VertexSet> dd_failure;
    std::optional<std::pair<std::size_t, std::size_t>> kap_failure;
    /// One cover p <= p2 < q2 <= q for every p < q that has one.
    std::vector<KaplanskyWitness> kap_pairs;
};

/// Literal evaluation of GLB, DC, DD and KAP over every downward directed
/// subset. Throws CapExceeded if the poset has more than `bound` elements.
PropertyReport check_properties(const FinPoset& p, std::size_t bound = kDefaultPosetBound);

/// The graph with one vertex per element (named like the element) and
/// infinitely many edges from each element to each element below it.
Graph realize(const FinPoset& p);

struct RealizationResult {
    bool ok;
    /// Spectrum node index for each element, when ok.
    std::vector<std::size_t> mapping;
    /// Pair assigned to each element, when ok.
    std::vector<AdmissiblePair> pairs;
    std::string reason;
};

/// Computes the spectrum of realize(p) and checks that sending p to the
/// prime with H = {q : q not >= p} is an order isomorphism.
RealizationResult verify_realization(const FinPoset& p, std::size_t cap = kDefaultCap);

/// Every poset on n elements up to isomorphism (n <= 6), with elements
/// named "0", "1", ... in a natural labelling.
std::vector<FinPoset> enumerate_posets(std::size_t n);

}  // namespace lpa
