#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

inline constexpr std::size_t kDefaultCap = 4096;

bool is_hereditary(const Graph& g, VertexSet h);
bool is_saturated(const Graph& g, VertexSet h);
inline bool is_hereditary_saturated(const Graph& g, VertexSet h) {
    return is_hereditary(g, h) && is_saturated(g, h);
}

/// Smallest hereditary saturated set containing `x`.
VertexSet closure(const Graph& g, VertexSet x);

/// Every hereditary saturated subset, in canonical order (size, then
/// members). Throws CapExceeded if there are more than `cap`.
std::vector<VertexSet> enumerate_hss(const Graph& g, std::size_t cap = kDefaultCap);

/// B_H: infinite emitters outside `h` sending a finite, nonzero number of
/// edges outside `h`. Throws InvalidArgument if `h` is not hereditary
/// saturated.
VertexSet breaking_vertices(const Graph& g, VertexSet h);

/// Names the graded ideal I(H, S): H hereditary saturated, S within B_H.
struct AdmissiblePair {
    VertexSet h;
    VertexSet s;

    bool operator==(const AdmissiblePair&) const = default;
};

/// Canonical order: by H, then by S.
bool canonical_less(const AdmissiblePair& a, const AdmissiblePair& b);

bool is_admissible(const Graph& g, const AdmissiblePair& p);
/// Throws InvalidArgument describing the first violated condition.
void check_admissible(const Graph& g, const AdmissiblePair& p);

/// All admissible pairs in canonical order; at most `cap` of them.
std::vector<AdmissiblePair> enumerate_admissible_pairs(const Graph& g, std::size_t cap = kDefaultCap);

/// Containment of the named graded ideals: H1 within H2 and S1 within H2 u S2.
inline bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b) {
    return a.h.subset_of(b.h) && a.s.subset_of(b.h | b.s);
}

/// The pair (E^0, {}) naming the whole algebra.
inline AdmissiblePair improper_pair(const Graph& g) { return {g.all(), {}}; }

enum class QuotientVertexOrigin { original, primed };

/// The graph E \ (H, S) together with the provenance of each vertex.
struct QuotientGraph {
    Graph graph;
    /// For each quotient vertex: the vertex of the ambient graph it copies.
    std::vector<VertexId> source_vertex;
    std::vector<QuotientVertexOrigin> origin;

    /// Quotient index of an original (unprimed) ambient vertex.
    std::optional<VertexId> original_index(VertexId ambient) const;
};

/// E \ (H, S). Returns nullopt for the improper pair (E^0, {}), whose
/// quotient would have no vertices. Primed vertices are named by appending
/// apostrophes until the name is fresh.
std::optional<QuotientGraph> quotient(const Graph& g, const AdmissiblePair& p);

/// The finite lattice of admissible pairs of one graph, enumerated once,
/// with order-theoretic meet and join.
class PairLattice {
public:
    explicit PairLattice(const Graph& g, std::size_t cap = kDefaultCap);
    /// A lattice over an already enumerated (or deliberately empty) pair list.
    static PairLattice from_pairs(std::vector<AdmissiblePair> pairs);

    const std::vector<AdmissiblePair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    /// Position of `p` in pairs(); throws InvalidArgument if absent.
    std::size_t index_of(const AdmissiblePair& p) const;

    /// Least pair above both.
    AdmissiblePair join(const AdmissiblePair& a, const AdmissiblePair& b) const;
    /// Greatest pair below both.
    AdmissiblePair meet(const AdmissiblePair& a, const AdmissiblePair& b) const;

    /// Hasse diagram as (lower, upper) index pairs, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

private:
    PairLattice() = default;
    std::vector<AdmissiblePair> pairs_;
};

}  // namespace lpa
