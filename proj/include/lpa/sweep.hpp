#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/hss.hpp"
#include "lpa/ideal.hpp"

namespace lpa {

/// Every graph on 1..max_vertices vertices named "a", "b", ... whose
/// multiplicities come from `mults`, one per isomorphism class. Calls
/// `visit` in a deterministic order.
void for_each_graph(std::size_t max_vertices, const std::vector<Multiplicity>& mults,
                    const std::function<void(const Graph&)>& visit);

/// Every ideal with graded part from `lattice` and, on each exit-free cycle
/// of that quotient, either no part or one of `polys`.
std::vector<IdealRep> ideal_corpus(const Graph& g, const PairLattice& lattice, const std::vector<Poly>& polys);

/// Outcome of the per-graph equivalence suites.
struct GraphChecks {
    bool condition_k;
    /// Some admissible pair's quotient has a cycle without exits.
    bool exit_free_quotient_cycle;
    bool regular;
    bool regularity_consistent;
    std::size_t kap_pairs;
    std::size_t kap_failures;
    std::size_t union_prime_chains;

    bool k_consistent() const { return condition_k != exit_free_quotient_cycle; }
};

GraphChecks check_graph(const Graph& g, std::size_t cap = kDefaultCap);

struct SweepReport {
    std::size_t graphs = 0;
    std::size_t condition_k = 0;
    std::size_t k_mismatches = 0;
    std::size_t regular = 0;
    std::size_t regularity_mismatches = 0;
    std::size_t kap_pairs = 0;
    std::size_t kap_failures = 0;
    std::size_t union_prime_chains = 0;
    /// First graph failing any suite.
    std::optional<Graph> first_failure;
};

SweepReport run_sweep(std::size_t max_vertices, const std::vector<Multiplicity>& mults, std::size_t cap = kDefaultCap);

}  // namespace lpa
