#include "lpa/sweep.hpp"

#include <algorithm>
#include <numeric>

#include "lpa/error.hpp"
#include "lpa/spectrum.hpp"

namespace lpa {

void for_each_graph(std::size_t max_vertices, const std::vector<Multiplicity>& mults,
                    const std::function<void(const Graph&)>& visit) {
    if (max_vertices == 0 || max_vertices > 4) throw InvalidArgument("graph sweeps support 1 to 4 vertices");
    if (mults.empty()) throw InvalidArgument("at least one multiplicity is needed");
    const std::size_t k = mults.size();

    for (std::size_t n = 1; n <= max_vertices; ++n) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
        std::vector<std::vector<std::size_t>> perms;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        // digits[i*n+j] indexes `mults`; a graph is kept only when its digit
        // string is the least in its orbit under vertex relabelling.
        std::vector<std::size_t> digits(n * n, 0), image(n * n);
        while (true) {
            bool least = true;
            for (std::size_t p = 1; p < perms.size() && least; ++p) {
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) image[perms[p][i] * n + perms[p][j]] = digits[i * n + j];
                }
                least = !(image < digits);
            }
            if (least) {
                std::vector<EdgeSpec> edges;
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        const Multiplicity m = mults[digits[i * n + j]];
                        if (!m.is_zero()) edges.push_back({names[i], names[j], m});
                    }
                }
                visit(Graph(names, edges));
            }
            std::size_t pos = n * n;
            while (pos > 0 && digits[pos - 1] == k - 1) digits[--pos] = 0;
            if (pos == 0) break;
            ++digits[pos - 1];
        }
    }
}

std::vector<IdealRep> ideal_corpus(const Graph& g, const PairLattice& lattice, const std::vector<Poly>& polys) {
    const FieldSpec field = polys.empty() ? FieldSpec::rationals() : polys.front().field();
    std::vector<IdealRep> out;
    for (const auto& pair : lattice.pairs()) {
        const auto cycles = exit_free_cycles(g, pair);
        std::vector<std::size_t> choice(cycles.size(), 0);
        while (true) {
            std::vector<PolyPart> parts;
            for (std::size_t c = 0; c < cycles.size(); ++c) {
                if (choice[c] != 0) parts.push_back({cycles[c], polys[choice[c] - 1]});
            }
            out.push_back(canonicalize(g, lattice, pair, std::move(parts), field));
            std::size_t pos = 0;
            while (pos < choice.size() && choice[pos] == polys.size()) choice[pos++] = 0;
            if (pos == choice.size()) break;
            ++choice[pos];
        }
    }
    return out;
}

GraphChecks check_graph(const Graph& g, std::size_t cap) {
    GraphChecks c{};
    c.condition_k = graph_report(g).condition_k;
    const PairLattice lattice(g, cap);
    for (const auto& pair : lattice.pairs()) {
        const auto q = quotient(g, pair);
        if (!q) continue;
        for (const auto& info : simple_cycles(q->graph)) c.exit_free_quotient_cycle = c.exit_free_quotient_cycle || !info.has_exit;
    }

    const auto reg = regularity_report(g, cap);
    c.regular = reg.regular;
    c.regularity_consistent = reg.consistent;

    const SpecPoset spec = compute_spec(g, cap);
    for (std::size_t a = 0; a < spec.size(); ++a) {
        for (std::size_t b = 0; b < spec.size(); ++b) {
            if (!spec.lt(a, b)) continue;
            ++c.kap_pairs;
            bool ok = true;
            try {
                const auto [p, q] = kaplansky_pair(spec, a, b);
                ok = spec.leq(a, p) && spec.lt(p, q) && spec.leq(q, b);
                for (std::size_t t = 0; t < spec.size() && ok; ++t) ok = !(spec.lt(p, t) && spec.lt(t, q));
            } catch (const InvalidArgument&) {
                ok = false;
            }
            if (!ok) ++c.kap_failures;
        }
    }
    c.union_prime_chains = union_prime_scan(g, spec, lattice).size();
    return c;
}

SweepReport run_sweep(std::size_t max_vertices, const std::vector<Multiplicity>& mults, std::size_t cap) {
    SweepReport r;
    for_each_graph(max_vertices, mults, [&](const Graph& g) {
        const GraphChecks c = check_graph(g, cap);
        ++r.graphs;
        r.condition_k += c.condition_k ? 1 : 0;
        r.k_mismatches += c.k_consistent() ? 0 : 1;
        r.regular += c.regular ? 1 : 0;
        r.regularity_mismatches += c.regularity_consistent ? 0 : 1;
        r.kap_pairs += c.kap_pairs;
        r.kap_failures += c.kap_failures;
        r.union_prime_chains += c.union_prime_chains;
        const bool failed = !c.k_consistent() || !c.regularity_consistent || c.kap_failures != 0 || c.union_prime_chains != 0;
        if (failed && !r.first_failure) r.first_failure = g;
    });
    return r;
}

}  // namespace lpa
