#include "lpa/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lpa/error.hpp"

namespace lpa {

IdealRep SpecNode::instance(const Poly& f) const {
    if (!is_family()) throw InvalidArgument("only family nodes have instances");
    return IdealRep{pair, {PolyPart{*cycle, f.monic()}}, f.field()};
}

std::string SpecNode::key(const Graph& g) const {
    std::string out = describe(g, IdealRep::graded(pair, FieldSpec::rationals()));
    if (is_family()) {
        out += "+<f(";
        for (std::size_t i = 0; i < cycle->vertices().size(); ++i) {
            if (i != 0) out += ",";
            out += g.name(cycle->vertices()[i]);
        }
        out += ")>";
    }
    return out;
}

bool spec_leq(const SpecNode& a, const SpecNode& b) {
    if (!pair_leq(a.pair, b.pair)) return false;
    if (!a.is_family()) return true;
    if (b.is_family() && a.cycle == b.cycle) return true;
    // Every member of a lies in b only if the cycle's vertices do.
    return a.cycle->vertex_set().subset_of(b.pair.h);
}

SpecPoset::SpecPoset(std::vector<SpecNode> nodes) : nodes_(std::move(nodes)) {
    const auto n = nodes_.size();
    leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) leq_[i * n + j] = spec_leq(nodes_[i], nodes_[j]);
    }
}

bool SpecPoset::is_chain() const {
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            if (!leq(i, j) && !leq(j, i)) return false;
        }
    }
    return true;
}

std::size_t SpecPoset::family_count() const {
    return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const SpecNode& n) { return n.is_family(); }));
}

SpecPoset compute_spec(const Graph& g, std::size_t cap) {
    std::vector<SpecNode> nodes;
    const auto cycles = simple_cycles(g);
    for (VertexSet h : enumerate_hss(g, cap)) {
        if (h == g.all()) continue;
        const VertexSet rest = g.all() - h;
        const VertexSet bh = breaking_vertices(g, h);

        // Case (1): I(H, B_H) with E^0 \ H downward directed.
        if (is_downward_directed(g, rest)) nodes.push_back({SpecNodeKind::graded, {h, bh}, PrimeCase::graded_directed, {}, {}});

        // Case (2): I(H, B_H \ {u}) with E^0 \ H = {v : v >= u}.
        bh.for_each([&](VertexId u) {
            if (rest == ancestors(g, u)) {
                nodes.push_back({SpecNodeKind::graded, {h, bh - VertexSet::single(u)}, PrimeCase::breaking_minus_u, u, {}});
            }
        });

        // Case (3): a WK cycle with source u and E^0 \ H = {v : v >= u}.
        for (const auto& info : cycles) {
            if (!info.is_wk || info.cycle.vertex_set().intersects(h)) continue;
            const VertexId u = info.cycle.base();
            if (rest == ancestors(g, u)) nodes.push_back({SpecNodeKind::family, {h, bh}, PrimeCase::wk_poly, u, info.cycle});
        }
    }
    std::sort(nodes.begin(), nodes.end(), [](const SpecNode& a, const SpecNode& b) {
        if (a.pair != b.pair) return canonical_less(a.pair, b.pair);
        if (a.kind != b.kind) return a.kind == SpecNodeKind::graded;
        if (a.is_family()) return *a.cycle < *b.cycle;
        return false;
    });
    return SpecPoset(std::move(nodes));
}

std::vector<std::pair<std::size_t, std::size_t>> covers(const SpecPoset& s) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (!s.lt(i, j)) continue;
            bool between = false;
            for (std::size_t k = 0; k < s.size() && !between; ++k) between = s.lt(i, k) && s.lt(k, j);
            if (!between) out.emplace_back(i, j);
        }
    }
    return out;
}

std::pair<std::size_t, std::size_t> kaplansky_pair(const SpecPoset& s, std::size_t a, std::size_t b) {
    if (a >= s.size() || b >= s.size() || !s.lt(a, b)) throw InvalidArgument("kaplansky_pair needs a < b");
    const auto n = s.size();

    auto first_extremal = [&](const std::function<bool(std::size_t)>& in_set, bool maximal) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!in_set(i)) continue;
            bool extremal = true;
            for (std::size_t j = 0; j < n && extremal; ++j) {
                if (in_set(j) && (maximal ? s.lt(i, j) : s.lt(j, i))) extremal = false;
            }
            if (extremal) return i;
        }
        throw InvalidArgument("empty candidate set");
    };

    // The element x of B \ A from the general argument is modelled by a
    // minimal step above a.
    const std::size_t x = first_extremal([&](std::size_t i) { return s.lt(a, i) && s.leq(i, b); }, false);
    const std::size_t m = first_extremal([&](std::size_t i) { return s.leq(a, i) && s.lt(i, b) && !s.leq(x, i); }, true);
    const std::size_t top = first_extremal([&](std::size_t i) { return s.lt(m, i) && s.leq(i, b) && s.leq(x, i); }, false);
    return {m, top};
}

std::vector<std::vector<std::size_t>> union_prime_scan(const Graph& g, const SpecPoset& s, const PairLattice& lattice,
                                                       std::size_t max_chains) {
    const auto n = s.size();
    // Linear extension: nodes by number of nodes below them.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) below[i] += s.lt(j, i) ? 1 : 0;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });

    const FieldSpec field = FieldSpec::rationals();
    std::vector<std::vector<std::size_t>> bad;
    std::vector<std::size_t> chain;
    std::size_t seen = 0;

    auto check = [&]() {
        const std::size_t top = chain.back();
        bool ok = std::all_of(chain.begin(), chain.end(), [&](std::size_t i) { return s.leq(i, top); });
        if (ok && std::none_of(chain.begin(), chain.end(), [&](std::size_t i) { return s.node(i).is_family(); })) {
            IdealRep acc = s.node(chain.front()).graded_ideal(field);
            for (std::size_t i : chain) acc = sum(g, lattice, acc, s.node(i).graded_ideal(field));
            ok = acc == s.node(top).graded_ideal(field) && classify_prime(g, acc).is_prime();
        }
        if (!ok) bad.push_back(chain);
    };

    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        for (std::size_t k = from; k < n; ++k) {
            const std::size_t v = order[k];
            if (!chain.empty() && !s.lt(chain.back(), v)) continue;
            if (++seen > max_chains) throw CapExceeded("more than " + std::to_string(max_chains) + " chains");
            chain.push_back(v);
            check();
            extend(k + 1);
            chain.pop_back();
        }
    };
    extend(0);
    return bad;
}

RegularityReport regularity_report(const Graph& g, std::size_t cap) {
    RegularityReport r{graph_report(g).acyclic, {}, true};
    bool all_acyclic = true;
    const SpecPoset spec = compute_spec(g, cap);
    for (const auto& node : spec.nodes()) {
        if (node.is_family()) continue;
        const auto q = quotient(g, node.pair);
        const bool acyclic = simple_cycles(q->graph).empty();
        all_acyclic = all_acyclic && acyclic;
        r.witnesses.push_back({node.pair, acyclic});
    }
    r.consistent = r.regular == all_acyclic;
    return r;
}

std::vector<IdealRep> instantiate(const SpecNode& family, FieldSpec field, int max_degree) {
    if (!family.is_family()) throw InvalidArgument("only family nodes have instances");
    if (field.is_rationals()) throw Unsupported("family instances can only be enumerated over a prime field");
    std::vector<IdealRep> out;
    for (const auto& f : monic_irreducibles(field, max_degree, true)) out.push_back(family.instance(f));
    return out;
}

bool semiprime_oracle(const Graph& g, const SpecPoset& spec, const PairLattice& lattice, const IdealRep& i,
                      int degree_bound) {
    if (i.field.is_rationals()) throw Unsupported("the semiprime oracle needs a prime field");
    for (const auto& part : i.parts) {
        if (part.f.degree() > degree_bound) throw Unsupported("polynomial part above the degree bound");
    }
    if (!is_proper(g, i)) return true;

    std::vector<IdealRep> primes;
    for (const auto& node : spec.nodes()) {
        if (!node.is_family()) {
            IdealRep p = node.graded_ideal(i.field);
            if (contains(p, i)) primes.push_back(std::move(p));
            continue;
        }
        for (const auto& part : i.parts) {
            if (!(part.cycle == *node.cycle)) continue;
            for (const auto& factor : irreducible_factors(part.f)) {
                IdealRep p = node.instance(factor.factor);
                if (contains(p, i)) primes.push_back(std::move(p));
            }
        }
    }
    if (primes.empty()) throw InvalidArgument("no prime contains a proper ideal; the spectrum is incomplete");

    std::vector<IdealRep> minimal;
    for (std::size_t a = 0; a < primes.size(); ++a) {
        bool is_min = true;
        for (std::size_t b = 0; b < primes.size() && is_min; ++b) {
            if (a != b && contains(primes[a], primes[b]) && !(primes[a] == primes[b])) is_min = false;
        }
        if (is_min && std::find(minimal.begin(), minimal.end(), primes[a]) == minimal.end()) minimal.push_back(primes[a]);
    }

    IdealRep acc = minimal.front();
    for (std::size_t k = 1; k < minimal.size(); ++k) acc = intersect(g, lattice, acc, minimal[k]);
    return acc == i;
}

}  // namespace lpa
