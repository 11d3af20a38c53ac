#include "lpa/hss.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "lpa/error.hpp"

namespace lpa {

bool is_hereditary(const Graph& g, VertexSet h) {
    bool ok = h.subset_of(g.all());
    h.for_each([&](VertexId v) { ok = ok && g.successors(v).subset_of(h); });
    return ok;
}

bool is_saturated(const Graph& g, VertexSet h) {
    for (VertexId v = 0; v < g.size(); ++v) {
        if (h.contains(v) || g.kind(v) != VertexKind::regular) continue;
        if (g.successors(v).subset_of(h)) return false;
    }
    return true;
}

VertexSet closure(const Graph& g, VertexSet x) {
    if (!x.subset_of(g.all())) throw InvalidArgument("vertex set is not contained in the graph");
    VertexSet h = tree(g, x);
    for (bool grew = true; grew;) {
        grew = false;
        for (VertexId v = 0; v < g.size(); ++v) {
            if (!h.contains(v) && g.kind(v) == VertexKind::regular && g.successors(v).subset_of(h)) {
                h.insert(v);
                grew = true;
            }
        }
    }
    return h;
}

std::vector<VertexSet> enumerate_hss(const Graph& g, std::size_t cap) {
    if (cap == 0) throw InvalidArgument("cap must be at least 1");
    // Every hereditary saturated set is reached from the empty set by
    // repeatedly closing up after adding one vertex.
    std::unordered_set<VertexSet> seen;
    std::deque<VertexSet> queue;
    const VertexSet bottom = closure(g, {});
    seen.insert(bottom);
    queue.push_back(bottom);
    while (!queue.empty()) {
        const VertexSet h = queue.front();
        queue.pop_front();
        (g.all() - h).for_each([&](VertexId v) {
            VertexSet next = closure(g, h | VertexSet::single(v));
            if (seen.insert(next).second) {
                if (seen.size() > cap) {
                    throw CapExceeded("more than " + std::to_string(cap) + " hereditary saturated sets");
                }
                queue.push_back(next);
            }
        });
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
    return out;
}

VertexSet breaking_vertices(const Graph& g, VertexSet h) {
    if (!is_hereditary_saturated(g, h)) throw InvalidArgument("set is not hereditary saturated");
    VertexSet out;
    const VertexSet rest = g.all() - h;
    rest.for_each([&](VertexId w) {
        if (g.kind(w) != VertexKind::infinite_emitter) return;
        Multiplicity outside;
        rest.for_each([&](VertexId x) { outside = outside + g.mult(w, x); });
        if (!outside.is_zero() && !outside.is_omega()) out.insert(w);
    });
    return out;
}

bool canonical_less(const AdmissiblePair& a, const AdmissiblePair& b) {
    if (a.h != b.h) return canonical_less(a.h, b.h);
    return canonical_less(a.s, b.s);
}

bool is_admissible(const Graph& g, const AdmissiblePair& p) {
    return is_hereditary_saturated(g, p.h) && p.s.subset_of(breaking_vertices(g, p.h));
}

void check_admissible(const Graph& g, const AdmissiblePair& p) {
    if (!p.h.subset_of(g.all()) || !p.s.subset_of(g.all())) throw InvalidArgument("pair names unknown vertices");
    if (!is_hereditary(g, p.h)) throw InvalidArgument("H is not hereditary");
    if (!is_saturated(g, p.h)) throw InvalidArgument("H is not saturated");
    if (!p.s.subset_of(breaking_vertices(g, p.h))) throw InvalidArgument("S is not contained in the breaking vertices of H");
}

std::vector<AdmissiblePair> enumerate_admissible_pairs(const Graph& g, std::size_t cap) {
    std::vector<AdmissiblePair> out;
    for (VertexSet h : enumerate_hss(g, cap)) {
        std::vector<VertexSet> subsets;
        for_each_subset(breaking_vertices(g, h), [&](VertexSet s) { subsets.push_back(s); });
        std::sort(subsets.begin(), subsets.end(), [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
        for (VertexSet s : subsets) {
            out.push_back({h, s});
            if (out.size() > cap) throw CapExceeded("more than " + std::to_string(cap) + " admissible pairs");
        }
    }
    return out;
}

std::optional<VertexId> QuotientGraph::original_index(VertexId ambient) const {
    for (VertexId q = 0; q < source_vertex.size(); ++q) {
        if (source_vertex[q] == ambient && origin[q] == QuotientVertexOrigin::original) return q;
    }
    return std::nullopt;
}

std::optional<QuotientGraph> quotient(const Graph& g, const AdmissiblePair& p) {
    check_admissible(g, p);
    if (p.h == g.all()) return std::nullopt;

    const VertexSet kept = g.all() - p.h;
    const VertexSet primed = breaking_vertices(g, p.h) - p.s;

    std::set<std::string> taken(g.names().begin(), g.names().end());
    std::vector<std::string> prime_name(g.size());
    primed.for_each([&](VertexId v) {
        std::string n = g.name(v) + "'";
        while (taken.count(n) != 0) n += "'";
        taken.insert(n);
        prime_name[v] = n;
    });

    std::vector<std::string> names = g.to_names(kept);
    primed.for_each([&](VertexId v) { names.push_back(prime_name[v]); });

    std::vector<EdgeSpec> edges;
    kept.for_each([&](VertexId s) {
        kept.for_each([&](VertexId t) {
            const auto m = g.mult(s, t);
            if (m.is_zero()) return;
            edges.push_back({g.name(s), g.name(t), m});
            if (primed.contains(t)) edges.push_back({g.name(s), prime_name[t], m});
        });
    });

    Graph q(names, edges);
    std::vector<VertexId> source(q.size());
    std::vector<QuotientVertexOrigin> origin(q.size());
    kept.for_each([&](VertexId v) {
        const auto i = q.index(g.name(v));
        source[i] = v;
        origin[i] = QuotientVertexOrigin::original;
    });
    primed.for_each([&](VertexId v) {
        const auto i = q.index(prime_name[v]);
        source[i] = v;
        origin[i] = QuotientVertexOrigin::primed;
    });
    return QuotientGraph{std::move(q), std::move(source), std::move(origin)};
}

PairLattice::PairLattice(const Graph& g, std::size_t cap) : pairs_(enumerate_admissible_pairs(g, cap)) {}

PairLattice PairLattice::from_pairs(std::vector<AdmissiblePair> pairs) {
    PairLattice l;
    l.pairs_ = std::move(pairs);
    return l;
}

std::size_t PairLattice::index_of(const AdmissiblePair& p) const {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i] == p) return i;
    }
    throw InvalidArgument("pair is not admissible for this graph");
}

AdmissiblePair PairLattice::join(const AdmissiblePair& a, const AdmissiblePair& b) const {
    const AdmissiblePair* best = nullptr;
    for (const auto& c : pairs_) {
        if (!pair_leq(a, c) || !pair_leq(b, c)) continue;
        if (best == nullptr || pair_leq(c, *best)) best = &c;
    }
    if (best == nullptr) throw InvalidArgument("pairs have no common upper bound in this lattice");
    return *best;
}

AdmissiblePair PairLattice::meet(const AdmissiblePair& a, const AdmissiblePair& b) const {
    const AdmissiblePair* best = nullptr;
    for (const auto& c : pairs_) {
        if (!pair_leq(c, a) || !pair_leq(c, b)) continue;
        if (best == nullptr || pair_leq(*best, c)) best = &c;
    }
    if (best == nullptr) throw InvalidArgument("pairs have no common lower bound in this lattice");
    return *best;
}

std::vector<std::pair<std::size_t, std::size_t>> PairLattice::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto n = pairs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !pair_leq(pairs_[i], pairs_[j])) continue;
            bool between = false;
            for (std::size_t k = 0; k < n && !between; ++k) {
                between = k != i && k != j && pair_leq(pairs_[i], pairs_[k]) && pair_leq(pairs_[k], pairs_[j]);
            }
            if (!between) out.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace lpa
