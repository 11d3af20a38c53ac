#include "lpa/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lpa/error.hpp"
#include "lpa/spectrum.hpp"

namespace lpa {

FinPoset::FinPoset(std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& lt)
    : elements_(std::move(elements)), below_(elements_.size()) {
    const auto n = elements_.size();
    if (n > kMaxVertices) throw InvalidArgument("posets are limited to " + std::to_string(kMaxVertices) + " elements");
    std::set<std::string> seen;
    for (const auto& e : elements_) {
        if (e.empty()) throw InvalidArgument("empty element name");
        if (!seen.insert(e).second) throw InvalidArgument("duplicate element " + e);
    }
    for (auto [a, b] : lt) {
        if (a >= n || b >= n) throw InvalidArgument("relation names an unknown element");
        below_[b].insert(static_cast<VertexId>(a));
    }
    // Warshall on bitmasks: anything below k is below whatever k is below.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            if (below_[j].contains(static_cast<VertexId>(k))) below_[j] |= below_[k];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (below_[i].contains(static_cast<VertexId>(i))) throw InvalidArgument("relation has a cycle through " + elements_[i]);
    }
}

std::size_t FinPoset::index(const std::string& name) const {
    const auto it = std::find(elements_.begin(), elements_.end(), name);
    if (it == elements_.end()) throw InvalidArgument("unknown element " + name);
    return static_cast<std::size_t>(it - elements_.begin());
}

VertexSet FinPoset::strictly_above(std::size_t a) const {
    VertexSet out;
    for (std::size_t b = 0; b < size(); ++b) {
        if (lt(a, b)) out.insert(static_cast<VertexId>(b));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinPoset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [a, b] : relations()) {
        if (!strictly_above(a).intersects(below_[b])) out.emplace_back(a, b);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinPoset::relations() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = 0; b < size(); ++b) {
            if (lt(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

namespace {

VertexSet down_closed(const FinPoset& p, std::size_t a) { return p.strictly_below(a) | VertexSet::single(static_cast<VertexId>(a)); }

VertexSet lower_bounds(const FinPoset& p, VertexSet s) {
    VertexSet out = p.all();
    s.for_each([&](VertexId x) { out &= down_closed(p, x); });
    return out;
}

}  // namespace

bool is_downward_directed(const FinPoset& p, VertexSet s) {
    if (s.empty()) return false;
    const auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!(down_closed(p, m[i]) & down_closed(p, m[j]) & s).empty()) continue;
            return false;
        }
    }
    return true;
}

std::vector<VertexSet> downward_directed_subsets(const FinPoset& p, VertexSet within, std::size_t bound) {
    if (within.size() > bound) {
        throw CapExceeded("subset enumeration over " + std::to_string(within.size()) + " elements exceeds the bound " +
                          std::to_string(bound));
    }
    std::vector<VertexSet> out;
    for_each_subset(within, [&](VertexSet s) {
        if (is_downward_directed(p, s)) out.push_back(s);
    });
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return canonical_less(a, b); });
    return out;
}

std::optional<std::size_t> glb(const FinPoset& p, VertexSet s) {
    if (s.empty()) throw InvalidArgument("glb of the empty set");
    const VertexSet lb = lower_bounds(p, s);
    std::optional<std::size_t> out;
    lb.for_each([&](VertexId x) {
        if (lb.subset_of(down_closed(p, x))) out = x;
    });
    return out;
}

std::optional<std::size_t> least_element(const FinPoset& p, VertexSet s) {
    std::optional<std::size_t> out;
    s.for_each([&](VertexId x) {
        if (s.subset_of(p.strictly_above(x) | VertexSet::single(x))) out = x;
    });
    return out;
}

VertexSet r_set(const FinPoset& p, std::size_t bound) {
    VertexSet out = p.all();
    for (VertexSet s : downward_directed_subsets(p, p.all(), bound)) {
        if (least_element(p, s)) continue;
        if (auto g = glb(p, s)) out.erase(static_cast<VertexId>(*g));
    }
    return out;
}

PropertyReport check_properties(const FinPoset& p, std::size_t bound) {
    PropertyReport r;
    const auto directed = downward_directed_subsets(p, p.all(), bound);
    VertexSet rp = p.all();
    for (VertexSet s : directed) {
        if (least_element(p, s)) continue;
        if (auto g = glb(p, s)) rp.erase(static_cast<VertexId>(*g));
    }
    const auto directed_in_r = downward_directed_subsets(p, rp, bound);

    for (VertexSet s : directed) {
        const auto g = glb(p, s);
        if (!g) {
            if (r.glb) r.glb_failure = s;
            r.glb = false;
            continue;
        }
        rp.for_each([&](VertexId x) {
            if (!r.dc || !p.leq(*g, x)) return;
            bool above_member = false;
            s.for_each([&](VertexId m) { above_member = above_member || p.leq(m, x); });
            if (!above_member) {
                r.dc = false;
                r.dc_failure = std::make_pair(s, std::size_t{x});
            }
        });
        const bool matched = std::any_of(directed_in_r.begin(), directed_in_r.end(), [&](VertexSet t) { return glb(p, t) == g; });
        if (!matched && r.dd) {
            r.dd = false;
            r.dd_failure = s;
        }
    }

    const auto covers = p.covers();
    for (auto [a, b] : p.relations()) {
        const auto it = std::find_if(covers.begin(), covers.end(), [&](const auto& c) {
            return p.leq(a, c.first) && p.leq(c.second, b);
        });
        if (it == covers.end()) {
            if (r.kap) r.kap_failure = std::make_pair(a, b);
            r.kap = false;
        } else {
            r.kap_pairs.push_back({a, b, it->first, it->second});
        }
    }
    return r;
}

Graph realize(const FinPoset& p) {
    std::vector<EdgeSpec> edges;
    for (auto [lo, hi] : p.relations()) edges.push_back({p.name(hi), p.name(lo), Multiplicity::omega()});
    return Graph(p.elements(), edges);
}

RealizationResult verify_realization(const FinPoset& p, std::size_t cap) {
    const Graph g = realize(p);
    const SpecPoset spec = compute_spec(g, cap);
    RealizationResult r{false, {}, {}, ""};
    if (spec.family_count() != 0) {
        r.reason = "spectrum has family nodes";
        return r;
    }
    if (spec.size() != p.size()) {
        r.reason = "spectrum has " + std::to_string(spec.size()) + " primes for " + std::to_string(p.size()) + " elements";
        return r;
    }
    auto to_graph = [&](VertexSet s) {
        VertexSet out;
        s.for_each([&](VertexId x) { out.insert(g.index(p.name(x))); });
        return out;
    };
    for (std::size_t e = 0; e < p.size(); ++e) {
        const AdmissiblePair want{to_graph(p.all() - (p.strictly_above(e) | VertexSet::single(static_cast<VertexId>(e)))), {}};
        std::optional<std::size_t> hit;
        for (std::size_t k = 0; k < spec.size(); ++k) {
            if (spec.node(k).pair == want) hit = k;
        }
        if (!hit) {
            r.reason = "no prime with H = {q : q not >= " + p.name(e) + "}";
            return r;
        }
        r.mapping.push_back(*hit);
        r.pairs.push_back(want);
    }
    std::vector<std::size_t> sorted = r.mapping;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        r.reason = "two elements map to the same prime";
        return r;
    }
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; b < p.size(); ++b) {
            if (p.leq(a, b) != spec.leq(r.mapping[a], r.mapping[b])) {
                r.reason = "order differs at (" + p.name(a) + ", " + p.name(b) + ")";
                return r;
            }
        }
    }
    r.ok = true;
    return r;
}

std::vector<FinPoset> enumerate_posets(std::size_t n) {
    if (n > 6) throw InvalidArgument("poset enumeration is limited to 6 elements");
    // Relations are bitmasks over the upper-triangular slots i < j; every
    // poset has such a natural labelling.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    }
    std::vector<std::size_t> perm(n);
    std::set<std::vector<bool>> canon_seen;
    std::vector<FinPoset> out;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<bool> rel(n * n, false);
        for (std::size_t k = 0; k < slots.size(); ++k) {
            if ((mask >> k) & 1U) rel[slots[k].first * n + slots[k].second] = true;
        }
        bool transitive = true;
        for (std::size_t a = 0; a < n && transitive; ++a) {
            for (std::size_t b = 0; b < n && transitive; ++b) {
                if (!rel[a * n + b]) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (rel[b * n + c] && !rel[a * n + c]) {
                        transitive = false;
                        break;
                    }
                }
            }
        }
        if (!transitive) continue;

        std::iota(perm.begin(), perm.end(), 0);
        std::vector<bool> best;
        do {
            std::vector<bool> image(n * n, false);
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) image[perm[a] * n + perm[b]] = rel[a * n + b];
            }
            if (best.empty() || image < best) best = std::move(image);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!canon_seen.insert(best).second) continue;

        std::vector<std::pair<std::size_t, std::size_t>> lt;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (rel[a * n + b]) lt.emplace_back(a, b);
            }
        }
        out.emplace_back(names, lt);
    }
    return out;
}

}  // namespace lpa
