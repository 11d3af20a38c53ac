#include "lpa/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lpa/error.hpp"

namespace lpa {

const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::sink: return "sink";
        case VertexKind::regular: return "regular";
        case VertexKind::infinite_emitter: return "infinite_emitter";
    }
    return "?";
}

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : names_(std::move(vertices)) {
    if (names_.empty()) throw ParseError("graph must have at least one vertex");
    if (names_.size() > kMaxVertices) {
        throw ParseError("graph has " + std::to_string(names_.size()) + " vertices; at most " +
                         std::to_string(kMaxVertices) + " are supported");
    }
    for (const auto& n : names_) {
        if (n.empty()) throw ParseError("vertex names must be nonempty");
    }
    std::sort(names_.begin(), names_.end());
    if (auto it = std::adjacent_find(names_.begin(), names_.end()); it != names_.end()) {
        throw ParseError("duplicate vertex '" + *it + "'");
    }

    const std::size_t n = names_.size();
    mult_.assign(n * n, Multiplicity{});
    out_degree_.assign(n, Multiplicity{});
    succ_.assign(n, VertexSet{});
    pred_.assign(n, VertexSet{});
    for (const auto& e : edges) {
        const auto s = find(e.source);
        const auto t = find(e.target);
        if (!s) throw ParseError("edge source '" + e.source + "' is not a declared vertex");
        if (!t) throw ParseError("edge target '" + e.target + "' is not a declared vertex");
        if (e.mult.is_zero()) continue;
        auto& m = mult_[*s * n + *t];
        m = m + e.mult;
        out_degree_[*s] = out_degree_[*s] + e.mult;
        succ_[*s].insert(*t);
        pred_[*t].insert(*s);
    }
}

std::optional<VertexId> Graph::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<VertexId>(it - names_.begin());
}

VertexId Graph::index(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw InvalidArgument("unknown vertex '" + std::string(name) + "'");
}

VertexSet Graph::to_set(const std::vector<std::string>& names) const {
    VertexSet s;
    for (const auto& n : names) s.insert(index(n));
    return s;
}

std::vector<std::string> Graph::to_names(VertexSet s) const {
    std::vector<std::string> out;
    s.for_each([&](VertexId v) { out.push_back(names_[v]); });
    return out;
}

VertexKind Graph::kind(VertexId v) const {
    const auto d = out_degree_.at(v);
    if (d.is_zero()) return VertexKind::sink;
    if (d.is_omega()) return VertexKind::infinite_emitter;
    return VertexKind::regular;
}

std::vector<EdgeSpec> Graph::edges() const {
    std::vector<EdgeSpec> out;
    for (VertexId s = 0; s < size(); ++s) {
        for (VertexId t = 0; t < size(); ++t) {
            if (!mult(s, t).is_zero()) out.push_back({names_[s], names_[t], mult(s, t)});
        }
    }
    return out;
}

Cycle::Cycle(const Graph& g, std::vector<VertexId> verts) : verts_(std::move(verts)) {
    if (verts_.empty()) throw InvalidArgument("a cycle needs at least one vertex");
    for (auto v : verts_) {
        if (v >= g.size()) throw InvalidArgument("cycle vertex out of range");
        if (set_.contains(v)) throw InvalidArgument("cycle passes through vertex '" + g.name(v) + "' twice");
        set_.insert(v);
    }
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const auto a = verts_[i];
        const auto b = verts_[(i + 1) % verts_.size()];
        if (g.mult(a, b).is_zero()) {
            throw InvalidArgument("no edge " + g.name(a) + " -> " + g.name(b) + " along cycle");
        }
    }
    std::rotate(verts_.begin(), std::min_element(verts_.begin(), verts_.end()), verts_.end());
}

bool reaches(const Graph& g, VertexId u, VertexId v) {
    if (u >= g.size() || v >= g.size()) throw InvalidArgument("unknown vertex index");
    return tree(g, u).contains(v);
}

VertexSet tree(const Graph& g, VertexSet s) {
    VertexSet seen = s;
    VertexSet frontier = s;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](VertexId v) { next |= g.successors(v); });
        frontier = next - seen;
        seen |= next;
    }
    return seen;
}

VertexSet tree(const Graph& g, VertexId u) {
    if (u >= g.size()) throw InvalidArgument("unknown vertex index");
    return tree(g, VertexSet::single(u));
}

VertexSet ancestors(const Graph& g, VertexId u) {
    if (u >= g.size()) throw InvalidArgument("unknown vertex index");
    VertexSet seen = VertexSet::single(u);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](VertexId v) { next |= g.predecessors(v); });
        frontier = next - seen;
        seen |= next;
    }
    return seen;
}

bool is_downward_directed(const Graph& g, VertexSet d) {
    if (d.empty()) return false;
    if (!d.subset_of(g.all())) throw InvalidArgument("vertex set is not contained in the graph");
    const auto members = d.members();
    std::vector<VertexSet> trees;
    trees.reserve(members.size());
    for (auto v : members) trees.push_back(tree(g, v) & d);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!trees[i].intersects(trees[j])) return false;
        }
    }
    return true;
}

std::vector<CycleInfo> simple_cycles(const Graph& g) {
    std::vector<std::vector<VertexId>> found;
    std::vector<VertexId> path;
    VertexSet on_path;

    // Cycles are reported once, from their least vertex.
    std::function<void(VertexId, VertexId)> extend = [&](VertexId start, VertexId v) {
        g.successors(v).for_each([&](VertexId w) {
            if (w == start) {
                found.push_back(path);
            } else if (w > start && !on_path.contains(w)) {
                path.push_back(w);
                on_path.insert(w);
                extend(start, w);
                on_path.erase(w);
                path.pop_back();
            }
        });
    };
    for (VertexId s = 0; s < g.size(); ++s) {
        path = {s};
        on_path = VertexSet::single(s);
        extend(s, s);
    }

    std::vector<CycleInfo> out;
    out.reserve(found.size());
    for (auto& verts : found) {
        Cycle c(g, std::move(verts));
        bool exit = false;
        bool single_edges = true;
        const auto& vs = c.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const auto next = vs[(i + 1) % vs.size()];
            if (g.out_degree(vs[i]) != Multiplicity(1)) exit = true;
            if (g.mult(vs[i], next) != Multiplicity(1)) single_edges = false;
        }
        out.push_back({std::move(c), exit, single_edges});
    }
    std::sort(out.begin(), out.end(), [](const CycleInfo& a, const CycleInfo& b) { return a.cycle < b.cycle; });

    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < out.size() && out[i].is_wk; ++j) {
            if (i != j && out[i].cycle.vertex_set().intersects(out[j].cycle.vertex_set())) out[i].is_wk = false;
        }
    }
    return out;
}

namespace {

std::size_t saturating_mul(Multiplicity m, std::size_t n, std::size_t limit) {
    if (m.is_zero() || n == 0) return 0;
    if (m.is_omega()) return limit;
    const auto c = m.count();
    return c >= limit || n >= limit ? limit : std::min<std::size_t>(limit, c * n);
}

}  // namespace

std::size_t count_simple_closed_paths(const Graph& g, VertexId v, std::size_t limit) {
    if (v >= g.size()) throw InvalidArgument("unknown vertex index");
    const VertexSet others = g.all() - VertexSet::single(v);

    // Vertices strictly inside some simple closed path at v: reachable from
    // v and reaching v, both without passing through v.
    VertexSet fwd = g.successors(v) & others;
    for (VertexSet frontier = fwd; !frontier.empty();) {
        VertexSet next;
        frontier.for_each([&](VertexId w) { next |= g.successors(w); });
        next &= others;
        frontier = next - fwd;
        fwd |= next;
    }
    VertexSet back = g.predecessors(v) & others;
    for (VertexSet frontier = back; !frontier.empty();) {
        VertexSet next;
        frontier.for_each([&](VertexId w) { next |= g.predecessors(w); });
        next &= others;
        frontier = next - back;
        back |= next;
    }
    const VertexSet inner = fwd & back;

    // A cycle among the inner vertices can be traversed any number of times.
    enum class Mark { fresh, active, done };
    std::vector<Mark> mark(g.size(), Mark::fresh);
    std::vector<std::size_t> paths(g.size(), 0);
    bool looping = false;
    std::function<void(VertexId)> visit = [&](VertexId w) {
        mark[w] = Mark::active;
        std::size_t total = saturating_mul(g.mult(w, v), 1, limit);
        (g.successors(w) & inner).for_each([&](VertexId x) {
            if (looping) return;
            if (mark[x] == Mark::active) {
                looping = true;
                return;
            }
            if (mark[x] == Mark::fresh) visit(x);
            total = std::min(limit, total + saturating_mul(g.mult(w, x), paths[x], limit));
        });
        paths[w] = total;
        mark[w] = Mark::done;
    };
    inner.for_each([&](VertexId w) {
        if (!looping && mark[w] == Mark::fresh) visit(w);
    });
    if (looping) return limit;

    std::size_t total = saturating_mul(g.mult(v, v), 1, limit);
    inner.for_each([&](VertexId w) { total = std::min(limit, total + saturating_mul(g.mult(v, w), paths[w], limit)); });
    return total;
}

GraphReport graph_report(const Graph& g) {
    const auto cycles = simple_cycles(g);
    GraphReport r{cycles.empty(), true, true};
    VertexSet on_cycle;
    for (const auto& c : cycles) {
        if (!c.has_exit) r.condition_l = false;
        on_cycle |= c.cycle.vertex_set();
    }
    on_cycle.for_each([&](VertexId v) {
        if (r.condition_k && count_simple_closed_paths(g, v, 2) < 2) r.condition_k = false;
    });
    return r;
}

}  // namespace lpa
