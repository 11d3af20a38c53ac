#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/vertex_set.hpp"

namespace lpa {

/// Number of parallel edges between two vertices: a natural number or
/// omega, a countably infinite family.
class Multiplicity {
public:
    constexpr Multiplicity() = default;
    constexpr explicit Multiplicity(std::uint64_t n) : value_(n == kOmegaRaw ? kOmegaRaw - 1 : n) {}

    static constexpr Multiplicity omega() {
        Multiplicity m;
        m.value_ = kOmegaRaw;
        return m;
    }

    constexpr bool is_omega() const { return value_ == kOmegaRaw; }
    constexpr bool is_zero() const { return value_ == 0; }
    /// Finite count; meaningless when is_omega().
    constexpr std::uint64_t count() const { return value_; }

    /// Saturating sum; anything plus omega is omega.
    constexpr Multiplicity operator+(Multiplicity o) const {
        if (is_omega() || o.is_omega()) return omega();
        return Multiplicity(value_ + o.value_);
    }

    constexpr auto operator<=>(const Multiplicity&) const = default;

    std::string to_string() const { return is_omega() ? "inf" : std::to_string(value_); }

private:
    static constexpr std::uint64_t kOmegaRaw = ~std::uint64_t{0};
    std::uint64_t value_ = 0;
};

enum class VertexKind { sink, regular, infinite_emitter };

const char* to_string(VertexKind k);

struct EdgeSpec {
    std::string source;
    std::string target;
    Multiplicity mult;
};

/// A finite directed multigraph whose edge multiplicities may be omega.
///
/// Vertices are identified by nonempty names and indexed in sorted name
/// order, so every iteration over a graph is deterministic. Graphs are
/// immutable after construction.
class Graph {
public:
    /// Validates and builds a graph. Repeated edge entries between the same
    /// pair accumulate. Throws ParseError on an empty vertex list, duplicate
    /// or empty names, undeclared endpoints, or more than kMaxVertices.
    Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

    std::size_t size() const { return names_.size(); }
    VertexSet all() const { return VertexSet::all(size()); }

    const std::string& name(VertexId v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<VertexId> find(std::string_view name) const;
    /// Throws InvalidArgument for an unknown name.
    VertexId index(std::string_view name) const;
    VertexSet to_set(const std::vector<std::string>& names) const;
    std::vector<std::string> to_names(VertexSet s) const;

    Multiplicity mult(VertexId from, VertexId to) const { return mult_[from * size() + to]; }
    Multiplicity out_degree(VertexId v) const { return out_degree_[v]; }
    /// Vertices w with mult(v, w) > 0.
    VertexSet successors(VertexId v) const { return succ_[v]; }
    VertexSet predecessors(VertexId v) const { return pred_[v]; }
    VertexKind kind(VertexId v) const;

    /// Positive-multiplicity edges in (source, target) index order.
    std::vector<EdgeSpec> edges() const;

    bool operator==(const Graph& o) const { return names_ == o.names_ && mult_ == o.mult_; }

private:
    std::vector<std::string> names_;
    std::vector<Multiplicity> mult_;
    std::vector<Multiplicity> out_degree_;
    std::vector<VertexSet> succ_;
    std::vector<VertexSet> pred_;
};

/// A cycle given by its vertex sequence, stored rotated so that the vertex
/// with the least index comes first. Parallel edges along the cycle are not
/// distinguished here.
class Cycle {
public:
    /// Throws InvalidArgument unless `verts` is a nonempty sequence of
    /// distinct vertices with an edge between cyclically consecutive ones.
    Cycle(const Graph& g, std::vector<VertexId> verts);

    const std::vector<VertexId>& vertices() const { return verts_; }
    VertexSet vertex_set() const { return set_; }
    std::size_t length() const { return verts_.size(); }
    VertexId base() const { return verts_.front(); }

    /// Ordered by (length, vertex sequence).
    auto operator<=>(const Cycle& o) const {
        if (auto c = verts_.size() <=> o.verts_.size(); c != 0) return c;
        return verts_ <=> o.verts_;
    }
    bool operator==(const Cycle& o) const { return verts_ == o.verts_; }

private:
    std::vector<VertexId> verts_;
    VertexSet set_;
};

struct CycleInfo {
    Cycle cycle;
    bool has_exit;
    bool is_wk;
};

struct GraphReport {
    bool acyclic;
    bool condition_l;
    bool condition_k;
};

/// u >= v: v is reachable from u by a path of length >= 0.
bool reaches(const Graph& g, VertexId u, VertexId v);
/// T(u), the set of vertices reachable from u, including u.
VertexSet tree(const Graph& g, VertexId u);
/// Union of the trees of the members of `s`.
VertexSet tree(const Graph& g, VertexSet s);
/// {v : v >= u}.
VertexSet ancestors(const Graph& g, VertexId u);
/// Nonempty, and any two members have a common lower bound inside `d`.
bool is_downward_directed(const Graph& g, VertexSet d);

/// All cycles up to rotation, sorted by (length, vertex sequence).
std::vector<CycleInfo> simple_cycles(const Graph& g);

/// Number of distinct simple closed paths based at `v`, counted at edge
/// level and saturated at `limit`.
std::size_t count_simple_closed_paths(const Graph& g, VertexId v, std::size_t limit = 2);

GraphReport graph_report(const Graph& g);

}  // namespace lpa
