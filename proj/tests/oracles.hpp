#pragma once

// Brute-force reference implementations used to cross-check the library.
// They work on plain integer matrices and vectors and deliberately share no
// code with src/.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "lpa/graph.hpp"

namespace oracle {

/// Adjacency with multiplicities; kInf stands for infinitely many edges.
inline constexpr int kInf = -1;
using Matrix = std::vector<std::vector<int>>;

inline Matrix matrix_of(const lpa::Graph& g) {
    const auto n = g.size();
    Matrix m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto x = g.mult(static_cast<lpa::VertexId>(i), static_cast<lpa::VertexId>(j));
            m[i][j] = x.is_omega() ? kInf : static_cast<int>(x.count());
        }
    }
    return m;
}

inline bool edge(const Matrix& m, std::size_t i, std::size_t j) { return m[i][j] != 0; }

inline std::set<std::size_t> reach(const Matrix& m, std::size_t u) {
    std::set<std::size_t> seen{u};
    std::vector<std::size_t> stack{u};
    while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < m.size(); ++y) {
            if (edge(m, x, y) && seen.insert(y).second) stack.push_back(y);
        }
    }
    return seen;
}

enum class Kind { sink, regular, infinite };

inline Kind kind(const Matrix& m, std::size_t v) {
    long total = 0;
    for (int x : m[v]) {
        if (x == kInf) return Kind::infinite;
        total += x;
    }
    return total == 0 ? Kind::sink : Kind::regular;
}

/// Subsets as sorted index vectors; every hereditary saturated one.
inline std::vector<std::set<std::size_t>> hss(const Matrix& m) {
    const auto n = m.size();
    std::vector<std::set<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        auto in = [&](std::size_t v) { return ((mask >> v) & 1U) != 0; };
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            if (!in(v)) continue;
            for (std::size_t w = 0; w < n; ++w) ok = ok && (!edge(m, v, w) || in(w));
        }
        for (std::size_t v = 0; v < n && ok; ++v) {
            if (in(v) || kind(m, v) != Kind::regular) continue;
            bool all_in = true;
            for (std::size_t w = 0; w < n; ++w) all_in = all_in && (!edge(m, v, w) || in(w));
            ok = !all_in;
        }
        if (!ok) continue;
        std::set<std::size_t> s;
        for (std::size_t v = 0; v < n; ++v) {
            if (in(v)) s.insert(v);
        }
        out.push_back(s);
    }
    return out;
}

inline std::set<std::size_t> breaking(const Matrix& m, const std::set<std::size_t>& h) {
    std::set<std::size_t> out;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (h.count(v) || kind(m, v) != Kind::infinite) continue;
        long outside = 0;
        bool inf_outside = false;
        for (std::size_t w = 0; w < m.size(); ++w) {
            if (h.count(w)) continue;
            if (m[v][w] == kInf) inf_outside = true;
            else outside += m[v][w];
        }
        if (!inf_outside && outside > 0) out.insert(v);
    }
    return out;
}

/// Edge-level closed paths based at v that visit v only at their ends,
/// with parallel edges expanded (at most two copies, enough to tell one
/// from several) and length at most `max_len`; stops after `limit`.
/// Returned as edge lists (source, target, copy).
using EdgeId = std::tuple<std::size_t, std::size_t, int>;

inline std::vector<std::vector<EdgeId>> closed_paths(const Matrix& m, std::size_t v, std::size_t max_len,
                                                     std::size_t limit) {
    // Vertices that can get back to v without passing through v first.
    std::set<std::size_t> back{v};
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t x = 0; x < m.size(); ++x) {
            if (back.count(x)) continue;
            for (auto y : back) {
                if (edge(m, x, y) && back.insert(x).second) {
                    grew = true;
                    break;
                }
            }
        }
    }
    std::vector<std::vector<EdgeId>> out;
    std::vector<EdgeId> path;
    std::function<void(std::size_t)> go = [&](std::size_t at) {
        if (path.size() >= max_len || out.size() >= limit) return;
        for (std::size_t w = 0; w < m.size(); ++w) {
            if (!back.count(w)) continue;
            const int copies = m[at][w] == kInf ? 2 : std::min(m[at][w], 2);
            for (int c = 0; c < copies && out.size() < limit; ++c) {
                path.emplace_back(at, w, c);
                if (w == v) out.push_back(path);
                else go(w);
                path.pop_back();
            }
        }
    };
    go(v);
    return out;
}

/// Condition (K) straight from the definition, with simple closed paths
/// found by bounded search.
inline bool condition_k(const Matrix& m) {
    const auto n = m.size();
    for (std::size_t v = 0; v < n; ++v) {
        const auto paths = closed_paths(m, v, 3 * n + 1, 2);
        if (paths.empty()) continue;
        // Every vertex on such a path must base two distinct ones.
        if (paths.size() < 2) return false;
    }
    return true;
}

/// Vertex cycles (distinct vertices) in canonical rotation, plus exit and
/// WK flags computed from the definitions.
struct VCycle {
    std::vector<std::size_t> verts;
    bool has_exit;
    bool is_wk;
};

inline std::vector<VCycle> vertex_cycles(const Matrix& m) {
    const auto n = m.size();
    std::set<std::vector<std::size_t>> found;
    // Every nonempty sequence of distinct vertices.
    std::function<void(std::vector<std::size_t>&)> grow = [&](std::vector<std::size_t>& seq) {
        if (!seq.empty() && edge(m, seq.back(), seq.front())) {
            auto rot = seq;
            std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
            found.insert(rot);
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
            if (!seq.empty() && !edge(m, seq.back(), w)) continue;
            seq.push_back(w);
            grow(seq);
            seq.pop_back();
        }
    };
    std::vector<std::size_t> seq;
    grow(seq);
    std::vector<VCycle> out;
    for (const auto& c : found) {
        bool exit = false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto next = c[(i + 1) % c.size()];
            for (std::size_t w = 0; w < n; ++w) {
                const int k = m[c[i]][w];
                if (w == next ? (k == kInf || k >= 2) : k != 0) exit = true;
            }
        }
        out.push_back({c, exit, true});
    }
    for (auto& a : out) {
        for (const auto& b : out) {
            if (a.verts == b.verts) continue;
            for (auto v : a.verts) {
                if (std::find(b.verts.begin(), b.verts.end(), v) != b.verts.end()) a.is_wk = false;
            }
        }
        // A parallel edge along the cycle is a second simple closed path.
        for (std::size_t i = 0; i < a.verts.size(); ++i) {
            const int k = m[a.verts[i]][a.verts[(i + 1) % a.verts.size()]];
            if (k == kInf || k >= 2) a.is_wk = false;
        }
    }
    return out;
}

/// Isomorphism classes of graphs on exactly n vertices with k possible
/// multiplicities per ordered pair, by Burnside's lemma.
inline std::uint64_t graph_orbit_count(std::size_t n, std::uint64_t k) {
    std::vector<std::size_t> f(n);
    std::iota(f.begin(), f.end(), 0);
    std::uint64_t total = 0, perms = 0;
    do {
        std::vector<bool> seen(n * n, false);
        std::uint64_t fixed = 1;
        for (std::size_t s = 0; s < n * n; ++s) {
            if (seen[s]) continue;
            fixed *= k;
            for (std::size_t t = s; !seen[t]; t = f[t / n] * n + f[t % n]) seen[t] = true;
        }
        total += fixed;
        ++perms;
    } while (std::next_permutation(f.begin(), f.end()));
    return total / perms;
}

// ---- polynomials over F_p as coefficient vectors (low to high) ----

using FpPoly = std::vector<int>;

inline FpPoly trim(FpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

inline int inv_mod(int a, int p) {
    for (int x = 1; x < p; ++x) {
        if (a * x % p == 1) return x;
    }
    return 0;
}

inline FpPoly mul(const FpPoly& a, const FpPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return trim(c);
}

inline FpPoly rem(FpPoly a, const FpPoly& b, int p) {
    a = trim(a);
    const int lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        const int k = a.back() * lead_inv % p;
        const auto shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - k * b[i]) % p + p) % p;
        a = trim(a);
    }
    return a;
}

/// Every monic polynomial of the given degree over F_p.
inline std::vector<FpPoly> monics(int degree, int p) {
    std::vector<FpPoly> out;
    long total = 1;
    for (int i = 0; i < degree; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
        FpPoly f(degree + 1, 0);
        long c = code;
        for (int i = 0; i < degree; ++i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        f[degree] = 1;
        out.push_back(f);
    }
    return out;
}

inline bool divides(const FpPoly& d, const FpPoly& f, int p) { return rem(f, d, p).empty(); }

/// Monic gcd by testing every monic candidate of every degree.
inline FpPoly gcd_by_search(const FpPoly& a, const FpPoly& b, int p) {
    const int top = static_cast<int>(std::min(a.size(), b.size())) - 1;
    for (int d = top; d >= 0; --d) {
        for (const auto& c : monics(d, p)) {
            if (divides(c, a, p) && divides(c, b, p)) return c;
        }
    }
    return {1};
}

/// True iff no nonconstant g has g^2 dividing f.
inline bool squarefree_by_search(const FpPoly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        for (const auto& g : monics(d, p)) {
            if (divides(mul(g, g, p), f, p)) return false;
        }
    }
    return true;
}

inline bool irreducible_by_search(const FpPoly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        for (const auto& g : monics(d, p)) {
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// ---- finite posets as relation matrices ----

using Rel = std::vector<std::vector<bool>>;  // rel[a][b]: a < b

/// Number of strict partial orders on n labelled points.
inline std::size_t labelled_poset_count(std::size_t n) {
    const std::size_t slots = n * (n - 1);
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        Rel r(n, std::vector<bool>(n, false));
        std::size_t k = 0;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (a != b) r[a][b] = ((mask >> k++) & 1U) != 0;
            }
        }
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            for (std::size_t b = 0; b < n && ok; ++b) {
                if (!r[a][b]) continue;
                if (r[b][a]) ok = false;
                for (std::size_t c = 0; c < n && ok; ++c) ok = !r[b][c] || r[a][c];
            }
        }
        count += ok ? 1 : 0;
    }
    return count;
}

/// Some bijection f with a < b iff f(a) < f(b).
inline bool isomorphic(const Rel& x, const Rel& y) {
    const auto n = x.size();
    if (y.size() != n) return false;
    std::vector<std::size_t> f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            for (std::size_t b = 0; b < n && ok; ++b) ok = x[a][b] == y[f[a]][f[b]];
        }
        if (ok) return true;
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
}

inline std::size_t automorphisms(const Rel& x) {
    const auto n = x.size();
    std::vector<std::size_t> f(n);
    std::iota(f.begin(), f.end(), 0);
    std::size_t count = 0;
    do {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            for (std::size_t b = 0; b < n && ok; ++b) ok = x[a][b] == x[f[a]][f[b]];
        }
        count += ok ? 1 : 0;
    } while (std::next_permutation(f.begin(), f.end()));
    return count;
}

/// For every p < q, some cover p <= p2 < q2 <= q, by scanning all pairs.
inline bool kap_by_cover_search(const Rel& r) {
    const auto n = r.size();
    auto le = [&](std::size_t a, std::size_t b) { return a == b || r[a][b]; };
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            if (!r[p][q]) continue;
            bool found = false;
            for (std::size_t a = 0; a < n && !found; ++a) {
                for (std::size_t b = 0; b < n && !found; ++b) {
                    if (!r[a][b] || !le(p, a) || !le(b, q)) continue;
                    bool gap = true;
                    for (std::size_t t = 0; t < n; ++t) gap = gap && !(r[a][t] && r[t][b]);
                    found = gap;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace oracle
