#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace lpa {

using VertexId = std::uint32_t;

/// Graphs are limited to this many vertices; vertex sets are bitmasks.
inline constexpr std::size_t kMaxVertices = 64;

/// A set of vertex indices of one graph, stored as a 64-bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet all(std::size_t n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr std::uint64_t bits() const { return bits_; }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Members in increasing index order.
    std::vector<VertexId> members() const {
        std::vector<VertexId> out;
        out.reserve(size());
        for_each([&](VertexId v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            f(static_cast<VertexId>(std::countr_zero(b)));
        }
    }

    /// Canonical order used for every sorted listing: by cardinality, then by
    /// the sorted member sequence. Since vertex indices follow the sorted
    /// vertex names, this is also lexicographic on names.
    friend bool canonical_less(VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        std::uint64_t x = a.bits_, y = b.bits_;
        while (x != 0 && y != 0) {
            const int i = std::countr_zero(x), j = std::countr_zero(y);
            if (i != j) return i < j;
            x &= x - 1;
            y &= y - 1;
        }
        return false;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Enumerate every subset of `s`, starting with the empty set.
template <typename F>
void for_each_subset(VertexSet s, F&& f) {
    const std::uint64_t mask = s.bits();
    std::uint64_t sub = 0;
    while (true) {
        f(VertexSet(sub));
        if (sub == mask) break;
        sub = (sub - mask) & mask;
    }
}

}  // namespace lpa

template <>
struct std::hash<lpa::VertexSet> {
    std::size_t operator()(lpa::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
