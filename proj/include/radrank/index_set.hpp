#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "radrank/errors.hpp"

namespace radrank {

/// A subset of {0, ..., 63}, used for sets of primes and of generator labels
/// addressed by position.
class IndexSet {
public:
    static constexpr std::size_t capacity = 64;

    constexpr IndexSet() = default;
    static constexpr IndexSet from_bits(std::uint64_t bits) { return IndexSet(bits); }
    static constexpr IndexSet singleton(std::size_t i) { return IndexSet(std::uint64_t{1} << i); }
    /// {0, ..., n - 1}
    static constexpr IndexSet first(std::size_t n)
    {
        return IndexSet(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static IndexSet of(std::span<const std::size_t> indices)
    {
        IndexSet s;
        for (std::size_t i : indices) {
            if (i >= capacity) throw ArgumentError("index set: position out of range");
            s = s.with(i);
        }
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr IndexSet with(std::size_t i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
    constexpr IndexSet without(std::size_t i) const { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }

    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(IndexSet, IndexSet) = default;
    /// Orders by the raw bit pattern; only for use as a map key. See canonical_less.
    friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.bits_ <=> b.bits_; }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

private:
    constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending element lists.
constexpr bool lex_less(IndexSet a, IndexSet b)
{
    std::uint64_t x = a.bits();
    std::uint64_t y = b.bits();
    while (x != 0 && y != 0) {
        const int i = std::countr_zero(x);
        const int j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

/// Smaller sets first, ties broken by lex_less.
constexpr bool canonical_less(IndexSet a, IndexSet b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

/// Longest strictly increasing chain {} = U_0 < U_1 < ... < U_s = {0..n-1} in
/// which every U_i is closed. `closed` is indexed by bit pattern and has 2^n
/// entries. Among chains of maximal length the one whose sequence (U_1, U_2,
/// ...) is lexicographically least under lex_less is returned. Returns an
/// empty vector when no chain exists (the empty set or the full set is not
/// closed); otherwise the result starts with {} and ends with the full set.
std::vector<IndexSet> longest_closed_chain(std::span<const char> closed, std::size_t n);

}  // namespace radrank
