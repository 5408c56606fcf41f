#ifndef SQFPOW_VERTEX_SET_HPP
#define SQFPOW_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqfpow {

/// Maximum number of vertices the engine supports: subsets live in one
/// 64-bit word so that union/intersection/subset tests are single ops.
inline constexpr int kMaxUniverse = 64;

/// A subset of a fixed ambient vertex universe {0,...,n-1}. Doubles as a
/// squarefree monomial (its support). Pure value type.
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    /// The full universe {0,...,n-1}.
    static constexpr VertexSet full(int n) {
        if (n < 0 || n > kMaxUniverse) throw std::invalid_argument("VertexSet::full: bad universe size");
        if (n == kMaxUniverse) return VertexSet(~std::uint64_t{0});
        return VertexSet((std::uint64_t{1} << n) - 1);
    }

    static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
    constexpr void add(int v) { bits_ |= bit(v); }
    constexpr void remove(int v) { bits_ &= ~bit(v); }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

    /// Smallest element; -1 when empty.
    constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    template <typename F>
    void for_each(F&& f) const {
        std::uint64_t b = bits_;
        while (b) {
            int v = std::countr_zero(b);
            f(v);
            b &= b - 1;
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first_el = true;
        for_each([&](int v) {
            if (!first_el) s += ',';
            s += std::to_string(v);
            first_el = false;
        });
        s += '}';
        return s;
    }

private:
    static constexpr std::uint64_t bit(int v) {
        if (v < 0 || v >= kMaxUniverse) throw std::invalid_argument("VertexSet: vertex out of range");
        return std::uint64_t{1} << v;
    }

    std::uint64_t bits_ = 0;
};

}  // namespace sqfpow

#endif  // SQFPOW_VERTEX_SET_HPP
