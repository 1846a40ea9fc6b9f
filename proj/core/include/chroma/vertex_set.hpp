#ifndef CHROMA_VERTEX_SET_HPP
#define CHROMA_VERTEX_SET_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace chroma {

// A subset of the vertex set {1..d}, stored as a bit mask (bit v-1 <-> vertex
// v).  Vertices are 1-based everywhere in the public interface.
class VertexSet {
public:
    constexpr VertexSet() = default;
    static constexpr VertexSet from_mask(std::uint32_t m) { return VertexSet(m); }
    static constexpr VertexSet single(int v) { return VertexSet(1u << (v - 1)); }
    static constexpr VertexSet full(int d) {
        return VertexSet(d >= 32 ? ~0u : ((1u << d) - 1u));
    }

    constexpr std::uint32_t mask() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
    int size() const { return __builtin_popcount(bits_); }

    constexpr VertexSet& insert(int v) {
        bits_ |= 1u << (v - 1);
        return *this;
    }
    constexpr VertexSet& erase(int v) {
        bits_ &= ~(1u << (v - 1));
        return *this;
    }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(VertexSet o) const {
        return subset_of(o) && bits_ != o.bits_;
    }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    // set difference
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet complement(int d) const { return full(d) - *this; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t b = bits_; b; b &= b - 1)
            out.push_back(__builtin_ctz(b) + 1);
        return out;
    }

    // "{2,5}"; "{}" for the empty set
    std::string to_string() const;

    auto operator<=>(const VertexSet&) const = default;

private:
    explicit constexpr VertexSet(std::uint32_t m) : bits_(m) {}
    std::uint32_t bits_ = 0;
};

// A strictly nested sequence of vertex sets, smallest first.
using Chain = std::vector<VertexSet>;

bool is_strict_chain(const Chain& ch);

}  // namespace chroma

#endif
