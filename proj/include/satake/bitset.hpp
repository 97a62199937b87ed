#ifndef SATAKE_BITSET_HPP
#define SATAKE_BITSET_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace satake {

/// Maximum number of vertices in any graph handled by the library.
inline constexpr int kMaxVertices = 64;

/// Fixed-width subset of {0, ..., 63}, tagged so that node subsets and
/// k-root subsets cannot be mixed up.
template <class Tag>
class BitSet {
 public:
  constexpr BitSet() = default;
  constexpr explicit BitSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr BitSet single(int i) { return BitSet(std::uint64_t{1} << i); }
  static constexpr BitSet range(int n) {
    return BitSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr int first() const { return empty() ? -1 : std::countr_zero(bits_); }

  constexpr bool subset_of(BitSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(BitSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr BitSet operator|(BitSet o) const { return BitSet(bits_ | o.bits_); }
  constexpr BitSet operator&(BitSet o) const { return BitSet(bits_ & o.bits_); }
  constexpr BitSet operator-(BitSet o) const { return BitSet(bits_ & ~o.bits_); }
  constexpr BitSet& operator|=(BitSet o) { bits_ |= o.bits_; return *this; }
  constexpr BitSet& operator&=(BitSet o) { bits_ &= o.bits_; return *this; }
  constexpr BitSet& operator-=(BitSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const BitSet&) const = default;

  /// Members in increasing order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

struct NodeTag;
struct RootTag;

/// Subset of the simple C-roots of a diagram, indexed by declaration order.
using NodeSet = BitSet<NodeTag>;
/// Subset of the simple k-roots at some level, indexed by fiber position.
using RootSet = BitSet<RootTag>;

/// Iterate every subset of `universe` (including the empty set and `universe` itself).
template <class Tag, class F>
void for_each_subset(BitSet<Tag> universe, F&& f) {
  const std::uint64_t u = universe.bits();
  std::uint64_t s = 0;
  while (true) {
    f(BitSet<Tag>(s));
    if (s == u) break;
    s = (s - u) & u;
  }
}

}  // namespace satake

template <class Tag>
struct std::hash<satake::BitSet<Tag>> {
  std::size_t operator()(satake::BitSet<Tag> s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // SATAKE_BITSET_HPP
