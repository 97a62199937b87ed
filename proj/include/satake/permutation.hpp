#ifndef SATAKE_PERMUTATION_HPP
#define SATAKE_PERMUTATION_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "satake/bitset.hpp"

namespace satake {

/// Bijection of the node set {0, ..., n-1} of a diagram.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= size() || hit[v]) throw std::invalid_argument("not a permutation");
      hit[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  /// Build from disjoint cycles over {0, ..., n-1}; unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] >= n || used[c[i]]) throw std::invalid_argument("cycles are not disjoint");
        used[c[i]] = true;
        v[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  NodeSet operator()(NodeSet s) const {
    NodeSet out;
    s.for_each([&](int i) { out.insert(images_[i]); });
    return out;
  }

  /// (this ∘ other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = images_[other.images_[i]];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(v));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  bool fixes(NodeSet s) const { return (*this)(s) == s; }

  /// Nodes moved by the permutation.
  NodeSet support() const {
    NodeSet s;
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i) s.insert(i);
    return s;
  }

  /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<int> c;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Cycle notation using the supplied node names; identity renders as "()".
inline std::string format_cycles(const Permutation& p, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& c : p.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i != 0) out += ' ';
      out += names[c[i]];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace satake

#endif  // SATAKE_PERMUTATION_HPP
