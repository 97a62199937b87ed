#ifndef SATAKE_CARTAN_HPP
#define SATAKE_CARTAN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "satake/diagram.hpp"

namespace satake {

using Rational = boost::rational<std::int64_t>;
using IntMatrix = std::vector<std::vector<int>>;

// boost 1.74 mixed rational/int equality recurses under C++20 rewritten
// comparisons, so zero tests go through numerator().

/// Cartan matrix with C[i][j] = <alpha_j, alpha_i^vee>, indexed by node declaration order.
inline IntMatrix cartan_matrix(const DynkinDiagram& d) {
  const int n = d.size();
  IntMatrix c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (const Edge& e : d.edges()) {
    if (e.label == 3) {
      c[e.u][e.v] = c[e.v][e.u] = -1;
      continue;
    }
    const int s = e.shorter;
    const int l = s == e.u ? e.v : e.u;
    c[l][s] = -1;
    c[s][l] = e.label == 4 ? -2 : -3;
  }
  return c;
}

/// Solve a x = b exactly by Gauss-Jordan elimination; nullopt when `a` is singular.
inline std::optional<std::vector<Rational>> solve_exact(const IntMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j <= n; ++j) m[col][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].numerator() == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

/// Exact determinant by Gaussian elimination over the rationals.
inline Rational determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].numerator() == 0) continue;
      const Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

}  // namespace satake

#endif  // SATAKE_CARTAN_HPP
