#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rorc/bit_matrix.hpp"
#include "rorc/composition.hpp"
#include "rorc/line_diagram.hpp"
#include "rorc/matrix.hpp"

namespace oracle {

using rorc::DimensionVector;
using rorc::Pair;
using rorc::PairSet;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline DimensionVector random_d(std::mt19937_64& g, int min_t, int max_t, int max_part) {
  std::vector<int> parts(static_cast<std::size_t>(uniform(g, min_t, max_t)));
  for (auto& p : parts) p = uniform(g, 1, max_part);
  return DimensionVector(parts);
}

/// Direct transcription of the two index-set definitions, pair by pair.
inline PairSet gamma(const DimensionVector& d) {
  PairSet out;
  for (int i = 1; i <= d.t(); ++i)
    for (int j = i + 1; j <= d.t(); ++j) {
      const int lo = std::min(d[i], d[j]);
      const int hi = std::max(d[i], d[j]);
      bool ok = true;
      for (int l = i + 1; l < j; ++l) ok = ok && (d[l] < lo || d[l] > hi);
      if (ok) out.emplace(i, j);
    }
  return out;
}

inline PairSet lambda(const DimensionVector& d) {
  PairSet out;
  for (const auto& [i, j] : gamma(d)) {
    if (d[i] == d[j]) {
      out.emplace(i, j);
      continue;
    }
    const int lo = std::min(d[i], d[j]);
    const int hi = std::max(d[i], d[j]);
    bool ok = true;
    for (int k = 1; k <= d.t(); ++k) ok = ok && (d[k] <= lo || d[k] >= hi);
    for (int k = 1; k < i; ++k) ok = ok && d[k] != d[j];
    for (int k = j + 1; k <= d.t(); ++k) ok = ok && d[k] != d[i];
    if (ok) out.emplace(i, j);
  }
  return out;
}

/// Cofactor-expansion determinant; only for small matrices.
inline mpq_class det(const rorc::RationalMatrix& a) {
  const int n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a.at(0, 0);
  mpq_class total = 0;
  for (int c = 0; c < n; ++c) {
    if (a.at(0, c) == 0) continue;
    rorc::RationalMatrix minor(rorc::Rationals{}, n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor.at(r - 1, k++) = a.at(r, cc);
    const mpq_class term = a.at(0, c) * det(minor);
    total += (c % 2 == 0) ? term : mpq_class(-term);
  }
  return total;
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.end() - k, mask.end(), 1);
  do {
    std::vector<int> pick;
    for (int i = 0; i < n; ++i)
      if (mask[static_cast<std::size_t>(i)]) pick.push_back(i);
    out.push_back(pick);
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

/// Largest k with a nonzero k x k minor.
inline int minor_rank(const rorc::RationalMatrix& a) {
  for (int k = std::min(a.rows(), a.cols()); k > 0; --k)
    for (const auto& rows : subsets(a.rows(), k))
      for (const auto& cols : subsets(a.cols(), k)) {
        rorc::RationalMatrix m(rorc::Rationals{}, k, k);
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c)
            m.at(r, c) = a.at(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
        if (det(m) != 0) return k;
      }
  return 0;
}

/// log2 of the number of distinct F_2 combinations of the rows.
inline int span_rank(const rorc::BitMatrix& a) {
  std::set<std::uint64_t> span{0};
  for (int r = 0; r < a.size(); ++r) {
    std::set<std::uint64_t> next = span;
    for (auto v : span) next.insert(v ^ a.row(r));
    span.swap(next);
  }
  int k = 0;
  while ((std::size_t{1} << k) < span.size()) ++k;
  return k;
}

/// Jordan type from the rank sequence of powers: the number of blocks of
/// size >= k is rk A^(k-1) - rk A^k.
template <class RankFn>
std::vector<int> jordan_from_ranks(int n, RankFn rank_of_power) {
  std::vector<int> at_least;
  int prev = n;
  for (int k = 1; prev > 0; ++k) {
    const int cur = rank_of_power(k);
    at_least.push_back(prev - cur);
    prev = cur;
  }
  std::vector<int> sizes;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (int c = 0; c < exact; ++c) sizes.push_back(static_cast<int>(k + 1));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

/// Random branchless diagram on the columns of d: vertices are visited in
/// order and joined to a random free vertex in a later column.
inline rorc::LineDiagram random_diagram(const DimensionVector& d, std::mt19937_64& g, double density = 0.6) {
  std::vector<char> has_left(static_cast<std::size_t>(d.n() + 1), 0);
  std::vector<rorc::Edge> edges;
  std::bernoulli_distribution keep(density);
  for (int u = 1; u <= d.n(); ++u) {
    if (!keep(g)) continue;
    std::vector<int> free;
    for (int v = d.offset(d.block_of(u - 1)) + 1; v <= d.n(); ++v)
      if (!has_left[static_cast<std::size_t>(v)]) free.push_back(v);
    if (free.empty()) continue;
    const int v = free[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(free.size()) - 1))];
    has_left[static_cast<std::size_t>(v)] = 1;
    edges.emplace_back(u, v);
  }
  return rorc::LineDiagram(d, edges);
}

inline rorc::RationalMatrix rational(const DimensionVector& d, const std::vector<std::pair<int, int>>& ones) {
  rorc::RationalMatrix a = rorc::RationalMatrix::zero(rorc::Rationals{}, d.n());
  for (const auto& [r, c] : ones) a.set(r - 1, c - 1, 1);
  return a;
}

}  // namespace oracle
