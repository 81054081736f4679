#include "rorc/sampling.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "rorc/line_diagram.hpp"

namespace rorc {

namespace {

std::uint32_t uniform(const PrimeField& field, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::uint32_t>(0, field.modulus() - 1)(rng);
}

std::uint32_t nonzero(const PrimeField& field, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::uint32_t>(1, field.modulus() - 1)(rng);
}

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void fill_block(ModularMatrix& a, const DimensionVector& d, int bi, int bj, std::mt19937_64& rng) {
  for (int r = d.offset(bi - 1); r < d.offset(bi); ++r)
    for (int c = d.offset(bj - 1); c < d.offset(bj); ++c) a.at(r, c) = uniform(a.field(), rng);
}

void clear_block(ModularMatrix& a, const DimensionVector& d, int bi, int bj) {
  for (int r = d.offset(bi - 1); r < d.offset(bi); ++r)
    for (int c = d.offset(bj - 1); c < d.offset(bj); ++c) a.at(r, c) = 0;
}

ModularMatrix from_diagram(const DimensionVector& d, const PrimeField& field, std::mt19937_64& rng) {
  std::vector<Edge> edges = complete_diagram(d).edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  const int removed = std::min<int>(pick(rng, 1, 3), static_cast<int>(edges.size()));
  edges.resize(edges.size() - static_cast<std::size_t>(removed));

  std::vector<int> right(static_cast<std::size_t>(d.n() + 1), 0);
  std::vector<int> left(static_cast<std::size_t>(d.n() + 1), 0);
  for (const auto& [u, v] : edges) {
    right[static_cast<std::size_t>(u)] = v;
    left[static_cast<std::size_t>(v)] = u;
  }
  const int reattach = pick(rng, 0, 3);
  for (int attempt = 0, added = 0; attempt < 20 && added < reattach; ++attempt) {
    const int u = pick(rng, 1, d.n());
    const int v = pick(rng, 1, d.n());
    if (d.block_of(u - 1) >= d.block_of(v - 1)) continue;
    if (right[static_cast<std::size_t>(u)] || left[static_cast<std::size_t>(v)]) continue;
    right[static_cast<std::size_t>(u)] = v;
    left[static_cast<std::size_t>(v)] = u;
    edges.emplace_back(u, v);
    ++added;
  }
  ModularMatrix a = phi(LineDiagram(d, edges), field);
  for (const auto& [u, v] : edges) a.at(u - 1, v - 1) = nonzero(field, rng);
  const ModularMatrix g = random_parabolic(d, field, rng);
  return conjugate(a, g);
}

ModularMatrix window_cut(const DimensionVector& d, const PrimeField& field, std::mt19937_64& rng) {
  ModularMatrix a = random_nilradical(d, field, rng);
  const int i = pick(rng, 1, d.t() - 1);
  const int j = pick(rng, i + 1, d.t());
  const int cut = pick(rng, i, j - 1);
  for (int bi = i; bi <= cut; ++bi)
    for (int bj = cut + 1; bj <= j; ++bj) clear_block(a, d, bi, bj);
  return a;
}

ModularMatrix low_rank_block(const DimensionVector& d, const PrimeField& field, std::mt19937_64& rng) {
  ModularMatrix a = random_nilradical(d, field, rng);
  const int bi = pick(rng, 1, d.t() - 1);
  const int bj = pick(rng, bi + 1, d.t());
  const int inner = std::min(d[bi], d[bj]) - 1;
  ModularMatrix x(field, d[bi], inner);
  ModularMatrix y(field, inner, d[bj]);
  for (int r = 0; r < x.rows(); ++r)
    for (int c = 0; c < x.cols(); ++c) x.at(r, c) = uniform(field, rng);
  for (int r = 0; r < y.rows(); ++r)
    for (int c = 0; c < y.cols(); ++c) y.at(r, c) = uniform(field, rng);
  const ModularMatrix product = x * y;
  for (int r = 0; r < d[bi]; ++r)
    for (int c = 0; c < d[bj]; ++c) a.at(d.offset(bi - 1) + r, d.offset(bj - 1) + c) = product.at(r, c);
  return a;
}

ModularMatrix zero_line(const DimensionVector& d, const PrimeField& field, std::mt19937_64& rng) {
  ModularMatrix a = random_nilradical(d, field, rng);
  const int bi = pick(rng, 1, d.t() - 1);
  const int bj = pick(rng, bi + 1, d.t());
  if (rng() & 1) {
    const int r = d.offset(bi - 1) + pick(rng, 0, d[bi] - 1);
    for (int c = d.offset(bj - 1); c < d.offset(bj); ++c) a.at(r, c) = 0;
  } else {
    const int c = d.offset(bj - 1) + pick(rng, 0, d[bj] - 1);
    for (int r = d.offset(bi - 1); r < d.offset(bi); ++r) a.at(r, c) = 0;
  }
  return a;
}

ModularMatrix sparse(const DimensionVector& d, const PrimeField& field, std::mt19937_64& rng) {
  static constexpr std::array<double, 3> kDensity{0.15, 0.3, 0.5};
  std::bernoulli_distribution keep(kDensity[static_cast<std::size_t>(pick(rng, 0, 2))]);
  ModularMatrix a = ModularMatrix::zero(field, d.n());
  for (int r = 0; r < d.n(); ++r)
    for (int c = d.offset(d.block_of(r)); c < d.n(); ++c)
      if (keep(rng)) a.at(r, c) = nonzero(field, rng);
  return a;
}

}  // namespace

ModularMatrix random_nilradical(const DimensionVector& d, const PrimeField& field, std::mt19937_64& rng) {
  ModularMatrix a = ModularMatrix::zero(field, d.n());
  for (int bi = 1; bi <= d.t(); ++bi)
    for (int bj = bi + 1; bj <= d.t(); ++bj) fill_block(a, d, bi, bj, rng);
  return a;
}

ModularMatrix random_parabolic(const DimensionVector& d, const PrimeField& field, std::mt19937_64& rng) {
  ModularMatrix levi = ModularMatrix::zero(field, d.n());
  for (int b = 1; b <= d.t(); ++b) {
    ModularMatrix diag(field, d[b], d[b]);
    do {
      for (int r = 0; r < d[b]; ++r)
        for (int c = 0; c < d[b]; ++c) diag.at(r, c) = uniform(field, rng);
    } while (exact_rank(diag) < d[b]);
    for (int r = 0; r < d[b]; ++r)
      for (int c = 0; c < d[b]; ++c) levi.at(d.offset(b - 1) + r, d.offset(b - 1) + c) = diag.at(r, c);
  }
  ModularMatrix unipotent = random_nilradical(d, field, rng) + ModularMatrix::identity(field, d.n());
  return levi * unipotent;
}

ModularMatrix conjugate(const ModularMatrix& a, const ModularMatrix& g) { return g * a * inverse(g); }

DimensionVector random_dimension_vector(std::mt19937_64& rng, int max_t, int max_part, int min_t) {
  if (min_t < 1 || max_t < min_t || max_part < 1) throw std::invalid_argument("bad dimension vector bounds");
  std::vector<int> parts(static_cast<std::size_t>(pick(rng, min_t, max_t)));
  for (auto& p : parts) p = pick(rng, 1, max_part);
  return DimensionVector(std::move(parts));
}

ForcedDefect forced_defect(const RankThresholds& thresholds, const PrimeField& field, std::mt19937_64& rng) {
  const DimensionVector& d = thresholds.d();
  if (d.t() < 2) throw std::invalid_argument("a single block has no defective matrices");
  static constexpr std::array<const char*, 5> kNames{"diagram", "window-cut", "low-rank-block", "zero-line", "sparse"};
  for (int rejections = 0;; ++rejections) {
    const int strategy = pick(rng, 0, static_cast<int>(kNames.size()) - 1);
    ModularMatrix a = [&] {
      switch (strategy) {
        case 0: return from_diagram(d, field, rng);
        case 1: return window_cut(d, field, rng);
        case 2: return low_rank_block(d, field, rng);
        case 3: return zero_line(d, field, rng);
        default: return sparse(d, field, rng);
      }
    }();
    if (!DefectTable<ModularMatrix>(a, thresholds).richardson())
      return {std::move(a), kNames[static_cast<std::size_t>(strategy)], rejections};
  }
}

}  // namespace rorc
