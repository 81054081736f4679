#include "rorc/strata.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "rorc/random.hpp"

namespace rorc {

RankThresholds::RankThresholds(DimensionVector d)
    : d_(std::move(d)), lambda_(lambda_of(d_)), gamma_(gamma_set(d_)), components_(lambda_set(d_)) {
  const int t = d_.t();
  kappa_.assign(static_cast<std::size_t>(t * t), 0);
  r_.assign(static_cast<std::size_t>(t * t), {});
  const LineDiagram full = complete_diagram(d_);
  for (int i = 1; i <= t; ++i) {
    for (int j = i + 1; j <= t; ++j) {
      kappa_[index(i, j)] = rorc::kappa(d_, i, j);
      const auto lengths = chain_stats(subdiagram(full, i, j)).lengths;
      auto& row = r_[index(i, j)];
      for (int k = 1; k <= j - i; ++k) {
        int total = 0;
        for (int c : lengths) total += std::max(c - k + 1, 0);
        row.push_back(total);
      }
    }
  }
}

StratumSpec stratum_spec(const DimensionVector& d, int i, int j) {
  check_pair(d, i, j);
  if (!gamma_set(d).contains({i, j})) throw std::invalid_argument("strata are described for pairs in gamma_set(d)");
  const int k = kappa(d, i, j);
  MinimalMovement move = minimal_movement(d, i, j);
  return StratumSpec{{i, j}, k, r_rank(d, i, j, k), move.codim, std::move(move.tableau), std::move(move.mu)};
}

Decomposition decompose(const DimensionVector& d) {
  Decomposition out{d, lambda_of(d), {}};
  for (const auto& [i, j] : lambda_set(d)) out.strata.push_back(stratum_spec(d, i, j));
  return out;
}

namespace {

/// Edges of L_R(d) at height h running from column i to column j.
std::vector<Edge> chain_edges(const LineDiagram& full, int i, int j, int h) {
  const DimensionVector& d = full.columns();
  std::vector<Edge> out;
  int u = d.offset(i - 1) + h;
  const int stop = d.offset(j - 1) + h;
  while (u != stop) {
    const int v = full.right_of(u);
    out.emplace_back(u, v);
    u = v;
  }
  return out;
}

struct Candidate {
  std::vector<Edge> edges;
  bool reattached;
};

std::vector<Edge> without(const std::vector<Edge>& edges, Edge e) {
  std::vector<Edge> out;
  for (const auto& f : edges)
    if (f != e) out.push_back(f);
  return out;
}

/// Removal of one edge from an (i,j)-chain of L_R(d), lowest chain first,
/// followed by the same removals with the loose ends tied to deeper rows.
std::vector<Candidate> diagram_candidates(const DimensionVector& d, int i, int j) {
  const LineDiagram full = complete_diagram(d);
  const int s = std::min(d[i], d[j]);
  std::vector<Candidate> out;
  for (int h = s; h >= 1; --h)
    for (const Edge& e : chain_edges(full, i, j, h)) out.push_back({without(full.edges(), e), false});

  for (const Edge& e : chain_edges(full, i, j, s)) {
    const auto& [u, v] = e;
    const auto base = without(full.edges(), e);
    const LineDiagram cut(d, base);
    std::vector<Edge> right_options;
    std::vector<Edge> left_options;
    for (int w = 1; w <= d.n(); ++w) {
      if (cut.height_of(w) <= s) continue;
      if (cut.column_of(w) > cut.column_of(u) && cut.left_of(w) == 0) right_options.emplace_back(u, w);
      if (cut.column_of(w) < cut.column_of(v) && cut.right_of(w) == 0) left_options.emplace_back(w, v);
    }
    for (const Edge& a : right_options) {
      auto edges = base;
      edges.push_back(a);
      out.push_back({edges, true});
    }
    for (const Edge& b : left_options) {
      auto edges = base;
      edges.push_back(b);
      out.push_back({edges, true});
    }
    for (const Edge& a : right_options)
      for (const Edge& b : left_options) {
        auto edges = base;
        edges.push_back(a);
        edges.push_back(b);
        out.push_back({edges, true});
      }
  }
  return out;
}

RationalMatrix to_rational(const ModularMatrix& a) {
  RationalMatrix out(Rationals{}, a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  return out;
}

std::vector<std::pair<int, int>> nilradical_positions(const DimensionVector& d) {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < d.n(); ++r)
    for (int c = 0; c < d.n(); ++c)
      if (d.block_of(r) < d.block_of(c)) out.emplace_back(r, c);
  return out;
}

}  // namespace

WitnessResult witness(const DimensionVector& d, Pair pair, const WitnessOptions& options) {
  check_pair(d, pair.first, pair.second);
  const RankThresholds thresholds(d);
  if (!thresholds.components().contains(pair)) throw std::invalid_argument("pair is not in lambda_set(d)");
  if (options.budget < 1) throw std::invalid_argument("witness budget must be positive");
  const auto [i, j] = pair;
  const PrimeField field(options.prime);

  long trials = 0;
  std::vector<ModularMatrix> seeds;
  for (const Candidate& candidate : diagram_candidates(d, i, j)) {
    if (trials >= options.budget) break;
    ++trials;
    std::optional<LineDiagram> diagram;
    try {
      diagram.emplace(d, candidate.edges);
    } catch (const std::invalid_argument&) {
      continue;
    }
    // A branchless diagram maps to a partial permutation matrix, whose power
    // ranks do not depend on the field.
    ModularMatrix a = phi(*diagram, field);
    DefectTable<ModularMatrix> table(a, thresholds);
    const PairSet hit = table.containing_components();
    if (hit == PairSet{pair})
      return {to_rational(a), candidate.reattached ? "reattachment" : "edge-removal", trials};
    if (hit.contains(pair)) seeds.push_back(std::move(a));
  }
  if (seeds.empty()) seeds.push_back(ModularMatrix::zero(field, d.n()));

  // Generalise points of Z_ij: entries outside the window never affect
  // membership in Z_ij, window entries are changed one at a time as long as
  // the rank defect survives.
  const int lo = d.offset(i - 1);
  const int hi = d.offset(j);
  std::vector<std::pair<int, int>> inside;
  std::vector<std::pair<int, int>> outside;
  for (const auto& pos : nilradical_positions(d)) {
    const bool in_window = pos.first >= lo && pos.first < hi && pos.second >= lo && pos.second < hi;
    (in_window ? inside : outside).push_back(pos);
  }
  std::uniform_int_distribution<std::uint32_t> value(0, options.prime - 1);
  for (long trial = 0; trials < options.budget; ++trial) {
    ++trials;
    auto rng = trial_rng(options.seed, static_cast<std::uint64_t>(trial), 0x57a7);
    ModularMatrix a = seeds[static_cast<std::size_t>(trial) % seeds.size()];
    for (const auto& [r, c] : outside) a.at(r, c) = value(rng);
    auto order = inside;
    std::shuffle(order.begin(), order.end(), rng);
    for (const auto& [r, c] : order) {
      const auto before = a.at(r, c);
      a.at(r, c) = value(rng);
      const ModularMatrix w = window(a, d, i, j);
      if (exact_rank(power(w, thresholds.kappa(i, j))) >= thresholds.r(i, j, thresholds.kappa(i, j))) a.at(r, c) = before;
    }
    if (separates(a, thresholds, pair)) return {a, "random-search", trials};
  }
  throw WitnessNotFound("no separating witness for (" + std::to_string(i) + "," + std::to_string(j) + ") of d = " +
                        d.to_string() + " within " + std::to_string(options.budget) + " trials");
}

}  // namespace rorc
