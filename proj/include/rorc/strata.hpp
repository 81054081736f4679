#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rorc/bit_matrix.hpp"
#include "rorc/composition.hpp"
#include "rorc/line_diagram.hpp"
#include "rorc/matrix.hpp"
#include "rorc/tableau.hpp"

namespace rorc {

/// kappa(i,j) and the maximal window ranks r_ij^k for one dimension vector,
/// computed once and shared by every membership query against d.
class RankThresholds {
 public:
  explicit RankThresholds(DimensionVector d);

  const DimensionVector& d() const { return d_; }
  int t() const { return d_.t(); }
  const Partition& lambda() const { return lambda_; }
  const PairSet& gamma() const { return gamma_; }
  const PairSet& components() const { return components_; }

  int kappa(int i, int j) const { return kappa_[index(i, j)]; }
  /// r_ij^k; zero for k > j - i.
  int r(int i, int j, int k) const {
    return k > j - i ? 0 : r_[index(i, j)][static_cast<std::size_t>(k - 1)];
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * d_.t() + (j - 1)); }

  DimensionVector d_;
  Partition lambda_;
  PairSet gamma_;
  PairSet components_;
  std::vector<int> kappa_;
  std::vector<std::vector<int>> r_;
};

/// A triple (i, j, k) at which a matrix is rank-defective.
struct Defect {
  int i;
  int j;
  int k;
  auto operator<=>(const Defect&) const = default;
};

/// Ranks of the window powers rk A[ij]^k of one matrix, compared against
/// the thresholds of d. Window ranks are computed on first use, one window
/// at a time (all powers 1..j-i together).
///
/// The table keeps a reference to the thresholds, which must outlive it.
template <class M>
class DefectTable {
 public:
  DefectTable(const M& a, const RankThresholds& thresholds)
      : a_(a), thr_(thresholds), ranks_(static_cast<std::size_t>(thresholds.t() * thresholds.t())) {}

  int rank(int i, int j, int k) const {
    if (k > j - i) return 0;
    auto& cached = ranks_[static_cast<std::size_t>((i - 1) * thr_.t() + (j - 1))];
    if (cached.empty()) {
      const M w = window(a_, thr_.d(), i, j);
      M pw = w;
      for (int step = 1; step <= j - i; ++step) {
        cached.push_back(exact_rank(pw));
        if (step < j - i) pw = pw * w;
      }
    }
    return cached[static_cast<std::size_t>(k - 1)];
  }

  bool in_Zk(int i, int j, int k) const { return k <= j - i && rank(i, j, k) < thr_.r(i, j, k); }
  bool in_Z(int i, int j) const { return in_Zk(i, j, thr_.kappa(i, j)); }

  /// All window ranks at their maxima over the full matrix, i.e. the Jordan
  /// type is lambda(d).
  bool richardson() const {
    for (int k = 1; k < thr_.t(); ++k)
      if (in_Zk(1, thr_.t(), k)) return false;
    return true;
  }

  std::vector<Defect> profile() const {
    std::vector<Defect> out;
    for (int i = 1; i <= thr_.t(); ++i)
      for (int j = i + 1; j <= thr_.t(); ++j)
        for (int k = 1; k <= j - i; ++k)
          if (in_Zk(i, j, k)) out.push_back({i, j, k});
    return out;
  }

  /// Components (k, l) of the complement containing the matrix.
  PairSet containing_components() const {
    PairSet out;
    for (const auto& [k, l] : thr_.components())
      if (in_Z(k, l)) out.emplace(k, l);
    return out;
  }

  const RankThresholds& thresholds() const { return thr_; }

 private:
  const M& a_;
  const RankThresholds& thr_;
  mutable std::vector<std::vector<int>> ranks_;
};

namespace detail {

template <class Field>
bool nilradical_pattern(const Matrix<Field>& a, const DimensionVector& d) {
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (d.block_of(r) >= d.block_of(c) && !a.field().is_zero(a.at(r, c))) return false;
  return true;
}

inline bool nilradical_pattern(const BitMatrix& a, const DimensionVector& d) {
  for (int r = 0; r < a.size(); ++r) {
    // Columns up to the end of r's own block must be clear.
    const int end = d.offset(d.block_of(r));
    const std::uint64_t low = end >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << end) - 1);
    if (a.row(r) & low) return false;
  }
  return true;
}

template <class M>
int size_of(const M& a) {
  if constexpr (std::is_same_v<M, BitMatrix>)
    return a.size();
  else
    return a.rows();
}

template <class M>
void require_nilradical(const M& a, const DimensionVector& d) {
  if (size_of(a) != d.n()) throw std::invalid_argument("matrix size does not match n");
  if (!nilradical_pattern(a, d)) throw std::invalid_argument("matrix is not in the nilradical of d");
}

}  // namespace detail

/// True iff every entry outside the strictly upper block pattern of d
/// vanishes. Throws std::invalid_argument on size mismatch.
template <class M>
bool in_nilradical(const M& a, const DimensionVector& d) {
  if (detail::size_of(a) != d.n()) throw std::invalid_argument("matrix size does not match n");
  if constexpr (!std::is_same_v<M, BitMatrix>) {
    if (!a.is_square()) throw std::invalid_argument("matrix is not square");
  }
  return detail::nilradical_pattern(a, d);
}

/// rk A[ij]^k < r_ij^k. Requires A in the nilradical, 1 <= i < j <= t, k >= 1.
template <class M>
bool in_Zk(const M& a, const DimensionVector& d, int i, int j, int k) {
  detail::require_nilradical(a, d);
  check_pair(d, i, j);
  if (k < 1) throw std::invalid_argument("power must be at least 1");
  if (k > j - i) return false;
  const M w = window(a, d, i, j);
  M pw = w;
  for (int step = 1; step < k; ++step) pw = pw * w;
  return exact_rank(pw) < r_rank(d, i, j, k);
}

template <class M>
bool in_Z(const M& a, const DimensionVector& d, int i, int j) {
  return in_Zk(a, d, i, j, kappa(d, i, j));
}

/// Jordan type of A equals lambda(d).
template <class Field>
bool is_richardson(const Matrix<Field>& a, const DimensionVector& d) {
  detail::require_nilradical(a, d);
  return jordan_type(a) == lambda_of(d);
}

inline bool is_richardson(const BitMatrix& a, const DimensionVector& d) {
  return is_richardson(a.to_modular(), d);
}

/// Every (i, j, k) with k <= j - i at which A is rank-defective.
template <class M>
std::vector<Defect> defect_profile(const M& a, const DimensionVector& d) {
  detail::require_nilradical(a, d);
  RankThresholds thresholds(d);
  return DefectTable<M>(a, thresholds).profile();
}

/// Data describing one component Z_ij of the complement.
struct StratumSpec {
  Pair pair;
  int kappa;
  int rank_threshold;
  int codim;
  YoungTableau tableau;  // T(i,j)
  Partition mu;          // mu(i,j)
};

struct Decomposition {
  DimensionVector d;
  Partition lambda;
  std::vector<StratumSpec> strata;
};

/// Throws std::invalid_argument unless (i,j) is in gamma_set(d).
StratumSpec stratum_spec(const DimensionVector& d, int i, int j);

/// One stratum per pair of lambda_set(d), in increasing pair order.
Decomposition decompose(const DimensionVector& d);

/// Raised when the witness search exhausts its trial budget.
class WitnessNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WitnessOptions {
  std::uint64_t seed = 0;
  long budget = 100000;
  std::uint32_t prime = PrimeField::kDefaultPrime;
};

struct WitnessResult {
  ExactMatrix matrix;
  /// "edge-removal", "reattachment" or "random-search".
  std::string method;
  /// Candidates examined before success.
  long trials;
};

/// A nilradical matrix lying in Z_ij and in no other component of the
/// complement. Diagram candidates (one edge of the lowest (i,j)-chain of
/// L_R(d) removed, optionally reattached to lower rows) are tried first;
/// otherwise a seeded search over F_p generalises diagram points inside
/// Z_ij. Throws std::invalid_argument unless (i,j) is in lambda_set(d) and
/// WitnessNotFound when the budget runs out.
WitnessResult witness(const DimensionVector& d, Pair pair, const WitnessOptions& options = {});

/// True iff the matrix lies in Z_ij and in no other component.
template <class M>
bool separates(const M& a, const RankThresholds& thresholds, Pair pair) {
  DefectTable<M> table(a, thresholds);
  return table.containing_components() == PairSet{pair};
}

}  // namespace rorc
