#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rorc {

/// A pair of block indices (i, j), 1-based, with i < j.
using Pair = std::pair<int, int>;
using PairSet = std::set<Pair>;

/// Composition d = (d_1, ..., d_t) of n. Encodes the diagonal block sizes of
/// a parabolic subgroup of GL_n. All block indices in the public API are
/// 1-based.
class DimensionVector {
 public:
  explicit DimensionVector(std::vector<int> parts);

  /// Parses "3,1,2,4". Whitespace around entries is ignored.
  static DimensionVector parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int t() const { return static_cast<int>(parts_.size()); }
  int n() const { return offsets_.back(); }

  /// d_i for 1 <= i <= t.
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }

  /// o_i = d_1 + ... + d_i, with o_0 = 0.
  int offset(int i) const { return offsets_[static_cast<std::size_t>(i)]; }

  /// Block index (1-based) of the 0-based matrix row/column `index`.
  int block_of(int index) const;

  /// Number of free entries of the nilradical: sum over i < j of d_i d_j.
  long long nilradical_dim() const;

  /// (d_i, ..., d_j) for 1 <= i <= j <= t.
  DimensionVector slice(int i, int j) const;

  std::string to_string() const;

  bool operator==(const DimensionVector& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Sorts the given positive integers descending; zeros are dropped.
  static Partition from_unsorted(std::vector<int> values);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// The h-th part, 1-based; 0 beyond the length.
  int part(int h) const;

  Partition conjugate() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Throws std::out_of_range unless 1 <= i < j <= t.
void check_pair(const DimensionVector& d, int i, int j);

/// lambda(d): the conjugate of d sorted descending, lambda_h = #{i : d_i >= h}.
Partition lambda_of(const DimensionVector& d);

/// {l : i < l < j, d_l < min(d_i, d_j)}.
std::vector<int> d_less(const DimensionVector& d, int i, int j);
/// {l : i < l < j, d_l >= min(d_i, d_j)}.
std::vector<int> d_geq(const DimensionVector& d, int i, int j);

/// kappa(i, j) = 1 + |d_geq(d, i, j)|.
int kappa(const DimensionVector& d, int i, int j);

/// Pairs whose intermediate parts all lie strictly below the minimum or
/// strictly above the maximum of d_i, d_j.
PairSet gamma_set(const DimensionVector& d);

/// Index set of the irreducible components of the complement of the
/// Richardson orbit.
PairSet lambda_set(const DimensionVector& d);

/// mu <= lam in dominance order. Throws std::invalid_argument on weight mismatch.
bool dominance_leq(const Partition& mu, const Partition& lam);

/// All partitions of n, in reverse lexicographic order (n, n-1 1, ...).
std::vector<Partition> partitions_of(int n);

/// All compositions of n, ordered lexicographically.
std::vector<DimensionVector> compositions_of(int n);

bool is_weakly_monotone(const DimensionVector& d);
bool has_distinct_parts(const DimensionVector& d);

std::string to_string(const PairSet& pairs);

}  // namespace rorc
