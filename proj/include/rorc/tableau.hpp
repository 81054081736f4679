#pragma once

#include <string>
#include <vector>

#include "rorc/composition.hpp"

namespace rorc {

/// Filling of a Young diagram with positive integers: rows strictly
/// increase left to right, columns weakly increase top to bottom.
class YoungTableau {
 public:
  /// Throws std::invalid_argument if the rows violate any filling rule.
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  /// Checks the shape and filling rules without constructing.
  static bool is_valid(const std::vector<std::vector<int>>& rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  Partition shape() const;

  /// Multiplicity of each entry 1..t.
  std::vector<int> content(int t) const;

  /// Row-reading word (rows top to bottom, each left to right).
  std::vector<int> reading_word() const;

  /// Shape of the sub-tableau of entries <= bound.
  Partition subshape(int bound) const;

  /// One row per line, entries space-separated.
  std::string to_string() const;

  auto operator<=>(const YoungTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// mu^1, ..., mu^t with |mu^i| = d_1 + ... + d_i and consecutive steps
/// differing by at most one box per row.
struct PartitionChain {
  std::vector<Partition> steps;
  bool operator==(const PartitionChain&) const = default;
};

/// T(d): the unique tableau of shape lambda(d) with d_i entries i. Row h
/// lists {i : d_i >= h}.
YoungTableau t_of_d(const DimensionVector& d);

/// All tableaux of shape mu with content d, ordered lexicographically by
/// reading word. Empty when mu is not dominated by lambda(d). Throws
/// std::invalid_argument if |mu| != n.
std::vector<YoungTableau> enumerate_tableaux(const Partition& mu, const DimensionVector& d);

/// All admissible chains ending in mu, generated by adding vertical strips.
std::vector<PartitionChain> chains_of(const Partition& mu, const DimensionVector& d);

PartitionChain tableau_to_chain(const YoungTableau& tableau, const DimensionVector& d);
/// Throws std::invalid_argument if the chain is not admissible for d.
YoungTableau chain_to_tableau(const PartitionChain& chain, const DimensionVector& d);

/// The last row of T(d) containing both i and j; equals min(d_i, d_j).
int s_row(const DimensionVector& d, int i, int j);

/// Number of entries strictly between a and b in the given 1-based row.
int boxes_between(const YoungTableau& tableau, int row, int a, int b);

/// Result of moving the j-box of T(d) out of row s(i,j) into the nearest
/// lower row that yields a valid tableau.
struct MinimalMovement {
  YoungTableau tableau;  // T(i,j)
  Partition mu;          // mu(i,j)
  int from_row;          // s(i,j)
  int to_row;
  int codim;             // c(i,j) = to_row - from_row
};

MinimalMovement minimal_movement(const DimensionVector& d, int i, int j);

/// c(i,j), the codimension of Z_ij in the nilradical. Throws
/// std::invalid_argument unless (i,j) is in gamma_set(d).
int codim(const DimensionVector& d, int i, int j);

}  // namespace rorc
