#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rorc/composition.hpp"
#include "rorc/matrix.hpp"

namespace rorc {

/// Edge between vertices u < v (1-based ids).
using Edge = std::pair<int, int>;

/// Columns of d_1, ..., d_t top-adjusted vertices joined by edges between
/// distinct columns. Vertices are numbered column-major: column i holds
/// o_{i-1}+1, ..., o_i from top to bottom.
///
/// Only branchless diagrams are representable: every vertex has at most one
/// edge to its left and at most one to its right, so each connected
/// component is a path (a chain).
class LineDiagram {
 public:
  /// Throws std::invalid_argument if an edge is out of range, stays inside
  /// a column, or creates a branch.
  LineDiagram(DimensionVector columns, std::vector<Edge> edges);

  const DimensionVector& columns() const { return columns_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return columns_.n(); }

  int vertex_id(int column, int height) const;
  int column_of(int vertex) const { return columns_.block_of(vertex - 1); }
  int height_of(int vertex) const { return vertex - columns_.offset(column_of(vertex) - 1); }

  /// Neighbor to the right / left of a vertex, or 0.
  int right_of(int vertex) const { return right_[static_cast<std::size_t>(vertex)]; }
  int left_of(int vertex) const { return left_[static_cast<std::size_t>(vertex)]; }

  bool has_edge(int u, int v) const;

  /// Vertex sequences of all chains, each ordered left to right, listed by
  /// their leftmost vertex.
  std::vector<std::vector<int>> chains() const;

  bool operator==(const LineDiagram& other) const {
    return columns_ == other.columns_ && edges_ == other.edges_;
  }

 private:
  DimensionVector columns_;
  std::vector<Edge> edges_;
  std::vector<int> right_;
  std::vector<int> left_;
};

/// Edge counts of the chains of a diagram.
struct ChainStats {
  /// Sorted descending.
  std::vector<int> lengths;
};

/// L_R(d): at every height h the columns with d_i >= h are joined
/// consecutively.
LineDiagram complete_diagram(const DimensionVector& d);

/// Columns i..j (re-indexed from 1) keeping only the edges with both
/// endpoints inside the window.
LineDiagram subdiagram(const LineDiagram& diagram, int i, int j);

ChainStats chain_stats(const LineDiagram& diagram);

/// The partition formed by the chain lengths plus one; this is the Jordan
/// type of phi(diagram).
Partition diagram_class(const LineDiagram& diagram);

/// Sum of the elementary matrices E_uv over the edges (u, v).
template <class Field>
Matrix<Field> phi(const LineDiagram& diagram, const Field& field) {
  Matrix<Field> out = Matrix<Field>::zero(field, diagram.vertex_count());
  for (const auto& [u, v] : diagram.edges()) out.at(u - 1, v - 1) = field.one();
  return out;
}

template <class Field>
Matrix<Field> richardson_element(const DimensionVector& d, const Field& field) {
  return phi(complete_diagram(d), field);
}

inline RationalMatrix richardson_element(const DimensionVector& d) { return richardson_element(d, Rationals{}); }

/// Maximal rank of the k-th power of the window (i, j) over the nilradical:
/// the sum over chains of L_R(d)[ij] of max(c - k + 1, 0).
int r_rank(const DimensionVector& d, int i, int j, int k);

/// Number of chains in L_R(d)[ij] with at least k edges. Agrees with
/// r_rank only in special cases; exposed for comparison.
int chains_with_at_least(const DimensionVector& d, int i, int j, int k);

/// ASCII drawing: one text row per height, vertices as `o`, edges between
/// vertices at equal height as dashes. Edges joining different heights are
/// listed below the drawing, followed by the chain lengths.
std::string render_ascii(const LineDiagram& diagram);

}  // namespace rorc
