#include "rorc/line_diagram.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rorc {

LineDiagram::LineDiagram(DimensionVector columns, std::vector<Edge> edges)
    : columns_(std::move(columns)), edges_(std::move(edges)) {
  const int n = columns_.n();
  right_.assign(static_cast<std::size_t>(n + 1), 0);
  left_.assign(static_cast<std::size_t>(n + 1), 0);
  std::sort(edges_.begin(), edges_.end());
  for (const auto& [u, v] : edges_) {
    if (u < 1 || v > n || u >= v) throw std::invalid_argument("edge endpoints out of range");
    if (column_of(u) >= column_of(v)) throw std::invalid_argument("edge must join a column to a later column");
    if (right_[u] != 0 || left_[v] != 0) throw std::invalid_argument("branched line diagrams are not supported");
    right_[u] = v;
    left_[v] = u;
  }
}

int LineDiagram::vertex_id(int column, int height) const {
  if (column < 1 || column > columns_.t() || height < 1 || height > columns_[column])
    throw std::out_of_range("vertex position out of range");
  return columns_.offset(column - 1) + height;
}

bool LineDiagram::has_edge(int u, int v) const {
  return u >= 1 && u <= vertex_count() && right_[static_cast<std::size_t>(u)] == v;
}

std::vector<std::vector<int>> LineDiagram::chains() const {
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= vertex_count(); ++v) {
    if (left_[static_cast<std::size_t>(v)] != 0) continue;
    std::vector<int> chain{v};
    for (int w = right_[static_cast<std::size_t>(v)]; w != 0; w = right_[static_cast<std::size_t>(w)]) chain.push_back(w);
    out.push_back(std::move(chain));
  }
  return out;
}

LineDiagram complete_diagram(const DimensionVector& d) {
  std::vector<Edge> edges;
  int max_height = *std::max_element(d.parts().begin(), d.parts().end());
  for (int h = 1; h <= max_height; ++h) {
    int prev = 0;
    for (int i = 1; i <= d.t(); ++i) {
      if (d[i] < h) continue;
      if (prev != 0) edges.emplace_back(d.offset(prev - 1) + h, d.offset(i - 1) + h);
      prev = i;
    }
  }
  return LineDiagram(d, std::move(edges));
}

LineDiagram subdiagram(const LineDiagram& diagram, int i, int j) {
  const DimensionVector& d = diagram.columns();
  if (i < 1 || j > d.t() || i > j) throw std::out_of_range("subdiagram window out of range");
  const int lo = d.offset(i - 1);
  const int hi = d.offset(j);
  std::vector<Edge> edges;
  for (const auto& [u, v] : diagram.edges())
    if (u > lo && v <= hi) edges.emplace_back(u - lo, v - lo);
  return LineDiagram(d.slice(i, j), std::move(edges));
}

ChainStats chain_stats(const LineDiagram& diagram) {
  ChainStats stats;
  for (const auto& chain : diagram.chains()) stats.lengths.push_back(static_cast<int>(chain.size()) - 1);
  std::sort(stats.lengths.begin(), stats.lengths.end(), std::greater<>());
  return stats;
}

Partition diagram_class(const LineDiagram& diagram) {
  std::vector<int> parts;
  for (int c : chain_stats(diagram).lengths) parts.push_back(c + 1);
  return Partition::from_unsorted(std::move(parts));
}

namespace {

ChainStats window_chains(const DimensionVector& d, int i, int j, int k) {
  check_pair(d, i, j);
  if (k < 1) throw std::invalid_argument("power must be at least 1");
  return chain_stats(subdiagram(complete_diagram(d), i, j));
}

}  // namespace

int r_rank(const DimensionVector& d, int i, int j, int k) {
  int total = 0;
  for (int c : window_chains(d, i, j, k).lengths) total += std::max(c - k + 1, 0);
  return total;
}

int chains_with_at_least(const DimensionVector& d, int i, int j, int k) {
  int total = 0;
  for (int c : window_chains(d, i, j, k).lengths)
    if (c >= k) ++total;
  return total;
}

std::string render_ascii(const LineDiagram& diagram) {
  const DimensionVector& d = diagram.columns();
  const int max_height = *std::max_element(d.parts().begin(), d.parts().end());
  const int width = 4 * (d.t() - 1) + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(max_height), std::string(static_cast<std::size_t>(width), ' '));
  auto x_of = [](int column) { return 4 * (column - 1); };
  for (int c = 1; c <= d.t(); ++c)
    for (int h = 1; h <= d[c]; ++h) grid[h - 1][x_of(c)] = 'o';
  std::vector<Edge> slanted;
  for (const auto& [u, v] : diagram.edges()) {
    const int hu = diagram.height_of(u);
    if (hu != diagram.height_of(v)) {
      slanted.emplace_back(u, v);
      continue;
    }
    std::string& line = grid[hu - 1];
    for (int x = x_of(diagram.column_of(u)) + 1; x < x_of(diagram.column_of(v)); ++x)
      if (line[x] == ' ') line[x] = '-';
  }
  std::ostringstream os;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  if (!slanted.empty()) {
    os << "other edges:";
    for (const auto& [u, v] : slanted) os << ' ' << u << '-' << v;
    os << '\n';
  }
  os << "chain lengths:";
  for (int c : chain_stats(diagram).lengths) os << ' ' << c;
  os << '\n';
  return os.str();
}

}  // namespace rorc
