#include "rorc/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rorc {

bool YoungTableau::is_valid(const std::vector<std::vector<int>>& rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) return false;
      if (c > 0 && row[c] <= row[c - 1]) return false;
      if (r > 0 && row[c] < rows[r - 1][c]) return false;
    }
  }
  return true;
}

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (!is_valid(rows_)) throw std::invalid_argument("rows do not form a valid Young tableau");
}

Partition YoungTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::vector<int> YoungTableau::content(int t) const {
  std::vector<int> counts(static_cast<std::size_t>(t), 0);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v > t) throw std::out_of_range("tableau entry exceeds t");
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  return counts;
}

std::vector<int> YoungTableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

Partition YoungTableau::subshape(int bound) const {
  std::vector<int> parts;
  for (const auto& row : rows_) {
    const auto len = std::count_if(row.begin(), row.end(), [bound](int v) { return v <= bound; });
    if (len > 0) parts.push_back(static_cast<int>(len));
  }
  return Partition(std::move(parts));
}

std::string YoungTableau::to_string() const {
  std::ostringstream os;
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
    os << '\n';
  }
  return os.str();
}

YoungTableau t_of_d(const DimensionVector& d) {
  const int max_height = *std::max_element(d.parts().begin(), d.parts().end());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(max_height));
  for (int h = 1; h <= max_height; ++h)
    for (int i = 1; i <= d.t(); ++i)
      if (d[i] >= h) rows[h - 1].push_back(i);
  return YoungTableau(std::move(rows));
}

std::vector<YoungTableau> enumerate_tableaux(const Partition& mu, const DimensionVector& d) {
  if (mu.weight() != d.n()) throw std::invalid_argument("shape weight differs from n");
  std::vector<YoungTableau> out;
  if (!dominance_leq(mu, lambda_of(d))) return out;

  const int t = d.t();
  const int row_total = mu.length();
  std::vector<int> remaining(d.parts());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(row_total));

  // Rows are filled top to bottom; each row is a strictly increasing choice
  // of values, explored in lexicographic order.
  std::function<void(int)> fill_row;
  std::function<void(int, int, int)> choose;

  choose = [&](int r, int pos, int min_value) {
    auto& row = rows[r];
    const int len = mu.part(r + 1);
    if (pos == len) {
      // Every value still owed must fit into distinct later rows.
      const int later_rows = row_total - r - 1;
      for (int v = 1; v <= t; ++v)
        if (remaining[v - 1] > later_rows) return;
      fill_row(r + 1);
      return;
    }
    const int lower = r > 0 ? std::max(min_value, rows[r - 1][pos]) : min_value;
    for (int v = lower; v <= t - (len - pos - 1); ++v) {
      if (remaining[v - 1] == 0) continue;
      // Skipping a value that must appear in every remaining row is fatal.
      bool skipped_forced = false;
      for (int w = min_value; w < v; ++w)
        if (remaining[w - 1] >= row_total - r) skipped_forced = true;
      if (skipped_forced) break;
      row.push_back(v);
      --remaining[v - 1];
      choose(r, pos + 1, v + 1);
      ++remaining[v - 1];
      row.pop_back();
    }
  };

  fill_row = [&](int r) {
    if (r == row_total) {
      out.emplace_back(rows);
      return;
    }
    choose(r, 0, 1);
  };

  fill_row(0);
  return out;
}

std::vector<PartitionChain> chains_of(const Partition& mu, const DimensionVector& d) {
  if (mu.weight() != d.n()) throw std::invalid_argument("shape weight differs from n");
  std::vector<PartitionChain> out;
  const int len = mu.length();
  std::vector<Partition> steps;

  std::function<void(int)> step;
  std::function<void(int, int, std::vector<int>&)> add_strip;

  add_strip = [&](int i, int need, std::vector<int>& next) {
    // Choose rows for the d_i new boxes, scanning rows top to bottom.
    std::function<void(int, int)> pick = [&](int row, int left) {
      if (left == 0) {
        for (int r = 1; r < len; ++r)
          if (next[r] > next[r - 1]) return;
        steps.push_back(Partition::from_unsorted(next));
        step(i + 1);
        steps.pop_back();
        return;
      }
      if (len - row < left) return;
      if (next[row] < mu.part(row + 1)) {
        ++next[row];
        pick(row + 1, left - 1);
        --next[row];
      }
      pick(row + 1, left);
    };
    pick(0, need);
  };

  step = [&](int i) {
    if (i > d.t()) {
      if (steps.back() == mu) out.push_back(PartitionChain{steps});
      return;
    }
    std::vector<int> next(static_cast<std::size_t>(len), 0);
    if (!steps.empty()) {
      const auto& prev = steps.back().parts();
      std::copy(prev.begin(), prev.end(), next.begin());
    }
    add_strip(i, d[i], next);
  };

  step(1);
  return out;
}

PartitionChain tableau_to_chain(const YoungTableau& tableau, const DimensionVector& d) {
  PartitionChain chain;
  for (int i = 1; i <= d.t(); ++i) chain.steps.push_back(tableau.subshape(i));
  return chain;
}

YoungTableau chain_to_tableau(const PartitionChain& chain, const DimensionVector& d) {
  if (static_cast<int>(chain.steps.size()) != d.t()) throw std::invalid_argument("chain length differs from t");
  std::vector<std::vector<int>> rows;
  Partition prev;
  int total = 0;
  for (int i = 1; i <= d.t(); ++i) {
    const Partition& cur = chain.steps[static_cast<std::size_t>(i - 1)];
    total += d[i];
    if (cur.weight() != total) throw std::invalid_argument("chain step has the wrong weight");
    for (int r = 1; r <= std::max(cur.length(), prev.length()); ++r) {
      const int grow = cur.part(r) - prev.part(r);
      if (grow < 0 || grow > 1) throw std::invalid_argument("chain step is not a vertical strip");
      if (grow == 1) {
        if (static_cast<int>(rows.size()) < r) rows.resize(static_cast<std::size_t>(r));
        rows[r - 1].push_back(i);
      }
    }
    prev = cur;
  }
  return YoungTableau(std::move(rows));
}

int s_row(const DimensionVector& d, int i, int j) {
  check_pair(d, i, j);
  return std::min(d[i], d[j]);
}

int boxes_between(const YoungTableau& tableau, int row, int a, int b) {
  if (row < 1 || row > tableau.row_count()) throw std::out_of_range("row out of range");
  const auto& entries = tableau.rows()[static_cast<std::size_t>(row - 1)];
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [a, b](int v) { return v > a && v < b; }));
}

MinimalMovement minimal_movement(const DimensionVector& d, int i, int j) {
  const int s = s_row(d, i, j);
  auto rows = t_of_d(d).rows();
  auto& source = rows[static_cast<std::size_t>(s - 1)];
  source.erase(std::find(source.begin(), source.end(), j));

  const int existing = static_cast<int>(rows.size());
  for (int r = s + 1; r <= existing + 1; ++r) {
    auto candidate = rows;
    if (r == existing + 1) {
      candidate.push_back({j});
    } else {
      auto& target = candidate[static_cast<std::size_t>(r - 1)];
      auto pos = std::lower_bound(target.begin(), target.end(), j);
      if (pos != target.end() && *pos == j) continue;
      target.insert(pos, j);
    }
    if (YoungTableau::is_valid(candidate)) {
      YoungTableau tableau(std::move(candidate));
      Partition mu = tableau.shape();
      return MinimalMovement{std::move(tableau), std::move(mu), s, r, r - s};
    }
  }
  throw std::logic_error("no valid insertion row for the moved box");
}

int codim(const DimensionVector& d, int i, int j) {
  check_pair(d, i, j);
  if (!gamma_set(d).contains({i, j})) throw std::invalid_argument("codimension is defined for pairs in Gamma(d)");
  return minimal_movement(d, i, j).codim;
}

}  // namespace rorc
