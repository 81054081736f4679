#include "rorc/composition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rorc {

DimensionVector::DimensionVector(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("dimension vector must have at least one part");
  offsets_.reserve(parts_.size() + 1);
  offsets_.push_back(0);
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("dimension vector parts must be positive");
    offsets_.push_back(offsets_.back() + p);
  }
}

DimensionVector DimensionVector::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed dimension vector: '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return DimensionVector(std::move(parts));
}

int DimensionVector::block_of(int index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  return static_cast<int>(it - offsets_.begin());
}

long long DimensionVector::nilradical_dim() const {
  long long n_ = n();
  long long squares = 0;
  for (int p : parts_) squares += static_cast<long long>(p) * p;
  return (n_ * n_ - squares) / 2;
}

DimensionVector DimensionVector::slice(int i, int j) const {
  if (i < 1 || j > t() || i > j) throw std::out_of_range("slice window out of range");
  return DimensionVector(std::vector<int>(parts_.begin() + (i - 1), parts_.begin() + j));
}

std::string DimensionVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
  os << ')';
  return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> values) {
  std::erase(values, 0);
  std::sort(values.begin(), values.end(), std::greater<>());
  return Partition(std::move(values));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int h) const {
  return h >= 1 && h <= length() ? parts_[static_cast<std::size_t>(h - 1)] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
      for (int h = 0; h < p; ++h) ++conj[static_cast<std::size_t>(h)];
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
  os << ')';
  return os.str();
}

void check_pair(const DimensionVector& d, int i, int j) {
  if (i < 1 || j > d.t() || i >= j) {
    throw std::out_of_range("pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for t=" +
                            std::to_string(d.t()));
  }
}

Partition lambda_of(const DimensionVector& d) { return Partition::from_unsorted(d.parts()).conjugate(); }

std::vector<int> d_less(const DimensionVector& d, int i, int j) {
  check_pair(d, i, j);
  const int lo = std::min(d[i], d[j]);
  std::vector<int> out;
  for (int l = i + 1; l < j; ++l)
    if (d[l] < lo) out.push_back(l);
  return out;
}

std::vector<int> d_geq(const DimensionVector& d, int i, int j) {
  check_pair(d, i, j);
  const int lo = std::min(d[i], d[j]);
  std::vector<int> out;
  for (int l = i + 1; l < j; ++l)
    if (d[l] >= lo) out.push_back(l);
  return out;
}

int kappa(const DimensionVector& d, int i, int j) { return 1 + static_cast<int>(d_geq(d, i, j).size()); }

namespace {

bool in_gamma(const DimensionVector& d, int i, int j) {
  const int lo = std::min(d[i], d[j]);
  const int hi = std::max(d[i], d[j]);
  for (int l = i + 1; l < j; ++l)
    if (!(d[l] < lo || d[l] > hi)) return false;
  return true;
}

bool in_lambda(const DimensionVector& d, int i, int j) {
  if (!in_gamma(d, i, j)) return false;
  if (d[i] == d[j]) return true;
  const int lo = std::min(d[i], d[j]);
  const int hi = std::max(d[i], d[j]);
  for (int k = 1; k <= d.t(); ++k) {
    if (k == i || k == j) continue;
    if (!(d[k] <= lo || d[k] >= hi)) return false;
  }
  for (int k = 1; k < i; ++k)
    if (d[k] == d[j]) return false;
  for (int k = j + 1; k <= d.t(); ++k)
    if (d[k] == d[i]) return false;
  return true;
}

}  // namespace

PairSet gamma_set(const DimensionVector& d) {
  PairSet out;
  for (int i = 1; i <= d.t(); ++i)
    for (int j = i + 1; j <= d.t(); ++j)
      if (in_gamma(d, i, j)) out.emplace(i, j);
  return out;
}

PairSet lambda_set(const DimensionVector& d) {
  PairSet out;
  for (int i = 1; i <= d.t(); ++i)
    for (int j = i + 1; j <= d.t(); ++j)
      if (in_lambda(d, i, j)) out.emplace(i, j);
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (mu.weight() != lam.weight()) throw std::invalid_argument("dominance order needs partitions of equal weight");
  int sum_mu = 0;
  int sum_lam = 0;
  const int len = std::max(mu.length(), lam.length());
  for (int h = 1; h <= len; ++h) {
    sum_mu += mu.part(h);
    sum_lam += lam.part(h);
    if (sum_mu > sum_lam) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (n > 0) rec(n, n);
  return out;
}

std::vector<DimensionVector> compositions_of(int n) {
  std::vector<DimensionVector> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      current.push_back(p);
      rec(remaining - p);
      current.pop_back();
    }
  };
  if (n > 0) rec(n);
  return out;
}

bool is_weakly_monotone(const DimensionVector& d) {
  const auto& p = d.parts();
  return std::is_sorted(p.begin(), p.end()) || std::is_sorted(p.begin(), p.end(), std::greater<>());
}

bool has_distinct_parts(const DimensionVector& d) {
  std::set<int> seen(d.parts().begin(), d.parts().end());
  return seen.size() == d.parts().size();
}

std::string to_string(const PairSet& pairs) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [i, j] : pairs) {
    os << (first ? "" : ",") << '(' << i << ',' << j << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace rorc
