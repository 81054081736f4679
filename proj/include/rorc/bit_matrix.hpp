#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "rorc/matrix.hpp"

namespace rorc {

/// Square matrix over F_2 of size at most 64, one machine word per row.
/// Bit c of row r holds entry (r, c). Used by the exhaustive enumerators,
/// where millions of small matrices are ranked.
class BitMatrix {
 public:
  static constexpr int kMaxSize = 64;

  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n) {
    if (n < 0 || n > kMaxSize) throw std::invalid_argument("BitMatrix size must be at most 64");
  }

  int size() const { return n_; }
  bool get(int r, int c) const { return (rows_[r] >> c) & 1u; }
  void set(int r, int c, bool v) {
    if (v)
      rows_[r] |= (std::uint64_t{1} << c);
    else
      rows_[r] &= ~(std::uint64_t{1} << c);
  }
  std::uint64_t row(int r) const { return rows_[r]; }

  bool is_zero() const {
    for (int r = 0; r < n_; ++r)
      if (rows_[r]) return false;
    return true;
  }

  BitMatrix operator*(const BitMatrix& other) const {
    BitMatrix out(n_);
    for (int r = 0; r < n_; ++r) {
      std::uint64_t bits = rows_[r];
      std::uint64_t acc = 0;
      while (bits) {
        const int k = std::countr_zero(bits);
        acc ^= other.rows_[k];
        bits &= bits - 1;
      }
      out.rows_[r] = acc;
    }
    return out;
  }

  /// Principal submatrix on indices [start, start + len).
  BitMatrix principal(int start, int len) const {
    BitMatrix out(len);
    const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
    for (int r = 0; r < len; ++r) out.rows_[r] = (rows_[start + r] >> start) & mask;
    return out;
  }

  int rank() const {
    std::array<std::uint64_t, kMaxSize> m{};
    for (int r = 0; r < n_; ++r) m[r] = rows_[r];
    int rank = 0;
    for (int c = 0; c < n_ && rank < n_; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      int pivot = -1;
      for (int r = rank; r < n_; ++r)
        if (m[r] & bit) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(m[pivot], m[rank]);
      for (int r = rank + 1; r < n_; ++r)
        if (m[r] & bit) m[r] ^= m[rank];
      ++rank;
    }
    return rank;
  }

  ModularMatrix to_modular() const {
    ModularMatrix out(PrimeField(2), n_, n_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) out.at(r, c) = get(r, c) ? 1 : 0;
    return out;
  }

  static BitMatrix from_modular(const ModularMatrix& a) {
    if (a.field().modulus() != 2 || !a.is_square()) throw std::invalid_argument("BitMatrix needs a square F_2 matrix");
    BitMatrix out(a.rows());
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c) != 0);
    return out;
  }

  bool operator==(const BitMatrix& other) const {
    if (n_ != other.n_) return false;
    for (int r = 0; r < n_; ++r)
      if (rows_[r] != other.rows_[r]) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxSize> rows_{};
};

inline int exact_rank(const BitMatrix& a) { return a.rank(); }

inline BitMatrix window(const BitMatrix& a, const DimensionVector& d, int i, int j) {
  check_block_structure(a.size(), d);
  if (i < 1 || j > d.t() || i > j) throw std::out_of_range("window out of range");
  return a.principal(d.offset(i - 1), d.offset(j) - d.offset(i - 1));
}

}  // namespace rorc
