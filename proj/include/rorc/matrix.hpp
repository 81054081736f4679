#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rorc/composition.hpp"
#include "rorc/field.hpp"

namespace rorc {

/// Dense matrix over an exact field. Indices are 0-based; block indices in
/// the free functions below are 1-based as everywhere else in the library.
template <class Field>
class Matrix {
 public:
  using value_type = typename Field::value_type;

  Matrix(Field field, int rows, int cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        data_(checked_size(rows, cols), field_.zero()) {}

  static Matrix zero(Field field, int n) { return Matrix(std::move(field), n, n); }

  static Matrix identity(Field field, int n) {
    Matrix m(std::move(field), n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = m.field_.one();
    return m;
  }

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  value_type& at(int r, int c) { return data_[index(r, c)]; }
  const value_type& at(int r, int c) const { return data_[index(r, c)]; }

  void set(int r, int c, long long v) { at(r, c) = field_.from_int(v); }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  /// Number of nonzero entries.
  int support_size() const {
    int count = 0;
    for (const auto& v : data_)
      if (!field_.is_zero(v)) ++count;
    return count;
  }

  bool operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  Matrix operator+(const Matrix& other) const {
    check_same_shape(other);
    Matrix out(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.add(data_[k], other.data_[k]);
    return out;
  }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_ || !(field_ == other.field_)) throw std::invalid_argument("incompatible matrix product");
    Matrix out(field_, rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
      for (int k = 0; k < cols_; ++k) {
        const value_type& a = at(r, k);
        if (field_.is_zero(a)) continue;
        for (int c = 0; c < other.cols_; ++c) {
          const value_type& b = other.at(k, c);
          if (field_.is_zero(b)) continue;
          out.at(r, c) = field_.add(out.at(r, c), field_.mul(a, b));
        }
      }
    }
    return out;
  }

  /// Rectangular submatrix of rows [r0, r0 + nr) and columns [c0, c0 + nc).
  Matrix submatrix(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_)
      throw std::out_of_range("submatrix out of range");
    Matrix out(field_, nr, nc);
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) out.at(r, c) = at(r0 + r, c0 + c);
    return out;
  }

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  void check_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || !(field_ == other.field_))
      throw std::invalid_argument("matrix shape or field mismatch");
  }

  Field field_;
  int rows_;
  int cols_;
  std::vector<value_type> data_;
};

using RationalMatrix = Matrix<Rationals>;
using ModularMatrix = Matrix<PrimeField>;

/// A matrix whose scalar domain is chosen at runtime ("Q" or "Fp:<p>").
using ExactMatrix = std::variant<RationalMatrix, ModularMatrix>;

/// Rank over the field. Rationals are cleared to integers and reduced by
/// fraction-free (Bareiss) elimination; prime fields use pivoted Gaussian
/// elimination.
int exact_rank(const RationalMatrix& a);
int exact_rank(const ModularMatrix& a);

/// Inverse of a square matrix; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& a);
ModularMatrix inverse(const ModularMatrix& a);

template <class Field>
Matrix<Field> power(const Matrix<Field>& a, int k) {
  if (!a.is_square()) throw std::invalid_argument("power of a non-square matrix");
  if (k < 0) throw std::invalid_argument("negative matrix power");
  Matrix<Field> out = Matrix<Field>::identity(a.field(), a.rows());
  for (int step = 0; step < k; ++step) out = out * a;
  return out;
}

inline void check_block_structure(int n, const DimensionVector& d) {
  if (n != d.n()) throw std::invalid_argument("matrix size does not match dimension vector");
}

/// The d_i x d_j block A_ij.
template <class Field>
Matrix<Field> block(const Matrix<Field>& a, const DimensionVector& d, int i, int j) {
  check_block_structure(a.rows(), d);
  if (i < 1 || j < 1 || i > d.t() || j > d.t()) throw std::out_of_range("block index out of range");
  return a.submatrix(d.offset(i - 1), d.offset(j - 1), d[i], d[j]);
}

/// The square principal submatrix A[i,j] spanning blocks i..j.
template <class Field>
Matrix<Field> window(const Matrix<Field>& a, const DimensionVector& d, int i, int j) {
  check_block_structure(a.rows(), d);
  if (i < 1 || j > d.t() || i > j) throw std::out_of_range("window out of range");
  const int start = d.offset(i - 1);
  const int size = d.offset(j) - start;
  return a.submatrix(start, start, size, size);
}

/// Jordan type of a nilpotent matrix from the rank sequence of its powers:
/// #{parts >= k} = rank(A^{k-1}) - rank(A^k). Throws std::domain_error if A
/// is not nilpotent.
template <class Field>
Partition jordan_type(const Matrix<Field>& a) {
  if (!a.is_square()) throw std::invalid_argument("Jordan type of a non-square matrix");
  const int n = a.rows();
  std::vector<int> conj;
  int prev_rank = n;
  Matrix<Field> pw = a;
  for (int k = 1; k <= n && prev_rank > 0; ++k) {
    const int r = exact_rank(pw);
    conj.push_back(prev_rank - r);
    prev_rank = r;
    if (r > 0) pw = pw * a;
  }
  if (prev_rank != 0) throw std::domain_error("matrix is not nilpotent");
  return Partition(conj).conjugate();
}

std::string to_string(const RationalMatrix& a);
std::string to_string(const ModularMatrix& a);

/// Sum of elementary matrices written as "E14+E45" (1-based; "E(10,12)" once
/// n exceeds 9), with coefficients shown when they differ from 1. "0" for the
/// zero matrix.
template <class Field>
std::string elementary_form(const Matrix<Field>& a) {
  std::string out;
  const auto& f = a.field();
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      const auto& v = a.at(r, c);
      if (f.is_zero(v)) continue;
      if (!out.empty()) out += '+';
      if (!(v == f.one())) out += f.format(v) + '*';
      if (a.rows() <= 9)
        out += 'E' + std::to_string(r + 1) + std::to_string(c + 1);
      else
        out += "E(" + std::to_string(r + 1) + ',' + std::to_string(c + 1) + ')';
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace rorc
