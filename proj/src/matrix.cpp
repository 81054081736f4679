#include "rorc/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace rorc {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

namespace {

// Fraction-free elimination on integer rows; returns the rank.
int bareiss_rank(std::vector<std::vector<mpz_class>> m, int cols) {
  const int rows = static_cast<int>(m.size());
  mpz_class prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (sgn(m[r][c]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    const mpz_class& p = m[rank][c];
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = c + 1; k < cols; ++k) {
        mpz_class v = m[r][k] * p - m[r][c] * m[rank][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[r][k] = std::move(v);
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

template <class Field>
Matrix<Field> gauss_jordan_inverse(const Matrix<Field>& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const auto& f = a.field();
  const int n = a.rows();
  Matrix<Field> work = a;
  Matrix<Field> inv = Matrix<Field>::identity(f, n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!f.is_zero(work.at(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("matrix is singular");
    if (pivot != c) {
      for (int k = 0; k < n; ++k) {
        std::swap(work.at(pivot, k), work.at(c, k));
        std::swap(inv.at(pivot, k), inv.at(c, k));
      }
    }
    const auto scale = f.inv(work.at(c, c));
    for (int k = 0; k < n; ++k) {
      work.at(c, k) = f.mul(work.at(c, k), scale);
      inv.at(c, k) = f.mul(inv.at(c, k), scale);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || f.is_zero(work.at(r, c))) continue;
      const auto factor = work.at(r, c);
      for (int k = 0; k < n; ++k) {
        work.at(r, k) = f.sub(work.at(r, k), f.mul(factor, work.at(c, k)));
        inv.at(r, k) = f.sub(inv.at(r, k), f.mul(factor, inv.at(c, k)));
      }
    }
  }
  return inv;
}

}  // namespace

int exact_rank(const RationalMatrix& a) {
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(static_cast<std::size_t>(a.rows()));
  for (int r = 0; r < a.rows(); ++r) {
    mpz_class common = 1;
    for (int c = 0; c < a.cols(); ++c) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), a.at(r, c).get_den_mpz_t());
    std::vector<mpz_class> row(static_cast<std::size_t>(a.cols()));
    bool nonzero = false;
    for (int c = 0; c < a.cols(); ++c) {
      const mpq_class& v = a.at(r, c);
      row[c] = v.get_num() * (common / v.get_den());
      nonzero = nonzero || sgn(row[c]) != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  return bareiss_rank(std::move(rows), a.cols());
}

int exact_rank(const ModularMatrix& a) {
  const auto& f = a.field();
  ModularMatrix m = a;
  const int rows = m.rows();
  const int cols = m.cols();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int k = c; k < cols; ++k) std::swap(m.at(pivot, k), m.at(rank, k));
    const auto scale = f.inv(m.at(rank, c));
    for (int r = rank + 1; r < rows; ++r) {
      if (m.at(r, c) == 0) continue;
      const auto factor = f.mul(m.at(r, c), scale);
      for (int k = c; k < cols; ++k) m.at(r, k) = f.sub(m.at(r, k), f.mul(factor, m.at(rank, k)));
    }
    ++rank;
  }
  return rank;
}

RationalMatrix inverse(const RationalMatrix& a) { return gauss_jordan_inverse(a); }
ModularMatrix inverse(const ModularMatrix& a) { return gauss_jordan_inverse(a); }

namespace {

template <class Field>
std::string render(const Matrix<Field>& a) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      cells.push_back(a.field().format(a.at(r, c)));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      const std::string& s = cells[static_cast<std::size_t>(r * a.cols() + c)];
      os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string to_string(const RationalMatrix& a) { return render(a); }
std::string to_string(const ModularMatrix& a) { return render(a); }

}  // namespace rorc
