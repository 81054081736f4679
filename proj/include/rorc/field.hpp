#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace rorc {

/// The rationals with arbitrary-precision numerators and denominators.
/// Integer matrices are represented as rationals with denominator 1.
struct Rationals {
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long v) const { return value_type(mpz_class(std::to_string(v))); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  std::string name() const { return "Q"; }
  std::string format(const value_type& a) const { return a.get_str(); }

  bool operator==(const Rationals&) const = default;
};

/// Z/pZ for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  /// Multiplicative inverse; a must be nonzero.
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }
  std::string name() const { return "Fp:" + std::to_string(p_); }
  std::string format(value_type a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

}  // namespace rorc
