#pragma once

// Polynomials over Z (arbitrary precision) and over F_p, lowest degree first.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "liftmod/finite_rings.hpp"

namespace liftmod {

using BigInt = boost::multiprecision::cpp_int;

class PolyFp;

class PolyInt {
 public:
  PolyInt() = default;
  explicit PolyInt(std::vector<BigInt> coeffs);
  PolyInt(std::initializer_list<std::int64_t> coeffs);

  /// c * t^k
  static PolyInt monomial(const BigInt& c, std::size_t k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  PolyInt operator+(const PolyInt& o) const;
  PolyInt operator-(const PolyInt& o) const;
  PolyInt operator*(const PolyInt& o) const;
  PolyInt pow(std::uint64_t k) const;

  bool operator==(const PolyInt&) const = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

struct PolyDivMod {
  PolyInt quotient;
  PolyInt remainder;
};

/// Long division by a monic divisor; throws Errc::NonMonicDivisor otherwise.
PolyDivMod divmod_exact(const PolyInt& a, const PolyInt& b);

PolyFp mod_p_reduce(const PolyInt& a, const PrimeCtx& ctx);

/// Horner evaluation over Z/p^2.
MatZp2 eval_at_matrix(const PolyInt& a, const MatZp2& m);

class PolyFp {
 public:
  explicit PolyFp(const PrimeCtx& ctx) : ctx_(ctx) {}
  PolyFp(const PrimeCtx& ctx, std::vector<std::int64_t> coeffs);

  const PrimeCtx& ctx() const noexcept { return ctx_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  PolyFp operator+(const PolyFp& o) const;
  PolyFp operator-(const PolyFp& o) const;
  PolyFp operator*(const PolyFp& o) const;
  PolyFp pow(std::uint64_t k) const;

  /// Image in F_p[t]/(t^k).
  PolyFp truncated(std::size_t k) const;

  bool operator==(const PolyFp&) const = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  friend PolyFp mod_p_reduce(const PolyInt&, const PrimeCtx&);
  void trim();
  PrimeCtx ctx_;
  std::vector<Scalar> c_;
};

std::ostream& operator<<(std::ostream& os, const PolyInt& a);
std::ostream& operator<<(std::ostream& os, const PolyFp& a);

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// (binom(N, K) / p) mod p, exact. Throws Errc::NotDivisible when p does not
/// divide binom(N, K).
Scalar binom_div_p(std::uint64_t n, std::uint64_t k, const PrimeCtx& ctx);

}  // namespace liftmod
