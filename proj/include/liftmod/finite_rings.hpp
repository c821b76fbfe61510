#pragma once

// Exact arithmetic over F_p and Z/p^2 and dense square matrices over both.
//
// Scalars are stored reduced in [0, modulus). With p <= 2^15 every product of
// two reduced Z/p^2 scalars fits in 64 bits, so no big integers are needed here.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "liftmod/error.hpp"

namespace liftmod {

using Scalar = std::uint32_t;

class PrimeCtx {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 15;

  /// Throws Errc::InvalidArgument unless p is a prime in [2, 2^15].
  explicit PrimeCtx(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t p2() const noexcept { return p2_; }

  bool operator==(const PrimeCtx&) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t p2_;
};

bool is_prime(std::uint64_t n) noexcept;

namespace modarith {

inline Scalar reduce(std::int64_t v, Scalar m) noexcept {
  auto r = v % static_cast<std::int64_t>(m);
  return static_cast<Scalar>(r < 0 ? r + m : r);
}
inline Scalar add(Scalar a, Scalar b, Scalar m) noexcept {
  Scalar s = a + b;
  return s >= m ? s - m : s;
}
inline Scalar sub(Scalar a, Scalar b, Scalar m) noexcept { return a >= b ? a - b : a + m - b; }
inline Scalar mul(Scalar a, Scalar b, Scalar m) noexcept {
  return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % m);
}
inline Scalar neg(Scalar a, Scalar m) noexcept { return a == 0 ? 0 : m - a; }

/// Inverse of a modulo m; throws Errc::Singular when gcd(a, m) != 1.
Scalar inv(Scalar a, Scalar m);

}  // namespace modarith

enum class Ring { Fp, Zp2 };

/// Dense n x n matrix over F_p (Ring::Fp) or Z/p^2 (Ring::Zp2), row-major.
template <Ring R>
class Matrix {
 public:
  Matrix(const PrimeCtx& ctx, std::size_t n);
  Matrix(const PrimeCtx& ctx, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  Matrix(const PrimeCtx& ctx, const std::vector<std::vector<std::int64_t>>& rows);

  static Matrix identity(const PrimeCtx& ctx, std::size_t n);

  const PrimeCtx& ctx() const noexcept { return ctx_; }
  std::size_t dim() const noexcept { return n_; }
  Scalar modulus() const noexcept { return R == Ring::Fp ? ctx_.p() : ctx_.p2(); }

  Scalar operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { e_[i * n_ + j] = modarith::reduce(v, modulus()); }
  std::span<const Scalar> data() const noexcept { return e_; }
  std::span<const Scalar> row(std::size_t i) const { return {e_.data() + i * n_, n_}; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(std::int64_t s) const;

  bool is_identity() const noexcept;
  bool is_zero() const noexcept;

  bool operator==(const Matrix&) const = default;

 private:
  void check_compatible(const Matrix& o, const char* op) const;

  PrimeCtx ctx_;
  std::size_t n_;
  std::vector<Scalar> e_;
};

using MatFp = Matrix<Ring::Fp>;
using MatZp2 = Matrix<Ring::Zp2>;

template <Ring R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  return a * b;
}

/// Gauss-Jordan inverse. Over Z/p^2 a pivot must be a unit (not divisible by
/// p), so this fails exactly when the reduction mod p is singular.
template <Ring R>
Matrix<R> mat_inv(const Matrix<R>& m);

/// m^k for k >= 0.
template <Ring R>
Matrix<R> mat_pow(const Matrix<R>& m, std::uint64_t k);

/// Block-diagonal sum.
template <Ring R>
Matrix<R> block_diag(const Matrix<R>& a, const Matrix<R>& b);

/// C m C^{-1}.
template <Ring R>
Matrix<R> conjugate(const Matrix<R>& c, const Matrix<R>& m);

MatFp reduce(const MatZp2& m);

/// Lift through the canonical section F_p -> Z/p^2 (representatives in [0, p)).
MatZp2 lift_canonical(const MatFp& m);

/// The kernel of GL_n(Z/p^2) -> GL_n(F_p) as the additive group M_n(F_p):
/// m = I + p*X  |->  X. Throws Errc::NotInKernel if m is not I mod p.
MatFp split_kernel_element(const MatZp2& m);

/// X |-> I + p*X, inverse of split_kernel_element.
MatZp2 merge_kernel_element(const MatFp& x);

template <Ring R>
std::ostream& operator<<(std::ostream& os, const Matrix<R>& m);

extern template class Matrix<Ring::Fp>;
extern template class Matrix<Ring::Zp2>;

}  // namespace liftmod
