#include "liftmod/finite_rings.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace liftmod {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Singular: return "Singular";
    case Errc::NotInKernel: return "NotInKernel";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NonMonicDivisor: return "NonMonicDivisor";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::AuditFailed: return "AuditFailed";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::UnrealizedPresentation: return "UnrealizedPresentation";
    case Errc::InvalidRepresentation: return "InvalidRepresentation";
    case Errc::ProductNotZero: return "ProductNotZero";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::InvalidDivisor: return "InvalidDivisor";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::Parse: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeCtx::PrimeCtx(std::uint32_t p) : p_(p), p2_(p * p) {
  if (p > kMaxPrime || !is_prime(p))
    throw Error(Errc::InvalidArgument, "modulus " + std::to_string(p) + " is not a prime in [2, 2^15]");
}

namespace modarith {

Scalar inv(Scalar a, Scalar m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = m, new_r = a % m;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(Errc::Singular, std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return reduce(t, m);
}

}  // namespace modarith

template <Ring R>
Matrix<R>::Matrix(const PrimeCtx& ctx, std::size_t n) : ctx_(ctx), n_(n), e_(n * n, 0) {}

template <Ring R>
Matrix<R>::Matrix(const PrimeCtx& ctx, const std::vector<std::vector<std::int64_t>>& rows)
    : Matrix(ctx, rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw Error(Errc::DimensionMismatch, "matrix rows must have equal length n");
    for (std::size_t j = 0; j < n_; ++j) set(i, j, rows[i][j]);
  }
}

template <Ring R>
Matrix<R>::Matrix(const PrimeCtx& ctx, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : Matrix(ctx, std::vector<std::vector<std::int64_t>>(rows.begin(), rows.end())) {}

template <Ring R>
Matrix<R> Matrix<R>::identity(const PrimeCtx& ctx, std::size_t n) {
  Matrix m(ctx, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
  return m;
}

template <Ring R>
void Matrix<R>::check_compatible(const Matrix& o, const char* op) const {
  if (!(ctx_ == o.ctx_)) throw Error(Errc::DimensionMismatch, std::string(op) + ": modulus mismatch");
  if (n_ != o.n_)
    throw Error(Errc::DimensionMismatch,
                std::string(op) + ": dimension " + std::to_string(n_) + " vs " + std::to_string(o.n_));
}

template <Ring R>
Matrix<R> Matrix<R>::operator+(const Matrix& o) const {
  check_compatible(o, "add");
  Matrix r(*this);
  const Scalar m = modulus();
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = modarith::add(e_[i], o.e_[i], m);
  return r;
}

template <Ring R>
Matrix<R> Matrix<R>::operator-(const Matrix& o) const {
  check_compatible(o, "sub");
  Matrix r(*this);
  const Scalar m = modulus();
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = modarith::sub(e_[i], o.e_[i], m);
  return r;
}

template <Ring R>
Matrix<R> Matrix<R>::operator*(const Matrix& o) const {
  check_compatible(o, "mul");
  Matrix r(ctx_, n_);
  const std::uint64_t m = modulus();
  std::vector<std::uint64_t> acc(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint64_t a = e_[i * n_ + k];
      if (a == 0) continue;
      const Scalar* orow = o.e_.data() + k * n_;
      // entries < 2^30, so a single product is < 2^60; reduce each step
      for (std::size_t j = 0; j < n_; ++j) acc[j] = (acc[j] + a * orow[j]) % m;
    }
    for (std::size_t j = 0; j < n_; ++j) r.e_[i * n_ + j] = static_cast<Scalar>(acc[j]);
  }
  return r;
}

template <Ring R>
Matrix<R> Matrix<R>::scaled(std::int64_t s) const {
  Matrix r(*this);
  const Scalar m = modulus();
  const Scalar sr = modarith::reduce(s, m);
  for (auto& v : r.e_) v = modarith::mul(v, sr, m);
  return r;
}

template <Ring R>
bool Matrix<R>::is_identity() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (e_[i * n_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

template <Ring R>
bool Matrix<R>::is_zero() const noexcept {
  for (auto v : e_)
    if (v != 0) return false;
  return true;
}

template <Ring R>
Matrix<R> mat_inv(const Matrix<R>& m) {
  const std::size_t n = m.dim();
  const Scalar mod = m.modulus();
  const Scalar p = m.ctx().p();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] % p == 0) ++piv;
    if (piv == n) throw Error(Errc::Singular, "matrix is not invertible (no unit pivot in column " + std::to_string(col) + ")");
    std::swap(a[piv], a[col]);
    const Scalar s = modarith::inv(a[col][col], mod);
    for (auto& v : a[col]) v = modarith::mul(v, s, mod);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Scalar f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j)
        a[r][j] = modarith::sub(a[r][j], modarith::mul(f, a[col][j], mod), mod);
    }
  }
  Matrix<R> out(m.ctx(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, a[i][n + j]);
  return out;
}

template <Ring R>
Matrix<R> mat_pow(const Matrix<R>& m, std::uint64_t k) {
  Matrix<R> result = Matrix<R>::identity(m.ctx(), m.dim());
  Matrix<R> base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

template <Ring R>
Matrix<R> block_diag(const Matrix<R>& a, const Matrix<R>& b) {
  if (!(a.ctx() == b.ctx())) throw Error(Errc::DimensionMismatch, "block_diag: modulus mismatch");
  const std::size_t n = a.dim(), m = b.dim();
  Matrix<R> out(a.ctx(), n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.set(n + i, n + j, b(i, j));
  return out;
}

template <Ring R>
Matrix<R> conjugate(const Matrix<R>& c, const Matrix<R>& m) {
  return c * m * mat_inv(c);
}

MatFp reduce(const MatZp2& m) {
  MatFp out(m.ctx(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out.set(i, j, m(i, j));
  return out;
}

MatZp2 lift_canonical(const MatFp& m) {
  MatZp2 out(m.ctx(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out.set(i, j, m(i, j));
  return out;
}

MatFp split_kernel_element(const MatZp2& m) {
  const Scalar p = m.ctx().p();
  MatFp out(m.ctx(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Scalar v = m(i, j);
      const Scalar diag = (i == j) ? 1 : 0;
      const Scalar d = modarith::sub(v, diag, m.modulus());
      if (d % p != 0)
        throw Error(Errc::NotInKernel, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") is not congruent to the identity mod p");
      out.set(i, j, d / p);
    }
  }
  return out;
}

MatZp2 merge_kernel_element(const MatFp& x) {
  MatZp2 out = MatZp2::identity(x.ctx(), x.dim());
  const std::int64_t p = x.ctx().p();
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) out.set(i, j, out(i, j) + p * x(i, j));
  return out;
}

template <Ring R>
std::ostream& operator<<(std::ostream& os, const Matrix<R>& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

template class Matrix<Ring::Fp>;
template class Matrix<Ring::Zp2>;

#define LIFTMOD_INSTANTIATE(R)                                            \
  template Matrix<R> mat_inv(const Matrix<R>&);                           \
  template Matrix<R> mat_pow(const Matrix<R>&, std::uint64_t);            \
  template Matrix<R> block_diag(const Matrix<R>&, const Matrix<R>&);      \
  template Matrix<R> conjugate(const Matrix<R>&, const Matrix<R>&);       \
  template std::ostream& operator<<(std::ostream&, const Matrix<R>&);

LIFTMOD_INSTANTIATE(Ring::Fp)
LIFTMOD_INSTANTIATE(Ring::Zp2)

#undef LIFTMOD_INSTANTIATE

}  // namespace liftmod
