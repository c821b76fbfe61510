#include "liftmod/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <type_traits>

namespace liftmod {

PolyInt::PolyInt(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyInt::PolyInt(std::initializer_list<std::int64_t> coeffs) {
  for (auto v : coeffs) c_.emplace_back(v);
  trim();
}

PolyInt PolyInt::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1, 0);
  v[k] = c;
  return PolyInt(std::move(v));
}

void PolyInt::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyInt PolyInt::operator+(const PolyInt& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return PolyInt(std::move(r));
}

PolyInt PolyInt::operator-(const PolyInt& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return PolyInt(std::move(r));
}

PolyInt PolyInt::operator*(const PolyInt& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return PolyInt(std::move(r));
}

PolyInt PolyInt::pow(std::uint64_t k) const {
  PolyInt result{1};
  PolyInt base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

namespace {

template <typename Coeff>
std::string render(const std::vector<Coeff>& c, const std::string& var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Coeff v = c[i];
    bool negative = false;
    if constexpr (std::is_same_v<Coeff, BigInt>) {
      negative = v < 0;
      if (negative) v = -v;
    }
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    const bool unit = (v == 1);
    if (i == 0) {
      os << v;
    } else {
      if (!unit) os << v << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

std::string PolyInt::to_string(const std::string& var) const { return render(c_, var); }

PolyDivMod divmod_exact(const PolyInt& a, const PolyInt& b) {
  if (!b.is_monic()) throw Error(Errc::NonMonicDivisor, "divisor " + b.to_string() + " is not monic");
  std::vector<BigInt> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {PolyInt{}, a};
  std::vector<BigInt> q(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    const BigInt lead = rem[k];
    if (lead == 0) continue;
    q[k - db] = lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= lead * b.coeffs()[j];
  }
  rem.resize(db);
  return {PolyInt(std::move(q)), PolyInt(std::move(rem))};
}

PolyFp mod_p_reduce(const PolyInt& a, const PrimeCtx& ctx) {
  PolyFp out(ctx);
  const BigInt p = ctx.p();
  for (const auto& v : a.coeffs()) {
    BigInt r = v % p;
    if (r < 0) r += p;
    out.c_.push_back(r.convert_to<Scalar>());
  }
  out.trim();
  return out;
}

MatZp2 eval_at_matrix(const PolyInt& a, const MatZp2& m) {
  const BigInt mod = m.modulus();
  MatZp2 acc(m.ctx(), m.dim());
  const MatZp2 id = MatZp2::identity(m.ctx(), m.dim());
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    BigInt r = a.coeffs()[i] % mod;
    if (r < 0) r += mod;
    acc = acc * m + id.scaled(r.convert_to<std::int64_t>());
  }
  return acc;
}

PolyFp::PolyFp(const PrimeCtx& ctx, std::vector<std::int64_t> coeffs) : ctx_(ctx) {
  for (auto v : coeffs) c_.push_back(modarith::reduce(v, ctx_.p()));
  trim();
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
  PolyFp r(ctx_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = modarith::add(coeff(i), o.coeff(i), ctx_.p());
  r.trim();
  return r;
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
  PolyFp r(ctx_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = modarith::sub(coeff(i), o.coeff(i), ctx_.p());
  r.trim();
  return r;
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
  PolyFp r(ctx_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  const Scalar p = ctx_.p();
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = modarith::add(r.c_[i + j], modarith::mul(c_[i], o.c_[j], p), p);
  r.trim();
  return r;
}

PolyFp PolyFp::pow(std::uint64_t k) const {
  PolyFp result(ctx_, {1});
  PolyFp base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

PolyFp PolyFp::truncated(std::size_t k) const {
  PolyFp r(*this);
  if (r.c_.size() > k) r.c_.resize(k);
  r.trim();
  return r;
}

std::string PolyFp::to_string(const std::string& var) const { return render(c_, var); }

std::ostream& operator<<(std::ostream& os, const PolyInt& a) { return os << a.to_string(); }
std::ostream& operator<<(std::ostream& os, const PolyFp& a) { return os << a.to_string(); }

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Scalar binom_div_p(std::uint64_t n, std::uint64_t k, const PrimeCtx& ctx) {
  const BigInt b = binomial(n, k);
  const BigInt p = ctx.p();
  if (b % p != 0)
    throw Error(Errc::NotDivisible,
                "p=" + std::to_string(ctx.p()) + " does not divide binom(" + std::to_string(n) + "," + std::to_string(k) + ")");
  return static_cast<Scalar>(((b / p) % p).convert_to<std::uint64_t>());
}

}  // namespace liftmod
