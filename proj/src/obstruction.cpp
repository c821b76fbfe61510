#include "liftmod/obstruction.hpp"

#include <optional>

namespace liftmod {

GroupAlgebraElement GroupAlgebraElement::zero(const FiniteGroup& g, Scalar modulus) {
  return {modulus, std::vector<Scalar>(g.order(), 0)};
}

GroupAlgebraElement GroupAlgebraElement::basis(const FiniteGroup& g, Scalar modulus, Element x) {
  auto e = zero(g, modulus);
  e.coeffs.at(x) = 1 % modulus;
  return e;
}

bool GroupAlgebraElement::is_zero() const noexcept {
  for (auto c : coeffs)
    if (c != 0) return false;
  return true;
}

namespace {

void check_same(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.modulus != b.modulus || a.coeffs.size() != b.coeffs.size())
    throw Error(Errc::DimensionMismatch, "group algebra elements over different rings or groups");
}

void check_group(const FiniteGroup& g, const GroupAlgebraElement& a) {
  if (a.coeffs.size() != g.order())
    throw Error(Errc::DimensionMismatch, "group algebra element length does not match the group order");
}

// Reduced row echelon basis over F_p, pivots at the lowest nonzero index.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t len, Scalar p) : len_(len), p_(p), pivot_row_(len, -1) {}

  void reduce(std::vector<Scalar>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < len_; ++j)
        if (rows_[i][j] != 0) v[j] = modarith::sub(v[j], modarith::mul(f, rows_[i][j], p_), p_);
    }
  }

  void insert(std::vector<Scalar> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < len_ && v[lead] == 0) ++lead;
    if (lead == len_) return;
    const Scalar s = modarith::inv(v[lead], p_);
    for (auto& x : v) x = modarith::mul(x, s, p_);
    for (auto& row : rows_) {
      const Scalar f = row[lead];
      if (f == 0) continue;
      for (std::size_t j = 0; j < len_; ++j)
        if (v[j] != 0) row[j] = modarith::sub(row[j], modarith::mul(f, v[j], p_), p_);
    }
    pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
    pivots_.push_back(lead);
    rows_.push_back(std::move(v));
  }

  bool is_pivot(std::size_t c) const { return pivot_row_[c] >= 0; }

  // rows sorted by pivot
  std::pair<std::vector<std::vector<Scalar>>, std::vector<std::size_t>> sorted() const {
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < len_; ++c) {
      if (pivot_row_[c] < 0) continue;
      rows.push_back(rows_[static_cast<std::size_t>(pivot_row_[c])]);
      piv.push_back(c);
    }
    return {std::move(rows), std::move(piv)};
  }

 private:
  std::size_t len_;
  Scalar p_;
  std::vector<std::ptrdiff_t> pivot_row_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Scalar>> rows_;
};

}  // namespace

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  check_same(*this, o);
  GroupAlgebraElement r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = modarith::add(coeffs[i], o.coeffs[i], modulus);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  check_same(*this, o);
  GroupAlgebraElement r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = modarith::sub(coeffs[i], o.coeffs[i], modulus);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(std::int64_t s) const {
  GroupAlgebraElement r = *this;
  const Scalar sr = modarith::reduce(s, modulus);
  for (auto& c : r.coeffs) c = modarith::mul(c, sr, modulus);
  return r;
}

GroupAlgebraElement algebra_mul(const FiniteGroup& g, const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same(a, b);
  check_group(g, a);
  auto r = GroupAlgebraElement::zero(g, a.modulus);
  const Scalar m = a.modulus;
  for (Element x = 0; x < g.order(); ++x) {
    if (a.coeffs[x] == 0) continue;
    for (Element y = 0; y < g.order(); ++y) {
      if (b.coeffs[y] == 0) continue;
      auto& cell = r.coeffs[g.mul(x, y)];
      cell = modarith::add(cell, modarith::mul(a.coeffs[x], b.coeffs[y], m), m);
    }
  }
  return r;
}

GroupAlgebraElement algebra_pow(const FiniteGroup& g, const GroupAlgebraElement& a, std::uint64_t k) {
  auto r = GroupAlgebraElement::basis(g, a.modulus, 0);
  auto base = a;
  while (k > 0) {
    if (k & 1) r = algebra_mul(g, r, base);
    k >>= 1;
    if (k > 0) base = algebra_mul(g, base, base);
  }
  return r;
}

GroupAlgebraElement one_minus_power(const FiniteGroup& g, Scalar modulus, Element x, std::uint64_t k) {
  const auto one_minus = GroupAlgebraElement::basis(g, modulus, 0) - GroupAlgebraElement::basis(g, modulus, x);
  return algebra_pow(g, one_minus, k);
}

GroupAlgebraElement reduce_mod_p(const GroupAlgebraElement& a, const PrimeCtx& ctx) {
  GroupAlgebraElement r{ctx.p(), a.coeffs};
  for (auto& c : r.coeffs) c %= ctx.p();
  return r;
}

GroupAlgebraElement lift_canonical(const GroupAlgebraElement& a, const PrimeCtx& ctx) {
  if (a.modulus != ctx.p()) throw Error(Errc::InvalidArgument, "canonical lift expects an element over F_p");
  return {ctx.p2(), a.coeffs};
}

ThetaClass theta(const FiniteGroup& g, const PrimeCtx& ctx, const GroupAlgebraElement& f, const GroupAlgebraElement& h) {
  return theta_from_lifts(g, ctx, lift_canonical(f, ctx), lift_canonical(h, ctx));
}

ThetaClass theta_from_lifts(const FiniteGroup& g, const PrimeCtx& ctx, const GroupAlgebraElement& f_hat,
                            const GroupAlgebraElement& h_hat) {
  if (f_hat.modulus != ctx.p2() || h_hat.modulus != ctx.p2())
    throw Error(Errc::InvalidArgument, "theta expects lifts over Z/p^2");
  check_group(g, f_hat);
  check_group(g, h_hat);
  const Scalar p = ctx.p();
  const auto f = reduce_mod_p(f_hat, ctx);
  const auto h = reduce_mod_p(h_hat, ctx);
  if (!algebra_mul(g, f, h).is_zero()) throw Error(Errc::ProductNotZero, "f h is not zero in F_p[G]");

  const auto prod = algebra_mul(g, f_hat, h_hat);
  std::vector<Scalar> u(g.order());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = prod.coeffs[i] / p;  // exact: every coefficient is 0 mod p

  EchelonBasis span(g.order(), p);
  for (Element x = 0; x < g.order(); ++x) {
    span.insert(algebra_mul(g, f, GroupAlgebraElement::basis(g, p, x)).coeffs);
    span.insert(algebra_mul(g, GroupAlgebraElement::basis(g, p, x), h).coeffs);
  }
  span.reduce(u);

  ThetaClass out;
  out.representative = {p, std::move(u)};
  out.is_zero = out.representative.is_zero();
  auto [rows, piv] = span.sorted();
  out.quotient_basis = std::move(rows);
  out.pivots = std::move(piv);
  return out;
}

CyclicWitness cyclic_witness(const PrimeCtx& ctx, std::uint32_t n) {
  const std::uint32_t p = ctx.p();
  if (n == 0) throw Error(Errc::OutOfRange, "exponent must be positive");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    order *= p;
    if (order > FiniteGroup::kMaxOrder) throw Error(Errc::OrderTooLarge, "p^n exceeds 4096");
  }
  const std::uint64_t m = order / p + 1;
  if (m > order - m)
    throw Error(Errc::OutOfRange, "need m = p^(n-1)+1 <= p^n - m (p > 2, and n >= 2 when p = 3); got p=" +
                                      std::to_string(p) + " n=" + std::to_string(n));
  FiniteGroup g = make_family(FamilySpec::cyclic(order));
  auto f = one_minus_power(g, p, 1, m);
  auto h = one_minus_power(g, p, 1, order - m);
  return {std::move(g), std::move(f), std::move(h), m};
}

PolyFp q_polynomial(const PrimeCtx& ctx, std::uint32_t n) {
  std::uint64_t big_n = 1;
  for (std::uint32_t i = 0; i < n; ++i) big_n *= ctx.p();
  std::vector<BigInt> c(big_n + 1);
  for (std::uint64_t k = 0; k <= big_n; ++k) {
    c[k] = binomial(big_n, k);
    if (k % 2 == 1) c[k] = -c[k];
  }
  c[0] -= 1;
  c[big_n] += 1;
  const BigInt p = ctx.p();
  for (auto& v : c) {
    if (v % p != 0) throw Error(Errc::NotDivisible, "q_polynomial: coefficient not divisible by p");
    v /= p;
  }
  return mod_p_reduce(PolyInt(std::move(c)), ctx);
}

Representation module_of_quotient(const FiniteGroup& g, const PrimeCtx& ctx, const GroupAlgebraElement& h) {
  check_group(g, h);
  if (h.modulus != ctx.p()) throw Error(Errc::InvalidArgument, "module_of_quotient expects h over F_p");
  if (h.is_zero()) throw Error(Errc::ZeroElement, "h must be nonzero");
  if (!g.presentation()) throw Error(Errc::UnrealizedPresentation, "group carries no presentation");
  const Presentation& pres = *g.presentation();
  const Scalar p = ctx.p();

  // (1 - s)^i basis for cyclic groups
  if (pres.generator_count() == 1 && g.element_order(g.generators()[0]) == g.order()) {
    const Element s = g.generators()[0];
    std::optional<std::size_t> degree;
    auto power = GroupAlgebraElement::basis(g, p, 0);
    for (std::size_t d = 0; d <= g.order(); ++d) {
      if (power == h) {
        degree = d;
        break;
      }
      if (power.is_zero()) break;
      power = algebra_mul(g, power, one_minus_power(g, p, s, 1));
    }
    if (degree) {
      const std::size_t d = *degree;
      MatFp m = MatFp::identity(ctx, d);
      for (std::size_t i = 0; i + 1 < d; ++i) m.set(i + 1, i, p - 1);
      return {ctx, d, pres, {m}};
    }
  }

  EchelonBasis ideal(g.order(), p);
  for (Element x = 0; x < g.order(); ++x) ideal.insert(algebra_mul(g, GroupAlgebraElement::basis(g, p, x), h).coeffs);
  std::vector<Element> basis;
  for (Element y = 0; y < g.order(); ++y)
    if (!ideal.is_pivot(y)) basis.push_back(y);
  const std::size_t d = basis.size();

  Representation rep{ctx, d, pres, {}};
  for (Element s : g.generators()) {
    MatFp m(ctx, d);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Scalar> v(g.order(), 0);
      v[g.mul(s, basis[j])] = 1;
      ideal.reduce(v);
      for (std::size_t i = 0; i < d; ++i) m.set(i, j, v[basis[i]]);
    }
    rep.gen_mats.push_back(std::move(m));
  }
  return rep;
}

}  // namespace liftmod
