#include "liftmod/cyclic_lift.hpp"

namespace liftmod {

namespace {

std::uint64_t prime_power(std::uint32_t p, std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    r *= p;
    if (r > FiniteGroup::kMaxOrder) throw Error(Errc::OrderTooLarge, "p^n exceeds 4096");
  }
  return r;
}

}  // namespace

PolyInt t_power_minus_one(std::uint64_t k) { return PolyInt::monomial(1, k) - PolyInt{1}; }

CyclotomicFactorization cyclotomic_factors(const PrimeCtx& ctx, std::uint32_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "cyclotomic_factors needs n >= 1");
  const std::uint32_t p = ctx.p();
  const std::uint64_t top = prime_power(p, n);
  CyclotomicFactorization out{p, n, {PolyInt{-1, 1}}, {1}};
  std::uint64_t step = 1;  // p^(j-1)
  for (std::uint32_t j = 1; j <= n; ++j) {
    std::vector<BigInt> c(step * (p - 1) + 1, 0);
    for (std::uint32_t i = 0; i < p; ++i) c[i * step] = 1;
    out.factors.emplace_back(std::move(c));
    out.degrees.push_back(step * (p - 1));
    step *= p;
  }

  PolyInt product{1};
  for (const auto& f : out.factors) product = product * f;
  if (!(product == t_power_minus_one(top)))
    throw Error(Errc::InvalidArgument, "cyclotomic product does not equal t^(p^n) - 1");
  const PolyFp t_minus_one(ctx, {-1, 1});
  for (std::size_t j = 0; j < out.factors.size(); ++j)
    if (!(mod_p_reduce(out.factors[j], ctx) == t_minus_one.pow(out.degrees[j])))
      throw Error(Errc::InvalidArgument, "cyclotomic factor does not reduce to a power of t - 1");
  return out;
}

bool is_divisor_lift(const PrimeCtx& ctx, std::uint32_t n, std::uint64_t i, const PolyInt& P) {
  if (!P.is_monic() || P.degree() != static_cast<int>(i)) return false;
  const auto dm = divmod_exact(t_power_minus_one(prime_power(ctx.p(), n)), P);
  if (!dm.remainder.is_zero()) return false;
  return mod_p_reduce(P, ctx) == PolyFp(ctx, {-1, 1}).pow(i);
}

std::optional<PolyInt> find_divisor_lift(const PrimeCtx& ctx, std::uint32_t n, std::uint64_t i) {
  const std::uint64_t top = prime_power(ctx.p(), n);
  if (i < 1 || i > top) throw Error(Errc::OutOfRange, "target must lie in [1, p^n]");
  const auto fac = cyclotomic_factors(ctx, n);
  const std::size_t k = fac.factors.size();

  // depth-first, exclusion before inclusion: the first hit is lexicographically
  // smallest as an inclusion vector
  std::vector<char> take(k, 0);
  std::vector<std::uint64_t> suffix(k + 1, 0);
  for (std::size_t j = k; j-- > 0;) suffix[j] = suffix[j + 1] + fac.degrees[j];
  std::optional<std::vector<char>> found;
  auto search = [&](auto&& self, std::size_t j, std::uint64_t remaining) -> bool {
    if (remaining == 0) {
      found = take;
      return true;
    }
    if (j == k || suffix[j] < remaining) return false;
    take[j] = 0;
    if (self(self, j + 1, remaining)) return true;
    if (fac.degrees[j] <= remaining) {
      take[j] = 1;
      if (self(self, j + 1, remaining - fac.degrees[j])) return true;
      take[j] = 0;
    }
    return false;
  };
  if (!search(search, 0, i)) return std::nullopt;

  PolyInt P{1};
  for (std::size_t j = 0; j < k; ++j)
    if ((*found)[j]) P = P * fac.factors[j];
  if (!is_divisor_lift(ctx, n, i, P)) throw Error(Errc::InvalidDivisor, "subset product failed re-verification");
  return P;
}

MatZp2 companion_zp2(const PrimeCtx& ctx, const PolyInt& monic) {
  if (!monic.is_monic()) throw Error(Errc::NonMonicDivisor, "companion matrix needs a monic polynomial");
  const auto d = static_cast<std::size_t>(monic.degree());
  MatZp2 c(ctx, d);
  const BigInt mod = ctx.p2();
  for (std::size_t i = 0; i + 1 < d; ++i) c.set(i + 1, i, 1);
  for (std::size_t i = 0; i < d; ++i) {
    BigInt v = (-monic.coeffs()[i]) % mod;
    if (v < 0) v += mod;
    c.set(i, d - 1, v.convert_to<std::int64_t>());
  }
  return c;
}

MatFp companion_fp(const PolyFp& monic) {
  if (monic.is_zero() || monic.coeffs().back() != 1)
    throw Error(Errc::NonMonicDivisor, "companion matrix needs a monic polynomial");
  const auto d = static_cast<std::size_t>(monic.degree());
  MatFp c(monic.ctx(), d);
  for (std::size_t i = 0; i + 1 < d; ++i) c.set(i + 1, i, 1);
  for (std::size_t i = 0; i < d; ++i) c.set(i, d - 1, -static_cast<std::int64_t>(monic.coeffs()[i]));
  return c;
}

Representation jordan_companion_rep(const PrimeCtx& ctx, std::uint32_t n, std::uint64_t i) {
  const std::uint64_t top = prime_power(ctx.p(), n);
  if (i < 1 || i > top) throw Error(Errc::OutOfRange, "Jordan size must lie in [1, p^n]");
  Presentation pres({"s"}, {power_word(0, static_cast<std::int64_t>(top))});
  return {ctx, i, std::move(pres), {companion_fp(PolyFp(ctx, {-1, 1}).pow(i))}};
}

std::pair<Representation, LiftCertificate> companion_lift(const PrimeCtx& ctx, std::uint32_t n, std::uint64_t i,
                                                          const PolyInt& P) {
  if (!is_divisor_lift(ctx, n, i, P))
    throw Error(Errc::InvalidDivisor, P.to_string() + " is not a monic divisor of t^(p^n) - 1 congruent to (t-1)^" +
                                          std::to_string(i));
  Representation rep = jordan_companion_rep(ctx, n, i);
  LiftCertificate cert{{companion_zp2(ctx, P)}};
  return {std::move(rep), std::move(cert)};
}

std::set<std::uint64_t> liftable_jordan_sizes(const PrimeCtx& ctx, std::uint32_t n) {
  const auto fac = cyclotomic_factors(ctx, n);
  std::set<std::uint64_t> sums{0};
  for (auto d : fac.degrees) {
    std::set<std::uint64_t> next = sums;
    for (auto s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  sums.erase(0);
  return sums;
}

}  // namespace liftmod
