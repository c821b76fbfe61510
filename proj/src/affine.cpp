#include "liftmod/affine.hpp"

#include <string>

namespace liftmod {

AffineSystem::AffineSystem(const PrimeCtx& ctx, std::size_t unknowns) : ctx_(ctx), unknowns_(unknowns) {}

AffineSystem::AffineSystem(const PrimeCtx& ctx, UnknownLayout layout)
    : ctx_(ctx), unknowns_(layout.columns()), layout_(layout) {}

void AffineSystem::add_equation(std::span<const std::int64_t> coeffs, std::int64_t rhs) {
  std::vector<Scalar> row(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) row[j] = modarith::reduce(coeffs[j], ctx_.p());
  add_equation(std::move(row), modarith::reduce(rhs, ctx_.p()));
}

void AffineSystem::add_equation(std::vector<Scalar> coeffs, Scalar rhs) {
  if (coeffs.size() != unknowns_)
    throw Error(Errc::DimensionMismatch, "equation has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                             std::to_string(unknowns_));
  for (auto& v : coeffs) v %= ctx_.p();
  rows_.push_back(std::move(coeffs));
  rhs_.push_back(rhs % ctx_.p());
}

namespace {

// One eliminated row: its pivot, the reduced coefficients (zero before the
// pivot, 1 at the pivot), and how it was derived from the input rows.
struct BasisRow {
  std::size_t pivot;
  std::vector<Scalar> coeffs;
  Scalar rhs;
  std::size_t source;                                   // original equation index
  Scalar scale;                                         // applied after reduction
  std::vector<std::pair<std::size_t, Scalar>> minus;  // earlier basis rows subtracted (index, factor)
};

// Expresses the reduced combination (source row minus the listed basis rows)
// as a functional over the original equations.
std::vector<Scalar> unroll(const std::vector<BasisRow>& basis, std::size_t equations, std::size_t source,
                           const std::vector<std::pair<std::size_t, Scalar>>& minus, Scalar p) {
  std::vector<Scalar> c(equations, 0);
  std::vector<Scalar> weight(basis.size(), 0);
  c[source] = 1;
  for (auto [idx, f] : minus) weight[idx] = modarith::sub(weight[idx], f, p);
  for (std::size_t k = basis.size(); k-- > 0;) {
    if (weight[k] == 0) continue;
    const BasisRow& b = basis[k];
    // basis row k = scale * (orig[source] - sum f_j basis[j])
    const Scalar w = modarith::mul(weight[k], b.scale, p);
    c[b.source] = modarith::add(c[b.source], w, p);
    for (auto [idx, f] : b.minus) weight[idx] = modarith::sub(weight[idx], modarith::mul(w, f, p), p);
  }
  return c;
}

}  // namespace

SolveResult solve_affine(const AffineSystem& sys) {
  const Scalar p = sys.ctx().p();
  const std::size_t cols = sys.unknowns();
  std::vector<BasisRow> basis;
  std::vector<std::ptrdiff_t> pivot_of(cols, -1);
  std::vector<Scalar> work(cols);

  for (std::size_t r = 0; r < sys.equations(); ++r) {
    auto src = sys.row(r);
    std::copy(src.begin(), src.end(), work.begin());
    Scalar rhs = sys.rhs(r);
    std::vector<std::pair<std::size_t, Scalar>> minus;
    std::ptrdiff_t lead = -1;
    for (std::size_t c = 0; c < cols; ++c) {
      const Scalar f = work[c];
      if (f == 0) continue;
      if (pivot_of[c] < 0) {
        lead = static_cast<std::ptrdiff_t>(c);
        break;
      }
      const BasisRow& b = basis[static_cast<std::size_t>(pivot_of[c])];
      for (std::size_t j = c; j < cols; ++j)
        if (b.coeffs[j] != 0) work[j] = modarith::sub(work[j], modarith::mul(f, b.coeffs[j], p), p);
      rhs = modarith::sub(rhs, modarith::mul(f, b.rhs, p), p);
      minus.emplace_back(static_cast<std::size_t>(pivot_of[c]), f);
    }
    if (lead < 0) {
      if (rhs == 0) continue;
      auto c = unroll(basis, sys.equations(), r, minus, p);
      return Inconsistent{std::move(c)};
    }
    const auto lc = static_cast<std::size_t>(lead);
    const Scalar s = modarith::inv(work[lc], p);
    BasisRow b{lc, std::vector<Scalar>(cols, 0), modarith::mul(rhs, s, p), r, s, std::move(minus)};
    for (std::size_t j = lc; j < cols; ++j) b.coeffs[j] = modarith::mul(work[j], s, p);
    pivot_of[lc] = static_cast<std::ptrdiff_t>(basis.size());
    basis.push_back(std::move(b));
  }

  // Back substitution to reduced echelon form over the basis rows only.
  std::vector<std::size_t> order;  // basis indices by ascending pivot
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of[c] >= 0) order.push_back(static_cast<std::size_t>(pivot_of[c]));
  for (std::size_t oi = order.size(); oi-- > 0;) {
    BasisRow& lower = basis[order[oi]];
    for (std::size_t ui = 0; ui < oi; ++ui) {
      BasisRow& upper = basis[order[ui]];
      const Scalar f = upper.coeffs[lower.pivot];
      if (f == 0) continue;
      for (std::size_t j = lower.pivot; j < cols; ++j)
        if (lower.coeffs[j] != 0) upper.coeffs[j] = modarith::sub(upper.coeffs[j], modarith::mul(f, lower.coeffs[j], p), p);
      upper.rhs = modarith::sub(upper.rhs, modarith::mul(f, lower.rhs, p), p);
    }
  }

  Consistent out;
  out.particular.assign(cols, 0);
  for (std::size_t idx : order) {
    out.particular[basis[idx].pivot] = basis[idx].rhs;
    out.pivot_columns.push_back(basis[idx].pivot);
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of[free] >= 0) continue;
    std::vector<Scalar> v(cols, 0);
    v[free] = 1;
    for (std::size_t idx : order) {
      const Scalar f = basis[idx].coeffs[free];
      if (f != 0) v[basis[idx].pivot] = modarith::neg(f, p);
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

namespace {

bool check_rows(const AffineSystem& sys, std::span<const Scalar> x, bool homogeneous) {
  if (x.size() != sys.unknowns()) return false;
  const Scalar p = sys.ctx().p();
  for (std::size_t r = 0; r < sys.equations(); ++r) {
    auto row = sys.row(r);
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j) acc = (acc + static_cast<std::uint64_t>(row[j]) * (x[j] % p)) % p;
    const Scalar want = homogeneous ? 0 : sys.rhs(r);
    if (acc != want) return false;
  }
  return true;
}

}  // namespace

bool satisfies(const AffineSystem& sys, std::span<const Scalar> x) { return check_rows(sys, x, false); }

bool satisfies_homogeneous(const AffineSystem& sys, std::span<const Scalar> x) { return check_rows(sys, x, true); }

bool refutes(const AffineSystem& sys, std::span<const Scalar> c) {
  if (c.size() != sys.equations()) return false;
  const Scalar p = sys.ctx().p();
  std::vector<std::uint64_t> acc(sys.unknowns(), 0);
  std::uint64_t b = 0;
  for (std::size_t r = 0; r < sys.equations(); ++r) {
    const std::uint64_t w = c[r] % p;
    if (w == 0) continue;
    auto row = sys.row(r);
    for (std::size_t j = 0; j < row.size(); ++j) acc[j] = (acc[j] + w * row[j]) % p;
    b = (b + w * sys.rhs(r)) % p;
  }
  for (auto v : acc)
    if (v != 0) return false;
  return b != 0;
}

}  // namespace liftmod
