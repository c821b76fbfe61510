#pragma once

// Affine linear systems A x = b over F_p with independently checkable answers:
// either a solution plus nullspace basis, or a row functional c with
// c.A = 0 and c.b != 0.

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "liftmod/finite_rings.hpp"

namespace liftmod {

/// Column semantics for lift systems: unknown (generator g, row r, col c) of
/// the correction matrices lives in column g*n*n + r*n + c.
struct UnknownLayout {
  std::size_t generators = 0;
  std::size_t dim = 0;

  std::size_t columns() const noexcept { return generators * dim * dim; }
  std::size_t column(std::size_t gen, std::size_t r, std::size_t c) const noexcept {
    return gen * dim * dim + r * dim + c;
  }
  struct Slot {
    std::size_t gen, row, col;
  };
  Slot slot(std::size_t column) const noexcept {
    const std::size_t block = dim * dim;
    return {column / block, (column % block) / dim, column % dim};
  }
};

class AffineSystem {
 public:
  AffineSystem(const PrimeCtx& ctx, std::size_t unknowns);
  AffineSystem(const PrimeCtx& ctx, UnknownLayout layout);

  const PrimeCtx& ctx() const noexcept { return ctx_; }
  std::size_t unknowns() const noexcept { return unknowns_; }
  std::size_t equations() const noexcept { return rhs_.size(); }
  const std::optional<UnknownLayout>& layout() const noexcept { return layout_; }

  /// Appends sum_j coeffs[j] x_j = rhs. Values are reduced mod p.
  void add_equation(std::span<const std::int64_t> coeffs, std::int64_t rhs);
  void add_equation(std::vector<Scalar> coeffs, Scalar rhs);

  std::span<const Scalar> row(std::size_t i) const { return rows_[i]; }
  Scalar rhs(std::size_t i) const { return rhs_[i]; }

 private:
  PrimeCtx ctx_;
  std::size_t unknowns_;
  std::optional<UnknownLayout> layout_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<Scalar> rhs_;
};

struct Consistent {
  std::vector<Scalar> particular;  // free variables set to zero
  std::vector<std::vector<Scalar>> nullspace;
  std::vector<std::size_t> pivot_columns;
};

struct Inconsistent {
  std::vector<Scalar> functional;  // one coefficient per equation
};

using SolveResult = std::variant<Consistent, Inconsistent>;

/// Row echelon elimination, pivots chosen in column order with the earliest
/// available row. Deterministic for a given system.
SolveResult solve_affine(const AffineSystem& sys);

/// A x == b exactly.
bool satisfies(const AffineSystem& sys, std::span<const Scalar> x);

/// A x == 0 exactly.
bool satisfies_homogeneous(const AffineSystem& sys, std::span<const Scalar> x);

/// c.A == 0 and c.b != 0; the refutation check, independent of the solver.
bool refutes(const AffineSystem& sys, std::span<const Scalar> c);

}  // namespace liftmod
