#pragma once

// Group algebras F_p[G] and Z/p^2[G], the obstruction class theta(f, h) for
// f h = 0 in F_p[G], and the modules F_p[G] / F_p[G] h it obstructs.
//
// For lifts f^, h^ to Z/p^2[G] the product is f^ h^ = p u, and the residue of
// u is well defined in F_p[G] / (f F_p[G] + F_p[G] h). If G is p-liftable,
// theta(f, h) = 0; so a nonzero class shows F_p[G]/F_p[G]h has no lift.

#include <cstdint>
#include <vector>

#include "liftmod/finite_rings.hpp"
#include "liftmod/groups.hpp"
#include "liftmod/poly.hpp"
#include "liftmod/replift.hpp"

namespace liftmod {

/// Coefficient vector indexed by group element, over Z/modulus.
struct GroupAlgebraElement {
  Scalar modulus = 0;
  std::vector<Scalar> coeffs;

  static GroupAlgebraElement zero(const FiniteGroup& g, Scalar modulus);
  /// Basis element e_x.
  static GroupAlgebraElement basis(const FiniteGroup& g, Scalar modulus, Element x);

  bool is_zero() const noexcept;
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement scaled(std::int64_t s) const;

  bool operator==(const GroupAlgebraElement&) const = default;
};

/// Convolution through the multiplication table.
GroupAlgebraElement algebra_mul(const FiniteGroup& g, const GroupAlgebraElement& a, const GroupAlgebraElement& b);

GroupAlgebraElement algebra_pow(const FiniteGroup& g, const GroupAlgebraElement& a, std::uint64_t k);

/// (1 - x)^k over Z/modulus.
GroupAlgebraElement one_minus_power(const FiniteGroup& g, Scalar modulus, Element x, std::uint64_t k);

/// Coefficientwise reduction mod p / canonical lift through [0, p).
GroupAlgebraElement reduce_mod_p(const GroupAlgebraElement& a, const PrimeCtx& ctx);
GroupAlgebraElement lift_canonical(const GroupAlgebraElement& a, const PrimeCtx& ctx);

struct ThetaClass {
  GroupAlgebraElement representative;             // canonical reduction of u
  std::vector<std::vector<Scalar>> quotient_basis;  // echelon basis of f F_p[G] + F_p[G] h
  std::vector<std::size_t> pivots;                // pivot element of each basis row
  bool is_zero = true;
};

/// theta(f, h) with canonical lifts. Throws Errc::ProductNotZero if f h != 0.
ThetaClass theta(const FiniteGroup& g, const PrimeCtx& ctx, const GroupAlgebraElement& f, const GroupAlgebraElement& h);

/// theta(f, h) computed from caller-chosen lifts f_hat, h_hat over Z/p^2.
ThetaClass theta_from_lifts(const FiniteGroup& g, const PrimeCtx& ctx, const GroupAlgebraElement& f_hat,
                            const GroupAlgebraElement& h_hat);

struct CyclicWitness {
  FiniteGroup group;  // C_{p^n}, generator s = element 1
  GroupAlgebraElement f, h;
  std::uint64_t m;
};

/// f = (1 - s)^m, h = (1 - s)^(p^n - m) with m = p^(n-1) + 1 in F_p[C_{p^n}].
/// Throws Errc::OutOfRange unless m <= p^n - m (i.e. p > 2, and n >= 2 when p = 3).
CyclicWitness cyclic_witness(const PrimeCtx& ctx, std::uint32_t n);

/// [(1 - s)^(p^n) - (1 - s^(p^n))] / p reduced mod p, as a polynomial in s.
PolyFp q_polynomial(const PrimeCtx& ctx, std::uint32_t n);

/// The left module F_p[G] / F_p[G] h with the action of the presentation
/// generators of g. Cyclic groups with h = (1 - s)^d use the basis
/// (1 - s)^i, 0 <= i < d; otherwise the basis is the lexicographically first
/// complement of F_p[G] h. Throws Errc::ZeroElement for h = 0.
Representation module_of_quotient(const FiniteGroup& g, const PrimeCtx& ctx, const GroupAlgebraElement& h);

}  // namespace liftmod
