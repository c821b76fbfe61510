#pragma once

// Constructive lifts for C_{p^n}: a monic integer divisor P of t^{p^n} - 1 with
// P = (t - 1)^i mod p gives the lifted module Z/p^2[t]/(P), i.e. the
// companion matrix of P lifts the companion matrix of (t - 1)^i.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "liftmod/poly.hpp"
#include "liftmod/replift.hpp"

namespace liftmod {

struct CyclotomicFactorization {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::vector<PolyInt> factors;  // Phi_{p^0}, Phi_{p^1}, ..., Phi_{p^n}
  std::vector<std::uint64_t> degrees;
};

/// Phi_1 = t - 1 and Phi_{p^j}(t) = sum_{i<p} t^(i p^(j-1)). Both invariants
/// (exact product, reduction to a power of t - 1) are checked.
CyclotomicFactorization cyclotomic_factors(const PrimeCtx& ctx, std::uint32_t n);

/// t^k - 1
PolyInt t_power_minus_one(std::uint64_t k);

/// Subset of cyclotomic factors with degree sum i, first in lexicographic
/// order of inclusion vectors (later factors preferred). nullopt if none.
std::optional<PolyInt> find_divisor_lift(const PrimeCtx& ctx, std::uint32_t n, std::uint64_t i);

/// True iff P is monic, divides t^{p^n} - 1 over Z and P = (t - 1)^i mod p.
bool is_divisor_lift(const PrimeCtx& ctx, std::uint32_t n, std::uint64_t i, const PolyInt& P);

/// Companion matrix: ones on the subdiagonal, last column -c_0 ... -c_{d-1}.
MatZp2 companion_zp2(const PrimeCtx& ctx, const PolyInt& monic);
MatFp companion_fp(const PolyFp& monic);

/// <s | s^{p^n}> with s -> companion of (t - 1)^i over F_p, certified by the
/// companion of P over Z/p^2. Throws Errc::InvalidDivisor for a bad P.
std::pair<Representation, LiftCertificate> companion_lift(const PrimeCtx& ctx, std::uint32_t n, std::uint64_t i,
                                                          const PolyInt& P);

/// The Jordan-type representation alone (s -> companion of (t - 1)^i).
Representation jordan_companion_rep(const PrimeCtx& ctx, std::uint32_t n, std::uint64_t i);

/// All i in [1, p^n] reachable as subset degree sums.
std::set<std::uint64_t> liftable_jordan_sizes(const PrimeCtx& ctx, std::uint32_t n);

}  // namespace liftmod
