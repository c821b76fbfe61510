#pragma once

// Deciding whether a representation G -> GL_n(F_p), given by generator
// matrices satisfying relators, lifts to GL_n(Z/p^2).
//
// Every lift of a generator matrix g has the form (1 + pA) g^ for a naive lift
// g^ and some A in M_n(F_p). Because the kernel of GL_n(Z/p^2) -> GL_n(F_p)
// is abelian of exponent p, a relator w = x_{j1}^{e1} ... x_{jL}^{eL} holds
// for the corrected lifts iff
//
//     sum_t e_t * v_t A_{j_t} v_t^{-1} + E_w = 0      in M_n(F_p),
//
// where w(g^) = 1 + p E_w and v_t is the F_p value of the prefix before letter
// t (e_t = +1) or of the prefix including x_{j_t}^{-1} (e_t = -1). Lifting is
// therefore a single affine system over F_p.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liftmod/affine.hpp"
#include "liftmod/finite_rings.hpp"
#include "liftmod/groups.hpp"

namespace liftmod {

struct Representation {
  PrimeCtx ctx;
  std::size_t dim;
  Presentation presentation;
  std::vector<MatFp> gen_mats;

  bool operator==(const Representation&) const = default;
};

/// Every generator maps to the identity.
Representation trivial_rep(const PrimeCtx& ctx, const Presentation& pres, std::size_t dim);

struct LiftCertificate {
  std::vector<MatZp2> gen_lifts;
};

struct LinearizedSystem {
  AffineSystem system;             // unknowns laid out per UnknownLayout
  std::vector<MatFp> defects;      // E_w, one per relator
  std::vector<MatZp2> naive_lifts; // the g^ the corrections apply to
};

struct Liftable {
  LiftCertificate certificate;
};

struct NotLiftable {
  LinearizedSystem system;
  std::vector<Scalar> functional;  // c with c.A = 0 and c.b != 0
};

using LiftVerdict = std::variant<Liftable, NotLiftable>;

inline bool is_liftable(const LiftVerdict& v) { return std::holds_alternative<Liftable>(v); }

/// nullopt when the representation is valid, otherwise the first violation.
std::optional<std::string> validate_rep(const Representation& rep);

/// Throws Errc::InvalidRepresentation with the violation.
void require_valid(const Representation& rep);

/// Naive lifts through the canonical section [0, p).
std::vector<MatZp2> canonical_lifts(const Representation& rep);

/// Word value with generator i -> mats[i].
template <Ring R>
Matrix<R> evaluate_word(const std::vector<Matrix<R>>& mats, const Word& w, std::size_t dim, const PrimeCtx& ctx);

/// E_w with w(naive_lifts) = I + p E_w. Throws Errc::NotInKernel when w is not
/// a relator of the reduction.
MatFp relator_defect(const Representation& rep, const std::vector<MatZp2>& naive_lifts, const Word& w);

LinearizedSystem linearize(const Representation& rep);
LinearizedSystem linearize(const Representation& rep, const std::vector<MatZp2>& naive_lifts);

LiftVerdict check_lift(const Representation& rep);

/// Same decision using the supplied naive lifts (any section F_p -> Z/p^2).
LiftVerdict check_lift(const Representation& rep, const std::vector<MatZp2>& naive_lifts);

/// Reductions match the generator matrices and every relator is the identity
/// over Z/p^2. Evaluates directly; shares no code path with the solver.
bool verify_certificate(const Representation& rep, const LiftCertificate& cert);

/// Refutation re-check against the stored system.
bool verify_refutation(const NotLiftable& verdict);

Representation direct_sum(const Representation& x, const Representation& y);

/// Induction from the subgroup h of g. h_gen_images[i] is the element of h
/// realizing generator i of rep_h's presentation; g must carry a presentation.
/// Block (i, j) of the image of g0 is rep_h(t_i^-1 g0 t_j) when that lies in
/// h and zero otherwise.
Representation induce(const Representation& rep_h, const FiniteGroup& g, const Subgroup& h,
                      const std::vector<Element>& h_gen_images);

/// Restriction along words (in rep_g's generators) for the generators of a
/// subgroup presentation. Throws Errc::InvalidRepresentation when the
/// resulting matrices violate h_pres.
Representation restrict_rep(const Representation& rep_g, const Presentation& h_pres, const std::vector<Word>& words);

struct BruteForceResult {
  enum class Status { Liftable, NotLiftable, BudgetExceeded };
  Status status = Status::BudgetExceeded;
  std::optional<LiftCertificate> certificate;
  std::uint64_t assignments = 0;  // full generator assignments examined
};

/// Exhaustive search over all lifts g^ + pA of every generator, relators
/// evaluated directly over Z/p^2 (backtracking per generator). Refuses when
/// p^(gens * n^2) exceeds the budget.
BruteForceResult brute_force_lift(const Representation& rep, std::uint64_t budget = 1ull << 20);

}  // namespace liftmod
