#pragma once

// Liftability of a finite group as a decision procedure.
//
// A group is liftable exactly when it is C_{2^a}, C_3 x C_{2^a} or
// C_3 semidirect C_{2^a}. Otherwise it contains one of five obstruction
// subgroups (C_p for p >= 5, C_9, C_3 x C_3, C_2 x C_2, Q_8), each with a fixed
// representation meant not to lift; inducing it to G gives a representation
// of G that the solver then refutes. The Q_8 witness lifts, so verdicts
// resting on Q_8 come back uncertified.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liftmod/groups.hpp"
#include "liftmod/replift.hpp"

namespace liftmod {

enum class LiftableTag { C2n, C3xC2n, C3semiC2n, Trivial };

std::string_view liftable_tag_name(LiftableTag t) noexcept;

struct GroupLiftable {
  LiftableTag tag;
};

/// The verdict follows the obstruction subgroup. refutation is present when
/// the solver confirms the witness; otherwise witness_lift holds the lift the
/// solver found instead and the verdict is uncertified.
struct GroupNotLiftable {
  BadSubgroup bad;
  Representation witness;  // of G, or of the bad subgroup when subgroup_level
  bool subgroup_level = false;
  std::optional<NotLiftable> refutation;
  std::optional<LiftCertificate> witness_lift;

  bool certified() const noexcept { return refutation.has_value(); }
};

using ClassificationVerdict = std::variant<GroupLiftable, GroupNotLiftable>;

/// The fixed witness representation of an obstruction group, in the
/// presentation make_family uses for it. For Cp the prime selects the group.
/// The Q8 matrices lift, so that witness does not certify.
Representation canonical_witness(BadKind kind, std::uint32_t prime = 0);

/// check_lift plus refutation re-verification. Throws
/// Errc::CertificationFailed when the representation lifts.
NotLiftable certify_not_liftable(const Representation& rep);

/// The block matrices of the Klein and Q8 witnesses before flattening; exposed
/// for audits of the printed data.
MatFp klein_witness_matrix(bool tau);
MatFp q8_witness_matrix(bool tau);

struct WitnessForGroup {
  Representation rep;
  bool subgroup_level = false;
  std::optional<NotLiftable> refutation;
  std::optional<LiftCertificate> lift;  // set when the solver lifts rep
};

/// Induces the canonical witness of bad up to g (a single coset leaves it
/// unchanged). Falls back to the subgroup-level witness when the induced
/// dimension exceeds 64 or the lift system would exceed 2^16 rows.
WitnessForGroup try_witness_for_group(const FiniteGroup& g, const BadSubgroup& bad);

/// As above, but throws Errc::CertificationFailed unless the solver refutes
/// the result.
WitnessForGroup witness_for_group(const FiniteGroup& g, const BadSubgroup& bad);

/// Throws Errc::CertificationFailed when the obstruction search and the
/// family recognizer disagree.
ClassificationVerdict classify(const FiniteGroup& g);

/// Left regular representation over F_p in the group's presentation.
Representation regular_representation(const FiniteGroup& g, const PrimeCtx& ctx);

/// Restriction of a representation of g to a cyclic subgroup generated by x,
/// presented as <s | s^{ord x}>.
Representation restrict_to_cyclic(const Representation& rep, const FiniteGroup& g, Element x);

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  bool expect_liftable;
  std::optional<LiftableTag> expect_tag;
  std::optional<BadKind> expect_bad;
};

/// Built-in groups of order <= 32 with their expected verdicts.
std::vector<CatalogEntry> catalog();

/// A4 as the even permutations of four points, presented <a, b | a^2, b^3, (ab)^3>.
FiniteGroup alternating_a4();

/// C2 x C2 x C2 from three commuting transpositions.
FiniteGroup elementary_abelian_2_cubed();

}  // namespace liftmod
