#include <gtest/gtest.h>

#include <random>

#include "liftmod/classify.hpp"
#include "liftmod/cyclic_lift.hpp"
#include "liftmod/replift.hpp"
#include "liftmod/text_io.hpp"
#include "support.hpp"

using namespace liftmod;
using testsupport::IntMat;

namespace {

// Enumerates every Z/p^2 matrix reducing to each generator with plain
// integer arithmetic; inverses come from matrix orders.
bool naive_lift_exists(const Representation& rep) {
  const std::int64_t p = rep.ctx.p(), q = p * p;
  const std::size_t n = rep.dim, nn = n * n, k = rep.gen_mats.size();
  std::vector<IntMat> base;
  for (const auto& m : rep.gen_mats) base.push_back(testsupport::to_int(m));
  std::uint64_t per = 1;
  for (std::size_t i = 0; i < nn; ++i) per *= static_cast<std::uint64_t>(p);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= per;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::vector<IntMat> mats = base, invs;
    for (std::size_t g = 0; g < k; ++g)
      for (std::size_t e = 0; e < nn; ++e) {
        mats[g][e / n][e % n] += p * static_cast<std::int64_t>(c % p);
        c /= p;
      }
    for (const auto& m : mats) invs.push_back(testsupport::int_inverse_by_order(m, q));
    bool ok = true;
    for (const auto& w : rep.presentation.relators())
      if (testsupport::int_word(mats, invs, w, q) != testsupport::int_identity(n)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

Representation c4_rep(const PrimeCtx& ctx, MatFp m) {
  return {ctx, m.dim(), Presentation({"s"}, {power_word(0, 4)}), {std::move(m)}};
}

}  // namespace

TEST(Validate, ReportsViolations) {
  const PrimeCtx c2(2), c3(3);
  EXPECT_FALSE(validate_rep(c4_rep(c2, MatFp(c2, {{1, 1}, {0, 1}}))));
  EXPECT_TRUE(validate_rep(c4_rep(c3, MatFp(c3, {{1, 1}, {0, 1}}))));  // order 3, not dividing 4
  EXPECT_TRUE(validate_rep(c4_rep(c2, MatFp(c2, {{1, 1}, {1, 1}}))));  // singular
  Representation wrong_dim = c4_rep(c2, MatFp(c2, {{1, 1}, {0, 1}}));
  wrong_dim.dim = 3;
  EXPECT_TRUE(validate_rep(wrong_dim));
  Representation wrong_count = c4_rep(c2, MatFp(c2, {{1}}));
  wrong_count.gen_mats.push_back(MatFp(c2, {{1}}));
  EXPECT_TRUE(validate_rep(wrong_count));
  Representation wrong_prime{c2, 1, Presentation({"s"}, {power_word(0, 4)}), {MatFp(c3, {{1}})}};
  EXPECT_TRUE(validate_rep(wrong_prime));
  try {
    check_lift(wrong_prime);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidRepresentation);
  }
}

TEST(CheckLift, TrivialRepresentationLiftsToIdentity) {
  const PrimeCtx ctx(3);
  const auto g = make_family(FamilySpec::direct_product(3, 3));
  const auto rep = trivial_rep(ctx, *g.presentation(), 3);
  const auto v = check_lift(rep);
  ASSERT_TRUE(is_liftable(v));
  for (const auto& l : std::get<Liftable>(v).certificate.gen_lifts) EXPECT_TRUE(l.is_identity());
}

TEST(CheckLift, SmallHandExamples) {
  const PrimeCtx c2(2);
  // Jordan block of size 2 for C2 lifts: the permutation matrix swapping two basis vectors.
  const Representation c2rep{c2, 2, Presentation({"s"}, {power_word(0, 2)}), {MatFp(c2, {{1, 1}, {0, 1}})}};
  const auto v = check_lift(c2rep);
  ASSERT_TRUE(is_liftable(v));
  EXPECT_TRUE(verify_certificate(c2rep, std::get<Liftable>(v).certificate));
  EXPECT_TRUE(naive_lift_exists(c2rep));

  // a fake certificate fails verification
  LiftCertificate fake{{lift_canonical(c2rep.gen_mats[0])}};
  EXPECT_FALSE(verify_certificate(c2rep, fake));
  LiftCertificate wrong_reduction{{MatZp2::identity(c2, 2)}};
  EXPECT_FALSE(verify_certificate(c2rep, wrong_reduction));
}

TEST(CheckLift, KleinWitnessIsRefuted) {
  const auto rep = canonical_witness(BadKind::C2xC2);
  const auto v = check_lift(rep);
  ASSERT_FALSE(is_liftable(v));
  const auto& nl = std::get<NotLiftable>(v);
  EXPECT_TRUE(verify_refutation(nl));
  EXPECT_EQ(nl.system.system.equations(), rep.presentation.relators().size() * 16);
  // tampering with one coefficient breaks c.A = 0 or c.b != 0
  auto bad = nl;
  for (auto& c : bad.functional)
    if (c != 0) {
      c = 0;
      break;
    }
  EXPECT_FALSE(verify_refutation(bad));
}

TEST(Linearize, DefectsMatchIntegerOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    const auto rep = testsupport::random_rep(rng, p, 1 + trial % 3, 1 + trial % 2);
    const auto lin = linearize(rep);
    const std::int64_t q = static_cast<std::int64_t>(p) * p;
    std::vector<IntMat> mats, invs;
    for (const auto& m : lin.naive_lifts) mats.push_back(testsupport::to_int(m));
    for (const auto& m : mats) invs.push_back(testsupport::int_inverse_by_order(m, q));
    const auto& rels = rep.presentation.relators();
    ASSERT_EQ(lin.defects.size(), rels.size());
    for (std::size_t r = 0; r < rels.size(); ++r) {
      const auto w = testsupport::int_word(mats, invs, rels[r], q);
      for (std::size_t i = 0; i < rep.dim; ++i)
        for (std::size_t j = 0; j < rep.dim; ++j) {
          const std::int64_t e = w[i][j] - (i == j ? 1 : 0);
          ASSERT_EQ(((e % q) + q) % q % p, 0);
          EXPECT_EQ(lin.defects[r](i, j), static_cast<Scalar>((((e % q) + q) % q) / p));
        }
    }
  }
}

TEST(Linearize, EquationsPredictTheRelatorResidual) {
  // For any correction x, w((1 + pA) g^) = I + p (A_sys x - b) entrywise.
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = 2 + (trial % 2);
    const PrimeCtx ctx(p);
    const auto rep = testsupport::random_rep(rng, p, 1 + trial % 3, 1 + trial % 2);
    const auto lin = linearize(rep);
    const auto& sys = lin.system;
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    std::vector<Scalar> x(sys.unknowns());
    for (auto& v : x) v = static_cast<Scalar>(d(rng));
    const std::size_t n = rep.dim;
    const std::int64_t q = static_cast<std::int64_t>(p) * p;
    std::vector<IntMat> mats, invs;
    for (std::size_t g = 0; g < rep.gen_mats.size(); ++g) {
      IntMat a = testsupport::int_identity(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] += p * x[g * n * n + r * n + c];
      mats.push_back(testsupport::int_mul(a, testsupport::to_int(lin.naive_lifts[g]), q));
    }
    for (const auto& m : mats) invs.push_back(testsupport::int_inverse_by_order(m, q));
    for (std::size_t r = 0; r < rep.presentation.relators().size(); ++r) {
      const auto w = testsupport::int_word(mats, invs, rep.presentation.relators()[r], q);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto row = sys.row(r * n * n + i * n + j);
          std::int64_t s = 0;
          for (std::size_t c = 0; c < row.size(); ++c) s += static_cast<std::int64_t>(row[c]) * x[c];
          s -= sys.rhs(r * n * n + i * n + j);
          const std::int64_t expect = ((i == j ? 1 : 0) + p * (((s % p) + p) % p)) % q;
          EXPECT_EQ(w[i][j], expect);
        }
    }
  }
}

TEST(CheckLift, AgreesWithIndependentEnumeration) {
  std::mt19937_64 rng(33);
  int lift = 0, nolift = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = 2;
    const std::size_t n = 1 + trial % 2, k = n == 1 ? 1 + trial % 3 : 1 + (trial / 2) % 2;
    const auto rep = testsupport::random_rep(rng, p, n, k);
    const bool solver = is_liftable(check_lift(rep));
    EXPECT_EQ(solver, naive_lift_exists(rep)) << format_representation(rep);
    (solver ? lift : nolift)++;
  }
  EXPECT_GT(lift, 0);
}

TEST(CheckLift, AgreesWithLibraryBruteForce) {
  std::mt19937_64 rng(34);
  int lift = 0, nolift = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = trial % 3 == 0 ? 3 : 2;
    const std::size_t n = p == 3 ? 1 + trial % 2 : 1 + trial % 3;
    const std::size_t k = p == 3 ? (n == 1 ? 1 + trial % 3 : 1) : (n == 3 ? 1 + trial % 2 : 1 + trial % 3);
    const auto rep = testsupport::random_rep(rng, p, n, k);
    const auto v = check_lift(rep);
    const auto bf = brute_force_lift(rep);
    ASSERT_NE(bf.status, BruteForceResult::Status::BudgetExceeded);
    EXPECT_EQ(is_liftable(v), bf.status == BruteForceResult::Status::Liftable);
    if (bf.certificate) EXPECT_TRUE(verify_certificate(rep, *bf.certificate));
    if (const auto* nl = std::get_if<NotLiftable>(&v)) EXPECT_TRUE(verify_refutation(*nl));
    (is_liftable(v) ? lift : nolift)++;
  }
  EXPECT_GT(lift, 20);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rep = testsupport::jordan_control(rng, trial % 2 ? 7 : 5, 2);
    const auto bf = brute_force_lift(rep);
    ASSERT_EQ(bf.status, BruteForceResult::Status::NotLiftable);
    EXPECT_FALSE(is_liftable(check_lift(rep)));
    ++nolift;
  }
  EXPECT_EQ(nolift, 20);
}

TEST(BruteForce, RefusesOverBudget) {
  const auto rep = canonical_witness(BadKind::C2xC2);
  const auto bf = brute_force_lift(rep);
  EXPECT_EQ(bf.status, BruteForceResult::Status::BudgetExceeded);
  EXPECT_EQ(bf.assignments, 0u);
  // companion Jordan-3 block for C4 fits
  const auto small = jordan_companion_rep(PrimeCtx(2), 2, 3);
  const auto ok = brute_force_lift(small);
  EXPECT_EQ(ok.status, BruteForceResult::Status::Liftable);
  EXPECT_EQ(brute_force_lift(small, 100).status, BruteForceResult::Status::BudgetExceeded);
}

TEST(Invariance, SectionChoiceDoesNotChangeVerdict) {
  std::mt19937_64 rng(35);
  std::vector<Representation> reps;
  for (auto k : {BadKind::C2xC2, BadKind::C9, BadKind::C3xC3}) reps.push_back(canonical_witness(k));
  reps.push_back(canonical_witness(BadKind::Cp, 5));
  reps.push_back(jordan_companion_rep(PrimeCtx(3), 2, 3));
  for (int i = 0; i < 6; ++i) reps.push_back(testsupport::random_rep(rng, 2, 2, 2));
  for (const auto& rep : reps) {
    const bool base = is_liftable(check_lift(rep));
    std::uniform_int_distribution<std::int64_t> d(0, rep.ctx.p() - 1);
    for (int t = 0; t < 5; ++t) {
      auto lifts = canonical_lifts(rep);
      for (auto& l : lifts)
        for (std::size_t i = 0; i < rep.dim; ++i)
          for (std::size_t j = 0; j < rep.dim; ++j) l.set(i, j, l(i, j) + static_cast<std::int64_t>(rep.ctx.p()) * d(rng));
      EXPECT_EQ(is_liftable(check_lift(rep, lifts)), base);
    }
  }
  const auto rep = reps.front();
  auto wrong = canonical_lifts(rep);
  wrong[0].set(0, 0, wrong[0](0, 0) + 1);
  EXPECT_THROW(check_lift(rep, wrong), Error);
}

TEST(Invariance, BasisChangeDoesNotChangeVerdict) {
  std::mt19937_64 rng(36);
  for (auto k : {BadKind::C2xC2, BadKind::C9, BadKind::C3xC3, BadKind::Q8}) {
    const auto rep = canonical_witness(k);
    const bool base = is_liftable(check_lift(rep));
    for (int t = 0; t < 4; ++t) {
      const auto c = testsupport::random_invertible(rng, rep.ctx, rep.dim);
      auto conj = rep;
      for (auto& m : conj.gen_mats) m = conjugate(c, m);
      EXPECT_EQ(is_liftable(check_lift(conj)), base);
    }
  }
}

TEST(DirectSum, LiftsIffBothSummandsLift) {
  const PrimeCtx ctx(3);
  std::vector<Representation> reps;
  for (std::uint64_t i = 1; i <= 9; ++i) reps.push_back(jordan_companion_rep(ctx, 2, i));
  int pairs = 0;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a; b < reps.size(); ++b) {
      const bool la = is_liftable(check_lift(reps[a])), lb = is_liftable(check_lift(reps[b]));
      EXPECT_EQ(is_liftable(check_lift(direct_sum(reps[a], reps[b]))), la && lb) << a + 1 << "+" << b + 1;
      ++pairs;
    }
  EXPECT_EQ(pairs, 45);
  EXPECT_THROW(direct_sum(reps[0], canonical_witness(BadKind::C2xC2)), Error);
}

TEST(Induce, DimensionsAndVerdictTransfer) {
  // induction preserves liftability both ways: X lifts => Ind X lifts, and X is
  // a summand of Res Ind X
  struct Case {
    FamilySpec g;
    BadKind kind;
  };
  for (const auto& c : {Case{FamilySpec::dihedral(8), BadKind::C2xC2}, Case{FamilySpec::cyclic(10), BadKind::Cp},
                        Case{FamilySpec::direct_product(2, 4), BadKind::C2xC2}, Case{FamilySpec::cyclic(18), BadKind::C9}}) {
    const auto g = make_family(c.g);
    const auto bad = find_subgroup_witness(g);
    ASSERT_TRUE(bad);
    ASSERT_EQ(bad->kind, c.kind);
    const auto w = canonical_witness(bad->kind, bad->prime);
    const auto ind = induce(w, g, bad->subgroup, bad->generators);
    EXPECT_EQ(ind.dim, w.dim * g.order() / bad->subgroup.order());
    EXPECT_FALSE(validate_rep(ind));
    EXPECT_FALSE(is_liftable(check_lift(ind)));
    const auto triv = trivial_rep(w.ctx, w.presentation, 1);
    EXPECT_TRUE(is_liftable(check_lift(induce(triv, g, bad->subgroup, bad->generators))));
  }
}

TEST(Induce, RejectsInconsistentImages) {
  const auto g = make_family(FamilySpec::dihedral(8));
  const auto bad = *find_subgroup_witness(g);
  const auto w = canonical_witness(BadKind::C2xC2);
  auto swapped = bad.generators;
  swapped[0] = 1;  // not in the subgroup or not an involution
  EXPECT_THROW(induce(w, g, bad.subgroup, swapped), Error);
  auto bare = FiniteGroup::from_table(g.order(), g.table());
  EXPECT_THROW(induce(w, bare, bad.subgroup, bad.generators), Error);
}

TEST(Restrict, QuaternionSubgroupOfQ16) {
  const auto q16 = make_family(FamilySpec::quaternion(16));
  const auto reg = regular_representation(q16, PrimeCtx(2));
  EXPECT_FALSE(validate_rep(reg));
  const auto q8 = canonical_witness(BadKind::Q8);
  // sigma^2 and tau
  const auto res = restrict_rep(reg, q8.presentation, {power_word(0, 2), power_word(1, 1)});
  EXPECT_EQ(res.dim, 16u);
  EXPECT_FALSE(validate_rep(res));
  // sigma alone has order 8, violating sigma^4 = 1 in Q8
  EXPECT_THROW(restrict_rep(reg, q8.presentation, {power_word(0, 1), power_word(1, 1)}), Error);
}
