#include "liftmod/classify.hpp"

#include "liftmod/obstruction.hpp"

namespace liftmod {

std::string_view liftable_tag_name(LiftableTag t) noexcept {
  switch (t) {
    case LiftableTag::C2n: return "C2n";
    case LiftableTag::C3xC2n: return "C3xC2n";
    case LiftableTag::C3semiC2n: return "C3semiC2n";
    case LiftableTag::Trivial: return "Trivial";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxInducedDim = 64;
constexpr std::size_t kMaxRows = 1u << 16;

// Elements of S = F_2[x]/(x^2 + x + 1) as 2x2 matrices: 0, 1, x, x^2 = x + 1.
MatFp s_elem(const PrimeCtx& f2, int which) {
  switch (which) {
    case 0: return MatFp(f2, 2);
    case 1: return MatFp::identity(f2, 2);
    case 2: return MatFp(f2, {{0, 1}, {1, 1}});
    default: return MatFp(f2, {{1, 1}, {1, 0}});
  }
}

MatFp blocks(const PrimeCtx& ctx, const std::vector<std::vector<MatFp>>& b) {
  const std::size_t k = b.size(), d = b[0][0].dim();
  MatFp m(ctx, k * d);
  for (std::size_t bi = 0; bi < k; ++bi)
    for (std::size_t bj = 0; bj < k; ++bj)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m.set(bi * d + i, bj * d + j, b[bi][bj](i, j));
  return m;
}

std::size_t lift_rows(const Representation& rep) { return rep.presentation.relators().size() * rep.dim * rep.dim; }

void certify_into(const Representation& rep, WitnessForGroup& out) {
  require_valid(rep);
  auto v = check_lift(rep);
  if (auto* nl = std::get_if<NotLiftable>(&v)) {
    if (!verify_refutation(*nl)) throw Error(Errc::CertificationFailed, "refutation does not verify");
    out.refutation = std::move(*nl);
  } else {
    out.lift = std::move(std::get<Liftable>(v).certificate);
  }
}

}  // namespace

NotLiftable certify_not_liftable(const Representation& rep) {
  WitnessForGroup w{rep, false, std::nullopt, std::nullopt};
  certify_into(rep, w);
  if (!w.refutation) throw Error(Errc::CertificationFailed, "solver found a lift of the witness");
  return std::move(*w.refutation);
}

MatFp klein_witness_matrix(bool tau) {
  const PrimeCtx f2(2);
  const MatFp i = MatFp::identity(f2, 2), z(f2, 2);
  return blocks(f2, {{i, tau ? s_elem(f2, 2) : i}, {z, i}});
}

MatFp q8_witness_matrix(bool tau) {
  const PrimeCtx f2(2);
  // entries: 0, 1, x, x^2
  const int j[3][3] = {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
  const int k[3][3] = {{0, 2, 1}, {2, 3, 2}, {3, 0, 2}};
  std::vector<std::vector<MatFp>> b(3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) b[r].push_back(s_elem(f2, tau ? k[r][c] : j[r][c]));
  return blocks(f2, b);
}

Representation canonical_witness(BadKind kind, std::uint32_t prime) {
  Representation rep{PrimeCtx(2), 0, Presentation({"s"}, {}), {}};
  switch (kind) {
    case BadKind::Cp: {
      if (prime < 5 || !is_prime(prime)) throw Error(Errc::InvalidArgument, "Cp witness needs a prime p >= 5");
      const PrimeCtx ctx(prime);
      const FiniteGroup g = make_family(FamilySpec::cyclic(prime));
      rep = module_of_quotient(g, ctx, one_minus_power(g, prime, 1, prime - 2));
      break;
    }
    case BadKind::C9: {
      const PrimeCtx ctx(3);
      const FiniteGroup g = make_family(FamilySpec::cyclic(9));
      rep = module_of_quotient(g, ctx, one_minus_power(g, 3, 1, 5));
      break;
    }
    case BadKind::C3xC3: {
      const PrimeCtx f3(3);
      const FiniteGroup g = make_family(FamilySpec::direct_product(3, 3));
      rep = {f3, 3, *g.presentation(), {MatFp(f3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), MatFp(f3, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}})}};
      break;
    }
    case BadKind::C2xC2: {
      const FiniteGroup g = make_family(FamilySpec::direct_product(2, 2));
      rep = {PrimeCtx(2), 4, *g.presentation(), {klein_witness_matrix(false), klein_witness_matrix(true)}};
      break;
    }
    case BadKind::Q8: {
      const FiniteGroup g = make_family(FamilySpec::quaternion(8));
      rep = {PrimeCtx(2), 6, *g.presentation(), {q8_witness_matrix(false), q8_witness_matrix(true)}};
      break;
    }
  }
  require_valid(rep);
  return rep;
}

WitnessForGroup try_witness_for_group(const FiniteGroup& g, const BadSubgroup& bad) {
  Representation base = canonical_witness(bad.kind, bad.prime);
  const std::size_t index = g.order() / bad.subgroup.order();
  const std::size_t dim = index * base.dim;
  bool subgroup_level = !g.presentation() || dim > kMaxInducedDim;
  if (!subgroup_level && g.presentation()->relators().size() * dim * dim > kMaxRows) subgroup_level = true;

  WitnessForGroup out{std::move(base), true, std::nullopt, std::nullopt};
  if (!subgroup_level) {
    Representation induced = induce(out.rep, g, bad.subgroup, bad.generators);
    if (lift_rows(induced) <= kMaxRows) {
      out.rep = std::move(induced);
      out.subgroup_level = false;
    }
  }
  certify_into(out.rep, out);
  return out;
}

WitnessForGroup witness_for_group(const FiniteGroup& g, const BadSubgroup& bad) {
  auto w = try_witness_for_group(g, bad);
  if (!w.refutation)
    throw Error(Errc::CertificationFailed,
                std::string("solver lifts the ") + std::string(bad_kind_name(bad.kind)) + " witness");
  return w;
}

ClassificationVerdict classify(const FiniteGroup& g_in) {
  const FiniteGroup* gp = &g_in;
  std::optional<FiniteGroup> with_pres;
  if (!g_in.presentation()) {
    with_pres = g_in;
    std::vector<Element> gens;
    Presentation pres = cayley_presentation(g_in, &gens);
    with_pres->set_presentation(std::move(pres), std::move(gens));
    gp = &*with_pres;
  }
  const FiniteGroup& g = *gp;

  const auto bad = find_subgroup_witness(g);
  const auto tag = is_listed_family(g);
  if (!bad) {
    if (g.order() == 1) return GroupLiftable{LiftableTag::Trivial};
    if (!tag) throw Error(Errc::CertificationFailed, "no obstruction subgroup, yet the group is not in a listed family");
    switch (*tag) {
      case FamilyTag::C2n: return GroupLiftable{LiftableTag::C2n};
      case FamilyTag::C3xC2n: return GroupLiftable{LiftableTag::C3xC2n};
      case FamilyTag::C3semiC2n: return GroupLiftable{LiftableTag::C3semiC2n};
    }
  }
  if (tag) throw Error(Errc::CertificationFailed, "listed family contains an obstruction subgroup");
  auto w = try_witness_for_group(g, *bad);
  return GroupNotLiftable{*bad, std::move(w.rep), w.subgroup_level, std::move(w.refutation), std::move(w.lift)};
}

Representation regular_representation(const FiniteGroup& g, const PrimeCtx& ctx) {
  if (!g.presentation()) throw Error(Errc::UnrealizedPresentation, "group carries no presentation");
  Representation rep{ctx, g.order(), *g.presentation(), {}};
  for (Element s : g.generators()) {
    MatFp m(ctx, g.order());
    for (Element x = 0; x < g.order(); ++x) m.set(g.mul(s, x), x, 1);
    rep.gen_mats.push_back(std::move(m));
  }
  return rep;
}

Representation restrict_to_cyclic(const Representation& rep, const FiniteGroup& g, Element x) {
  Presentation pres({"s"}, {power_word(0, static_cast<std::int64_t>(g.element_order(x)))});
  return restrict_rep(rep, pres, {word_for_element(g, x)});
}

FiniteGroup alternating_a4() {
  Word ab3;
  for (int i = 0; i < 3; ++i) {
    ab3.push_back({0, 1});
    ab3.push_back({1, 1});
  }
  Presentation pres({"a", "b"}, {power_word(0, 2), power_word(1, 3), ab3});
  return FiniteGroup::from_permutations({{1, 0, 3, 2}, {1, 2, 0, 3}}, pres);
}

FiniteGroup elementary_abelian_2_cubed() {
  Presentation pres({"a", "b", "c"}, {power_word(0, 2), power_word(1, 2), power_word(2, 2), commutator_word(0, 1),
                                      commutator_word(0, 2), commutator_word(1, 2)});
  return FiniteGroup::from_permutations({{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}}, pres);
}

std::vector<CatalogEntry> catalog() {
  using F = FamilySpec;
  std::vector<CatalogEntry> out;
  auto ok = [&](std::string name, FiniteGroup g, LiftableTag t) {
    out.push_back({std::move(name), std::move(g), true, t, std::nullopt});
  };
  auto bad = [&](std::string name, FiniteGroup g, BadKind k) {
    out.push_back({std::move(name), std::move(g), false, std::nullopt, k});
  };
  ok("C1", make_family(F::cyclic(1)), LiftableTag::Trivial);
  for (int n : {2, 4, 8, 16, 32}) ok("C" + std::to_string(n), make_family(F::cyclic(n)), LiftableTag::C2n);
  for (int n : {3, 6, 12, 24}) ok("C" + std::to_string(n), make_family(F::cyclic(n)), LiftableTag::C3xC2n);
  ok("C3xC4", make_family(F::direct_product(3, 4)), LiftableTag::C3xC2n);
  ok("S3", make_family(F::semidirect_c3(1)), LiftableTag::C3semiC2n);
  ok("Dic3", make_family(F::semidirect_c3(2)), LiftableTag::C3semiC2n);
  ok("C3:C8", make_family(F::semidirect_c3(3)), LiftableTag::C3semiC2n);

  bad("Q8", make_family(F::quaternion(8)), BadKind::Q8);
  bad("Q16", make_family(F::quaternion(16)), BadKind::Q8);
  bad("Q32", make_family(F::quaternion(32)), BadKind::Q8);
  bad("D4", make_family(F::dihedral(8)), BadKind::C2xC2);
  bad("D8", make_family(F::dihedral(16)), BadKind::C2xC2);
  bad("C2xC2", make_family(F::direct_product(2, 2)), BadKind::C2xC2);
  bad("C2xC4", make_family(F::direct_product(2, 4)), BadKind::C2xC2);
  bad("C2xC2xC2", elementary_abelian_2_cubed(), BadKind::C2xC2);
  bad("C6xC2", make_family(F::direct_product(6, 2)), BadKind::C2xC2);
  bad("A4", alternating_a4(), BadKind::C2xC2);
  bad("C3xC3", make_family(F::direct_product(3, 3)), BadKind::C3xC3);
  bad("C9", make_family(F::cyclic(9)), BadKind::C9);
  bad("C27", make_family(F::cyclic(27)), BadKind::C9);
  for (int n : {5, 7, 10, 15}) bad("C" + std::to_string(n), make_family(F::cyclic(n)), BadKind::Cp);
  return out;
}

}  // namespace liftmod
