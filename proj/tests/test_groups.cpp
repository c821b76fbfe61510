#include <gtest/gtest.h>

#include <map>

#include "liftmod/classify.hpp"
#include "liftmod/groups.hpp"

using namespace liftmod;

namespace {

std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> h;
  for (Element x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

using Hist = std::map<std::size_t, std::size_t>;

}  // namespace

TEST(Families, ElementOrderHistograms) {
  // counts derived by hand from normal forms s^i t^j
  EXPECT_EQ(order_histogram(make_family(FamilySpec::quaternion(8))), (Hist{{1, 1}, {2, 1}, {4, 6}}));
  EXPECT_EQ(order_histogram(make_family(FamilySpec::quaternion(16))), (Hist{{1, 1}, {2, 1}, {4, 10}, {8, 4}}));
  EXPECT_EQ(order_histogram(make_family(FamilySpec::dihedral(8))), (Hist{{1, 1}, {2, 5}, {4, 2}}));
  EXPECT_EQ(order_histogram(make_family(FamilySpec::dihedral(16))), (Hist{{1, 1}, {2, 9}, {4, 2}, {8, 4}}));
  EXPECT_EQ(order_histogram(make_family(FamilySpec::semidirect_c3(1))), (Hist{{1, 1}, {2, 3}, {3, 2}}));
  EXPECT_EQ(order_histogram(make_family(FamilySpec::semidirect_c3(2))),
            (Hist{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}));
  EXPECT_EQ(order_histogram(make_family(FamilySpec::semidirect_c3(3))),
            (Hist{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {8, 12}, {12, 4}}));
  EXPECT_EQ(order_histogram(make_family(FamilySpec::direct_product(2, 4))), (Hist{{1, 1}, {2, 3}, {4, 4}}));
  EXPECT_EQ(order_histogram(make_family(FamilySpec::cyclic(12))),
            (Hist{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}}));
  EXPECT_EQ(order_histogram(alternating_a4()), (Hist{{1, 1}, {2, 3}, {3, 8}}));
  EXPECT_EQ(order_histogram(elementary_abelian_2_cubed()), (Hist{{1, 1}, {2, 7}}));
}

TEST(Families, PresentationsHoldAndGenerate) {
  for (const auto& spec : {FamilySpec::cyclic(1), FamilySpec::cyclic(7), FamilySpec::direct_product(3, 3),
                           FamilySpec::quaternion(32), FamilySpec::dihedral(4), FamilySpec::semidirect_c3(4),
                           FamilySpec::elementary_abelian(2, 2), FamilySpec::elementary_abelian(5, 1)}) {
    const auto g = make_family(spec);
    ASSERT_TRUE(g.presentation());
    for (const auto& w : g.presentation()->relators()) EXPECT_EQ(g.evaluate(w), 0u);
    EXPECT_EQ(generate(g, g.generators()).order(), g.order());
  }
}

TEST(Families, RejectsBadParameters) {
  auto code = [](FamilySpec s) {
    try {
      make_family(s);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code(FamilySpec::quaternion(12)), Errc::UnsupportedFamily);
  EXPECT_EQ(code(FamilySpec::quaternion(4)), Errc::UnsupportedFamily);
  EXPECT_EQ(code(FamilySpec::dihedral(6)), Errc::UnsupportedFamily);
  EXPECT_EQ(code(FamilySpec::cyclic(0)), Errc::UnsupportedFamily);
  EXPECT_EQ(code(FamilySpec::cyclic(4097)), Errc::OrderTooLarge);
  EXPECT_EQ(code(FamilySpec::direct_product(64, 65)), Errc::OrderTooLarge);
  EXPECT_EQ(code(FamilySpec::elementary_abelian(4, 2)), Errc::UnsupportedFamily);
  EXPECT_EQ(make_family(FamilySpec::cyclic(4096)).order(), 4096u);
}

TEST(FromTable, AuditCatchesBrokenTables) {
  auto code = [](std::size_t n, std::vector<Element> t) {
    try {
      FiniteGroup::from_table(n, std::move(t));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  // identity not at 0
  EXPECT_EQ(code(2, {1, 0, 0, 1}), Errc::AuditFailed);
  // not a Latin square
  EXPECT_EQ(code(2, {0, 1, 1, 1}), Errc::AuditFailed);
  // Latin square with identity 0 but not associative (order 5 loop)
  EXPECT_EQ(code(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}), Errc::AuditFailed);
  EXPECT_EQ(code(1, {1}), Errc::AuditFailed);
  const auto ok = FiniteGroup::from_table(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  EXPECT_EQ(ok.inv(1), 2u);
  EXPECT_EQ(ok.element_order(2), 3u);
  EXPECT_TRUE(ok.is_abelian());
}

TEST(Presentation, WordParsing) {
  const Presentation p({"s", "t"}, {});
  EXPECT_EQ(p.parse_word("s t^-1 s"), (Word{{0, 1}, {1, -1}, {0, 1}}));
  EXPECT_EQ(p.parse_word(""), Word{});
  EXPECT_THROW(p.parse_word("s^2"), Error);
  EXPECT_THROW(p.parse_word("u"), Error);
  EXPECT_EQ(p.format_word(p.parse_word("t^-1 s")), "t^-1 s");
  EXPECT_THROW(Presentation({"s", "s"}, {}), Error);
  EXPECT_EQ(inverse_word(Word{{0, 1}, {1, -1}}), (Word{{1, 1}, {0, -1}}));
  EXPECT_EQ(power_word(1, -2), (Word{{1, -1}, {1, -1}}));
  EXPECT_EQ(commutator_word(0, 1), (Word{{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
}

TEST(Presentation, SetPresentationChecks) {
  auto g = make_family(FamilySpec::cyclic(6));
  EXPECT_THROW(g.set_presentation(Presentation({"s"}, {power_word(0, 4)}), {1}), Error);   // relator fails
  EXPECT_THROW(g.set_presentation(Presentation({"s"}, {power_word(0, 3)}), {2}), Error);   // does not generate
  EXPECT_THROW(g.set_presentation(Presentation({"s", "t"}, {}), {1}), Error);              // arity
  g.set_presentation(Presentation({"u"}, {power_word(0, 6)}), {5});
  EXPECT_EQ(g.evaluate(Word{{0, 1}, {0, 1}}), 4u);
}

TEST(Subgroups, GenerateCheckSylow) {
  const auto a4 = alternating_a4();
  EXPECT_EQ(sylow(a4, 2).order(), 4u);
  EXPECT_EQ(sylow(a4, 3).order(), 3u);
  EXPECT_EQ(sylow(a4, 5).order(), 1u);
  const auto s3 = make_family(FamilySpec::semidirect_c3(1));
  EXPECT_EQ(sylow(s3, 2).order(), 2u);
  EXPECT_EQ(sylow(make_family(FamilySpec::semidirect_c3(3)), 2).order(), 8u);
  for (const auto& h : {sylow(a4, 2), sylow(a4, 3)}) EXPECT_NO_THROW(check_subgroup(a4, h));
  Element three = 0;
  while (a4.element_order(three) != 3) ++three;
  Subgroup bogus{12, {0, three}, {}};
  EXPECT_THROW(check_subgroup(a4, bogus), Error);
  Subgroup wrong_parent = sylow(a4, 3);
  wrong_parent.parent_order = 24;
  EXPECT_THROW(check_subgroup(a4, wrong_parent), Error);
}

TEST(Subgroups, Transversal) {
  const auto q8 = make_family(FamilySpec::quaternion(8));
  const std::vector<Element> s{1};
  const auto h = generate(q8, s);
  const auto t = transversal(q8, h);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], 0u);
  const auto d8 = make_family(FamilySpec::dihedral(16));
  const std::vector<Element> r{2};
  const auto hh = generate(d8, r);
  const auto tt = transversal(d8, hh);
  EXPECT_EQ(tt.size(), 4u);
  // the cosets partition the group
  std::vector<int> hit(d8.order(), 0);
  for (auto x : tt)
    for (auto y : hh.elements) ++hit[d8.mul(x, y)];
  for (int c : hit) EXPECT_EQ(c, 1);
}

TEST(SubgroupWitness, FirstMatchInFixedOrder) {
  const auto q16 = make_family(FamilySpec::quaternion(16));
  const auto w = find_subgroup_witness(q16);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->kind, BadKind::Q8);
  // sigma^2 and tau
  EXPECT_EQ(w->generators, (std::vector<Element>{2, 8}));
  EXPECT_EQ(w->subgroup.order(), 8u);

  const auto c10 = make_family(FamilySpec::cyclic(10));
  const auto w10 = find_subgroup_witness(c10);
  ASSERT_TRUE(w10);
  EXPECT_EQ(w10->kind, BadKind::Cp);
  EXPECT_EQ(w10->prime, 5u);

  // C15 contains C5 and C3; the Cp check comes first
  EXPECT_EQ(find_subgroup_witness(make_family(FamilySpec::cyclic(15)))->kind, BadKind::Cp);
  EXPECT_EQ(find_subgroup_witness(make_family(FamilySpec::cyclic(27)))->kind, BadKind::C9);
  EXPECT_EQ(find_subgroup_witness(make_family(FamilySpec::direct_product(3, 6)))->kind, BadKind::C3xC3);
  EXPECT_EQ(find_subgroup_witness(alternating_a4())->kind, BadKind::C2xC2);
  EXPECT_FALSE(find_subgroup_witness(make_family(FamilySpec::semidirect_c3(3))));
  EXPECT_FALSE(find_subgroup_witness(make_family(FamilySpec::cyclic(24))));
}

TEST(SubgroupWitness, GeneratorsSatisfyWitnessPresentation) {
  for (const auto& e : catalog()) {
    const auto w = find_subgroup_witness(e.group);
    if (!w) continue;
    const auto rep = canonical_witness(w->kind, w->prime);
    // evaluate the witness relators on the chosen elements
    for (const auto& rel : rep.presentation.relators()) {
      Element acc = 0;
      for (const auto& l : rel) acc = e.group.mul(acc, l.sign > 0 ? w->generators[l.gen] : e.group.inv(w->generators[l.gen]));
      EXPECT_EQ(acc, 0u) << e.name;
    }
    EXPECT_EQ(generate(e.group, w->generators).order(), w->subgroup.order()) << e.name;
  }
}

TEST(ListedFamily, Recognition) {
  EXPECT_EQ(is_listed_family(make_family(FamilySpec::cyclic(16))), FamilyTag::C2n);
  EXPECT_EQ(is_listed_family(make_family(FamilySpec::cyclic(48))), FamilyTag::C3xC2n);
  EXPECT_EQ(is_listed_family(make_family(FamilySpec::direct_product(3, 8))), FamilyTag::C3xC2n);
  EXPECT_EQ(is_listed_family(make_family(FamilySpec::semidirect_c3(2))), FamilyTag::C3semiC2n);
  EXPECT_FALSE(is_listed_family(make_family(FamilySpec::direct_product(2, 2))));
  EXPECT_FALSE(is_listed_family(make_family(FamilySpec::quaternion(8))));
  EXPECT_FALSE(is_listed_family(make_family(FamilySpec::cyclic(9))));
  EXPECT_FALSE(is_listed_family(make_family(FamilySpec::cyclic(5))));
}

TEST(Words, WordForElementEvaluates) {
  for (const auto& g : {make_family(FamilySpec::quaternion(16)), make_family(FamilySpec::semidirect_c3(2)), alternating_a4()})
    for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(g.evaluate(word_for_element(g, x)), x);
}

TEST(CayleyPresentation, AttachesToBareTables) {
  const auto src = make_family(FamilySpec::dihedral(8));
  auto bare = FiniteGroup::from_table(src.order(), src.table());
  EXPECT_FALSE(bare.presentation());
  std::vector<Element> gens;
  auto pres = cayley_presentation(bare, &gens);
  EXPECT_EQ(pres.generator_count(), gens.size());
  bare.set_presentation(pres, gens);
  for (const auto& w : bare.presentation()->relators()) EXPECT_EQ(bare.evaluate(w), 0u);
  // N * |gens| edges, N - 1 in the tree
  EXPECT_EQ(pres.relators().size(), src.order() * gens.size() - (src.order() - 1));
}
