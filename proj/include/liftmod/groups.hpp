#pragma once

// Finite groups as explicit multiplication tables, presentations by
// generators and relator words, built-in families, and subgroup searches.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liftmod/error.hpp"

namespace liftmod {

using Element = std::uint32_t;

struct Letter {
  std::size_t gen = 0;
  int sign = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// gen^k as |k| letters of the appropriate sign.
Word power_word(std::size_t gen, std::int64_t k);
Word inverse_word(const Word& w);
Word concat(std::initializer_list<Word> parts);
/// a b a^-1 b^-1
Word commutator_word(std::size_t a, std::size_t b);

class Presentation {
 public:
  Presentation(std::vector<std::string> names, std::vector<Word> relators);

  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  std::optional<std::size_t> find(std::string_view name) const;

  /// Whitespace-separated tokens `name` or `name^-1`.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  /// Row-major table, entry [g*N + h] = g*h, identity 0. Runs the full audit
  /// (exhaustive associativity for N <= 256, sampled above); throws
  /// Errc::AuditFailed or Errc::OrderTooLarge.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table);

  /// Closure of permutation generators; element 0 is the identity and
  /// generator i maps to presentation generator i.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& perms,
                                       std::optional<Presentation> presentation = std::nullopt);

  std::size_t order() const noexcept { return order_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const { return orders_[a]; }
  Element pow(Element a, std::int64_t k) const;
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  /// Presentation whose generator i is realized by generators()[i].
  const std::optional<Presentation>& presentation() const noexcept { return presentation_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }

  /// Attaches a presentation; checks that the generators generate the group
  /// and every relator evaluates to the identity.
  void set_presentation(Presentation pres, std::vector<Element> gens);

  /// Evaluates a word in the attached generators.
  Element evaluate(const Word& w) const;

  std::vector<Element> table() const;

 private:
  FiniteGroup() = default;
  void audit() const;

  std::size_t order_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> orders_;
  std::optional<Presentation> presentation_;
  std::vector<Element> generators_;
};

struct Subgroup {
  std::size_t parent_order = 0;
  std::vector<Element> elements;    // sorted, contains 0
  std::vector<Element> generators;  // closure witness

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Element e) const;
};

/// Subgroup generated by the given elements.
Subgroup generate(const FiniteGroup& g, std::span<const Element> gens);

/// Throws Errc::NotASubgroup unless h is closed, contains 0 and has parent order |g|.
void check_subgroup(const FiniteGroup& g, const Subgroup& h);

/// A Sylow p-subgroup, grown from the trivial group by adjoining the first
/// element (ascending index) that keeps the closure a p-group.
Subgroup sylow(const FiniteGroup& g, std::uint32_t p);

/// Left coset representatives t with G = union t H; smallest index per coset,
/// ascending. The first one is the identity.
std::vector<Element> transversal(const FiniteGroup& g, const Subgroup& h);

enum class BadKind { Cp, C9, C3xC3, C2xC2, Q8 };

std::string_view bad_kind_name(BadKind k) noexcept;

/// A subgroup isomorphic to one of the five obstruction groups. generators
/// holds the images of the canonical witness presentation's generators.
struct BadSubgroup {
  BadKind kind = BadKind::Cp;
  std::uint32_t prime = 0;
  std::vector<Element> generators;
  Subgroup subgroup;
};

/// First obstruction subgroup in the fixed order Cp (p >= 5), C9, C3xC3,
/// C2xC2, Q8, scanning elements by ascending index.
std::optional<BadSubgroup> find_subgroup_witness(const FiniteGroup& g);

enum class FamilyTag { C2n, C3xC2n, C3semiC2n };

std::string_view family_tag_name(FamilyTag t) noexcept;

/// Recognizes C_{2^a}, C_3 x C_{2^a} (cyclic of order 3*2^a) and
/// C_3 semidirect C_{2^a} (inversion action).
std::optional<FamilyTag> is_listed_family(const FiniteGroup& g);

struct FamilySpec {
  enum class Kind { Cyclic, DirectProduct, ElementaryAbelian, GeneralizedQuaternion, Dihedral, SemidirectC3C2n };
  Kind kind = Kind::Cyclic;
  std::uint64_t a = 1;
  std::uint64_t b = 1;

  static FamilySpec cyclic(std::uint64_t n) { return {Kind::Cyclic, n, 1}; }
  static FamilySpec direct_product(std::uint64_t m, std::uint64_t n) { return {Kind::DirectProduct, m, n}; }
  static FamilySpec elementary_abelian(std::uint64_t p, std::uint64_t rank) { return {Kind::ElementaryAbelian, p, rank}; }
  /// order = 2^n, n >= 3
  static FamilySpec quaternion(std::uint64_t order) { return {Kind::GeneralizedQuaternion, order, 1}; }
  /// order = 2^n, n >= 2
  static FamilySpec dihedral(std::uint64_t order) { return {Kind::Dihedral, order, 1}; }
  /// C_3 semidirect C_{2^n}, n >= 1
  static FamilySpec semidirect_c3(std::uint64_t n) { return {Kind::SemidirectC3C2n, n, 1}; }
};

/// Multiplication table plus matching presentation (relators are checked).
FiniteGroup make_family(const FamilySpec& spec);

/// A word in the attached generators evaluating to x (breadth-first, shortest
/// positive word).
Word word_for_element(const FiniteGroup& g, Element x);

/// Greedy generating set plus the Cayley-graph relators (one per non-tree
/// edge of a breadth-first spanning tree). A complete presentation.
Presentation cayley_presentation(const FiniteGroup& g, std::vector<Element>* gens_out);

}  // namespace liftmod
