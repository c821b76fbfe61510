#include "liftmod/groups.hpp"

#include "liftmod/finite_rings.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace liftmod {

Word power_word(std::size_t gen, std::int64_t k) {
  Word w;
  const int sign = k < 0 ? -1 : 1;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) w.push_back({gen, sign});
  return w;
}

Word inverse_word(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->sign});
  return r;
}

Word concat(std::initializer_list<Word> parts) {
  Word r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

Word commutator_word(std::size_t a, std::size_t b) { return {{a, 1}, {b, 1}, {a, -1}, {b, -1}}; }

Presentation::Presentation(std::vector<std::string> names, std::vector<Word> relators)
    : names_(std::move(names)), relators_(std::move(relators)) {
  if (names_.empty()) throw Error(Errc::InvalidArgument, "presentation needs at least one generator");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || n.find_first_of(" \t^#") != std::string::npos)
      throw Error(Errc::InvalidArgument, "bad generator name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw Error(Errc::InvalidArgument, "duplicate generator name '" + n + "'");
  }
  for (const auto& w : relators_)
    for (const auto& l : w)
      if (l.gen >= names_.size() || (l.sign != 1 && l.sign != -1))
        throw Error(Errc::InvalidArgument, "relator references an unknown generator");
}

std::optional<std::size_t> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Word Presentation::parse_word(std::string_view text) const {
  Word w;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    int sign = 1;
    std::string name = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      if (tok.substr(caret) != "^-1") throw Error(Errc::Parse, "bad word token '" + tok + "' (expected name or name^-1)");
      name = tok.substr(0, caret);
      sign = -1;
    }
    auto g = find(name);
    if (!g) throw Error(Errc::Parse, "unknown generator '" + name + "'");
    w.push_back({*g, sign});
  }
  return w;
}

std::string Presentation::format_word(const Word& w) const {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += names_.at(l.gen);
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

// ---------------------------------------------------------------------------

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> table) {
  if (order == 0) throw Error(Errc::AuditFailed, "empty group");
  if (order > kMaxOrder) throw Error(Errc::OrderTooLarge, "order " + std::to_string(order) + " exceeds 4096");
  if (table.size() != order * order) throw Error(Errc::AuditFailed, "table size is not N*N");
  FiniteGroup g;
  g.order_ = order;
  g.table_.resize(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) throw Error(Errc::AuditFailed, "table entry out of range");
    g.table_[i] = static_cast<std::uint16_t>(table[i]);
  }
  g.audit();
  g.inverse_.assign(order, 0);
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b)
      if (g.mul(a, b) == 0) {
        g.inverse_[a] = b;
        break;
      }
  g.orders_.assign(order, 0);
  for (Element a = 0; a < order; ++a) {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = g.mul(x, a)) ++k;
    g.orders_[a] = k;
  }
  return g;
}

void FiniteGroup::audit() const {
  const std::size_t n = order_;
  for (Element a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw Error(Errc::AuditFailed, "element 0 is not the identity");
  }
  std::vector<char> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      if (seen[mul(a, b)]) throw Error(Errc::AuditFailed, "row " + std::to_string(a) + " is not a permutation");
      seen[mul(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      if (seen[mul(b, a)]) throw Error(Errc::AuditFailed, "column " + std::to_string(a) + " is not a permutation");
      seen[mul(b, a)] = 1;
    }
  }
  auto assoc = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw Error(Errc::AuditFailed, "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                         std::to_string(c) + ")");
  };
  if (n <= 256) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < (1 << 20); ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& perms,
                                           std::optional<Presentation> presentation) {
  if (perms.empty()) throw Error(Errc::InvalidArgument, "no permutation generators");
  const std::size_t degree = perms.front().size();
  for (const auto& p : perms) {
    std::vector<std::uint32_t> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s.size() != degree || s[i] != i) throw Error(Errc::InvalidArgument, "not a permutation");
  }
  using Perm = std::vector<std::uint32_t>;
  auto compose = [&](const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = a[b[x]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elems{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : perms) {
      Perm y = compose(elems[i], s);
      if (index.emplace(y, static_cast<Element>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > kMaxOrder) throw Error(Errc::OrderTooLarge, "permutation group exceeds order 4096");
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  FiniteGroup g = from_table(n, std::move(table));
  if (presentation) {
    std::vector<Element> gens;
    for (const auto& s : perms) gens.push_back(index.at(s));
    g.set_presentation(std::move(*presentation), std::move(gens));
  }
  return g;
}

Element FiniteGroup::pow(Element a, std::int64_t k) const {
  Element base = k < 0 ? inv(a) : a;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k) % orders_[a];
  Element r = 0;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

void FiniteGroup::set_presentation(Presentation pres, std::vector<Element> gens) {
  if (gens.size() != pres.generator_count())
    throw Error(Errc::UnrealizedPresentation, "generator count does not match presentation");
  for (auto e : gens)
    if (e >= order_) throw Error(Errc::UnrealizedPresentation, "generator index out of range");
  if (generate(*this, gens).order() != order_)
    throw Error(Errc::UnrealizedPresentation, "generators do not generate the group");
  presentation_ = std::move(pres);
  generators_ = std::move(gens);
  for (std::size_t i = 0; i < presentation_->relators().size(); ++i) {
    if (evaluate(presentation_->relators()[i]) != 0) {
      const std::string w = presentation_->format_word(presentation_->relators()[i]);
      presentation_.reset();
      generators_.clear();
      throw Error(Errc::UnrealizedPresentation, "relator '" + w + "' does not hold in the table");
    }
  }
}

Element FiniteGroup::evaluate(const Word& w) const {
  if (!presentation_) throw Error(Errc::UnrealizedPresentation, "group has no presentation");
  Element r = 0;
  for (const auto& l : w) r = mul(r, l.sign > 0 ? generators_.at(l.gen) : inv(generators_.at(l.gen)));
  return r;
}

std::vector<Element> FiniteGroup::table() const { return {table_.begin(), table_.end()}; }

// ---------------------------------------------------------------------------

bool Subgroup::contains(Element e) const { return std::binary_search(elements.begin(), elements.end(), e); }

Subgroup generate(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return {g.order(), std::move(elems), {gens.begin(), gens.end()}};
}

void check_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent_order != g.order()) throw Error(Errc::NotASubgroup, "subgroup belongs to a group of another order");
  if (h.elements.empty() || h.elements.front() != 0) throw Error(Errc::NotASubgroup, "subgroup lacks the identity");
  if (!std::is_sorted(h.elements.begin(), h.elements.end()) ||
      std::adjacent_find(h.elements.begin(), h.elements.end()) != h.elements.end())
    throw Error(Errc::NotASubgroup, "element list must be sorted and duplicate-free");
  for (Element a : h.elements) {
    if (a >= g.order()) throw Error(Errc::NotASubgroup, "element out of range");
    for (Element b : h.elements)
      if (!h.contains(g.mul(a, b))) throw Error(Errc::NotASubgroup, "not closed under multiplication");
  }
}

namespace {

bool is_power_of(std::size_t n, std::uint32_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::size_t p_part(std::size_t n, std::uint32_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::vector<std::uint32_t> prime_factors(std::size_t n) {
  std::vector<std::uint32_t> f;
  for (std::uint32_t d = 2; static_cast<std::size_t>(d) * d <= n; ++d) {
    if (n % d) continue;
    f.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) f.push_back(static_cast<std::uint32_t>(n));
  return f;
}

}  // namespace

Subgroup sylow(const FiniteGroup& g, std::uint32_t p) {
  if (p < 2) throw Error(Errc::InvalidArgument, "sylow: p must be prime");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(Errc::InvalidArgument, "sylow: p must be prime");
  const std::size_t target = p_part(g.order(), p);
  std::vector<Element> gens;
  Subgroup cur = generate(g, gens);
  while (cur.order() < target) {
    bool grown = false;
    for (Element x = 1; x < g.order() && !grown; ++x) {
      if (cur.contains(x) || !is_power_of(g.element_order(x), p)) continue;
      gens.push_back(x);
      Subgroup next = generate(g, gens);
      if (is_power_of(next.order(), p)) {
        cur = std::move(next);
        grown = true;
      } else {
        gens.pop_back();
      }
    }
    if (!grown) throw Error(Errc::AuditFailed, "sylow search stalled; table is not a group");
  }
  return cur;
}

std::vector<Element> transversal(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> covered(g.order(), 0);
  std::vector<Element> reps;
  for (Element t = 0; t < g.order(); ++t) {
    if (covered[t]) continue;
    reps.push_back(t);
    for (Element x : h.elements) covered[g.mul(t, x)] = 1;
  }
  return reps;
}

std::string_view bad_kind_name(BadKind k) noexcept {
  switch (k) {
    case BadKind::Cp: return "Cp";
    case BadKind::C9: return "C9";
    case BadKind::C3xC3: return "C3xC3";
    case BadKind::C2xC2: return "C2xC2";
    case BadKind::Q8: return "Q8";
  }
  return "?";
}

std::optional<BadSubgroup> find_subgroup_witness(const FiniteGroup& g) {
  const std::size_t n = g.order();
  auto make = [&](BadKind kind, std::uint32_t prime, std::vector<Element> gens) {
    Subgroup sub = generate(g, gens);
    return BadSubgroup{kind, prime, std::move(gens), std::move(sub)};
  };

  for (Element x = 1; x < n; ++x) {
    const std::size_t o = g.element_order(x);
    for (std::uint32_t q : prime_factors(o)) {
      if (q < 5) continue;
      return make(BadKind::Cp, q, {g.pow(x, static_cast<std::int64_t>(o / q))});
    }
  }
  for (Element x = 1; x < n; ++x) {
    const std::size_t o = g.element_order(x);
    if (o % 9 == 0) return make(BadKind::C9, 3, {g.pow(x, static_cast<std::int64_t>(o / 9))});
  }
  for (Element x = 1; x < n; ++x) {
    if (g.element_order(x) != 3) continue;
    const Element x2 = g.mul(x, x);
    for (Element y = x + 1; y < n; ++y)
      if (g.element_order(y) == 3 && y != x2 && g.commute(x, y)) return make(BadKind::C3xC3, 3, {x, y});
  }
  for (Element x = 1; x < n; ++x) {
    if (g.element_order(x) != 2) continue;
    for (Element y = x + 1; y < n; ++y)
      if (g.element_order(y) == 2 && g.commute(x, y)) return make(BadKind::C2xC2, 2, {x, y});
  }
  for (Element x = 1; x < n; ++x) {
    if (g.element_order(x) != 4) continue;
    const Element x2 = g.mul(x, x);
    const Element xinv = g.inv(x);
    for (Element y = 1; y < n; ++y)
      if (g.mul(y, y) == x2 && g.mul(g.mul(y, x), g.inv(y)) == xinv) return make(BadKind::Q8, 2, {x, y});
  }
  return std::nullopt;
}

std::string_view family_tag_name(FamilyTag t) noexcept {
  switch (t) {
    case FamilyTag::C2n: return "C2n";
    case FamilyTag::C3xC2n: return "C3xC2n";
    case FamilyTag::C3semiC2n: return "C3semiC2n";
  }
  return "?";
}

std::optional<FamilyTag> is_listed_family(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const std::size_t two = p_part(n, 2);
  const bool pow2 = (two == n);
  const bool three_pow2 = (two * 3 == n);
  if (!pow2 && !three_pow2) return std::nullopt;
  bool cyclic = false;
  for (Element x = 0; x < n && !cyclic; ++x) cyclic = (g.element_order(x) == n);
  if (cyclic) return pow2 ? FamilyTag::C2n : FamilyTag::C3xC2n;
  if (pow2 || two == 1 || g.is_abelian()) return std::nullopt;
  // Sylow-2 cyclic means some element has order 2^a.
  for (Element y = 1; y < n; ++y) {
    if (g.element_order(y) != two) continue;
    for (Element x = 1; x < n; ++x) {
      if (g.element_order(x) != 3) continue;
      if (g.mul(g.mul(y, x), g.inv(y)) != g.inv(x)) continue;
      const Element gens[] = {x, y};
      if (generate(g, gens).order() == n) return FamilyTag::C3semiC2n;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

bool is_pow2(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

FiniteGroup with_table(std::size_t n, const std::function<Element(Element, Element)>& mul, Presentation pres,
                       std::vector<Element> gens) {
  if (n > FiniteGroup::kMaxOrder) throw Error(Errc::OrderTooLarge, "order " + std::to_string(n) + " exceeds 4096");
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = mul(a, b);
  FiniteGroup g = FiniteGroup::from_table(n, std::move(table));
  g.set_presentation(std::move(pres), std::move(gens));
  return g;
}

}  // namespace

FiniteGroup make_family(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  constexpr std::uint64_t cap = FiniteGroup::kMaxOrder;
  switch (spec.kind) {
    case K::Cyclic: {
      const auto n = spec.a;
      if (n == 0) throw Error(Errc::UnsupportedFamily, "cyclic order must be positive");
      if (n > cap) throw Error(Errc::OrderTooLarge, "order exceeds 4096");
      return with_table(n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
                        Presentation({"s"}, {power_word(0, static_cast<std::int64_t>(n))}), {n > 1 ? 1u : 0u});
    }
    case K::DirectProduct: {
      const auto a = spec.a, b = spec.b;
      if (a == 0 || b == 0) throw Error(Errc::UnsupportedFamily, "factor orders must be positive");
      if (a * b > cap) throw Error(Errc::OrderTooLarge, "order exceeds 4096");
      // (i, j) -> i*b + j
      auto mul = [a, b](Element x, Element y) {
        return static_cast<Element>(((x / b + y / b) % a) * b + (x % b + y % b) % b);
      };
      Presentation pres({"s", "t"}, {power_word(0, static_cast<std::int64_t>(a)), power_word(1, static_cast<std::int64_t>(b)),
                                     commutator_word(0, 1)});
      return with_table(a * b, mul, std::move(pres),
                        {a > 1 ? static_cast<Element>(b) : 0u, b > 1 ? 1u : 0u});
    }
    case K::ElementaryAbelian: {
      if (!is_prime(spec.a)) throw Error(Errc::UnsupportedFamily, "elementary abelian needs a prime");
      if (spec.b == 1) return make_family(FamilySpec::cyclic(spec.a));
      if (spec.b == 2) return make_family(FamilySpec::direct_product(spec.a, spec.a));
      throw Error(Errc::UnsupportedFamily, "elementary abelian rank must be 1 or 2");
    }
    case K::GeneralizedQuaternion: {
      const auto n = spec.a;
      if (!is_pow2(n) || n < 8) throw Error(Errc::UnsupportedFamily, "generalized quaternion order must be 2^n, n >= 3");
      if (n > cap) throw Error(Errc::OrderTooLarge, "order exceeds 4096");
      const auto m = n / 2;
      // s^i t^j -> i + m*j, with t s t^-1 = s^-1 and t^2 = s^(m/2)
      auto mul = [m](Element x, Element y) {
        const auto i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
        auto i = (j1 ? i1 + m - i2 : i1 + i2);
        auto j = j1 + j2;
        if (j >= 2) {
          j -= 2;
          i += m / 2;
        }
        return static_cast<Element>((i % m) + m * j);
      };
      Presentation pres({"s", "t"}, {concat({power_word(0, static_cast<std::int64_t>(m / 2)), power_word(1, -2)}),
                                     power_word(0, static_cast<std::int64_t>(m)),
                                     Word{{1, 1}, {0, 1}, {1, -1}, {0, 1}}});
      return with_table(n, mul, std::move(pres), {1u, static_cast<Element>(m)});
    }
    case K::Dihedral: {
      const auto n = spec.a;
      if (!is_pow2(n) || n < 4) throw Error(Errc::UnsupportedFamily, "dihedral order must be 2^n, n >= 2");
      if (n > cap) throw Error(Errc::OrderTooLarge, "order exceeds 4096");
      const auto m = n / 2;
      auto mul = [m](Element x, Element y) {
        const auto i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
        const auto i = (j1 ? i1 + m - i2 : i1 + i2) % m;
        return static_cast<Element>(i + m * ((j1 + j2) % 2));
      };
      Presentation pres({"s", "t"}, {power_word(0, static_cast<std::int64_t>(m)), power_word(1, 2),
                                     Word{{1, 1}, {0, 1}, {1, -1}, {0, 1}}});
      return with_table(n, mul, std::move(pres), {1u, static_cast<Element>(m)});
    }
    case K::SemidirectC3C2n: {
      const auto e = spec.a;
      if (e < 1) throw Error(Errc::UnsupportedFamily, "C3 semidirect C_{2^n} needs n >= 1");
      if (e > 10) throw Error(Errc::OrderTooLarge, "order exceeds 4096");
      const std::uint64_t k = 1ull << e;
      // x^i y^j -> i + 3*j, with y x y^-1 = x^-1
      auto mul = [k](Element x, Element y) {
        const auto i1 = x % 3, j1 = x / 3, i2 = y % 3, j2 = y / 3;
        const auto i = ((j1 % 2) ? i1 + 3 - i2 : i1 + i2) % 3;
        return static_cast<Element>(i + 3 * ((j1 + j2) % k));
      };
      Presentation pres({"s", "t"}, {power_word(0, 3), power_word(1, static_cast<std::int64_t>(k)),
                                     Word{{1, 1}, {0, 1}, {1, -1}, {0, 1}}});
      return with_table(3 * k, mul, std::move(pres), {1u, 3u});
    }
  }
  throw Error(Errc::UnsupportedFamily, "unknown family");
}

Word word_for_element(const FiniteGroup& g, Element x) {
  if (!g.presentation()) throw Error(Errc::UnrealizedPresentation, "group has no presentation");
  std::vector<std::optional<Word>> words(g.order());
  words[0] = Word{};
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element e = queue.front();
    queue.pop_front();
    if (e == x) return *words[e];
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      const Element y = g.mul(e, g.generators()[s]);
      if (words[y]) continue;
      words[y] = *words[e];
      words[y]->push_back({s, 1});
      queue.push_back(y);
    }
  }
  throw Error(Errc::InvalidArgument, "element out of range");
}

Presentation cayley_presentation(const FiniteGroup& g, std::vector<Element>* gens_out) {
  const std::size_t n = g.order();
  std::vector<Element> gens;
  Subgroup cur = generate(g, gens);
  for (Element x = 1; x < n && cur.order() < n; ++x) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generate(g, gens);
  }
  if (gens.empty()) gens.push_back(0);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("g" + std::to_string(gens[i]));

  // breadth-first spanning tree over right multiplication by generators
  std::vector<Word> tree(n);
  std::vector<char> reached(n, 0);
  std::vector<std::pair<Element, std::size_t>> parent(n, {0, 0});
  std::deque<Element> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Element y = g.mul(x, gens[s]);
      if (reached[y]) continue;
      reached[y] = 1;
      parent[y] = {x, s};
      tree[y] = tree[x];
      tree[y].push_back({s, 1});
      queue.push_back(y);
    }
  }
  std::vector<Word> relators;
  for (Element x = 0; x < n; ++x) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Element y = g.mul(x, gens[s]);
      if (y != 0 && parent[y] == std::make_pair(x, s)) continue;
      Word w = tree[x];
      w.push_back({s, 1});
      const Word back = inverse_word(tree[y]);
      w.insert(w.end(), back.begin(), back.end());
      relators.push_back(std::move(w));
    }
  }
  if (gens_out) *gens_out = gens;
  return Presentation(std::move(names), std::move(relators));
}

}  // namespace liftmod
