#include "liftmod/text_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace liftmod {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream is{std::string(line)};
    Line l{number, {}};
    for (std::string tok; is >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(const std::string& tok, std::size_t line) {
  std::int64_t v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

std::uint64_t parse_count(const std::string& tok, std::size_t line) {
  const auto v = parse_int(tok, line);
  if (v < 0) fail(line, "expected a non-negative integer, got '" + tok + "'");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Representation parse_representation(std::string_view text) {
  const auto lines = tokenize(text);
  std::optional<PrimeCtx> ctx;
  std::optional<std::size_t> dim;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::string>> relator_text;
  std::vector<std::optional<MatFp>> mats;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto& [number, tok] = lines[li];
    const std::string& key = tok[0];
    if (key == "p") {
      if (ctx) fail(number, "duplicate 'p'");
      if (tok.size() != 2) fail(number, "expected 'p <prime>'");
      try {
        ctx.emplace(static_cast<std::uint32_t>(parse_count(tok[1], number)));
      } catch (const Error& e) {
        if (e.code() == Errc::Parse) throw;
        fail(number, e.what());
      }
    } else if (key == "n") {
      if (dim) fail(number, "duplicate 'n'");
      if (tok.size() != 2) fail(number, "expected 'n <dimension>'");
      dim = parse_count(tok[1], number);
      if (*dim > 64) fail(number, "dimension exceeds 64");
    } else if (key == "gens") {
      if (!names.empty()) fail(number, "duplicate 'gens'");
      if (tok.size() < 2) fail(number, "expected 'gens <k> <names...>'");
      const auto k = parse_count(tok[1], number);
      if (k == 0) fail(number, "at least one generator is required");
      if (tok.size() != k + 2) fail(number, "expected " + std::to_string(k) + " generator names");
      names.assign(tok.begin() + 2, tok.end());
      mats.assign(k, std::nullopt);
    } else if (key == "rel") {
      std::string w;
      for (std::size_t i = 1; i < tok.size(); ++i) w += (i > 1 ? " " : "") + tok[i];
      relator_text.emplace_back(number, std::move(w));
    } else if (key == "mat") {
      if (!ctx || !dim || names.empty()) fail(number, "'mat' must follow 'p', 'n' and 'gens'");
      if (tok.size() != 2) fail(number, "expected 'mat <generator>'");
      std::size_t g = names.size();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == tok[1]) g = i;
      if (g == names.size()) fail(number, "unknown generator '" + tok[1] + "'");
      if (mats[g]) fail(number, "duplicate matrix for '" + tok[1] + "'");
      MatFp m(*ctx, *dim);
      for (std::size_t r = 0; r < *dim; ++r) {
        if (++li >= lines.size()) fail(number, "matrix '" + tok[1] + "' is missing rows");
        const auto& row = lines[li];
        if (row.tokens.size() != *dim)
          fail(row.number, "expected " + std::to_string(*dim) + " entries, got " + std::to_string(row.tokens.size()));
        for (std::size_t c = 0; c < *dim; ++c) {
          const auto v = parse_int(row.tokens[c], row.number);
          if (v < 0 || v >= static_cast<std::int64_t>(ctx->p()))
            fail(row.number, "entry " + row.tokens[c] + " is outside [0, " + std::to_string(ctx->p()) + ")");
          m.set(r, c, v);
        }
      }
      mats[g] = std::move(m);
    } else {
      fail(number, "unknown keyword '" + key + "'");
    }
  }
  if (!ctx) throw Error(Errc::Parse, "missing 'p'");
  if (!dim) throw Error(Errc::Parse, "missing 'n'");
  if (names.empty()) throw Error(Errc::Parse, "missing 'gens'");
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!mats[i]) throw Error(Errc::Parse, "missing matrix for generator '" + names[i] + "'");

  std::vector<Word> relators;
  std::optional<Presentation> probe;
  try {
    probe.emplace(names, std::vector<Word>{});
  } catch (const Error& e) {
    throw Error(Errc::Parse, std::string("generator names: ") + e.what());
  }
  for (const auto& [number, w] : relator_text) {
    try {
      relators.push_back(probe->parse_word(w));
    } catch (const Error& e) {
      fail(number, e.what());
    }
  }
  Representation rep{*ctx, *dim, Presentation(names, std::move(relators)), {}};
  for (auto& m : mats) rep.gen_mats.push_back(std::move(*m));
  return rep;
}

std::string format_representation(const Representation& rep) {
  std::ostringstream os;
  const auto& names = rep.presentation.names();
  os << "p " << rep.ctx.p() << "\n";
  os << "n " << rep.dim << "\n";
  os << "gens " << names.size();
  for (const auto& n : names) os << " " << n;
  os << "\n";
  for (const auto& w : rep.presentation.relators()) {
    os << "rel";
    if (!w.empty()) os << " " << rep.presentation.format_word(w);
    os << "\n";
  }
  for (std::size_t g = 0; g < names.size(); ++g) {
    os << "mat " << names[g] << "\n";
    for (std::size_t i = 0; i < rep.dim; ++i) {
      for (std::size_t j = 0; j < rep.dim; ++j) os << (j ? " " : "") << rep.gen_mats[g](i, j);
      os << "\n";
    }
  }
  return os.str();
}

FiniteGroup parse_table(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(Errc::Parse, "empty table");
  const auto& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != "order") fail(head.number, "expected 'order <N>'");
  const auto n = parse_count(head.tokens[1], head.number);
  if (n == 0) fail(head.number, "order must be positive");
  if (n > FiniteGroup::kMaxOrder) throw Error(Errc::OrderTooLarge, "order " + std::to_string(n) + " exceeds 4096");
  if (lines.size() != n + 1)
    throw Error(Errc::Parse, "expected " + std::to_string(n) + " table rows, got " + std::to_string(lines.size() - 1));
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 1; r <= n; ++r) {
    const auto& row = lines[r];
    if (row.tokens.size() != n) fail(row.number, "expected " + std::to_string(n) + " entries");
    for (const auto& t : row.tokens) {
      const auto v = parse_count(t, row.number);
      if (v >= n) fail(row.number, "element index " + t + " out of range");
      table.push_back(static_cast<Element>(v));
    }
  }
  return FiniteGroup::from_table(n, std::move(table));
}

std::string format_table(const FiniteGroup& g) {
  std::ostringstream os;
  os << "order " << g.order() << "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
    os << "\n";
  }
  return os.str();
}

GroupAlgebraElement parse_algebra_element(std::string_view text, const FiniteGroup& g, const PrimeCtx& ctx) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "elt") throw Error(Errc::Parse, "expected 'elt'");
  std::vector<Scalar> coeffs;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const auto& [number, tok] = lines[li];
    for (std::size_t i = (li == 0 ? 1 : 0); i < tok.size(); ++i) {
      if (coeffs.size() == g.order()) fail(number, "more than " + std::to_string(g.order()) + " coefficients");
      coeffs.push_back(modarith::reduce(parse_int(tok[i], number), ctx.p()));
    }
  }
  if (coeffs.size() != g.order())
    throw Error(Errc::Parse, "expected " + std::to_string(g.order()) + " coefficients, got " + std::to_string(coeffs.size()));
  return {ctx.p(), std::move(coeffs)};
}

std::string format_algebra_element(const GroupAlgebraElement& e) {
  std::ostringstream os;
  os << "elt";
  for (auto c : e.coeffs) os << " " << c;
  os << "\n";
  return os.str();
}

FamilySpec parse_family_spec(const std::vector<std::string>& tok) {
  auto num = [&](std::size_t i) -> std::uint64_t {
    if (i >= tok.size()) throw Error(Errc::Parse, "family spec: missing parameter");
    std::uint64_t v = 0;
    const auto& t = tok[i];
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw Error(Errc::Parse, "family spec: expected a non-negative integer, got '" + t + "'");
    return v;
  };
  auto arity = [&](std::size_t k) {
    if (tok.size() != k) throw Error(Errc::Parse, "family spec: expected " + std::to_string(k - 1) + " parameter(s)");
  };
  if (tok.empty()) throw Error(Errc::Parse, "family spec: empty");
  const std::string& k = tok[0];
  {
    if (k == "C") {
      arity(2);
      return FamilySpec::cyclic(num(1));
    }
    if (k == "Q") {
      arity(2);
      return FamilySpec::quaternion(num(1));
    }
    if (k == "D") {
      arity(2);
      return FamilySpec::dihedral(num(1));
    }
    if (k == "CxC") {
      arity(3);
      return FamilySpec::direct_product(num(1), num(2));
    }
    if (k == "C3xC3") {
      arity(1);
      return FamilySpec::direct_product(3, 3);
    }
    if (k == "C3semi") {
      arity(2);
      const auto n = num(1);
      if (n < 2 || (n & (n - 1)) != 0) throw Error(Errc::UnsupportedFamily, "C3semi needs a power of two >= 2");
      std::uint64_t e = 0;
      while ((1ull << e) < n) ++e;
      return FamilySpec::semidirect_c3(e);
    }
  }
  throw Error(Errc::Parse, "family spec: unknown family '" + k + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace liftmod
