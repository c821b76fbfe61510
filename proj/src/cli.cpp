#include "liftmod/cli.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liftmod/classify.hpp"
#include "liftmod/cyclic_lift.hpp"
#include "liftmod/obstruction.hpp"
#include "liftmod/text_io.hpp"

namespace liftmod {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <Ring R>
std::string flat(const Matrix<R>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) s += (s.empty() ? "" : " ") + std::to_string(m(i, j));
  return s;
}

template <Ring R>
json matrix_json(const Matrix<R>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

template <Ring R>
void print_matrix(std::ostream& os, const Matrix<R>& m, const std::string& indent) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
}

// The functional's support, as (relator, row, col, coefficient).
struct FunctionalEntry {
  std::size_t relator, row, col;
  Scalar coef;
};

std::vector<FunctionalEntry> functional_support(const NotLiftable& nl, std::size_t dim) {
  std::vector<FunctionalEntry> out;
  const std::size_t block = dim * dim;
  for (std::size_t e = 0; e < nl.functional.size(); ++e)
    if (nl.functional[e] != 0) out.push_back({e / block, (e % block) / dim, e % dim, nl.functional[e]});
  return out;
}

std::string refute_line(const NotLiftable& nl, std::size_t dim) {
  std::ostringstream os;
  const auto support = functional_support(nl, dim);
  os << "REFUTE: equations=" << nl.functional.size() << " support=" << support.size();
  for (const auto& e : support) os << " " << (e.relator * dim * dim + e.row * dim + e.col) << ":" << e.coef;
  return os.str();
}

void print_refutation(std::ostream& os, const NotLiftable& nl, const Representation& rep) {
  os << refute_line(nl, rep.dim) << "\n";
  const std::size_t n = rep.dim;
  for (std::size_t r = 0; r < rep.presentation.relators().size(); ++r) {
    MatFp block(rep.ctx, n);
    bool any = false;
    for (std::size_t i = 0; i < n * n; ++i) {
      const Scalar c = nl.functional[r * n * n + i];
      if (c != 0) any = true;
      block.set(i / n, i % n, c);
    }
    if (!any) continue;
    os << "  functional on relator " << rep.presentation.format_word(rep.presentation.relators()[r]) << ":\n";
    print_matrix(os, block, "    ");
  }
}

json refutation_json(const NotLiftable& nl, const Representation& rep) {
  json support = json::array();
  for (const auto& e : functional_support(nl, rep.dim))
    support.push_back({{"relator", rep.presentation.format_word(rep.presentation.relators()[e.relator])},
                       {"row", e.row},
                       {"col", e.col},
                       {"coef", e.coef}});
  return {{"equations", nl.functional.size()}, {"support", support}};
}

struct Options {
  bool json = false;
  std::uint64_t max_brute = 1ull << 20;
  bool verify = true;
};

// ---------------------------------------------------------------- check

struct CheckOutcome {
  std::string text;
  json doc;
  int code = kExitOk;
};

CheckOutcome check_one(const std::string& path, const Options& opt) {
  CheckOutcome o;
  std::ostringstream os;
  const auto t0 = Clock::now();
  o.doc = {{"file", path}};
  Representation rep = parse_representation(read_file(path));
  if (auto bad = validate_rep(rep)) throw Error(Errc::InvalidRepresentation, *bad);

  os << "# check " << path << "\n";
  os << "representation: p=" << rep.ctx.p() << " n=" << rep.dim << " generators=" << rep.gen_mats.size()
     << " relators=" << rep.presentation.relators().size() << "\n";
  o.doc["p"] = rep.ctx.p();
  o.doc["n"] = rep.dim;

  const auto verdict = check_lift(rep);
  const bool liftable = is_liftable(verdict);
  o.doc["verdict"] = liftable ? "LIFTABLE" : "NOT_LIFTABLE";
  os << "VERDICT: " << (liftable ? "LIFTABLE" : "NOT_LIFTABLE") << "\n";

  bool verified = true;
  if (liftable) {
    const auto& cert = std::get<Liftable>(verdict).certificate;
    json lifts = json::object();
    for (std::size_t g = 0; g < cert.gen_lifts.size(); ++g) {
      const auto& name = rep.presentation.names()[g];
      os << "CERT: " << name << " " << flat(cert.gen_lifts[g]) << "\n";
      lifts[name] = matrix_json(cert.gen_lifts[g]);
    }
    for (std::size_t g = 0; g < cert.gen_lifts.size(); ++g) {
      os << "  lift of " << rep.presentation.names()[g] << " mod " << rep.ctx.p2() << ":\n";
      print_matrix(os, cert.gen_lifts[g], "    ");
    }
    o.doc["certificate"] = lifts;
    if (opt.verify) verified = verify_certificate(rep, cert);
  } else {
    const auto& nl = std::get<NotLiftable>(verdict);
    print_refutation(os, nl, rep);
    o.doc["refutation"] = refutation_json(nl, rep);
    if (opt.verify) verified = verify_refutation(nl);
  }
  if (opt.verify) {
    os << "verified: " << (verified ? "yes" : "NO") << "\n";
    o.doc["verified"] = verified;
    if (!verified) o.code = kExitInternal;
  }

  if (opt.max_brute > 0) {
    const auto bf = brute_force_lift(rep, opt.max_brute);
    if (bf.status == BruteForceResult::Status::BudgetExceeded) {
      os << "oracle: skipped (search space exceeds " << opt.max_brute << ")\n";
      o.doc["oracle"] = "SKIPPED";
    } else {
      const bool agree = (bf.status == BruteForceResult::Status::Liftable) == liftable;
      os << "oracle: " << (agree ? "agrees" : "DISAGREES") << " (" << bf.assignments << " assignments)\n";
      o.doc["oracle"] = agree ? "AGREE" : "DISAGREE";
      if (!agree) o.code = kExitInternal;
    }
  }
  const double secs = since(t0);
  os << "time: " << secs << " s\n";
  o.doc["seconds"] = secs;
  o.text = os.str();
  return o;
}

int cmd_check(const std::vector<std::string>& files, const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<std::future<CheckOutcome>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, check_one, f, opt));
  int code = kExitOk;
  json docs = json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      auto o = jobs[i].get();
      if (opt.json)
        docs.push_back(o.doc);
      else
        out << o.text;
      code = std::max(code, o.code);
    } catch (const Error& e) {
      err << "error: " << files[i] << ": " << e.what() << "\n";
      code = std::max(code, e.code() == Errc::CertificationFailed ? kExitInternal : kExitInput);
    }
  }
  if (opt.json) out << docs.dump(2) << "\n";
  return code;
}

// ---------------------------------------------------------------- classify

FiniteGroup load_group(const std::vector<std::string>& spec, const std::string& table) {
  if (!table.empty() && !spec.empty()) throw Error(Errc::InvalidArgument, "give either a family spec or --table");
  if (!table.empty()) return parse_table(read_file(table));
  if (spec.empty()) throw Error(Errc::InvalidArgument, "a family spec or --table is required");
  return make_family(parse_family_spec(spec));
}

std::string element_list(const std::vector<Element>& v) {
  std::string s;
  for (auto e : v) s += (s.empty() ? "" : ",") + std::to_string(e);
  return "[" + s + "]";
}

int cmd_classify(const std::vector<std::string>& spec, const std::string& table, const Options& opt,
                 std::ostream& out) {
  const auto t0 = Clock::now();
  const FiniteGroup g = load_group(spec, table);
  const auto v = classify(g);
  json doc = {{"order", g.order()}};
  std::ostringstream os;
  os << "group: order " << g.order() << (g.is_abelian() ? ", abelian" : ", non-abelian") << "\n";
  int code = kExitOk;
  if (const auto* l = std::get_if<GroupLiftable>(&v)) {
    os << "VERDICT: LIFTABLE (" << liftable_tag_name(l->tag) << ")\n";
    doc["verdict"] = "LIFTABLE";
    doc["family"] = liftable_tag_name(l->tag);
  } else {
    const auto& n = std::get<GroupNotLiftable>(v);
    const std::string kind(bad_kind_name(n.bad.kind));
    os << "VERDICT: NOT_LIFTABLE (" << kind << ")\n";
    os << "obstruction subgroup: " << kind;
    if (n.bad.kind == BadKind::Cp) os << " (p=" << n.bad.prime << ")";
    os << ", order " << n.bad.subgroup.order() << ", generated by elements " << element_list(n.bad.generators) << "\n";
    os << "witness: " << n.witness.dim << "-dimensional over F_" << n.witness.ctx.p()
       << (n.subgroup_level ? " (representation of the subgroup; induction too large)"
                            : " (induced from the subgroup, index " +
                                  std::to_string(g.order() / n.bad.subgroup.order()) + ")")
       << "\n";
    doc["verdict"] = "NOT_LIFTABLE";
    doc["obstruction"] = kind;
    doc["prime"] = n.bad.prime;
    doc["subgroup_generators"] = n.bad.generators;
    doc["witness_dim"] = n.witness.dim;
    doc["subgroup_level"] = n.subgroup_level;
    doc["certified"] = n.certified();
    if (n.refutation) {
      os << refute_line(*n.refutation, n.witness.dim) << "\n";
      os << "certified: yes (solver refutes every lift of the witness)\n";
      doc["refutation"] = refutation_json(*n.refutation, n.witness);
      if (opt.verify && !verify_refutation(*n.refutation)) code = kExitInternal;
    } else {
      os << "certified: NO (the solver lifts the witness; the verdict rests on the obstruction subgroup alone)\n";
      for (std::size_t i = 0; i < n.witness_lift->gen_lifts.size(); ++i)
        os << "  witness lift " << n.witness.presentation.names()[i] << ": " << flat(n.witness_lift->gen_lifts[i])
           << "\n";
    }
  }
  const double secs = since(t0);
  doc["seconds"] = secs;
  if (opt.json)
    out << doc.dump(2) << "\n";
  else
    out << os.str() << "time: " << secs << " s\n";
  return code;
}

// ---------------------------------------------------------------- theta

int cmd_theta(const std::vector<std::string>& spec, const std::string& table, std::uint32_t prime,
              const std::string& f_path, const std::string& h_path, const Options& opt, std::ostream& out) {
  FiniteGroup g = load_group(spec, table);
  const PrimeCtx ctx(prime);
  const auto f = parse_algebra_element(read_file(f_path), g, ctx);
  const auto h = parse_algebra_element(read_file(h_path), g, ctx);
  const auto th = theta(g, ctx, f, h);
  const std::string rep = format_algebra_element(th.representative);
  if (opt.json) {
    out << json{{"theta", th.is_zero ? "ZERO" : "NONZERO"},
                {"representative", th.representative.coeffs},
                {"span_dimension", th.quotient_basis.size()},
                {"quotient_dimension", g.order() - th.quotient_basis.size()}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "THETA: " << (th.is_zero ? "ZERO" : "NONZERO") << "\n";
  out << "representative: " << rep;
  out << "quotient F_p[G] / (f F_p[G] + F_p[G] h) has dimension " << g.order() - th.quotient_basis.size() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- emit

BadKind parse_kind(const std::string& s) {
  for (BadKind k : {BadKind::Cp, BadKind::C9, BadKind::C3xC3, BadKind::C2xC2, BadKind::Q8})
    if (s == bad_kind_name(k)) return k;
  throw Error(Errc::InvalidArgument, "unknown witness kind '" + s + "' (Cp, C9, C3xC3, C2xC2, Q8)");
}

// ---------------------------------------------------------------- reproduce

template <class F>
ReproduceRow timed(std::string id, std::string description, F&& body) {
  ReproduceRow row{std::move(id), std::move(description), false, {}, 0};
  const auto t0 = Clock::now();
  try {
    std::tie(row.pass, row.detail) = body();
  } catch (const std::exception& e) {
    row.pass = false;
    row.detail = std::string("exception: ") + e.what();
  }
  row.seconds = since(t0);
  return row;
}

// The first generator becomes the identity: either a relator breaks or the
// representation factors through a smaller group whose module lifts.
void corrupt_rep(Representation& rep) { rep.gen_mats.at(0) = MatFp::identity(rep.ctx, rep.dim); }

std::pair<bool, std::string> expect_not_liftable(const Representation& rep) {
  if (auto bad = validate_rep(rep)) return {false, "invalid representation: " + *bad};
  const auto v = check_lift(rep);
  if (is_liftable(v)) return {false, "solver found a lift (certificate verifies: " +
                                         std::string(verify_certificate(rep, std::get<Liftable>(v).certificate) ? "yes" : "no") + ")"};
  const auto& nl = std::get<NotLiftable>(v);
  if (!verify_refutation(nl)) return {false, "refutation does not verify"};
  return {true, "NotLiftable, refuting functional with " + std::to_string(functional_support(nl, rep.dim).size()) +
                    " nonzero coefficients"};
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::vector<std::string> corruptible_rows() { return {"klein-witness", "q8-witness", "c3xc3-witness"}; }

std::vector<ReproduceRow> reproduce_rows(const std::string& corrupt) {
  if (!corrupt.empty()) {
    const auto ids = corruptible_rows();
    if (std::find(ids.begin(), ids.end(), corrupt) == ids.end())
      throw Error(Errc::InvalidArgument, "row '" + corrupt + "' cannot be corrupted");
  }
  std::vector<ReproduceRow> rows;

  rows.push_back(timed("klein-witness", "C2xC2: 4-dimensional block representation does not lift mod 4", [&] {
    auto rep = canonical_witness(BadKind::C2xC2);
    const PrimeCtx f2(2);
    const MatFp sigma(f2, {{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    const MatFp tau(f2, {{1, 0, 0, 1}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    if (!(rep.gen_mats[0] == sigma && rep.gen_mats[1] == tau))
      return std::pair<bool, std::string>{false, "matrices differ from the printed blocks"};
    if (corrupt == "klein-witness") corrupt_rep(rep);
    return expect_not_liftable(rep);
  }));

  rows.push_back(timed("q8-witness", "Q8: 6-dimensional representation (j, k over M_2(F_2)) does not lift mod 4", [&] {
    auto rep = canonical_witness(BadKind::Q8);
    if (corrupt == "q8-witness") corrupt_rep(rep);
    return expect_not_liftable(rep);
  }));

  rows.push_back(timed("c3xc3-witness", "C3xC3: (1+e12, 1+e13) does not lift mod 9", [&] {
    auto rep = canonical_witness(BadKind::C3xC3);
    if (corrupt == "c3xc3-witness") corrupt_rep(rep);
    return expect_not_liftable(rep);
  }));

  for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {5, 1}, {7, 1}}) {
    const std::string tag = std::to_string(p) + "-" + std::to_string(n);
    rows.push_back(timed("theta-cyclic-" + tag,
                         "theta((1-s)^m, (1-s)^(p^n-m)) is nonzero on C_" + std::to_string(ipow(p, n)) +
                             ", with matching q-polynomial coefficient",
                         [p = p, n = n] {
                           const PrimeCtx ctx(p);
                           const auto w = cyclic_witness(ctx, n);
                           const auto th = theta(w.group, ctx, w.f, w.h);
                           const std::uint64_t deg = w.m - 1;
                           const Scalar q = q_polynomial(ctx, n).coeff(deg);
                           const Scalar b = binom_div_p(ipow(p, n), deg, ctx);
                           const bool coef_ok = q != 0 && (q == b || q == modarith::neg(b, p));
                           std::string d = "m=" + std::to_string(w.m) + ", theta " +
                                           (th.is_zero ? "ZERO" : "NONZERO") + ", q coefficient of s^" +
                                           std::to_string(deg) + " = " + std::to_string(q) + ", binom/p = " +
                                           std::to_string(b);
                           return std::pair<bool, std::string>{!th.is_zero && coef_ok, d};
                         }));
    rows.push_back(timed("quotient-module-" + tag,
                         "F_p[C_{p^n}] / F_p[C_{p^n}] (1-s)^(p^n-m) does not lift", [p = p, n = n] {
                           const PrimeCtx ctx(p);
                           const auto w = cyclic_witness(ctx, n);
                           const auto rep = module_of_quotient(w.group, ctx, w.h);
                           auto [ok, d] = expect_not_liftable(rep);
                           const bool dim_ok = rep.dim == ipow(p, n) - w.m;
                           return std::pair<bool, std::string>{ok && dim_ok,
                                                               "dimension " + std::to_string(rep.dim) + "; " + d};
                         }));
  }

  auto divisor_row = [](std::uint32_t p, std::uint32_t n) {
    return [p, n] {
      const PrimeCtx ctx(p);
      const std::uint64_t top = ipow(p, n);
      std::uint64_t good = 0;
      std::string failures;
      for (std::uint64_t i = 1; i <= top; ++i) {
        const auto P = find_divisor_lift(ctx, n, i);
        if (!P) {
          failures += " i=" + std::to_string(i) + ":no-divisor";
          continue;
        }
        auto [rep, cert] = companion_lift(ctx, n, i, *P);
        if (!verify_certificate(rep, cert)) {
          failures += " i=" + std::to_string(i) + ":cert";
          continue;
        }
        if (!is_liftable(check_lift(rep))) {
          failures += " i=" + std::to_string(i) + ":solver";
          continue;
        }
        ++good;
      }
      std::string d = std::to_string(good) + "/" + std::to_string(top) + " Jordan sizes lifted" + failures;
      return std::pair<bool, std::string>{good == top, d};
    };
  };
  for (std::uint32_t n = 1; n <= 4; ++n)
    rows.push_back(timed("divisor-lifts-2-" + std::to_string(n),
                         "C_" + std::to_string(ipow(2, n)) + ": every Jordan block lifts via a divisor of t^(2^n)-1",
                         divisor_row(2, n)));
  rows.push_back(timed("divisor-lifts-3-1", "C_3: Jordan blocks 1..3 lift; size 2 uses t^2+t+1", [divisor_row] {
    auto [ok, d] = divisor_row(3, 1)();
    const PrimeCtx ctx(3);
    const auto P2 = find_divisor_lift(ctx, 1, 2);
    const bool p2_ok = P2 && *P2 == PolyInt{1, 1, 1};
    return std::pair<bool, std::string>{ok && p2_ok, d + (p2_ok ? ", P_2 = t^2 + t + 1" : ", P_2 mismatch")};
  }));

  auto gap_row = [](std::uint32_t p, std::uint32_t n, std::set<std::uint64_t> expect, std::uint64_t m) {
    return [=] {
      const PrimeCtx ctx(p);
      const auto got = liftable_jordan_sizes(ctx, n);
      std::string s;
      for (auto x : got) s += (s.empty() ? "" : ",") + std::to_string(x);
      const bool ok = got == expect && !got.count(m);
      std::string solver;
      for (std::uint64_t i = 1; i <= ipow(p, n); ++i)
        if (is_liftable(check_lift(jordan_companion_rep(ctx, n, i)))) solver += (solver.empty() ? "" : ",") + std::to_string(i);
      return std::pair<bool, std::string>{ok, "{" + s + "}, m=" + std::to_string(m) + " absent; solver lifts {" + solver + "}"};
    };
  };
  rows.push_back(timed("jordan-gaps-3-2", "divisor degree sums for C_9 are {1,2,3,6,7,8,9}",
                       gap_row(3, 2, {1, 2, 3, 6, 7, 8, 9}, 4)));
  rows.push_back(timed("jordan-gaps-5-1", "divisor degree sums for C_5 are {1,4,5}", gap_row(5, 1, {1, 4, 5}, 2)));

  rows.push_back(timed("direct-sum-law", "X+Y lifts iff X and Y lift (Jordan blocks of C_9 and C_4)", [] {
    std::size_t pairs = 0, bad = 0;
    for (auto [p, n] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {2, 2}}) {
      const PrimeCtx ctx(p);
      const std::uint64_t top = ipow(p, n);
      std::vector<Representation> reps;
      std::vector<bool> lifts;
      for (std::uint64_t i = 1; i <= top; ++i) {
        reps.push_back(jordan_companion_rep(ctx, n, i));
        lifts.push_back(is_liftable(check_lift(reps.back())));
      }
      for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a; b < reps.size(); ++b) {
          ++pairs;
          if (is_liftable(check_lift(direct_sum(reps[a], reps[b]))) != (lifts[a] && lifts[b])) ++bad;
        }
    }
    return std::pair<bool, std::string>{bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) +
                                                      " violations"};
  }));

  rows.push_back(timed("induction", "non-liftable subgroup witnesses induce to non-liftable representations", [] {
    std::string d;
    bool ok = true;
    for (auto spec : {FamilySpec::dihedral(8), FamilySpec::cyclic(10), FamilySpec::direct_product(2, 4)}) {
      const FiniteGroup g = make_family(spec);
      const auto bad = find_subgroup_witness(g);
      if (!bad) return std::pair<bool, std::string>{false, "no obstruction subgroup"};
      const auto w = try_witness_for_group(g, *bad);
      ok = ok && w.refutation.has_value() && !w.subgroup_level;
      d += (d.empty() ? "" : "; ") + std::string("order ") + std::to_string(g.order()) + " via " +
           std::string(bad_kind_name(bad->kind)) + ": dim " + std::to_string(w.rep.dim) +
           (w.refutation ? " NotLiftable" : " lifts");
    }
    return std::pair<bool, std::string>{ok, d};
  }));

  const auto cat = catalog();
  rows.push_back(timed("catalog-verdicts", "classification agrees with the family list on every catalog group", [&] {
    std::string mism;
    for (const auto& e : cat) {
      const auto v = classify(e.group);
      const bool lift = std::holds_alternative<GroupLiftable>(v);
      bool match = lift == e.expect_liftable && lift == is_listed_family(e.group).has_value();
      if (match && lift) match = std::get<GroupLiftable>(v).tag == *e.expect_tag;
      if (match && !lift) match = std::get<GroupNotLiftable>(v).bad.kind == *e.expect_bad;
      if (!match) mism += " " + e.name;
    }
    return std::pair<bool, std::string>{mism.empty(), std::to_string(cat.size()) + " groups" +
                                                          (mism.empty() ? "" : ", mismatches:" + mism)};
  }));
  rows.push_back(timed("catalog-certificates", "every non-liftable catalog verdict carries a solver-refuted witness", [&] {
    std::string uncert;
    std::size_t negatives = 0;
    for (const auto& e : cat) {
      const auto v = classify(e.group);
      if (const auto* n = std::get_if<GroupNotLiftable>(&v)) {
        ++negatives;
        if (!n->certified() || !verify_refutation(*n->refutation)) uncert += " " + e.name;
      }
    }
    return std::pair<bool, std::string>{uncert.empty(), std::to_string(negatives) + " negative verdicts" +
                                                            (uncert.empty() ? "" : ", uncertified:" + uncert)};
  }));
  return rows;
}

namespace {

int cmd_reproduce(const std::string& corrupt, const Options& opt, std::ostream& out) {
  const auto t0 = Clock::now();
  const auto rows = reproduce_rows(corrupt);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const ReproduceRow& r) { return r.pass; });
  if (opt.json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"id", r.id},
                     {"description", r.description},
                     {"status", r.pass ? "PASS" : "FAIL"},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    out << json{{"rows", arr}, {"status", all ? "PASS" : "FAIL"}, {"seconds", since(t0)}}.dump(2) << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.id.size());
    for (const auto& r : rows) {
      out << (r.pass ? "PASS  " : "FAIL  ") << r.id << std::string(width - r.id.size() + 2, ' ') << r.description
          << "\n      " << r.detail << " [" << r.seconds << " s]\n";
    }
    const auto passed = std::count_if(rows.begin(), rows.end(), [](const ReproduceRow& r) { return r.pass; });
    out << passed << "/" << rows.size() << " rows pass, " << since(t0) << " s\n";
  }
  return all ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether mod-p representations of finite groups lift mod p^2"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--max-brute", opt.max_brute, "brute-force oracle budget in assignments (0 disables)");
  app.add_flag("--verify,!--no-verify", opt.verify, "re-check certificates and refutations (default on)");

  auto* check = app.add_subcommand("check", "decide liftability of representation files");
  std::vector<std::string> files;
  check->add_option("files", files, "representation files")->required();

  auto* cls = app.add_subcommand("classify", "classify a group: family spec (C n, Q n, D n, CxC a b, C3xC3, C3semi n)");
  std::vector<std::string> spec;
  std::string table;
  cls->add_option("spec", spec, "family spec tokens");
  cls->add_option("--table", table, "multiplication-table file");

  auto* th = app.add_subcommand("theta", "obstruction class theta(f, h) for f h = 0 in F_p[G]");
  std::vector<std::string> th_spec;
  std::string th_table, f_path, h_path;
  std::uint32_t prime = 0;
  th->add_option("spec", th_spec, "family spec tokens");
  th->add_option("--table", th_table, "multiplication-table file");
  th->add_option("--prime,-p", prime, "the prime p")->required();
  th->add_option("--f-file", f_path, "element file for f")->required();
  th->add_option("--h-file", h_path, "element file for h")->required();

  auto* rep = app.add_subcommand("reproduce", "run every reproduction row; exit 1 on any FAIL");
  std::string corrupt;
  rep->add_option("--corrupt", corrupt, "test mode: damage the named witness row first");

  auto* emit = app.add_subcommand("emit", "print built-in data in the text formats");
  emit->require_subcommand(1);
  auto* e_wit = emit->add_subcommand("witness", "an obstruction group's witness representation");
  std::string kind;
  std::uint32_t e_prime = 5;
  e_wit->add_option("kind", kind, "Cp, C9, C3xC3, C2xC2 or Q8")->required();
  e_wit->add_option("--prime,-p", e_prime, "prime for Cp (default 5)");
  auto* e_comp = emit->add_subcommand("companion", "Jordan block of size i for C_{p^n} (companion of (t-1)^i)");
  std::uint32_t c_p = 2, c_n = 1;
  std::uint64_t c_i = 1;
  e_comp->add_option("--prime,-p", c_p)->required();
  e_comp->add_option("--n", c_n)->required();
  e_comp->add_option("--i", c_i)->required();
  auto* e_elt = emit->add_subcommand("theta-pair", "f or h of the cyclic obstruction pair on C_{p^n}");
  std::string which;
  std::uint32_t t_p = 3, t_n = 2;
  e_elt->add_option("which", which, "f or h")->required()->check(CLI::IsMember({"f", "h"}));
  e_elt->add_option("--prime,-p", t_p)->required();
  e_elt->add_option("--n", t_n)->required();
  auto* e_tab = emit->add_subcommand("table", "multiplication table of a family group");
  std::vector<std::string> tab_spec;
  e_tab->add_option("spec", tab_spec)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*check) return cmd_check(files, opt, out, err);
    if (*cls) return cmd_classify(spec, table, opt, out);
    if (*th) return cmd_theta(th_spec, th_table, prime, f_path, h_path, opt, out);
    if (*rep) return cmd_reproduce(corrupt, opt, out);
    if (*e_wit) {
      out << format_representation(canonical_witness(parse_kind(kind), e_prime));
      return kExitOk;
    }
    if (*e_comp) {
      const PrimeCtx ctx(c_p);
      const auto P = find_divisor_lift(ctx, c_n, c_i);
      out << "# Jordan block of size " << c_i << " for C_" << ipow(c_p, c_n) << "\n";
      if (P)
        out << "# lifts via the companion matrix of " << P->to_string() << "\n";
      else
        out << "# no divisor of t^(p^n)-1 of this degree reduces to (t-1)^" << c_i << "\n";
      out << format_representation(jordan_companion_rep(ctx, c_n, c_i));
      return kExitOk;
    }
    if (*e_elt) {
      const PrimeCtx ctx(t_p);
      const auto w = cyclic_witness(ctx, t_n);
      out << "# C_" << w.group.order() << " (spec: C " << w.group.order() << "), m = " << w.m << "\n";
      out << format_algebra_element(which == "f" ? w.f : w.h);
      return kExitOk;
    }
    if (*e_tab) {
      out << format_table(make_family(parse_family_spec(tab_spec)));
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::CertificationFailed ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace liftmod
