#include "liftmod/replift.hpp"

#include <algorithm>
#include <sstream>

namespace liftmod {

Representation trivial_rep(const PrimeCtx& ctx, const Presentation& pres, std::size_t dim) {
  return {ctx, dim, pres, std::vector<MatFp>(pres.generator_count(), MatFp::identity(ctx, dim))};
}

template <Ring R>
Matrix<R> evaluate_word(const std::vector<Matrix<R>>& mats, const Word& w, std::size_t dim, const PrimeCtx& ctx) {
  std::vector<std::optional<Matrix<R>>> inverses(mats.size());
  Matrix<R> acc = Matrix<R>::identity(ctx, dim);
  for (const auto& l : w) {
    if (l.gen >= mats.size()) throw Error(Errc::InvalidArgument, "word letter out of range");
    if (l.sign > 0) {
      acc = acc * mats[l.gen];
    } else {
      if (!inverses[l.gen]) inverses[l.gen] = mat_inv(mats[l.gen]);
      acc = acc * *inverses[l.gen];
    }
  }
  return acc;
}

template MatFp evaluate_word(const std::vector<MatFp>&, const Word&, std::size_t, const PrimeCtx&);
template MatZp2 evaluate_word(const std::vector<MatZp2>&, const Word&, std::size_t, const PrimeCtx&);

std::optional<std::string> validate_rep(const Representation& rep) {
  const auto& pres = rep.presentation;
  if (rep.gen_mats.size() != pres.generator_count())
    return "expected " + std::to_string(pres.generator_count()) + " generator matrices, got " +
           std::to_string(rep.gen_mats.size());
  for (std::size_t i = 0; i < rep.gen_mats.size(); ++i) {
    const auto& m = rep.gen_mats[i];
    if (!(m.ctx() == rep.ctx) || m.dim() != rep.dim)
      return "matrix for generator '" + pres.names()[i] + "' has the wrong modulus or dimension";
    try {
      (void)mat_inv(m);
    } catch (const Error&) {
      return "matrix for generator '" + pres.names()[i] + "' is not invertible mod p";
    }
  }
  for (const auto& w : pres.relators()) {
    if (!evaluate_word(rep.gen_mats, w, rep.dim, rep.ctx).is_identity())
      return "relator '" + pres.format_word(w) + "' does not evaluate to the identity";
  }
  return std::nullopt;
}

void require_valid(const Representation& rep) {
  if (auto v = validate_rep(rep)) throw Error(Errc::InvalidRepresentation, *v);
}

std::vector<MatZp2> canonical_lifts(const Representation& rep) {
  std::vector<MatZp2> out;
  out.reserve(rep.gen_mats.size());
  for (const auto& m : rep.gen_mats) out.push_back(lift_canonical(m));
  return out;
}

MatFp relator_defect(const Representation& rep, const std::vector<MatZp2>& naive_lifts, const Word& w) {
  return split_kernel_element(evaluate_word(naive_lifts, w, rep.dim, rep.ctx));
}

namespace {

void check_naive_lifts(const Representation& rep, const std::vector<MatZp2>& naive_lifts) {
  if (naive_lifts.size() != rep.gen_mats.size())
    throw Error(Errc::DimensionMismatch, "one naive lift per generator is required");
  for (std::size_t i = 0; i < naive_lifts.size(); ++i)
    if (!(reduce(naive_lifts[i]) == rep.gen_mats[i]))
      throw Error(Errc::InvalidArgument, "naive lift does not reduce to the generator matrix");
}

constexpr std::size_t kMaxDim = 64;
constexpr std::size_t kMaxRows = 1u << 16;

}  // namespace

LinearizedSystem linearize(const Representation& rep) { return linearize(rep, canonical_lifts(rep)); }

LinearizedSystem linearize(const Representation& rep, const std::vector<MatZp2>& naive_lifts) {
  check_naive_lifts(rep, naive_lifts);
  const std::size_t n = rep.dim;
  const std::size_t nn = n * n;
  const auto& pres = rep.presentation;
  if (n > kMaxDim) throw Error(Errc::InvalidArgument, "dimension exceeds 64");
  if (pres.relators().size() * nn > kMaxRows) throw Error(Errc::InvalidArgument, "lift system exceeds 2^16 rows");

  const UnknownLayout layout{pres.generator_count(), n};
  const std::size_t cols = layout.columns();
  const Scalar p = rep.ctx.p();

  std::vector<MatFp> inverses;
  for (const auto& m : rep.gen_mats) inverses.push_back(mat_inv(m));

  LinearizedSystem out{AffineSystem(rep.ctx, layout), {}, naive_lifts};
  std::vector<std::vector<Scalar>> block(nn, std::vector<Scalar>(cols));
  for (const auto& w : pres.relators()) {
    for (auto& r : block) std::fill(r.begin(), r.end(), 0);
    MatFp prefix = MatFp::identity(rep.ctx, n);
    MatFp prefix_inv = prefix;
    for (const auto& l : w) {
      const MatFp& g = rep.gen_mats[l.gen];
      const MatFp& ginv = inverses[l.gen];
      MatFp next = prefix * (l.sign > 0 ? g : ginv);
      MatFp next_inv = (l.sign > 0 ? ginv : g) * prefix_inv;
      const MatFp& v = l.sign > 0 ? prefix : next;
      const MatFp& vinv = l.sign > 0 ? prefix_inv : next_inv;
      const Scalar sign = l.sign > 0 ? 1 : p - 1;
      // (v A vinv)[r][c] = sum_{k,l} v[r][k] A[k][l] vinv[l][c]
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar vrk = modarith::mul(v(r, k), sign, p);
          if (vrk == 0) continue;
          for (std::size_t c = 0; c < n; ++c) {
            auto& row = block[r * n + c];
            for (std::size_t col = 0; col < n; ++col) {
              const Scalar x = vinv(col, c);
              if (x == 0) continue;
              auto& cell = row[layout.column(l.gen, k, col)];
              cell = modarith::add(cell, modarith::mul(vrk, x, p), p);
            }
          }
        }
      }
      prefix = std::move(next);
      prefix_inv = std::move(next_inv);
    }
    MatFp defect = relator_defect(rep, naive_lifts, w);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out.system.add_equation(block[r * n + c], modarith::neg(defect(r, c), p));
    out.defects.push_back(std::move(defect));
  }
  return out;
}

LiftVerdict check_lift(const Representation& rep) { return check_lift(rep, canonical_lifts(rep)); }

LiftVerdict check_lift(const Representation& rep, const std::vector<MatZp2>& naive_lifts) {
  require_valid(rep);
  LinearizedSystem lin = linearize(rep, naive_lifts);
  SolveResult sol = solve_affine(lin.system);
  if (auto* bad = std::get_if<Inconsistent>(&sol)) return NotLiftable{std::move(lin), std::move(bad->functional)};

  const auto& x = std::get<Consistent>(sol).particular;
  const std::size_t n = rep.dim;
  const UnknownLayout layout{rep.gen_mats.size(), n};
  LiftCertificate cert;
  for (std::size_t g = 0; g < rep.gen_mats.size(); ++g) {
    MatFp a(rep.ctx, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a.set(r, c, x[layout.column(g, r, c)]);
    cert.gen_lifts.push_back(merge_kernel_element(a) * naive_lifts[g]);
  }
  if (!verify_certificate(rep, cert))
    throw Error(Errc::CertificationFailed, "solver produced a lift that fails exact verification");
  return Liftable{std::move(cert)};
}

bool verify_certificate(const Representation& rep, const LiftCertificate& cert) {
  if (cert.gen_lifts.size() != rep.gen_mats.size()) return false;
  for (std::size_t i = 0; i < cert.gen_lifts.size(); ++i) {
    const auto& l = cert.gen_lifts[i];
    if (!(l.ctx() == rep.ctx) || l.dim() != rep.dim) return false;
    if (!(reduce(l) == rep.gen_mats[i])) return false;
  }
  try {
    for (const auto& w : rep.presentation.relators())
      if (!evaluate_word(cert.gen_lifts, w, rep.dim, rep.ctx).is_identity()) return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

bool verify_refutation(const NotLiftable& verdict) { return refutes(verdict.system.system, verdict.functional); }

Representation direct_sum(const Representation& x, const Representation& y) {
  if (!(x.ctx == y.ctx)) throw Error(Errc::DimensionMismatch, "direct_sum: different primes");
  if (!(x.presentation == y.presentation)) throw Error(Errc::DimensionMismatch, "direct_sum: different presentations");
  Representation out{x.ctx, x.dim + y.dim, x.presentation, {}};
  for (std::size_t i = 0; i < x.gen_mats.size(); ++i) out.gen_mats.push_back(block_diag(x.gen_mats[i], y.gen_mats[i]));
  return out;
}

Representation induce(const Representation& rep_h, const FiniteGroup& g, const Subgroup& h,
                      const std::vector<Element>& h_gen_images) {
  check_subgroup(g, h);
  if (!g.presentation()) throw Error(Errc::UnrealizedPresentation, "induce: target group carries no presentation");
  if (h_gen_images.size() != rep_h.gen_mats.size())
    throw Error(Errc::UnrealizedPresentation, "induce: one image per subgroup generator is required");
  for (Element e : h_gen_images)
    if (!h.contains(e)) throw Error(Errc::UnrealizedPresentation, "induce: generator image outside the subgroup");

  // rho on every element of h, by breadth-first closure; every edge is checked.
  const std::size_t n = rep_h.dim;
  std::vector<std::optional<MatFp>> rho(g.order());
  std::vector<Element> queue{0};
  rho[0] = MatFp::identity(rep_h.ctx, n);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Element e = queue[qi];
    for (std::size_t s = 0; s < h_gen_images.size(); ++s) {
      const Element y = g.mul(e, h_gen_images[s]);
      MatFp m = *rho[e] * rep_h.gen_mats[s];
      if (!rho[y]) {
        rho[y] = std::move(m);
        queue.push_back(y);
      } else if (!(*rho[y] == m)) {
        throw Error(Errc::UnrealizedPresentation,
                    "induce: the generator images do not define a homomorphism compatible with the representation");
      }
    }
  }
  if (queue.size() != h.order())
    throw Error(Errc::UnrealizedPresentation, "induce: generator images do not generate the subgroup");

  const std::vector<Element> reps = transversal(g, h);
  const std::size_t k = reps.size();
  Representation out{rep_h.ctx, k * n, *g.presentation(), {}};
  for (Element g0 : g.generators()) {
    MatFp m(rep_h.ctx, k * n);
    for (std::size_t i = 0; i < k; ++i) {
      const Element left = g.mul(g.inv(reps[i]), g0);
      for (std::size_t j = 0; j < k; ++j) {
        const Element x = g.mul(left, reps[j]);
        if (!h.contains(x)) continue;
        const MatFp& b = *rho[x];
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) m.set(i * n + r, j * n + c, b(r, c));
      }
    }
    out.gen_mats.push_back(std::move(m));
  }
  return out;
}

Representation restrict_rep(const Representation& rep_g, const Presentation& h_pres, const std::vector<Word>& words) {
  if (words.size() != h_pres.generator_count())
    throw Error(Errc::InvalidRepresentation, "restrict: one word per subgroup generator is required");
  Representation out{rep_g.ctx, rep_g.dim, h_pres, {}};
  for (const auto& w : words) out.gen_mats.push_back(evaluate_word(rep_g.gen_mats, w, rep_g.dim, rep_g.ctx));
  require_valid(out);
  return out;
}

namespace {

// Small dense Z/p^2 matrices in flat buffers; the brute force loop must not allocate.
struct FlatEval {
  std::size_t n;
  Scalar mod;
  std::vector<Scalar> acc, tmp;

  void mul_into(const Scalar* b) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += static_cast<std::uint64_t>(acc[i * n + k]) * b[k * n + j];
        tmp[i * n + j] = static_cast<Scalar>(s % mod);
      }
    acc.swap(tmp);
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (acc[i * n + j] != (i == j ? 1u : 0u)) return false;
    return true;
  }
};

}  // namespace

BruteForceResult brute_force_lift(const Representation& rep, std::uint64_t budget) {
  require_valid(rep);
  BruteForceResult result;
  const std::size_t n = rep.dim;
  const std::size_t nn = n * n;
  const std::size_t gens = rep.gen_mats.size();
  const Scalar p = rep.ctx.p();

  std::uint64_t per_gen = 1;
  for (std::size_t i = 0; i < nn; ++i) {
    per_gen *= p;
    if (per_gen > budget) return result;
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < gens; ++i) {
    total *= per_gen;
    if (total > budget) return result;
  }

  // All lifts g^ + pA of each generator and their inverses.
  std::vector<std::vector<Scalar>> cand(gens), cand_inv(gens);
  for (std::size_t g = 0; g < gens; ++g) {
    const MatZp2 base = lift_canonical(rep.gen_mats[g]);
    cand[g].resize(per_gen * nn);
    cand_inv[g].resize(per_gen * nn);
    std::vector<Scalar> digits(nn, 0);
    for (std::uint64_t idx = 0; idx < per_gen; ++idx) {
      MatZp2 m = base;
      for (std::size_t e = 0; e < nn; ++e) m.set(e / n, e % n, base(e / n, e % n) + static_cast<std::int64_t>(p) * digits[e]);
      const MatZp2 mi = mat_inv(m);
      std::copy(m.data().begin(), m.data().end(), cand[g].begin() + static_cast<std::ptrdiff_t>(idx * nn));
      std::copy(mi.data().begin(), mi.data().end(), cand_inv[g].begin() + static_cast<std::ptrdiff_t>(idx * nn));
      for (std::size_t e = 0; e < nn; ++e) {
        if (++digits[e] < p) break;
        digits[e] = 0;
      }
    }
  }

  // relators become checkable once their highest generator is assigned
  const auto& rels = rep.presentation.relators();
  std::vector<std::vector<std::size_t>> ready(gens + 1);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    std::size_t top = 0;
    for (const auto& l : rels[r]) top = std::max(top, l.gen + 1);
    ready[top].push_back(r);
  }

  FlatEval ev{n, rep.ctx.p2(), std::vector<Scalar>(nn), std::vector<Scalar>(nn)};
  std::vector<std::uint64_t> choice(gens, 0);
  auto holds = [&](std::size_t level) {
    for (std::size_t r : ready[level]) {
      std::fill(ev.acc.begin(), ev.acc.end(), 0);
      for (std::size_t i = 0; i < n; ++i) ev.acc[i * n + i] = 1;
      for (const auto& l : rels[r]) {
        const auto& src = l.sign > 0 ? cand[l.gen] : cand_inv[l.gen];
        ev.mul_into(src.data() + choice[l.gen] * nn);
      }
      if (!ev.is_identity()) return false;
    }
    return true;
  };

  if (!holds(0)) {
    result.status = BruteForceResult::Status::NotLiftable;
    return result;
  }
  // iterative depth-first search over generator levels
  std::size_t level = 0;
  if (gens == 0) {
    result.status = BruteForceResult::Status::Liftable;
    result.certificate = LiftCertificate{};
    return result;
  }
  choice[0] = 0;
  while (true) {
    bool ok = holds(level + 1);
    if (ok && level + 1 == gens) {
      ++result.assignments;
      LiftCertificate cert;
      for (std::size_t g = 0; g < gens; ++g) {
        MatZp2 m(rep.ctx, n);
        for (std::size_t e = 0; e < nn; ++e) m.set(e / n, e % n, cand[g][choice[g] * nn + e]);
        cert.gen_lifts.push_back(std::move(m));
      }
      result.status = BruteForceResult::Status::Liftable;
      result.certificate = std::move(cert);
      return result;
    }
    if (ok) {
      ++level;
      choice[level] = 0;
      continue;
    }
    if (level + 1 == gens) ++result.assignments;
    // advance to the next candidate, backtracking when a level is exhausted
    while (++choice[level] == per_gen) {
      if (level == 0) {
        result.status = BruteForceResult::Status::NotLiftable;
        return result;
      }
      --level;
    }
  }
}

}  // namespace liftmod
