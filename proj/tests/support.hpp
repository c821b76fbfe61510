#pragma once

// Shared helpers for the test binaries: random valid representations and
// oracles written without the library's solver or matrix code.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "liftmod/classify.hpp"
#include "liftmod/replift.hpp"

namespace liftmod {
inline bool operator<(const Letter& a, const Letter& b) { return a.gen != b.gen ? a.gen < b.gen : a.sign < b.sign; }
}  // namespace liftmod

namespace testsupport {

using liftmod::Scalar;
using IntMat = std::vector<std::vector<std::int64_t>>;

inline IntMat int_identity(std::size_t n) {
  IntMat m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b, std::int64_t mod) {
  const std::size_t n = a.size();
  IntMat r(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = (r[i][j] + a[i][k] * b[k][j]) % mod;
  return r;
}

template <liftmod::Ring R>
IntMat to_int(const liftmod::Matrix<R>& m) {
  IntMat r(m.dim(), std::vector<std::int64_t>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r[i][j] = m(i, j);
  return r;
}

/// Rank over F_p by plain elimination on int64 rows.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, b = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && ((rows[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t s = inv(((rows[rank][c] % p) + p) % p);
    for (auto& x : rows[rank]) x = ((x * s) % p + p) % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const std::int64_t f = ((rows[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = (((rows[r][j] - f * rows[rank][j]) % p) + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Word value over Z/mod with plain integer matrices; inverses are supplied.
inline IntMat int_word(const std::vector<IntMat>& mats, const std::vector<IntMat>& invs, const liftmod::Word& w,
                       std::int64_t mod) {
  IntMat acc = int_identity(mats.empty() ? 0 : mats[0].size());
  for (const auto& l : w) acc = int_mul(acc, l.sign > 0 ? mats[l.gen] : invs[l.gen], mod);
  return acc;
}

/// Inverse of a finite-order matrix over Z/mod as its last nontrivial power.
inline IntMat int_inverse_by_order(const IntMat& m, std::int64_t mod) {
  IntMat prev = int_identity(m.size());
  IntMat cur = m;
  for (int k = 0; k < 100000; ++k) {
    if (cur == int_identity(m.size())) return prev;
    prev = cur;
    cur = int_mul(cur, m, mod);
  }
  throw std::runtime_error("matrix order too large");
}

/// Random invertible matrix over F_p.
inline liftmod::MatFp random_invertible(std::mt19937_64& rng, const liftmod::PrimeCtx& ctx, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> d(0, ctx.p() - 1);
  while (true) {
    liftmod::MatFp m(ctx, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, d(rng));
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
    if (rank_mod_p(rows, ctx.p()) == n) return m;
  }
}

inline std::size_t matrix_order(const liftmod::MatFp& m, std::size_t cap) {
  liftmod::MatFp cur = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (cur.is_identity()) return k;
    cur = cur * m;
  }
  return 0;
}

/// A valid representation by construction: random invertible generator
/// matrices, relators x^ord(x) when ord(x) <= max_len, plus random words of
/// length <= max_len that happen to evaluate to the identity.
inline liftmod::Representation random_rep(std::mt19937_64& rng, std::uint32_t p, std::size_t n, std::size_t k,
                                          std::size_t max_len = 8) {
  using namespace liftmod;
  const PrimeCtx ctx(p);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> gen_d(0, k - 1), len_d(2, max_len);
  std::bernoulli_distribution sign_d(0.5);
  while (true) {
    std::vector<MatFp> mats;
    for (std::size_t i = 0; i < k; ++i) mats.push_back(random_invertible(rng, ctx, n));
    std::vector<Word> rels;
    std::set<Word> seen;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t o = matrix_order(mats[i], max_len);
      if (o != 0) {
        rels.push_back(power_word(i, static_cast<std::int64_t>(o)));
        seen.insert(rels.back());
      }
    }
    std::vector<MatFp> invs;
    for (const auto& m : mats) invs.push_back(mat_inv(m));
    for (int attempt = 0; attempt < 60 && rels.size() < k + 3; ++attempt) {
      Word w;
      const std::size_t len = len_d(rng);
      for (std::size_t t = 0; t < len; ++t) w.push_back({gen_d(rng), sign_d(rng) ? 1 : -1});
      MatFp v = MatFp::identity(ctx, n);
      for (const auto& l : w) v = v * (l.sign > 0 ? mats[l.gen] : invs[l.gen]);
      if (v.is_identity() && seen.insert(w).second) rels.push_back(w);
    }
    if (rels.empty()) continue;
    return {ctx, n, Presentation(names, rels), mats};
  }
}

/// A conjugated unipotent block of the given size for <x | x^p, ...>, with a
/// few extra relators x^(jp). Sizes 2 <= size <= p - 2 give modules that do
/// not lift, which small random representations over F_2 and F_3 never do.
inline liftmod::Representation jordan_control(std::mt19937_64& rng, std::uint32_t p, std::size_t size) {
  using namespace liftmod;
  const PrimeCtx ctx(p);
  MatFp j = MatFp::identity(ctx, size);
  for (std::size_t i = 0; i + 1 < size; ++i) j.set(i, i + 1, 1);
  const auto c = random_invertible(rng, ctx, size);
  std::vector<Word> rels{power_word(0, p)};
  std::uniform_int_distribution<int> extra(0, 2);
  for (int e = extra(rng); e > 0; --e) rels.push_back(power_word(0, static_cast<std::int64_t>(p) * (e + 1)));
  return {ctx, size, Presentation({"x0"}, rels), {conjugate(c, j)}};
}

}  // namespace testsupport
