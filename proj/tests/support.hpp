#ifndef BOHR_TESTS_SUPPORT_HPP
#define BOHR_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "bohr/bohr.hpp"
#include "bohr/fixtures.hpp"

namespace bohr::test {

inline std::string fixture_path(const std::string& name) { return std::string(BOHR_FIXTURE_DIR) + "/" + name; }

/// The fixture posets every frame-level property is checked on.
inline std::vector<std::pair<std::string, PosetPtr>> fixture_posets() {
  return {{"trivial2", fixtures::trivial(2)},
          {"chain2", fixtures::chain2()},
          {"m2_star", fixtures::m2_star()},
          {"chain3", fixtures::chain3()},
          {"m3", fixtures::m3_fixture()}};
}

inline Rational random_rational(std::mt19937_64& rng, int span = 6, int max_den = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline GaussianRational random_gaussian(std::mt19937_64& rng) {
  return {random_rational(rng, 3, 3), random_rational(rng, 3, 3)};
}

inline CMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<GaussianRational> e;
  for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(random_gaussian(rng));
  return CMatrix(rows, cols, std::move(e));
}

/// A density matrix M·M* / tr(M·M*); resampled until nonzero.
inline State random_state(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    const CMatrix m = random_matrix(rng, n, n);
    const CMatrix g = m * conj_transpose(m);
    const Rational t = trace(g).re();
    if (t == 0) continue;
    return State(scale(GaussianRational(Rational(1) / t), g));
  }
}

/// Alternates full-rank random states with states supported on a single atom
/// of a random context, so that probability-1 events actually occur.
inline State random_state_on(std::mt19937_64& rng, const ContextPoset& p) {
  std::uniform_int_distribution<std::size_t> pick(0, 1 << 16);
  if (pick(rng) % 2 == 0) return random_state(rng, p.dim());
  const auto& ctx = p.context(pick(rng) % p.size());
  const CMatrix& e = ctx.atom(pick(rng) % ctx.size());
  return State(scale(GaussianRational(Rational(1) / trace(e).re()), e));
}

/// Rational point on S² by inverse stereographic projection from the north
/// pole of the plane point (a, b).
inline std::array<Rational, 3> random_sphere_point(std::mt19937_64& rng) {
  const Rational a = random_rational(rng, 9, 7);
  const Rational b = random_rational(rng, 9, 7);
  const Rational d = a * a + b * b + 1;
  return {2 * a / d, 2 * b / d, (a * a + b * b - 1) / d};
}

/// Random element of the frame: random per-context masks closed upward along
/// refinements.
inline SigmaOpen random_sigma(std::mt19937_64& rng, const PosetPtr& p) {
  std::vector<std::uint64_t> m(p->size());
  std::bernoulli_distribution coin(0.3);
  for (std::size_t c = 0; c < p->size(); ++c)
    for (std::size_t a = 0; a < p->context(c).size(); ++a)
      if (coin(rng)) m[c] |= std::uint64_t{1} << a;
  for (auto c : p->topological_order())
    for (std::size_t b = 0; b < p->size(); ++b)
      if (b != c && p->leq(b, c)) m[c] |= p->push(b, c, m[b]);
  return {p, std::move(m)};
}

/// Independent frame enumeration: every subset of the (context, atom) pairs,
/// kept when the induced projections are monotone under matrix order.
inline std::vector<std::vector<std::uint64_t>> oracle_frame(const ContextPoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t c = 0; c < p.size(); ++c)
    for (std::size_t a = 0; a < p.context(c).size(); ++a) pairs.emplace_back(c, a);
  // Matrix-order tables, computed once per related pair of contexts.
  std::map<std::tuple<std::size_t, std::size_t, std::uint64_t, std::uint64_t>, bool> below;
  std::vector<std::pair<std::size_t, std::size_t>> related;
  for (std::size_t c = 0; c < p.size(); ++c)
    for (std::size_t d = 0; d < p.size(); ++d) {
      if (c == d || !context_leq(p.context(c), p.context(d))) continue;
      related.emplace_back(c, d);
      for (std::uint64_t mc = 0; mc <= p.context(c).full_mask(); ++mc)
        for (std::uint64_t md = 0; md <= p.context(d).full_mask(); ++md)
          below[{c, d, mc, md}] = proj_leq(p.context(c).projection(mc), p.context(d).projection(md));
    }
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << pairs.size()); ++sub) {
    std::vector<std::uint64_t> m(p.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (sub >> i & 1U) m[pairs[i].first] |= std::uint64_t{1} << pairs[i].second;
    bool ok = true;
    for (const auto& [c, d] : related)
      if (!below.at({c, d, m[c], m[d]})) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

/// Number of partitions of n into exactly k parts, p(n,k) = p(n−1,k−1) + p(n−k,k).
inline std::uint64_t partition_count(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  t[0][0] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t j = 1; j <= m; ++j) t[m][j] = t[m - 1][j - 1] + (m >= j ? t[m - j][j] : 0);
  return k <= n ? t[n][k] : 0;
}

/// Exhaustive valuation oracle over all 2^rays assignments.
inline std::optional<Valuation> exhaustive_valuation(const RaySet& rs) {
  const std::size_t n = rs.rays().size();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool ok = true;
    for (const auto& b : rs.bases()) {
      int ones = 0;
      for (auto r : b) ones += static_cast<int>(x >> r & 1U);
      if (ones != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Valuation v;
    for (std::size_t r = 0; r < n; ++r) v.values.push_back(static_cast<std::uint8_t>(x >> r & 1U));
    return v;
  }
  return std::nullopt;
}

/// Parity obstruction: a valuation picks one ray per basis, so the incidence
/// count of the chosen rays equals the number of bases. If every ray lies in
/// an even number of bases that count is even, so an odd basis count rules
/// out any valuation.
inline bool parity_obstruction(const RaySet& rs) {
  std::vector<std::size_t> incidence(rs.rays().size(), 0);
  for (const auto& b : rs.bases())
    for (auto r : b) ++incidence[r];
  for (auto k : incidence)
    if (k % 2 != 0) return false;
  return rs.bases().size() % 2 == 1;
}

/// Random diagonal observable with rational spectrum in the diagonal context
/// of M_k, values drawn from a small grid so that ties occur.
inline std::vector<Rational> random_spectrum(std::mt19937_64& rng, std::size_t k) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < k; ++i) v.push_back(random_rational(rng, 4, 2));
  return v;
}

inline RationalOpen random_open(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pieces(0, 3);
  std::bernoulli_distribution unbounded(0.15);
  std::vector<RationalOpen::Interval> iv;
  const int n = pieces(rng);
  for (int i = 0; i < n; ++i) {
    Rational a = random_rational(rng, 4, 2);
    Rational b = random_rational(rng, 4, 2);
    if (b < a) std::swap(a, b);
    std::optional<Rational> lo = a;
    std::optional<Rational> hi = b;
    if (unbounded(rng)) lo.reset();
    if (unbounded(rng)) hi.reset();
    iv.push_back({lo, hi});
  }
  return RationalOpen(std::move(iv));
}

inline Context diagonal_context(std::size_t k) {
  std::vector<CMatrix> atoms;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> d(k, 0);
    d[i] = 1;
    atoms.push_back(CMatrix::diag(d));
  }
  return Context::from_atoms(std::move(atoms));
}

/// Index of each frame element, keyed by masks.
inline std::map<std::vector<std::uint64_t>, std::size_t> frame_index(const std::vector<SigmaOpen>& frame) {
  std::map<std::vector<std::uint64_t>, std::size_t> idx;
  for (std::size_t i = 0; i < frame.size(); ++i) idx.emplace(frame[i].masks(), i);
  return idx;
}

}  // namespace bohr::test

#endif  // BOHR_TESTS_SUPPORT_HPP
