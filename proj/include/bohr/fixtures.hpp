#ifndef BOHR_FIXTURES_HPP
#define BOHR_FIXTURES_HPP

#include <array>
#include <iterator>
#include <memory>
#include <numeric>
#include <set>
#include <vector>

#include "bohr/kochen_specker.hpp"
#include "bohr/sigma.hpp"

// Small posets and ray sets used throughout the test suites and shipped as
// JSON under fixtures/.
namespace bohr::fixtures {

/// Conjugate every atom of c by the unitary u.
inline Context conjugate(const Context& c, const CMatrix& u) {
  std::vector<CMatrix> atoms;
  const CMatrix ustar = conj_transpose(u);
  for (const auto& e : c.atoms()) atoms.push_back(u * e * ustar);
  return Context::from_atoms(std::move(atoms));
}

/// Real rotation by (cos, sin) = (c, s) in the coordinate plane (i, j) of R^3.
inline CMatrix rotation3(std::size_t i, std::size_t j, const Rational& c, const Rational& s) {
  std::vector<GaussianRational> e(9);
  for (std::size_t k = 0; k < 3; ++k) e[k * 3 + k] = 1;
  e[i * 3 + i] = c;
  e[j * 3 + j] = c;
  e[i * 3 + j] = -s;
  e[j * 3 + i] = s;
  return CMatrix(3, 3, std::move(e));
}

/// D_3 = {diag(a,b,c)}.
inline Context diagonal3() { return Context::from_atoms({CMatrix::diag({1, 0, 0}), CMatrix::diag({0, 1, 0}), CMatrix::diag({0, 0, 1})}); }

/// D_2 = {diag(a,a,b)}.
inline Context block3() { return Context::from_atoms({CMatrix::diag({1, 1, 0}), CMatrix::diag({0, 0, 1})}); }

/// C·1 ⊂ D_2 ⊂ D_3 in M_3.
inline PosetPtr chain3() {
  const std::vector<Context> seeds{block3(), diagonal3()};
  return std::make_shared<const ContextPoset>(build_poset(seeds, 3));
}

/// C·1 ⊂ {p, 1−p} in M_2 with p = diag(1,0).
inline PosetPtr chain2() {
  const std::vector<Context> seeds{sphere_context(1, 0, 0)};
  return std::make_shared<const ContextPoset>(build_poset(seeds, 2));
}

/// C·1 below three maximal M_2 contexts (the x, y and z axes).
inline PosetPtr m2_star() {
  const std::vector<Context> seeds{sphere_context(1, 0, 0), sphere_context(0, 1, 0), sphere_context(0, 0, 1)};
  return std::make_shared<const ContextPoset>(build_poset(seeds, 2));
}

/// The single-element poset {C·1} over M_n.
inline PosetPtr trivial(std::size_t n) { return std::make_shared<const ContextPoset>(build_poset({}, n)); }

/// Seeds of the M_3 fixture: D_2 ⊂ D_3 and two conjugates of the pair by
/// rational rotations that move every coordinate axis off every other one, so
/// intersection closure adds nothing but C·1.
inline std::vector<Context> m3_seeds() {
  const CMatrix u = rotation3(0, 1, Rational(3, 5), Rational(4, 5)) * rotation3(1, 2, Rational(5, 13), Rational(12, 13));
  const CMatrix w = rotation3(0, 2, Rational(8, 17), Rational(15, 17)) * rotation3(0, 1, Rational(5, 13), Rational(12, 13));
  return {block3(), diagonal3(), conjugate(block3(), u), conjugate(diagonal3(), u), conjugate(block3(), w),
          conjugate(diagonal3(), w)};
}

inline PosetPtr m3_fixture() { return std::make_shared<const ContextPoset>(build_poset(m3_seeds(), 3)); }

/// The excluded-middle witness on any M_3 poset: 0 at C·1, the rank-2 atom
/// at D_2-type contexts, 1 at D_3-type contexts.
inline SigmaOpen m3_example(const PosetPtr& poset) {
  std::vector<std::uint64_t> masks(poset->size(), 0);
  for (std::size_t c = 0; c < poset->size(); ++c) {
    const auto& ctx = poset->context(c);
    if (ctx.size() == 3) masks[c] = ctx.full_mask();
    if (ctx.size() == 2)
      for (std::size_t a = 0; a < 2; ++a)
        if (projection_rank(ctx.atom(a)) == 2) masks[c] = std::uint64_t{1} << a;
  }
  return {poset, std::move(masks)};
}

/// The 18 rays and 9 bases in C^4 with entries in {0, ±1} where every ray
/// lies in exactly two bases (Cabello, Estebaranz, García-Alcaine 1996).
inline RaySet cabello18() {
  const std::vector<std::vector<int>> raw{
      {0, 0, 0, 1}, {0, 0, 1, 0}, {1, 1, 0, 0},  {1, -1, 0, 0}, {0, 1, 0, 0},   {1, 0, 1, 0},
      {1, 0, -1, 0}, {1, -1, 1, -1}, {1, -1, -1, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}, {0, 1, 0, -1},
      {1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, -1, 0}, {1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1}};
  std::vector<Ray> rays;
  for (const auto& r : raw) {
    Ray ray;
    for (int x : r) ray.emplace_back(x);
    rays.push_back(std::move(ray));
  }
  std::vector<std::vector<std::size_t>> bases{{0, 1, 2, 3},   {0, 4, 5, 6},    {7, 8, 2, 9},
                                              {7, 10, 6, 11}, {1, 4, 12, 13},  {8, 10, 13, 14},
                                              {15, 16, 3, 9}, {15, 17, 5, 11}, {16, 17, 12, 14}};
  return RaySet(4, std::move(rays), std::move(bases));
}

/// One orthonormal basis of C^2.
inline RaySet qubit_single() { return RaySet(2, {{1, 0}, {0, 1}}, {{0, 1}}); }

/// The x, y and z eigenbases of a qubit; no ray is shared.
inline RaySet qubit_axes() {
  const GaussianRational i(0, 1);
  return RaySet(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, i}, {1, -i}}, {{0, 1}, {2, 3}, {4, 5}});
}

/// Two Pythagorean bases of R^2 ⊂ C^2.
inline RaySet qubit_pythagorean() { return RaySet(2, {{3, 4}, {4, -3}, {5, 12}, {12, -5}}, {{0, 1}, {2, 3}}); }

/// Rays of R^3 with coordinates in {0, ±1, ±2}, closed once under completing
/// orthogonal pairs to triads, with every orthogonal triad as a basis. This
/// contains the Conway–Kochen 31-ray configuration together with the third
/// vectors its orthogonalities need.
inline RaySet rational_cube3() {
  using V = std::array<long long, 3>;
  auto canon = [](V v) {
    long long g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    for (auto& x : v) x /= g;
    for (auto x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    return v;
  };
  auto dot = [](const V& a, const V& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  std::set<V> base;
  for (long long x = -2; x <= 2; ++x)
    for (long long y = -2; y <= 2; ++y)
      for (long long z = -2; z <= 2; ++z)
        if (x || y || z) base.insert(canon({x, y, z}));
  std::set<V> all = base;
  for (auto i = base.begin(); i != base.end(); ++i)
    for (auto j = std::next(i); j != base.end(); ++j)
      if (dot(*i, *j) == 0) {
        const V& a = *i;
        const V& b = *j;
        all.insert(canon({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}));
      }
  const std::vector<V> list(all.begin(), all.end());
  std::vector<std::vector<std::size_t>> bases;
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = a + 1; b < list.size(); ++b) {
      if (dot(list[a], list[b]) != 0) continue;
      for (std::size_t c = b + 1; c < list.size(); ++c)
        if (dot(list[a], list[c]) == 0 && dot(list[b], list[c]) == 0) bases.push_back({a, b, c});
    }
  std::vector<Ray> rays;
  for (const auto& v : list) rays.push_back({GaussianRational(v[0]), GaussianRational(v[1]), GaussianRational(v[2])});
  return RaySet(3, std::move(rays), std::move(bases));
}

}  // namespace bohr::fixtures

#endif  // BOHR_FIXTURES_HPP
