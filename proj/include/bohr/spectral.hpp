#ifndef BOHR_SPECTRAL_HPP
#define BOHR_SPECTRAL_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "bohr/matrix.hpp"

namespace bohr {

/// One eigenvalue together with its spectral projection.
struct SpectralComponent {
  Rational eigenvalue;
  CMatrix projection;
};

namespace detail {

/// Coefficients c_0..c_d (ascending, c_d = 1) of the minimal polynomial of a
/// Hermitian matrix. The coefficients are real because the spectrum is.
inline std::vector<Rational> minimal_polynomial(const CMatrix& a) {
  std::vector<CMatrix> powers{CMatrix::identity(a.rows())};
  for (;;) {
    CMatrix next = powers.back() * a;
    if (auto x = solve_linear_membership(next, powers)) {
      std::vector<Rational> coeffs;
      for (const auto& c : *x) {
        if (!c.is_real()) throw DomainError("minimal polynomial has non-real coefficients");
        coeffs.push_back(-c.re());
      }
      coeffs.push_back(1);
      return coeffs;
    }
    powers.push_back(std::move(next));
  }
}

inline std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Synthetic division by (x − r); r must be a root.
inline std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& r) {
  std::vector<Rational> out(coeffs.size() - 1);
  Rational carry = 0;
  for (std::size_t i = coeffs.size(); i-- > 1;) {
    carry = carry * r + coeffs[i];
    out[i - 1] = carry;
  }
  return out;
}

/// All rational roots of a squarefree polynomial, ascending. Throws when the
/// polynomial does not split into linear factors over the rationals.
inline std::vector<Rational> split_over_rationals(std::vector<Rational> coeffs) {
  std::vector<Rational> roots;
  while (coeffs.size() > 1 && coeffs.front() == 0) {
    roots.push_back(0);
    coeffs.erase(coeffs.begin());
  }
  if (coeffs.size() > 1) {
    Integer lcm = 1;
    for (const auto& c : coeffs) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    const Integer constant = numerator(coeffs.front() * lcm);
    const Integer lead = numerator(coeffs.back() * lcm);
    const auto ps = positive_divisors(constant);
    const auto qs = positive_divisors(lead);
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int sign : {1, -1}) {
          if (coeffs.size() == 1) break;
          const Rational r(Integer(sign) * p, q);
          if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
          if (evaluate(coeffs, r) == 0) {
            roots.push_back(r);
            coeffs = deflate(coeffs, r);
          }
        }
  }
  if (coeffs.size() != 1) throw DomainError("irrational spectrum: minimal polynomial does not split over the rationals");
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace detail

/// Exact spectral decomposition of a Hermitian matrix with rational
/// eigenvalues, ascending by eigenvalue. Projections are the Lagrange
/// interpolation polynomials Π_{j≠i} (a − λ_j)/(λ_i − λ_j).
inline std::vector<SpectralComponent> spectral_decomposition(const CMatrix& a) {
  if (!hermitian(a)) throw DomainError("spectral decomposition requires a Hermitian matrix");
  const auto roots = detail::split_over_rationals(detail::minimal_polynomial(a));
  const CMatrix one = CMatrix::identity(a.rows());
  std::vector<SpectralComponent> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CMatrix p = one;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      p = p * scale(GaussianRational(Rational(1) / (roots[i] - roots[j])), a - scale(roots[j], one));
    }
    out.push_back({roots[i], std::move(p)});
  }
  return out;
}

}  // namespace bohr

#endif  // BOHR_SPECTRAL_HPP
