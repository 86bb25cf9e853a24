#ifndef BOHR_CONTEXT_HPP
#define BOHR_CONTEXT_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

#include "bohr/matrix.hpp"
#include "bohr/spectral.hpp"
#include "bohr/young.hpp"

namespace bohr {

namespace detail {

/// Canonical atom order: rank ascending, then entry lists in decreasing
/// lexicographic order (so diag(1,0,0) precedes diag(0,1,0)).
inline std::strong_ordering compare_atoms(const CMatrix& a, const CMatrix& b) {
  const auto ra = projection_rank(a), rb = projection_rank(b);
  if (ra != rb) return ra <=> rb;
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    auto c = ea[i] <=> eb[i];
    if (c != 0) return c == std::strong_ordering::less ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

/// A unital commutative *-subalgebra of M_n(C), held as its partition of
/// unity: nonzero, mutually orthogonal projections summing to the identity,
/// in canonical order. Structural equality is subalgebra equality.
class Context {
 public:
  /// Validates the partition-of-unity invariants and canonicalizes order.
  static Context from_atoms(std::vector<CMatrix> atoms) {
    if (atoms.empty()) throw DomainError("context needs at least one atom");
    const std::size_t n = atoms.front().rows();
    CMatrix sum = CMatrix::zero(n);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const auto& e = atoms[i];
      if (e.rows() != n || !is_projection(e)) throw DomainError("context atom is not an n×n projection");
      if (e.is_zero()) throw DomainError("context atom is zero");
      for (std::size_t j = 0; j < i; ++j)
        if (!(e * atoms[j]).is_zero()) throw DomainError("context atoms are not mutually orthogonal");
      sum = sum + e;
    }
    if (sum != CMatrix::identity(n)) throw DomainError("context atoms do not sum to the identity");
    if (n > 64) throw DomainError("ambient dimension above 64 is not supported");
    std::sort(atoms.begin(), atoms.end(),
              [](const CMatrix& a, const CMatrix& b) { return detail::compare_atoms(a, b) < 0; });
    return Context(n, std::move(atoms));
  }

  /// C·1.
  static Context bottom(std::size_t n) { return Context(n, {CMatrix::identity(n)}); }

  std::size_t dim() const { return n_; }
  std::size_t size() const { return atoms_.size(); }
  const std::vector<CMatrix>& atoms() const { return atoms_; }
  const CMatrix& atom(std::size_t i) const { return atoms_[i]; }
  bool is_bottom() const { return atoms_.size() == 1; }

  /// Sum of the atoms selected by `mask` (bit i ↔ atom i).
  CMatrix projection(std::uint64_t mask) const {
    CMatrix p = CMatrix::zero(n_);
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (mask >> i & 1U) p = p + atoms_[i];
    return p;
  }

  std::uint64_t full_mask() const { return atoms_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << atoms_.size()) - 1; }

  friend bool operator==(const Context& a, const Context& b) { return a.atoms_ == b.atoms_; }

  /// Total order used to lay out posets: atom count, then atoms.
  friend std::strong_ordering operator<=>(const Context& a, const Context& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto c = detail::compare_atoms(a.atoms_[i], b.atoms_[i]);
      if (c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  Context(std::size_t n, std::vector<CMatrix> atoms) : n_(n), atoms_(std::move(atoms)) {}

  std::size_t n_;
  std::vector<CMatrix> atoms_;
};

/// For each atom of the smaller context, the indices of the larger
/// context's atoms that sum to it.
using Refinement = std::vector<std::vector<std::size_t>>;

/// The context generated by a family of commuting Hermitian matrices with
/// rational spectra: the nonzero products of their spectral projections.
inline Context context_from_commuting(std::span<const CMatrix> generators, std::size_t n) {
  for (const auto& g : generators) {
    if (g.rows() != n || !g.square()) throw DomainError("generator has the wrong shape");
    if (!hermitian(g)) throw DomainError("generator is not Hermitian");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!commute(generators[i], generators[j])) throw DomainError("generators do not commute");

  std::vector<CMatrix> atoms{CMatrix::identity(n)};
  for (const auto& g : generators) {
    const auto spectrum = spectral_decomposition(g);
    std::vector<CMatrix> next;
    for (const auto& e : atoms)
      for (const auto& s : spectrum) {
        CMatrix piece = e * s.projection;
        if (!piece.is_zero()) next.push_back(std::move(piece));
      }
    atoms = std::move(next);
  }
  return Context::from_atoms(std::move(atoms));
}

inline Context context_from_commuting(std::span<const CMatrix> generators) {
  if (generators.empty()) throw DomainError("ambient dimension unknown for an empty generator list");
  return context_from_commuting(generators, generators.front().rows());
}

/// If c ⊆ d, the refinement map from c's atoms to d's atoms.
inline std::optional<Refinement> refinement(const Context& c, const Context& d) {
  if (c.dim() != d.dim()) throw DomainError("contexts have different ambient dimensions");
  Refinement map;
  for (const auto& e : c.atoms()) {
    auto x = solve_linear_membership(e, d.atoms());
    if (!x) return std::nullopt;
    std::vector<std::size_t> parts;
    for (std::size_t j = 0; j < x->size(); ++j) {
      if ((*x)[j] == GaussianRational(1))
        parts.push_back(j);
      else if (!(*x)[j].is_zero())
        throw DomainError("refinement coefficient is neither 0 nor 1");
    }
    map.push_back(std::move(parts));
  }
  return map;
}

/// Subalgebra inclusion c ⊆ d.
inline bool context_leq(const Context& c, const Context& d) { return refinement(c, d).has_value(); }

/// C ∩ D. Solves Σ x_i e_i ∈ span(d) over c's atoms e_i; atoms i and j merge
/// iff every basis solution has x_i = x_j.
inline Context intersect(const Context& c, const Context& d) {
  if (c.dim() != d.dim()) throw DomainError("contexts have different ambient dimensions");
  std::vector<CMatrix> family;
  for (const auto& e : c.atoms()) family.push_back(e);
  for (const auto& f : d.atoms()) family.push_back(scale(GaussianRational(-1), f));
  const auto solutions = nullspace(family);

  const std::size_t k = c.size();
  std::vector<std::size_t> block(k);
  for (std::size_t i = 0; i < k; ++i) block[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    if (block[i] != i) continue;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (block[j] != j) continue;
      const bool same = std::all_of(solutions.begin(), solutions.end(),
                                    [&](const auto& x) { return x[i] == x[j]; });
      if (same) block[j] = i;
    }
  }
  std::vector<CMatrix> atoms;
  for (std::size_t i = 0; i < k; ++i) {
    if (block[i] != i) continue;
    CMatrix sum = CMatrix::zero(c.dim());
    for (std::size_t j = i; j < k; ++j)
      if (block[j] == i) sum = sum + c.atom(j);
    atoms.push_back(std::move(sum));
  }
  return Context::from_atoms(std::move(atoms));
}

/// Ranks of the atoms, non-increasing.
inline PartitionType partition_type(const Context& c) {
  PartitionType t;
  for (const auto& e : c.atoms()) t.parts.push_back(projection_rank(e));
  std::sort(t.parts.rbegin(), t.parts.rend());
  return t;
}

/// The rank-1 projection (1/2)[[1+x, y+iz], [y−iz, 1−x]] for a rational
/// point on the unit sphere.
inline CMatrix p_sphere(const Rational& x, const Rational& y, const Rational& z) {
  if (x * x + y * y + z * z != 1) throw DomainError("p_sphere: point is not on the unit sphere");
  const Rational h(1, 2);
  return CMatrix{{GaussianRational(h * (1 + x)), GaussianRational(h * y, h * z)},
                 {GaussianRational(h * y, -h * z), GaussianRational(h * (1 - x))}};
}

/// The maximal M_2 context {p, 1 − p} through the sphere point (x, y, z).
inline Context sphere_context(const Rational& x, const Rational& y, const Rational& z) {
  const CMatrix p = p_sphere(x, y, z);
  return Context::from_atoms({p, CMatrix::identity(2) - p});
}

}  // namespace bohr

#endif  // BOHR_CONTEXT_HPP
