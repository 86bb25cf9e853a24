#ifndef BOHR_STATES_HPP
#define BOHR_STATES_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "bohr/sigma.hpp"

namespace bohr {

/// Exact positive-semidefiniteness test for a Hermitian matrix by symmetric
/// Gaussian elimination: a zero pivot forces a zero row, a negative pivot
/// refutes.
inline bool is_positive_semidefinite(const CMatrix& a) {
  if (!hermitian(a)) return false;
  const std::size_t n = a.rows();
  std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (m[i][i].re() < 0) return false;
      if (m[i][i].re() > 0 && piv == n) piv = i;
    }
    if (piv == n) {
      // All remaining diagonal entries vanish; PSD forces the block to vanish.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && !m[i][j].is_zero()) return false;
      return true;
    }
    done[piv] = true;
    const GaussianRational d = m[piv][piv];
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m[i][piv].is_zero()) continue;
      const GaussianRational f = m[i][piv] / d;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) m[i][j] -= f * m[piv][j];
    }
  }
  return true;
}

/// A density matrix: Hermitian, trace one, positive semidefinite.
class State {
 public:
  explicit State(CMatrix rho) : rho_(std::move(rho)) {
    if (!hermitian(rho_)) throw DomainError("state: density matrix is not Hermitian");
    if (trace(rho_) != GaussianRational(1)) throw DomainError("state: trace is not 1");
    if (!is_positive_semidefinite(rho_)) throw DomainError("state: density matrix is not positive semidefinite");
  }

  /// |Ψ⟩⟨Ψ| / ⟨Ψ|Ψ⟩.
  static State pure(std::span<const GaussianRational> psi) { return State(CMatrix::ray_projection(psi)); }

  const CMatrix& rho() const { return rho_; }
  std::size_t dim() const { return rho_.rows(); }

 private:
  CMatrix rho_;
};

/// ψ(p) = trace(ρ·p).
inline Rational state_eval(const State& psi, const CMatrix& p) {
  if (p.rows() != psi.dim() || !p.square()) throw DomainError("state_eval: dimension mismatch");
  if (!is_projection(p)) throw DomainError("state_eval: argument is not a projection");
  const auto t = trace(psi.rho() * p);
  return t.re();
}

/// μ_C(S): ↑C → [0,1], D ↦ ψ(S(D)). Monotone by positivity of ψ.
struct MonotoneMeasure {
  std::map<std::size_t, Rational> values;
};

inline MonotoneMeasure measure_component(const State& psi, const SigmaOpen& s, std::size_t c) {
  const auto& p = *s.poset();
  if (c >= p.size()) throw DomainError("measure_component: context not in poset");
  MonotoneMeasure mu;
  for (auto d : p.up(c)) mu.values[d] = state_eval(psi, s.value(d));
  return mu;
}

inline bool monotone(const MonotoneMeasure& mu, const ContextPoset& p) {
  for (const auto& [d, vd] : mu.values) {
    if (vd < 0 || vd > 1) return false;
    for (const auto& [e, ve] : mu.values)
      if (p.leq(d, e) && vd > ve) return false;
  }
  return true;
}

/// A subset of a poset's context indices, closed upward.
class UpperSet {
 public:
  UpperSet(const ContextPoset& p, std::vector<bool> members) : members_(std::move(members)) {
    if (members_.size() != p.size()) throw DomainError("upper set size does not match the poset");
    for (std::size_t c = 0; c < p.size(); ++c)
      if (members_[c])
        for (auto d : p.up(c))
          if (!members_[d]) throw DomainError("set is not upward closed");
  }

  bool contains(std::size_t c) const { return members_.at(c); }
  const std::vector<bool>& members() const { return members_; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < members_.size(); ++c)
      if (members_[c]) out.push_back(c);
    return out;
  }

  friend bool operator==(const UpperSet&, const UpperSet&) = default;

 private:
  std::vector<bool> members_;
};

/// ⟨ψ, S⟩ = { C : ψ(S(C)) = 1 }, with exact equality.
inline UpperSet pairing(const State& psi, const SigmaOpen& s) {
  const auto& p = *s.poset();
  if (psi.dim() != p.dim()) throw DomainError("pairing: dimension mismatch");
  std::vector<bool> members(p.size());
  for (std::size_t c = 0; c < p.size(); ++c) members[c] = state_eval(psi, s.value(c)) == 1;
  return UpperSet(p, std::move(members));
}

}  // namespace bohr

#endif  // BOHR_STATES_HPP
