#ifndef BOHR_KOCHEN_SPECKER_HPP
#define BOHR_KOCHEN_SPECKER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bohr/sigma.hpp"

namespace bohr {

using Ray = std::vector<GaussianRational>;

/// ⟨u|v⟩ = Σ conj(u_i) v_i.
inline GaussianRational inner(const Ray& u, const Ray& v) {
  GaussianRational s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i].conj() * v[i];
  return s;
}

inline bool proportional(const Ray& u, const Ray& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

/// Finite family of rays in C^n together with orthogonal bases drawn from it.
class RaySet {
 public:
  RaySet(std::size_t dim, std::vector<Ray> rays, std::vector<std::vector<std::size_t>> bases)
      : dim_(dim), rays_(std::move(rays)), bases_(std::move(bases)) {
    if (dim_ == 0) throw DomainError("ray set dimension must be positive");
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      const auto& r = rays_[i];
      if (r.size() != dim_) throw DomainError("ray " + std::to_string(i) + " has the wrong length");
      bool nonzero = false;
      for (const auto& z : r) nonzero = nonzero || !z.is_zero();
      if (!nonzero) throw DomainError("ray " + std::to_string(i) + " is zero");
      for (std::size_t j = 0; j < i; ++j)
        if (proportional(r, rays_[j]))
          throw DomainError("rays " + std::to_string(j) + " and " + std::to_string(i) + " are proportional");
    }
    for (std::size_t b = 0; b < bases_.size(); ++b) {
      const auto& basis = bases_[b];
      if (basis.size() != dim_) throw DomainError("basis " + std::to_string(b) + " does not have dim rays");
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] >= rays_.size()) throw DomainError("basis " + std::to_string(b) + " references a missing ray");
        for (std::size_t j = 0; j < i; ++j)
          if (basis[i] == basis[j] || !inner(rays_[basis[i]], rays_[basis[j]]).is_zero())
            throw DomainError("basis " + std::to_string(b) + " is not orthogonal");
      }
    }
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& bases() const { return bases_; }

  /// The rank-1 projection onto ray i.
  CMatrix projector(std::size_t i) const { return CMatrix::ray_projection(rays_.at(i)); }

  /// Basis b as a maximal context.
  Context context(std::size_t b) const {
    std::vector<CMatrix> atoms;
    for (auto r : bases_.at(b)) atoms.push_back(projector(r));
    return Context::from_atoms(std::move(atoms));
  }

 private:
  std::size_t dim_;
  std::vector<Ray> rays_;
  std::vector<std::vector<std::size_t>> bases_;
};

/// A 0/1 value per ray.
struct Valuation {
  std::vector<std::uint8_t> values;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

struct SearchResult {
  std::optional<Valuation> valuation;
  std::uint64_t nodes = 0;
};

/// Backtracking search for a valuation with exactly one ray valued 1 in every
/// basis. Branches on the lowest unassigned ray, trying 1 before 0, with unit
/// propagation; the first solution found is therefore the least one in that
/// order.
inline SearchResult valuation_search(const RaySet& rs) {
  const std::size_t n = rs.rays().size();
  const auto& bases = rs.bases();
  std::vector<std::vector<std::size_t>> bases_of(n);
  for (std::size_t b = 0; b < bases.size(); ++b)
    for (auto r : bases[b]) bases_of[r].push_back(b);

  constexpr std::int8_t unset = -1;
  std::vector<std::int8_t> value(n, unset);
  std::vector<std::size_t> trail;
  SearchResult result;

  // Assigns and propagates; returns false on conflict. Every assignment is
  // pushed on the trail so it can be undone.
  auto propagate = [&](std::size_t ray, std::int8_t v) {
    std::vector<std::pair<std::size_t, std::int8_t>> queue{{ray, v}};
    while (!queue.empty()) {
      auto [r, val] = queue.back();
      queue.pop_back();
      if (value[r] != unset) {
        if (value[r] != val) return false;
        continue;
      }
      value[r] = val;
      trail.push_back(r);
      for (auto b : bases_of[r]) {
        std::size_t ones = 0, open = 0, last_open = 0;
        for (auto q : bases[b]) {
          if (value[q] == 1) ++ones;
          if (value[q] == unset) {
            ++open;
            last_open = q;
          }
        }
        if (ones > 1) return false;
        if (ones == 1) {
          for (auto q : bases[b])
            if (value[q] == unset) queue.push_back({q, 0});
        } else if (open == 0) {
          return false;
        } else if (open == 1) {
          queue.push_back({last_open, 1});
        }
      }
    }
    return true;
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      value[trail.back()] = unset;
      trail.pop_back();
    }
  };

  std::function<bool()> rec = [&]() {
    ++result.nodes;
    std::size_t r = 0;
    while (r < n && value[r] != unset) ++r;
    if (r == n) return true;
    for (std::int8_t v : {std::int8_t{1}, std::int8_t{0}}) {
      const std::size_t mark = trail.size();
      if (propagate(r, v) && rec()) return true;
      undo_to(mark);
    }
    return false;
  };

  if (rec()) {
    Valuation val;
    for (auto v : value) val.values.push_back(static_cast<std::uint8_t>(v));
    result.valuation = std::move(val);
  }
  return result;
}

struct NoncontextualityReport {
  bool ok = true;
  std::optional<std::size_t> violated_basis;
};

/// One value per ray makes the assignment basis-independent by construction;
/// what remains to check is the exactly-one-per-basis rule.
inline NoncontextualityReport noncontextuality_check(const Valuation& v, const RaySet& rs) {
  if (v.values.size() != rs.rays().size()) throw DomainError("valuation size does not match the ray set");
  for (std::size_t b = 0; b < rs.bases().size(); ++b) {
    std::size_t ones = 0;
    for (auto r : rs.bases()[b]) {
      if (v.values[r] > 1) return {false, b};
      ones += v.values[r];
    }
    if (ones != 1) return {false, b};
  }
  return {};
}

/// t ↦ slope·t + offset.
struct AffineMap {
  Rational slope = 1;
  Rational offset = 0;
  Rational operator()(const Rational& t) const { return slope * t + offset; }
};

/// Checks V(f(a)) = f(V(a)) for an observable a built in the context of basis
/// `basis`. V(a) is the eigenvalue of a on the ray valued 1; V(f(a)) is read
/// independently from the matrix f(a) = slope·a + offset·1.
inline bool func_check(const Valuation& v, const RaySet& rs, std::size_t basis, const CMatrix& a,
                       const AffineMap& f) {
  const auto& rays = rs.bases().at(basis);
  std::optional<std::size_t> chosen;
  for (auto r : rays)
    if (v.values.at(r) == 1) chosen = r;
  if (!chosen) throw DomainError("func_check: no ray of the context is valued 1");
  const Context ctx = rs.context(basis);
  const CMatrix e = rs.projector(*chosen);
  auto value_of = [&](const CMatrix& obs) {
    if (!hermitian(obs) || !solve_linear_membership(obs, ctx.atoms()))
      throw DomainError("func_check: observable does not lie in the context");
    return (trace(obs * e) / trace(e)).re();
  };
  const Rational va = value_of(a);
  const CMatrix fa = scale(f.slope, a) + scale(f.offset, CMatrix::identity(rs.dim()));
  return value_of(fa) == f(va);
}

/// A prime element P ≠ ⊤ of a finite frame: U ∧ V ≤ P ⇒ U ≤ P or V ≤ P.
class FramePoint {
 public:
  FramePoint(SigmaOpen element, std::span<const SigmaOpen> frame) : element_(std::move(element)) {
    if (!is_point(element_, frame)) throw DomainError("element is not a point of the frame");
  }

  const SigmaOpen& element() const { return element_; }

  static bool is_point(const SigmaOpen& p, std::span<const SigmaOpen> frame) {
    if (p == top(p.poset())) return false;
    std::vector<bool> below(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) below[i] = leq(frame[i], p);
    for (std::size_t i = 0; i < frame.size(); ++i) {
      if (below[i]) continue;
      for (std::size_t j = i; j < frame.size(); ++j)
        if (!below[j] && leq(meet(frame[i], frame[j]), p)) return false;
    }
    return true;
  }

 private:
  SigmaOpen element_;
};

/// All points of the finite frame by brute force.
inline std::vector<FramePoint> find_points(const PosetPtr& poset, std::size_t cap = kDefaultFrameCap) {
  const auto frame = enumerate_frame(poset, cap);
  std::vector<FramePoint> out;
  for (const auto& p : frame)
    if (FramePoint::is_point(p, frame)) out.emplace_back(p, frame);
  return out;
}

/// The frame map p*: O(Σ) → {∅, *} of a point, tabulated over `frame`:
/// star[i] is true iff frame[i] ≰ P.
struct PointMap {
  std::vector<bool> star;
};

inline PointMap pt_of_point(const FramePoint& point, std::span<const SigmaOpen> frame) {
  PointMap m;
  for (const auto& s : frame) m.star.push_back(!leq(s, point.element()));
  return m;
}

/// ⋁{S : p*(S) = ∅}; equals P for a genuine point.
inline SigmaOpen recover_point(const PointMap& m, std::span<const SigmaOpen> frame) {
  if (frame.empty()) throw DomainError("recover_point: empty frame");
  SigmaOpen acc = bot(frame.front().poset());
  for (std::size_t i = 0; i < frame.size(); ++i)
    if (!m.star[i]) acc = join(acc, frame[i]);
  return acc;
}

/// Whether the tabulated map preserves ⊤, binary meets, ⊥ and binary joins
/// (hence all joins, the frame being finite).
inline bool is_frame_map(const PointMap& m, std::span<const SigmaOpen> frame) {
  if (frame.empty()) return false;
  std::map<std::vector<std::uint64_t>, std::size_t> lookup;
  for (std::size_t i = 0; i < frame.size(); ++i) lookup.emplace(frame[i].masks(), i);
  auto index_of = [&](const SigmaOpen& s) -> std::size_t {
    auto it = lookup.find(s.masks());
    if (it == lookup.end()) throw DomainError("is_frame_map: element outside the frame");
    return it->second;
  };
  const auto& poset = frame.front().poset();
  if (!m.star[index_of(top(poset))] || m.star[index_of(bot(poset))]) return false;
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = i; j < frame.size(); ++j) {
      if (m.star[index_of(meet(frame[i], frame[j]))] != (m.star[i] && m.star[j])) return false;
      if (m.star[index_of(join(frame[i], frame[j]))] != (m.star[i] || m.star[j])) return false;
    }
  return true;
}

}  // namespace bohr

#endif  // BOHR_KOCHEN_SPECKER_HPP
