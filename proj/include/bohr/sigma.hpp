#ifndef BOHR_SIGMA_HPP
#define BOHR_SIGMA_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "bohr/poset.hpp"

namespace bohr {

using PosetPtr = std::shared_ptr<const ContextPoset>;

/// An element S of the frame O(Σ) over a finite context poset: per context C
/// an atom mask selecting S(C) ∈ P(C), monotone along inclusions.
///
/// All Heyting operations quantify over the contexts of the given poset only
/// ("for all D ⊇ C" means for all D ⊇ C in the poset).
class SigmaOpen {
 public:
  /// Validates range and monotonicity.
  SigmaOpen(PosetPtr poset, std::vector<std::uint64_t> masks) : poset_(std::move(poset)), masks_(std::move(masks)) {
    if (!poset_) throw DomainError("SigmaOpen needs a poset");
    if (masks_.size() != poset_->size()) throw DomainError("SigmaOpen mask count does not match the poset");
    if (!in_range()) throw DomainError("SigmaOpen selects atoms outside its context");
    if (!monotone()) throw DomainError("SigmaOpen is not monotone along inclusions");
  }

  const PosetPtr& poset() const { return poset_; }
  const std::vector<std::uint64_t>& masks() const { return masks_; }
  std::uint64_t mask(std::size_t c) const { return masks_.at(c); }

  /// S(C) as a matrix.
  CMatrix value(std::size_t c) const { return poset_->context(c).projection(masks_.at(c)); }

  bool in_range() const {
    for (std::size_t c = 0; c < masks_.size(); ++c)
      if (masks_[c] & ~poset_->context(c).full_mask()) return false;
    return true;
  }

  bool monotone() const {
    for (std::size_t c = 0; c < masks_.size(); ++c)
      for (auto d : poset_->up(c))
        if ((poset_->push(c, d, masks_[c]) & ~masks_[d]) != 0) return false;
    return true;
  }

  friend bool operator==(const SigmaOpen& a, const SigmaOpen& b) {
    return a.poset_ == b.poset_ && a.masks_ == b.masks_;
  }

 private:
  PosetPtr poset_;
  std::vector<std::uint64_t> masks_;
};

namespace detail {

inline void require_same_poset(const SigmaOpen& s, const SigmaOpen& t) {
  if (s.poset() != t.poset()) throw DomainError("SigmaOpens live on different posets");
}

/// The mask of the largest element of P(C) lying under X(D) for every D ⊇ C:
/// atom e of C survives iff every atom of every D composing e is in X(D).
template <class PerContext>
std::uint64_t constrained_meet(const ContextPoset& p, std::size_t c, PerContext&& x) {
  std::uint64_t keep = p.context(c).full_mask();
  for (auto d : p.up(c)) {
    const std::uint64_t xd = x(d);
    const auto& coarse = p.coarsening(c, d);
    for (std::size_t f = 0; f < coarse.size(); ++f)
      if (!(xd >> f & 1U)) keep &= ~(std::uint64_t{1} << coarse[f]);
  }
  return keep;
}

/// The mask of the smallest element of P(D) above S(E) for every E ⊇ D.
inline std::uint64_t constrained_join(const SigmaOpen& s, std::size_t d) {
  const auto& p = *s.poset();
  std::uint64_t out = 0;
  for (auto e : p.up(d)) {
    const std::uint64_t se = s.mask(e);
    const auto& coarse = p.coarsening(d, e);
    for (std::size_t g = 0; g < coarse.size(); ++g)
      if (se >> g & 1U) out |= std::uint64_t{1} << coarse[g];
  }
  return out;
}

}  // namespace detail

/// ⊤(C) = 1 for all C.
inline SigmaOpen top(const PosetPtr& poset) {
  std::vector<std::uint64_t> m;
  for (const auto& c : poset->contexts()) m.push_back(c.full_mask());
  return {poset, std::move(m)};
}

/// ⊥(C) = 0 for all C.
inline SigmaOpen bot(const PosetPtr& poset) { return {poset, std::vector<std::uint64_t>(poset->size(), 0)}; }

/// Pointwise S(C) ≤ T(C).
inline bool leq(const SigmaOpen& s, const SigmaOpen& t) {
  detail::require_same_poset(s, t);
  for (std::size_t c = 0; c < s.masks().size(); ++c)
    if (s.mask(c) & ~t.mask(c)) return false;
  return true;
}

inline SigmaOpen meet(const SigmaOpen& s, const SigmaOpen& t) {
  detail::require_same_poset(s, t);
  std::vector<std::uint64_t> m(s.masks().size());
  for (std::size_t c = 0; c < m.size(); ++c) m[c] = s.mask(c) & t.mask(c);
  return {s.poset(), std::move(m)};
}

inline SigmaOpen join(const SigmaOpen& s, const SigmaOpen& t) {
  detail::require_same_poset(s, t);
  std::vector<std::uint64_t> m(s.masks().size());
  for (std::size_t c = 0; c < m.size(); ++c) m[c] = s.mask(c) | t.mask(c);
  return {s.poset(), std::move(m)};
}

/// (S → T)(C): the largest p ∈ P(C) with p ≤ S(D)^⊥ ∨ T(D) for every D ⊇ C.
inline SigmaOpen heyting_implies(const SigmaOpen& s, const SigmaOpen& t) {
  detail::require_same_poset(s, t);
  const auto& p = *s.poset();
  std::vector<std::uint64_t> m(p.size());
  for (std::size_t c = 0; c < p.size(); ++c)
    m[c] = detail::constrained_meet(p, c, [&](std::size_t d) {
      return (~s.mask(d) | t.mask(d)) & p.context(d).full_mask();
    });
  return {s.poset(), std::move(m)};
}

/// (¬S)(C): the largest p ∈ P(C) with p ≤ S(D)^⊥ for every D ⊇ C.
inline SigmaOpen heyting_neg(const SigmaOpen& s) {
  const auto& p = *s.poset();
  std::vector<std::uint64_t> m(p.size());
  for (std::size_t c = 0; c < p.size(); ++c)
    m[c] = detail::constrained_meet(p, c, [&](std::size_t d) { return ~s.mask(d) & p.context(d).full_mask(); });
  return {s.poset(), std::move(m)};
}

/// (¬¬S)(C) = ⋀^{P(C)}_{D ⊇ C} ⋁^{P(D)}_{E ⊇ D} S(E), evaluated directly
/// rather than as two negations.
inline SigmaOpen double_neg(const SigmaOpen& s) {
  const auto& p = *s.poset();
  std::vector<std::uint64_t> upper(p.size());
  for (std::size_t d = 0; d < p.size(); ++d) upper[d] = detail::constrained_join(s, d);
  std::vector<std::uint64_t> m(p.size());
  for (std::size_t c = 0; c < p.size(); ++c)
    m[c] = detail::constrained_meet(p, c, [&](std::size_t d) { return upper[d]; });
  return {s.poset(), std::move(m)};
}

/// χ_{↑D}: identity on contexts containing D, zero elsewhere.
inline SigmaOpen chi_up(std::size_t d, const PosetPtr& poset) {
  if (d >= poset->size()) throw DomainError("chi_up: context not in poset");
  std::vector<std::uint64_t> m(poset->size(), 0);
  for (auto e : poset->up(d)) m[e] = poset->context(e).full_mask();
  return {poset, std::move(m)};
}

inline SigmaOpen chi_up(const Context& d, const PosetPtr& poset) {
  auto idx = poset->index_of(d);
  if (!idx) throw DomainError("chi_up: context not in poset");
  return chi_up(*idx, poset);
}

/// S_p(C) = p if p ∈ C, 0 otherwise.
inline SigmaOpen s_p(const CMatrix& proj, const PosetPtr& poset) {
  if (!is_projection(proj) || proj.rows() != poset->dim()) throw DomainError("s_p: input is not a projection of the poset's dimension");
  std::vector<std::uint64_t> m(poset->size(), 0);
  for (std::size_t c = 0; c < poset->size(); ++c) {
    const auto& ctx = poset->context(c);
    auto x = solve_linear_membership(proj, ctx.atoms());
    if (!x) continue;
    for (std::size_t a = 0; a < x->size(); ++a)
      if ((*x)[a] == GaussianRational(1)) m[c] |= std::uint64_t{1} << a;
  }
  return {poset, std::move(m)};
}

/// Default cap for brute-force frame enumeration.
inline constexpr std::size_t kDefaultFrameCap = 1'000'000;

/// Every element of the finite frame O(Σ), in a deterministic order
/// (contexts visited bottom-up, masks in increasing order). Throws when more
/// than `cap` elements exist.
inline std::vector<SigmaOpen> enumerate_frame(const PosetPtr& poset, std::size_t cap = kDefaultFrameCap) {
  const auto& p = *poset;
  const auto order = p.topological_order();
  std::vector<std::uint64_t> masks(p.size(), 0);
  std::vector<SigmaOpen> out;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      if (out.size() >= cap) throw DomainError("enumerate_frame: cap of " + std::to_string(cap) + " exceeded");
      out.emplace_back(poset, masks);
      return;
    }
    const std::size_t c = order[k];
    std::uint64_t forced = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t b = order[j];
      if (b != c && p.leq(b, c)) forced |= p.push(b, c, masks[b]);
    }
    const std::uint64_t full = p.context(c).full_mask();
    const std::uint64_t free = full & ~forced;
    // Walk all subsets of `free` in increasing order.
    std::uint64_t sub = 0;
    for (;;) {
      masks[c] = forced | sub;
      rec(k + 1);
      if (sub == free) break;
      sub = (sub - free) & free;
    }
    masks[c] = 0;
  };
  rec(0);
  return out;
}

}  // namespace bohr

#endif  // BOHR_SIGMA_HPP
