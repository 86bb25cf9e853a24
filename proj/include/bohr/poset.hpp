#ifndef BOHR_POSET_HPP
#define BOHR_POSET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bohr/context.hpp"

namespace bohr {

/// A finite, intersection-closed family of contexts of one M_n(C), ordered by
/// inclusion. Index 0 is always C·1. Refinement maps are cached for every
/// related pair.
class ContextPoset {
 public:
  /// Takes the contexts in the given order. Index 0 must be the bottom and the
  /// family must be closed under intersection.
  static ContextPoset from_contexts(std::vector<Context> contexts) {
    if (contexts.empty() || !contexts.front().is_bottom())
      throw DomainError("poset must start with the bottom context C·1");
    const std::size_t n = contexts.front().dim();
    for (std::size_t i = 0; i < contexts.size(); ++i) {
      if (contexts[i].dim() != n) throw DomainError("poset contexts have different ambient dimensions");
      for (std::size_t j = 0; j < i; ++j)
        if (contexts[i] == contexts[j]) throw DomainError("duplicate context in poset");
    }
    ContextPoset p(std::move(contexts));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (!p.index_of(intersect(p.contexts_[i], p.contexts_[j])))
          throw DomainError("poset is not closed under intersection");
    return p;
  }

  std::size_t size() const { return contexts_.size(); }
  std::size_t dim() const { return contexts_.front().dim(); }
  const std::vector<Context>& contexts() const { return contexts_; }
  const Context& context(std::size_t i) const { return contexts_.at(i); }

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j]; }

  /// Refinement map C_i → C_j; requires leq(i, j).
  const Refinement& refinement(std::size_t i, std::size_t j) const {
    if (!leq(i, j)) throw DomainError("refinement requested for unrelated contexts");
    return refinements_[i * size() + j];
  }

  /// For each atom of C_j, the atom of C_i containing it; requires leq(i, j).
  const std::vector<std::size_t>& coarsening(std::size_t i, std::size_t j) const {
    if (!leq(i, j)) throw DomainError("coarsening requested for unrelated contexts");
    return coarsenings_[i * size() + j];
  }

  /// Indices j with C_i ⊆ C_j (including i).
  const std::vector<std::size_t>& up(std::size_t i) const { return up_[i]; }

  /// Pushes an atom mask of C_i to the corresponding atom mask of C_j.
  std::uint64_t push(std::size_t i, std::size_t j, std::uint64_t mask) const {
    std::uint64_t out = 0;
    const auto& map = refinement(i, j);
    for (std::size_t a = 0; a < map.size(); ++a)
      if (mask >> a & 1U)
        for (auto b : map[a]) out |= std::uint64_t{1} << b;
    return out;
  }

  std::optional<std::size_t> index_of(const Context& c) const {
    for (std::size_t i = 0; i < contexts_.size(); ++i)
      if (contexts_[i] == c) return i;
    return std::nullopt;
  }

  /// Indices sorted by atom count: every strict inclusion goes forward.
  std::vector<std::size_t> topological_order() const {
    std::vector<std::size_t> order(size());
    for (std::size_t i = 0; i < size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return contexts_[a].size() < contexts_[b].size(); });
    return order;
  }

  friend bool operator==(const ContextPoset& a, const ContextPoset& b) { return a.contexts_ == b.contexts_; }

 private:
  explicit ContextPoset(std::vector<Context> contexts) : contexts_(std::move(contexts)) {
    const std::size_t m = contexts_.size();
    leq_.assign(m * m, false);
    refinements_.assign(m * m, {});
    coarsenings_.assign(m * m, {});
    up_.assign(m, {});
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        std::optional<Refinement> r;
        if (i == j) {
          r = Refinement(contexts_[i].size());
          for (std::size_t a = 0; a < contexts_[i].size(); ++a) (*r)[a] = {a};
        } else if (contexts_[i].size() < contexts_[j].size() || i == 0) {
          r = bohr::refinement(contexts_[i], contexts_[j]);
        }
        if (!r) continue;
        leq_[i * m + j] = true;
        std::vector<std::size_t> coarse(contexts_[j].size());
        for (std::size_t a = 0; a < r->size(); ++a)
          for (auto b : (*r)[a]) coarse[b] = a;
        refinements_[i * m + j] = std::move(*r);
        coarsenings_[i * m + j] = std::move(coarse);
        up_[i].push_back(j);
      }
  }

  std::vector<Context> contexts_;
  std::vector<bool> leq_;
  std::vector<Refinement> refinements_;
  std::vector<std::vector<std::size_t>> coarsenings_;
  std::vector<std::vector<std::size_t>> up_;
};

/// Smallest intersection-closed family containing the seeds and C·1, laid out
/// in canonical context order (bottom first).
inline ContextPoset build_poset(std::span<const Context> seeds, std::size_t n) {
  std::vector<Context> all{Context::bottom(n)};
  auto insert = [&](const Context& c) {
    if (c.dim() != n) throw DomainError("seed context has the wrong ambient dimension");
    if (std::find(all.begin(), all.end(), c) == all.end()) {
      all.push_back(c);
      return true;
    }
    return false;
  };
  for (const auto& s : seeds) insert(s);
  // Closure: every new context is intersected with everything seen so far.
  for (std::size_t i = 1; i < all.size(); ++i)
    for (std::size_t j = 1; j < i; ++j) insert(intersect(all[i], all[j]));
  std::sort(all.begin(), all.end());
  return ContextPoset::from_contexts(std::move(all));
}

inline ContextPoset build_poset(std::span<const Context> seeds) {
  if (seeds.empty()) throw DomainError("ambient dimension unknown for an empty seed list");
  return build_poset(seeds, seeds.front().dim());
}

}  // namespace bohr

#endif  // BOHR_POSET_HPP
