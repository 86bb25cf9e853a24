#ifndef BOHR_BOHRIFIED_HPP
#define BOHR_BOHRIFIED_HPP

#include <cstddef>
#include <vector>

#include "bohr/gelfand.hpp"
#include "bohr/sigma.hpp"

namespace bohr {

/// Gelfand transform of the Bohrification: for a ∈ C_sa and C ⊆ D, the open
/// E ↦ [a ∈ U] for E ⊇ D and E ↦ 0 otherwise. The result is embedded in the
/// whole poset, vanishing outside ↑C.
inline SigmaOpen bohrified_transform(const CMatrix& a, std::size_t c, std::size_t d, const RationalOpen& u,
                                     const PosetPtr& poset) {
  if (c >= poset->size() || d >= poset->size()) throw DomainError("bohrified_transform: context not in poset");
  if (!poset->leq(c, d)) throw DomainError("bohrified_transform: D does not contain C");
  const std::uint64_t base = spectral_mask(a, poset->context(c), u);
  std::vector<std::uint64_t> m(poset->size(), 0);
  for (auto e : poset->up(d)) m[e] = poset->push(c, e, base);
  return {poset, std::move(m)};
}

}  // namespace bohr

#endif  // BOHR_BOHRIFIED_HPP
