#ifndef BOHR_GELFAND_HPP
#define BOHR_GELFAND_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bohr/poset.hpp"
#include "bohr/rational.hpp"

namespace bohr {

/// Support of a positive element of C^k: the unique 0/1 representative of
/// its class in L_A. Ordered pointwise.
struct SupportVector {
  std::vector<bool> bits;

  std::size_t size() const { return bits.size(); }

  static SupportVector from_index(std::size_t k, std::uint64_t index) {
    SupportVector s{std::vector<bool>(k)};
    for (std::size_t i = 0; i < k; ++i) s.bits[i] = index >> i & 1U;
    return s;
  }

  std::uint64_t index() const {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (bits[i]) x |= std::uint64_t{1} << i;
    return x;
  }

  friend bool operator==(const SupportVector&, const SupportVector&) = default;
};

inline bool leq(const SupportVector& x, const SupportVector& y) {
  if (x.size() != y.size()) throw DomainError("support vectors have different lengths");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.bits[i] && !y.bits[i]) return false;
  return true;
}

inline SupportVector join(const SupportVector& x, const SupportVector& y) {
  if (x.size() != y.size()) throw DomainError("support vectors have different lengths");
  SupportVector r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r.bits[i] = x.bits[i] || y.bits[i];
  return r;
}

inline SupportVector meet(const SupportVector& x, const SupportVector& y) {
  if (x.size() != y.size()) throw DomainError("support vectors have different lengths");
  SupportVector r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r.bits[i] = x.bits[i] && y.bits[i];
  return r;
}

/// Class of a positive element a ∈ C^k in A⁺/∼.
inline SupportVector l_class(std::span<const Rational> a) {
  SupportVector s{std::vector<bool>(a.size())};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw DomainError("l_class: negative entry");
    s.bits[i] = a[i] > 0;
  }
  return s;
}

/// a ↦ [a⁺] for self-adjoint a.
inline SupportVector l_class_sa(std::span<const Rational> a) {
  SupportVector s{std::vector<bool>(a.size())};
  for (std::size_t i = 0; i < a.size(); ++i) s.bits[i] = a[i] > 0;
  return s;
}

/// Finite-dimensional cover relation x ◁ U ⇔ x ≤ ⋁U.
inline bool covers(const SupportVector& x, std::span<const SupportVector> u) {
  SupportVector acc{std::vector<bool>(x.size())};
  for (const auto& y : u) acc = join(acc, y);
  return leq(x, acc);
}

/// An open of the real line: a finite union of open intervals with rational
/// (or infinite) endpoints, held sorted, disjoint and merged.
class RationalOpen {
 public:
  /// nullopt endpoint means −∞ (low) or +∞ (high).
  struct Interval {
    std::optional<Rational> low;
    std::optional<Rational> high;
    friend bool operator==(const Interval&, const Interval&) = default;
  };

  RationalOpen() = default;

  explicit RationalOpen(std::vector<Interval> intervals) : intervals_(std::move(intervals)) { normalize(); }

  static RationalOpen empty() { return {}; }
  static RationalOpen whole() { return RationalOpen({{std::nullopt, std::nullopt}}); }
  static RationalOpen interval(std::optional<Rational> low, std::optional<Rational> high) {
    return RationalOpen({{std::move(low), std::move(high)}});
  }

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool is_empty() const { return intervals_.empty(); }

  bool contains(const Rational& t) const {
    return std::any_of(intervals_.begin(), intervals_.end(), [&](const Interval& iv) {
      return (!iv.low || *iv.low < t) && (!iv.high || t < *iv.high);
    });
  }

  friend RationalOpen unite(const RationalOpen& a, const RationalOpen& b) {
    std::vector<Interval> all = a.intervals_;
    all.insert(all.end(), b.intervals_.begin(), b.intervals_.end());
    return RationalOpen(std::move(all));
  }

  friend RationalOpen intersect(const RationalOpen& a, const RationalOpen& b) {
    std::vector<Interval> out;
    for (const auto& x : a.intervals_)
      for (const auto& y : b.intervals_) out.push_back({max_low(x.low, y.low), min_high(x.high, y.high)});
    return RationalOpen(std::move(out));
  }

  /// {t : αt + β ∈ U}. α must be nonzero.
  RationalOpen preimage_affine(const Rational& alpha, const Rational& beta) const {
    if (alpha == 0) throw DomainError("preimage_affine: slope must be nonzero");
    std::vector<Interval> out;
    auto pull = [&](const std::optional<Rational>& e) -> std::optional<Rational> {
      if (!e) return std::nullopt;
      return (*e - beta) / alpha;
    };
    for (const auto& iv : intervals_) {
      if (alpha > 0)
        out.push_back({pull(iv.low), pull(iv.high)});
      else
        out.push_back({pull(iv.high), pull(iv.low)});
    }
    return RationalOpen(std::move(out));
  }

  friend bool operator==(const RationalOpen&, const RationalOpen&) = default;

 private:
  static std::optional<Rational> max_low(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
  }
  static std::optional<Rational> min_high(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }
  static bool low_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!b) return false;
    if (!a) return true;
    return *a < *b;
  }
  static bool nonempty(const Interval& iv) { return !iv.low || !iv.high || *iv.low < *iv.high; }

  void normalize() {
    std::erase_if(intervals_, [](const Interval& iv) { return !nonempty(iv); });
    std::sort(intervals_.begin(), intervals_.end(),
              [](const Interval& a, const Interval& b) { return low_less(a.low, b.low); });
    std::vector<Interval> merged;
    for (auto& iv : intervals_) {
      // (a,b) and (b,c) stay apart: b itself is not covered.
      if (!merged.empty() && (!merged.back().high || low_less(iv.low, merged.back().high))) {
        auto& back = merged.back();
        if (back.high && (!iv.high || *back.high < *iv.high)) back.high = iv.high;
      } else {
        merged.push_back(std::move(iv));
      }
    }
    intervals_ = std::move(merged);
  }

  std::vector<Interval> intervals_;
};

/// Opens of the Gelfand spectrum of C^k: the principal down-sets ↓x of L_A,
/// each paired with its projection diag(x) ∈ P(C^k).
struct FiniteSpectrum {
  std::size_t k = 0;
  /// down_sets[x] lists the indices y ≤ x of L_A = {0,1}^k.
  std::vector<std::vector<std::uint64_t>> down_sets;
  std::vector<SupportVector> generators;
  std::vector<CMatrix> projections;
};

inline FiniteSpectrum finite_spectrum(std::size_t k) {
  if (k < 1) throw DomainError("finite_spectrum: k must be positive");
  if (k > 16) throw DomainError("finite_spectrum: k above 16 is not supported");
  FiniteSpectrum fs;
  fs.k = k;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t x = 0; x < count; ++x) {
    std::vector<std::uint64_t> down;
    for (std::uint64_t y = 0; y < count; ++y)
      if ((y & ~x) == 0) down.push_back(y);
    fs.down_sets.push_back(std::move(down));
    fs.generators.push_back(SupportVector::from_index(k, x));
    std::vector<Rational> diag(k);
    for (std::size_t i = 0; i < k; ++i) diag[i] = (x >> i & 1U) ? 1 : 0;
    fs.projections.push_back(CMatrix::diag(diag));
  }
  return fs;
}

/// Bit i set iff a_i ∈ U: the diagonal of χ_U(a).
inline SupportVector gelfand_support(std::span<const Rational> diag_values, const RationalOpen& u) {
  SupportVector s{std::vector<bool>(diag_values.size())};
  for (std::size_t i = 0; i < diag_values.size(); ++i) s.bits[i] = u.contains(diag_values[i]);
  return s;
}

/// The eigenvalue of `a` on each atom of `c`: trace(a·e)/trace(e). Throws if
/// `a` is not a Hermitian element of c.
inline std::vector<Rational> eigenvalues_in(const CMatrix& a, const Context& c) {
  if (!hermitian(a)) throw DomainError("observable is not Hermitian");
  if (a.rows() != c.dim()) throw DomainError("observable has the wrong dimension");
  if (!solve_linear_membership(a, c.atoms())) throw DomainError("observable does not lie in the context");
  std::vector<Rational> out;
  for (const auto& e : c.atoms()) out.push_back((trace(a * e) / trace(e)).re());
  return out;
}

/// Atom mask of the spectral projection [a ∈ U] inside c.
inline std::uint64_t spectral_mask(const CMatrix& a, const Context& c, const RationalOpen& u) {
  const auto values = eigenvalues_in(a, c);
  return gelfand_support(values, u).index();
}

/// [a ∈ U] = Σ { e_i : eigenvalue on e_i lies in U }.
inline CMatrix spectral_projection(const CMatrix& a, const Context& c, const RationalOpen& u) {
  return c.projection(spectral_mask(a, c, u));
}

}  // namespace bohr

#endif  // BOHR_GELFAND_HPP
