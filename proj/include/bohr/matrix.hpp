#ifndef BOHR_MATRIX_HPP
#define BOHR_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/rational.hpp"

namespace bohr {

/// Dense row-major matrix over the Gaussian rationals. Values are immutable
/// from the outside; every operation returns a fresh matrix.
class CMatrix {
 public:
  CMatrix() = default;

  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
  }

  CMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
    if (entries_.size() != rows * cols) throw DomainError("entry count does not match dimensions");
  }

  /// Row-list literal, e.g. `CMatrix{{1, 0}, {0, 1}}`.
  CMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) throw DomainError("matrix dimensions must be positive");
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
    return m;
  }

  static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix zero(std::size_t n) { return CMatrix(n, n); }

  static CMatrix diag(std::span<const Rational> values) {
    CMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m.entries_[i * values.size() + i] = values[i];
    return m;
  }
  static CMatrix diag(std::initializer_list<Rational> values) {
    return diag(std::span<const Rational>(values.begin(), values.size()));
  }

  /// Outer product |u><u| / <u|u>: the rank-1 projection onto a nonzero vector.
  static CMatrix ray_projection(std::span<const GaussianRational> u) {
    Rational norm = 0;
    for (const auto& z : u) norm += z.norm();
    if (norm == 0) throw DomainError("zero vector has no ray projection");
    CMatrix m(u.size(), u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j) m.entries_[i * u.size() + j] = u[i] * u[j].conj() / norm;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<GaussianRational>& entries() const { return entries_; }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& z : entries_)
      if (!z.is_zero()) return false;
    return true;
  }

  friend bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]";
    }
    return os << "]";
  }

 private:
  friend CMatrix add(const CMatrix&, const CMatrix&);
  friend CMatrix sub(const CMatrix&, const CMatrix&);
  friend CMatrix mul(const CMatrix&, const CMatrix&);
  friend CMatrix scale(const GaussianRational&, const CMatrix&);
  friend CMatrix conj_transpose(const CMatrix&);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

inline void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError(std::string(op) + ": dimension mismatch");
}

inline CMatrix add(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "add");
  CMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

inline CMatrix sub(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "sub");
  CMatrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
  return r;
}

inline CMatrix mul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("mul: dimension mismatch");
  CMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.entries_[i * r.cols_ + j] += aik * b(k, j);
    }
  return r;
}

inline CMatrix scale(const GaussianRational& s, const CMatrix& a) {
  CMatrix r = a;
  for (auto& z : r.entries_) z *= s;
  return r;
}

inline CMatrix conj_transpose(const CMatrix& a) {
  CMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.entries_[j * r.cols_ + i] = a(i, j).conj();
  return r;
}

inline CMatrix operator+(const CMatrix& a, const CMatrix& b) { return add(a, b); }
inline CMatrix operator-(const CMatrix& a, const CMatrix& b) { return sub(a, b); }
inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mul(a, b); }
inline CMatrix operator*(const GaussianRational& s, const CMatrix& a) { return scale(s, a); }

inline GaussianRational trace(const CMatrix& a) {
  if (!a.square()) throw DomainError("trace: matrix is not square");
  GaussianRational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

inline bool hermitian(const CMatrix& a) { return a.square() && a == conj_transpose(a); }

inline bool commute(const CMatrix& a, const CMatrix& b) { return a * b == b * a; }

inline bool is_projection(const CMatrix& a) { return hermitian(a) && a * a == a; }

/// Range inclusion p C^n ⊆ q C^n, i.e. q·p = p.
inline bool proj_leq(const CMatrix& p, const CMatrix& q) {
  if (!is_projection(p) || !is_projection(q)) throw DomainError("proj_leq: inputs must be projections");
  require_same_shape(p, q, "proj_leq");
  return q * p == p;
}

/// Meet of commuting projections (p·q). Throws when p and q do not commute.
inline CMatrix commuting_meet(const CMatrix& p, const CMatrix& q) {
  if (!commute(p, q)) throw DomainError("commuting_meet: projections do not commute");
  return p * q;
}

/// Join of commuting projections (p + q − p·q).
inline CMatrix commuting_join(const CMatrix& p, const CMatrix& q) {
  return p + q - commuting_meet(p, q);
}

/// Rank of a projection, read off as its (integral) trace.
inline std::size_t projection_rank(const CMatrix& p) {
  const auto t = trace(p);
  if (!t.is_real() || denominator(t.re()) != 1 || t.re() < 0)
    throw DomainError("projection_rank: trace is not a nonnegative integer");
  return static_cast<std::size_t>(numerator(t.re()));
}

namespace detail {

/// Reduced row echelon form in place. Returns the pivot column of each
/// nonzero row, in row order.
inline std::vector<std::size_t> rref(std::vector<std::vector<GaussianRational>>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const GaussianRational inv = GaussianRational(1) / m[row][col];
    for (auto& z : m[row]) z *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const GaussianRational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Columns are the flattened matrices of `family`; rows are entry positions.
inline std::vector<std::vector<GaussianRational>> column_system(std::span<const CMatrix> family,
                                                                const CMatrix* rhs) {
  const std::size_t len = family.empty() ? (rhs ? rhs->entries().size() : 0) : family[0].entries().size();
  const std::size_t width = family.size() + (rhs ? 1 : 0);
  std::vector<std::vector<GaussianRational>> m(len, std::vector<GaussianRational>(width));
  for (std::size_t j = 0; j < family.size(); ++j)
    for (std::size_t i = 0; i < len; ++i) m[i][j] = family[j].entries()[i];
  if (rhs)
    for (std::size_t i = 0; i < len; ++i) m[i][family.size()] = rhs->entries()[i];
  return m;
}

}  // namespace detail

/// Exact coefficients x with Σ x_j basis_j = v, or nullopt when v is outside
/// the span. Free variables are set to zero, so the answer is deterministic.
inline std::optional<std::vector<GaussianRational>> solve_linear_membership(const CMatrix& v,
                                                                            std::span<const CMatrix> basis) {
  for (const auto& b : basis) require_same_shape(v, b, "solve_linear_membership");
  auto m = detail::column_system(basis, &v);
  const auto pivots = detail::rref(m, basis.size() + 1);
  std::vector<GaussianRational> x(basis.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == basis.size()) return std::nullopt;
    x[pivots[r]] = m[r][basis.size()];
  }
  return x;
}

/// Basis of {x : Σ x_j family_j = 0}.
inline std::vector<std::vector<GaussianRational>> nullspace(std::span<const CMatrix> family) {
  if (family.empty()) return {};
  for (const auto& b : family) require_same_shape(family[0], b, "nullspace");
  auto m = detail::column_system(family, nullptr);
  const auto pivots = detail::rref(m, family.size());
  std::vector<bool> is_pivot(family.size(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t f = 0; f < family.size(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussianRational> x(family.size());
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace bohr

#endif  // BOHR_MATRIX_HPP
