#ifndef POLARFOL_SUBSPACE_HPP
#define POLARFOL_SUBSPACE_HPP

#include <vector>

#include "polarfol/matrix.hpp"

namespace polarfol {

/// Linear subspace of Q^n in canonical form: the basis matrix is the RREF of
/// any spanning set, with zero rows dropped. Equal subspaces compare equal
/// entrywise.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `span` inside Q^ambient.
  static Subspace span_of(const Mat& span) {
    Subspace s(span.cols());
    std::vector<size_t> piv;
    Mat r = rref(span, &piv);
    Mat b(piv.size(), span.cols());
    for (size_t i = 0; i < piv.size(); ++i)
      for (size_t j = 0; j < span.cols(); ++j) b(i, j) = r(i, j);
    s.basis_ = std::move(b);
    return s;
  }

  static Subspace span_of(const std::vector<Vec>& vectors, size_t ambient_dim) {
    if (vectors.empty()) return Subspace(ambient_dim);
    return span_of(Mat::from_rows(vectors));
  }

  static Subspace full(size_t ambient_dim) { return span_of(Mat::identity(ambient_dim)); }

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(size_t i) const { return basis_.row(i); }

  bool is_zero() const { return dim() == 0; }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw Error("Subspace::contains: dim mismatch");
    // Reduce v against the RREF basis; membership iff the residue vanishes.
    Vec r = v;
    for (size_t i = 0; i < basis_.rows(); ++i) {
      size_t p = pivot_col(i);
      if (!r[p].is_zero()) vec_axpy(r, -r[p], basis_.row(i));
    }
    return vec_is_zero(r);
  }

  bool contains(const Subspace& other) const {
    for (size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw Error("Subspace sum: ambient mismatch");
    std::vector<Vec> rows;
    for (size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
    for (size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
    return Subspace::span_of(rows, a.ambient_);
  }

  /// Zassenhaus: row-reduce [A|A; B|0]; intersection basis shows up in the
  /// right half of the rows whose left half vanished.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw Error("Subspace intersect: ambient mismatch");
    const size_t n = a.ambient_;
    Mat z(a.dim() + b.dim(), 2 * n);
    for (size_t i = 0; i < a.dim(); ++i)
      for (size_t j = 0; j < n; ++j) {
        z(i, j) = a.basis_(i, j);
        z(i, n + j) = a.basis_(i, j);
      }
    for (size_t i = 0; i < b.dim(); ++i)
      for (size_t j = 0; j < n; ++j) z(a.dim() + i, j) = b.basis_(i, j);
    Mat r = rref(z);
    std::vector<Vec> rows;
    for (size_t i = 0; i < r.rows(); ++i) {
      bool left_zero = true;
      for (size_t j = 0; j < n && left_zero; ++j) left_zero = r(i, j).is_zero();
      if (!left_zero) continue;
      Vec v(n);
      bool nonzero = false;
      for (size_t j = 0; j < n; ++j) {
        v[j] = r(i, n + j);
        nonzero = nonzero || !v[j].is_zero();
      }
      if (nonzero) rows.push_back(std::move(v));
    }
    return Subspace::span_of(rows, n);
  }

 private:
  size_t pivot_col(size_t row) const {
    for (size_t j = 0; j < basis_.cols(); ++j)
      if (!basis_(row, j).is_zero()) return j;
    throw Error("Subspace: zero basis row");
  }

  size_t ambient_;
  Mat basis_;
};

/// Kernel of m as a canonical subspace of the column space Q^cols.
inline Subspace kernel(const Mat& m) { return Subspace::span_of(kernel_basis(m)); }

/// {x in `within` : form(x, v) = 0}, the form-orthogonal complement of v.
/// Requires a symmetric form whose restriction to `within` is nondegenerate
/// and v inside `within`; certifies v (+) result = within before returning.
inline Subspace form_complement(const Subspace& v, const Subspace& within, const Mat& form) {
  if (!form.is_symmetric()) throw Error("form_complement: form not symmetric");
  if (v.ambient_dim() != within.ambient_dim() || form.rows() != v.ambient_dim())
    throw Error("form_complement: dim mismatch");
  if (!within.contains(v)) throw Error("form_complement: v not contained in within");

  const size_t k = within.dim();
  Mat gram(k, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      gram(i, j) = form_apply(form, within.basis_vector(i), within.basis_vector(j));
  if (det(gram).is_zero()) throw Error("degenerate form on subspace");

  // Solve form(x, v_basis) = 0 for x = sum c_i w_i in `within` coordinates.
  Mat sys(v.dim(), k);
  for (size_t r = 0; r < v.dim(); ++r)
    for (size_t i = 0; i < k; ++i)
      sys(r, i) = form_apply(form, within.basis_vector(i), v.basis_vector(r));
  const Mat coeffs = kernel_basis(sys);
  std::vector<Vec> rows;
  for (size_t r = 0; r < coeffs.rows(); ++r) {
    Vec x(v.ambient_dim());
    for (size_t i = 0; i < k; ++i) vec_axpy(x, coeffs(r, i), within.basis_vector(i));
    rows.push_back(std::move(x));
  }
  Subspace result = Subspace::span_of(rows, v.ambient_dim());

  if (result.dim() + v.dim() != within.dim() || !intersect(result, v).is_zero())
    throw Error("degenerate form on subspace");
  return result;
}

/// Orthogonal projection of x onto s with respect to a (nondegenerate-on-s)
/// symmetric form.
inline Vec project_onto(const Vec& x, const Subspace& s, const Mat& form) {
  if (s.dim() == 0) return Vec(s.ambient_dim());
  const size_t k = s.dim();
  Mat gram(k, k);
  Vec rhs(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j)
      gram(i, j) = form_apply(form, s.basis_vector(i), s.basis_vector(j));
    rhs[i] = form_apply(form, s.basis_vector(i), x);
  }
  auto c = solve(gram, rhs);
  if (!c) throw Error("project_onto: degenerate form on subspace");
  Vec p(s.ambient_dim());
  for (size_t i = 0; i < k; ++i) vec_axpy(p, (*c)[i], s.basis_vector(i));
  return p;
}

/// Image of a subspace under a linear map.
inline Subspace apply_map(const Mat& m, const Subspace& s) {
  std::vector<Vec> rows;
  rows.reserve(s.dim());
  for (size_t i = 0; i < s.dim(); ++i) rows.push_back(m * s.basis_vector(i));
  return Subspace::span_of(rows, m.rows());
}

}  // namespace polarfol

#endif  // POLARFOL_SUBSPACE_HPP
