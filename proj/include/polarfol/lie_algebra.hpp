#ifndef POLARFOL_LIE_ALGEBRA_HPP
#define POLARFOL_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "polarfol/matrix.hpp"
#include "polarfol/subspace.hpp"

namespace polarfol {

/// Element of a Lie algebra, as coordinates in the fixed basis.
using Element = Vec;

/// Real semisimple Lie algebra in a fixed basis: structure constants, Cartan
/// involution theta, Killing form B, and the positive definite inner product
/// G(X,Y) = -B(X, theta Y) with its eigenspace split g = k (+) p.
struct LieAlgebraData {
  size_t dim = 0;
  std::vector<std::string> basis_labels;
  /// table[i][j] = coordinates of [e_i, e_j].
  std::vector<std::vector<Vec>> table;
  Mat theta;
  Mat killing;
  Mat metric;
  Subspace k_space;
  Subspace p_space;
};

inline const Vec& bracket_basis(const LieAlgebraData& g, size_t i, size_t j) {
  return g.table[i][j];
}

inline Element bracket(const LieAlgebraData& g, const Element& x, const Element& y) {
  if (x.size() != g.dim || y.size() != g.dim) throw Error("bracket: dim mismatch");
  Element r(g.dim);
  for (size_t i = 0; i < g.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < g.dim; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      vec_axpy(r, c, g.table[i][j]);
    }
  }
  return r;
}

inline Scalar inner(const LieAlgebraData& g, const Element& x, const Element& y) {
  if (x.size() != g.dim || y.size() != g.dim) throw Error("inner: dim mismatch");
  return form_apply(g.metric, x, y);
}

inline Scalar killing_form(const LieAlgebraData& g, const Element& x, const Element& y) {
  return form_apply(g.killing, x, y);
}

inline Element theta_apply(const LieAlgebraData& g, const Element& x) { return g.theta * x; }

/// Matrix of ad(x): Y -> [x, Y].
inline Mat ad_matrix(const LieAlgebraData& g, const Element& x) {
  if (x.size() != g.dim) throw Error("ad_matrix: dim mismatch");
  Mat m(g.dim, g.dim);
  for (size_t i = 0; i < g.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < g.dim; ++j) {
      const Vec& c = g.table[i][j];
      for (size_t k = 0; k < g.dim; ++k)
        if (!c[k].is_zero()) m(k, j) += x[i] * c[k];
    }
  }
  return m;
}

/// Exact exponential of the (nilpotent) adjoint of x: sum of ad(x)^k / k!.
/// The series must terminate within dim steps, otherwise x was not ad-nilpotent.
inline Mat ad_exp(const LieAlgebraData& g, const Element& x) {
  const Mat ad = ad_matrix(g, x);
  Mat result = Mat::identity(g.dim);
  Mat power = ad;
  Scalar factorial(1);
  for (size_t k = 1; !power.is_zero(); ++k) {
    if (k > g.dim) throw Error("non-nilpotent argument");
    factorial *= Scalar(static_cast<long>(k));
    result = result + factorial.inverse() * power;
    power = power * ad;
  }
  return result;
}

/// Span of all brackets [a_i, b_j] of basis vectors of two subspaces.
inline Subspace bracket_span(const LieAlgebraData& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < b.dim(); ++j) {
      Vec v = bracket(g, a.basis_vector(i), b.basis_vector(j));
      if (!vec_is_zero(v)) rows.push_back(std::move(v));
    }
  return Subspace::span_of(rows, g.dim);
}

inline bool is_subalgebra(const LieAlgebraData& g, const Subspace& v) {
  for (size_t i = 0; i < v.dim(); ++i)
    for (size_t j = i + 1; j < v.dim(); ++j)
      if (!v.contains(bracket(g, v.basis_vector(i), v.basis_vector(j)))) return false;
  return true;
}

inline bool is_abelian(const LieAlgebraData& g, const Subspace& v) {
  for (size_t i = 0; i < v.dim(); ++i)
    for (size_t j = i + 1; j < v.dim(); ++j)
      if (!vec_is_zero(bracket(g, v.basis_vector(i), v.basis_vector(j)))) return false;
  return true;
}

/// [v, [v, v]] contained in v, for v inside p.
inline bool is_lie_triple_system(const LieAlgebraData& g, const Subspace& v) {
  if (!g.p_space.contains(v)) throw Error("is_lie_triple_system: subspace not contained in p");
  const Subspace w = bracket_span(g, v, v);
  for (size_t i = 0; i < v.dim(); ++i)
    for (size_t j = 0; j < w.dim(); ++j)
      if (!v.contains(bracket(g, v.basis_vector(i), w.basis_vector(j)))) return false;
  return true;
}

/// {x in `within` : [x, s] = 0 for all s in s}.
inline Subspace centralizer_in(const LieAlgebraData& g, const Subspace& s, const Subspace& within) {
  const size_t k = within.dim();
  if (k == 0 || s.dim() == 0) return within;
  Mat sys(g.dim * s.dim(), k);
  for (size_t j = 0; j < k; ++j) {
    for (size_t i = 0; i < s.dim(); ++i) {
      const Vec b = bracket(g, within.basis_vector(j), s.basis_vector(i));
      for (size_t r = 0; r < g.dim; ++r) sys(i * g.dim + r, j) = b[r];
    }
  }
  const Mat coeffs = kernel_basis(sys);
  std::vector<Vec> rows;
  for (size_t r = 0; r < coeffs.rows(); ++r) {
    Vec x(g.dim);
    for (size_t j = 0; j < k; ++j) vec_axpy(x, coeffs(r, j), within.basis_vector(j));
    rows.push_back(std::move(x));
  }
  return Subspace::span_of(rows, g.dim);
}

// ---------------------------------------------------------------------------
// Structure checks. Each one is an exact identity on basis vectors; together
// they certify that LieAlgebraData is what it claims to be.
// ---------------------------------------------------------------------------

inline bool check_antisymmetry(const LieAlgebraData& g) {
  for (size_t i = 0; i < g.dim; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      const Vec& a = g.table[i][j];
      const Vec& b = g.table[j][i];
      for (size_t k = 0; k < g.dim; ++k)
        if (a[k] != -b[k]) return false;
    }
  }
  return true;
}

inline Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

namespace detail {
/// s += [v, e_k], via the structure-constant table.
inline void add_bracket_with_basis(Vec& s, const LieAlgebraData& g, const Vec& v, size_t k) {
  for (size_t l = 0; l < g.dim; ++l)
    if (!v[l].is_zero()) vec_axpy(s, v[l], g.table[l][k]);
}
}  // namespace detail

inline bool check_jacobi(const LieAlgebraData& g) {
  for (size_t i = 0; i < g.dim; ++i)
    for (size_t j = i + 1; j < g.dim; ++j)
      for (size_t k = j + 1; k < g.dim; ++k) {
        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
        Vec s(g.dim);
        detail::add_bracket_with_basis(s, g, g.table[i][j], k);
        detail::add_bracket_with_basis(s, g, g.table[j][k], i);
        detail::add_bracket_with_basis(s, g, g.table[k][i], j);
        if (!vec_is_zero(s)) return false;
      }
  return true;
}

inline bool check_theta(const LieAlgebraData& g) {
  if (g.theta * g.theta != Mat::identity(g.dim)) return false;
  // theta is an automorphism: theta[x,y] = [theta x, theta y] on basis pairs.
  for (size_t i = 0; i < g.dim; ++i)
    for (size_t j = i + 1; j < g.dim; ++j) {
      const Vec lhs = g.theta * g.table[i][j];
      const Vec rhs = bracket(g, g.theta * unit_vec(g.dim, i), g.theta * unit_vec(g.dim, j));
      if (lhs != rhs) return false;
    }
  return true;
}

inline bool check_killing_is_ad_trace(const LieAlgebraData& g) {
  for (size_t i = 0; i < g.dim; ++i)
    for (size_t j = i; j < g.dim; ++j) {
      Scalar tr;
      for (size_t k = 0; k < g.dim; ++k)
        for (size_t l = 0; l < g.dim; ++l) {
          const Scalar& a = g.table[i][l][k];
          if (a.is_zero()) continue;
          const Scalar& b = g.table[j][k][l];
          if (b.is_zero()) continue;
          tr += a * b;
        }
      if (g.killing(i, j) != tr || g.killing(j, i) != tr) return false;
    }
  return true;
}

inline bool check_killing_invariance(const LieAlgebraData& g) {
  // B([x,y],z) = B(x,[y,z]) on basis triples.
  for (size_t i = 0; i < g.dim; ++i)
    for (size_t j = 0; j < g.dim; ++j)
      for (size_t k = 0; k < g.dim; ++k) {
        const Scalar lhs = form_apply(g.killing, g.table[i][j], unit_vec(g.dim, k));
        const Scalar rhs = form_apply(g.killing, unit_vec(g.dim, i), g.table[j][k]);
        if (lhs != rhs) return false;
      }
  return true;
}

inline bool check_metric_positive_definite(const LieAlgebraData& g) {
  return g.metric.is_symmetric() && is_positive_definite(g.metric);
}

/// B negative definite on k, positive definite on p, and k perpendicular to p
/// for both B and the metric.
inline bool check_killing_definiteness_split(const LieAlgebraData& g) {
  const auto restrict_form = [&](const Mat& form, const Subspace& s) {
    Mat r(s.dim(), s.dim());
    for (size_t i = 0; i < s.dim(); ++i)
      for (size_t j = 0; j < s.dim(); ++j)
        r(i, j) = form_apply(form, s.basis_vector(i), s.basis_vector(j));
    return r;
  };
  if (!is_positive_definite(Scalar(-1) * restrict_form(g.killing, g.k_space))) return false;
  if (!is_positive_definite(restrict_form(g.killing, g.p_space))) return false;
  for (size_t i = 0; i < g.k_space.dim(); ++i)
    for (size_t j = 0; j < g.p_space.dim(); ++j) {
      const Vec x = g.k_space.basis_vector(i);
      const Vec y = g.p_space.basis_vector(j);
      if (!form_apply(g.killing, x, y).is_zero()) return false;
      if (!inner(g, x, y).is_zero()) return false;
    }
  return true;
}

/// ad(x)* = -ad(theta x) with * the metric adjoint, checked on all basis x.
inline bool check_ad_adjoint(const LieAlgebraData& g) {
  const Mat metric_inv = inverse(g.metric);
  for (size_t i = 0; i < g.dim; ++i) {
    const Mat ad = ad_matrix(g, unit_vec(g.dim, i));
    const Mat adj = metric_inv * ad.transpose() * g.metric;
    const Mat ad_theta = ad_matrix(g, g.theta * unit_vec(g.dim, i));
    if (adj != Scalar(-1) * ad_theta) return false;
  }
  return true;
}

}  // namespace polarfol

#endif  // POLARFOL_LIE_ALGEBRA_HPP
