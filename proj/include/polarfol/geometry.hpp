#ifndef POLARFOL_GEOMETRY_HPP
#define POLARFOL_GEOMETRY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarfol/foliations.hpp"
#include "polarfol/roots.hpp"

namespace polarfol {

/// Left-invariant metric of the solvable model: <X,Y>_AN = <X_a, Y_a> +
/// (1/2) <X_n, Y_n> on a (+) n, stored as a single ambient Gram matrix.
struct ANMetric {
  Subspace a, n, an;
  Mat gram;  // valid on a (+) n

  Scalar inner(const Vec& x, const Vec& y) const { return form_apply(gram, x, y); }
};

inline ANMetric an_metric(const LieAlgebraData& g, const RootSystemData& rs) {
  ANMetric m;
  m.a = rs.a_space;
  m.n = rs.n_space;
  m.an = rs.an_space;

  const auto projector = [&](const Subspace& s) {
    // P = B^T (B G B^T)^{-1} B G, the metric-orthogonal projector onto s.
    const size_t k = s.dim();
    Mat b(k, g.dim);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < g.dim; ++j) b(i, j) = s.basis()(i, j);
    const Mat bg = b * g.metric;
    const Mat gram = bg * b.transpose();
    return b.transpose() * (inverse(gram) * bg);
  };
  const Mat pa = projector(rs.a_space);
  const Mat pn = projector(rs.n_space);
  m.gram = pa.transpose() * g.metric * pa + Scalar(1, 2) * (pn.transpose() * g.metric * pn);
  return m;
}

/// {xi in p : <xi, X> = 0 for all X in s}, the normal space of the orbit
/// through the base point.
inline Subspace normal_space_in_p(const LieAlgebraData& g, const Subspace& s) {
  const Subspace& p = g.p_space;
  if (s.dim() == 0) return p;
  Mat sys(s.dim(), p.dim());
  for (size_t i = 0; i < s.dim(); ++i)
    for (size_t j = 0; j < p.dim(); ++j)
      sys(i, j) = inner(g, p.basis_vector(j), s.basis_vector(i));
  const Mat coeffs = kernel_basis(sys);
  std::vector<Vec> rows;
  for (size_t r = 0; r < coeffs.rows(); ++r) {
    Vec x(g.dim);
    for (size_t j = 0; j < p.dim(); ++j) vec_axpy(x, coeffs(r, j), p.basis_vector(j));
    rows.push_back(std::move(x));
  }
  return Subspace::span_of(rows, g.dim);
}

/// Polarity criterion at the algebra level: polar iff the normal space is a
/// Lie triple system with [normal, normal] orthogonal to s; hyperpolar iff
/// the normal space is abelian.
inline std::pair<bool, bool> polarity_check(const LieAlgebraData& g, const Subspace& s) {
  const Subspace normal = normal_space_in_p(g, s);
  const bool lts = is_lie_triple_system(g, normal);
  bool orthogonal = true;
  const Subspace brackets = bracket_span(g, normal, normal);
  for (size_t i = 0; i < brackets.dim() && orthogonal; ++i)
    for (size_t j = 0; j < s.dim() && orthogonal; ++j)
      orthogonal = inner(g, brackets.basis_vector(i), s.basis_vector(j)).is_zero();
  const bool polar = lts && orthogonal;
  const bool hyperpolar = is_abelian(g, normal);
  return {polar, hyperpolar && polar};
}

/// Sectional curvature of the totally geodesic surface tangent to a
/// 2-dimensional Lie triple system: -<[[X,Y],Y],X> / (|X|^2 |Y|^2 - <X,Y>^2).
inline Scalar section_curvature(const LieAlgebraData& g, const Subspace& normal) {
  if (normal.dim() != 2) throw Error("section_curvature: section not 2-dimensional");
  if (!is_lie_triple_system(g, normal)) throw Error("section_curvature: not a Lie triple system");
  const Vec x = normal.basis_vector(0);
  const Vec y = normal.basis_vector(1);
  const Vec xy = bracket(g, x, y);
  const Scalar num = -inner(g, bracket(g, xy, y), x);
  const Scalar den = inner(g, x, x) * inner(g, y, y) - inner(g, x, y) * inner(g, x, y);
  return num / den;
}

/// Normal component of II(X, X) at the identity, from
/// <II(X,X), eta>_AN = (1/4) <(1-theta)[theta X, X], eta>.
inline Element second_fundamental_form(const LieAlgebraData& g, const ANMetric& an,
                                       const Subspace& s, const Element& x,
                                       const Subspace& normal) {
  if (!s.contains(x)) throw Error("second_fundamental_form: X not in s");
  Vec w = bracket(g, theta_apply(g, x), x);
  w = vec_sub(w, theta_apply(g, w));
  const size_t k = normal.dim();
  Mat gram(k, k);
  Vec rhs(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j)
      gram(i, j) = an.inner(normal.basis_vector(i), normal.basis_vector(j));
    rhs[i] = Scalar(1, 4) * inner(g, w, normal.basis_vector(i));
  }
  const auto c = solve(gram, rhs);
  if (!c) throw Error("second_fundamental_form: degenerate normal space");
  Element ii(g.dim);
  for (size_t i = 0; i < k; ++i) vec_axpy(ii, (*c)[i], normal.basis_vector(i));
  return ii;
}

/// II(X, Y) by polarization of the quadratic form.
inline Element second_fundamental_form(const LieAlgebraData& g, const ANMetric& an,
                                       const Subspace& s, const Element& x, const Element& y,
                                       const Subspace& normal) {
  const Element qxy = second_fundamental_form(g, an, s, vec_add(x, y), normal);
  const Element qx = second_fundamental_form(g, an, s, x, normal);
  const Element qy = second_fundamental_form(g, an, s, y, normal);
  return vec_scale(Scalar(1, 2), vec_sub(vec_sub(qxy, qx), qy));
}

/// The AN-orthogonal complement of s inside a (+) n.
inline Subspace an_orthogonal_complement(const ANMetric& an, const Subspace& s) {
  return form_complement(s, an.an, an.gram);
}

/// Mean curvature vector of the orbit through the base point: the trace of
/// II over an AN-orthogonal basis. Gram-Schmidt yields an orthogonal (not
/// unit) basis {b_i}; the trace is sum II(b_i, b_i) / <b_i, b_i>_AN, which
/// equals the orthonormal trace while staying inside Q.
inline Element mean_curvature_at_e(const LieAlgebraData& g, const ANMetric& an, const Subspace& s) {
  if (!an.an.contains(s)) throw Error("mean_curvature_at_e: s not inside a+n");
  if (!is_subalgebra(g, s)) throw Error("mean_curvature_at_e: s not a subalgebra");
  const Subspace normal = an_orthogonal_complement(an, s);

  std::vector<Vec> ortho;
  for (size_t i = 0; i < s.dim(); ++i) {
    Vec v = s.basis_vector(i);
    for (const auto& b : ortho) vec_axpy(v, -(an.inner(v, b) / an.inner(b, b)), b);
    if (!vec_is_zero(v)) ortho.push_back(std::move(v));
  }
  if (ortho.size() != s.dim()) throw Error("mean_curvature_at_e: basis degenerated");

  Element h(g.dim);
  for (const auto& b : ortho) {
    const Element ii = second_fundamental_form(g, an, s, b, normal);
    vec_axpy(h, an.inner(b, b).inverse(), ii);
  }
  return h;
}

/// Mean curvature of a case-E leaf along the geodesic direction xi: the
/// candidate algebra is conjugated by the exact nilpotent exponential of
/// -t xi and traced at the identity; the result must match the closed form
///   (t |alpha|^2 / (2 + t^2 s |alpha|^2)) (m_alpha + 2 m_2alpha - 1)
///                                         (t s H_alpha - 2 xi),
/// where s = <xi, xi> enters as a rational parameter instead of normalizing
/// xi to unit length.
struct OrbitMeanCurvature {
  Scalar t;
  Element computed;
  Element closed_form;
};

inline OrbitMeanCurvature mean_curvature_along_orbit(const LieAlgebraData& g, const ANMetric& an,
                                                     const RootSystemData& rs,
                                                     const FoliationSpec& spec, const Element& xi,
                                                     const Scalar& t) {
  if (spec.kase != FoliationCase::E) throw Error("mean_curvature_along_orbit: case E only");
  const Subspace plane = Subspace::span_of(spec.params, g.dim);
  if (vec_is_zero(xi) || !plane.contains(xi)) throw Error("xi not in v");
  const Subspace s_v = build_candidate(g, rs, spec);

  const Mat conj = ad_exp(g, vec_scale(-t, xi));
  const Subspace conjugated = apply_map(conj, s_v);
  OrbitMeanCurvature out;
  out.t = t;
  out.computed = mean_curvature_at_e(g, an, conjugated);

  const Root& alpha = rs.simple_root(static_cast<size_t>(spec.root));
  const Scalar alpha2 = rs.covector_inner(alpha.covector, alpha.covector);
  const Scalar s_norm = inner(g, xi, xi);
  const Scalar mult = Scalar(static_cast<long>(alpha.multiplicity) +
                             2 * static_cast<long>(rs.double_root_multiplicity(alpha)) - 1);
  const Scalar coef = t * alpha2 * mult / (Scalar(2) + t * t * s_norm * alpha2);
  Element closed(g.dim);
  vec_axpy(closed, coef * t * s_norm, alpha.dual);
  vec_axpy(closed, Scalar(-2) * coef, xi);
  out.closed_form = std::move(closed);

  if (out.computed != out.closed_form)
    throw Error("mean_curvature_along_orbit: closed form mismatch");
  return out;
}

/// Everything the verification engine certifies about one candidate.
struct VerificationReport {
  FoliationSpec spec;
  bool is_subalgebra = false;
  size_t codimension = 0;
  bool is_polar = false;
  bool is_hyperpolar = false;
  Subspace normal_space;
  std::optional<Scalar> section_curvature;  // only for a 2-dim Lie triple section
  Element mean_curvature;
  std::optional<Scalar> mean_curvature_coeff;  // coefficient of H_alpha
  std::optional<bool> extension_verified;      // cases D and E
  bool ideal_in_an = false;
  bool expected_polar = false;
  bool expected_hyperpolar = false;
  bool matches_expectation = false;
};

/// Builds, certifies, and measures one candidate.
inline VerificationReport verify_candidate(const LieAlgebraData& g, const RootSystemData& rs,
                                           const ANMetric& an, const FoliationSpec& spec) {
  VerificationReport rep;
  rep.spec = spec;

  const Subspace s = build_candidate(g, rs, spec);
  rep.is_subalgebra = true;  // certified by build_candidate
  rep.codimension = rs.an_space.dim() - s.dim();

  rep.normal_space = normal_space_in_p(g, s);
  const auto [polar, hyperpolar] = polarity_check(g, s);
  rep.is_polar = polar;
  rep.is_hyperpolar = hyperpolar;
  if (hyperpolar && !polar) throw Error("verify: hyperpolar without polar");

  if (rep.normal_space.dim() == 2 && is_lie_triple_system(g, rep.normal_space))
    rep.section_curvature = section_curvature(g, rep.normal_space);

  rep.mean_curvature = mean_curvature_at_e(g, an, s);

  if (spec.root >= 0) {
    const Root& alpha = rs.simple_root(static_cast<size_t>(spec.root));
    if (vec_is_zero(rep.mean_curvature)) {
      rep.mean_curvature_coeff = Scalar(0);
    } else {
      const Scalar c = inner(g, rep.mean_curvature, alpha.dual) /
                       inner(g, alpha.dual, alpha.dual);
      if (rep.mean_curvature == vec_scale(c, alpha.dual)) rep.mean_curvature_coeff = c;
    }
  }

  if (spec.kase == FoliationCase::D || spec.kase == FoliationCase::E) {
    const Root& alpha = rs.simple_root(static_cast<size_t>(spec.root));
    const ParabolicData pd = parabolic(g, rs, {static_cast<size_t>(spec.root)});
    Vec twice(alpha.covector.size());
    for (size_t i = 0; i < twice.size(); ++i) twice[i] = Scalar(2) * alpha.covector[i];
    Subspace g2alpha(g.dim);
    if (auto idx = rs.find_root(twice)) g2alpha = rs.roots[*idx].space;

    Subspace h_hat(g.dim);
    if (spec.kase == FoliationCase::D) {
      const Subspace xi_line = Subspace::span_of({spec.params[0]}, g.dim);
      h_hat = sum(form_complement(xi_line, alpha.space, g.metric), g2alpha);
    } else {
      const Subspace plane = Subspace::span_of(spec.params, g.dim);
      h_hat = sum(Subspace::span_of({alpha.dual}, g.dim),
                  sum(form_complement(plane, alpha.space, g.metric), g2alpha));
    }
    rep.extension_verified = canonical_extension(g, pd, h_hat) == s;
  }

  rep.ideal_in_an = s.contains(bracket_span(g, rs.an_space, s));

  rep.expected_polar = true;
  rep.expected_hyperpolar = spec.kase == FoliationCase::A || spec.kase == FoliationCase::B ||
                            spec.kase == FoliationCase::C;
  rep.matches_expectation =
      rep.is_polar == rep.expected_polar && rep.is_hyperpolar == rep.expected_hyperpolar;
  return rep;
}

}  // namespace polarfol

#endif  // POLARFOL_GEOMETRY_HPP
