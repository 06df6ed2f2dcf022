#ifndef POLARFOL_ROOTS_HPP
#define POLARFOL_ROOTS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "polarfol/catalog.hpp"
#include "polarfol/eigen.hpp"
#include "polarfol/lie_algebra.hpp"

namespace polarfol {

inline bool vec_lex_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

/// Restricted root: covector of values on the a-basis, root space, metric
/// dual, and the expansion over simple roots once positivity is fixed.
struct Root {
  Vec covector;                       // lambda(a_basis[i])
  Subspace space;                     // g_lambda
  size_t multiplicity = 0;
  bool positive = false;
  std::vector<Scalar> simple_coords;  // lambda = sum c_i alpha_i
  long level = 0;                     // sum of c_i
  Element dual;                       // H_lambda, ambient coordinates
};

/// Restricted root space decomposition of g with respect to a maximal abelian
/// a in p, with positivity, simple roots, levels, delta, and metric duals.
struct RootSystemData {
  Subspace a_space;
  std::vector<Element> a_basis;
  Mat a_gram, a_gram_inv;

  std::vector<Root> roots;            // sorted by (level, covector)
  Subspace g0, k0;
  std::vector<size_t> positive_ids;
  std::vector<size_t> simple_ids;
  Element h_lambda;                   // H^Lambda: dual-basis sum, ambient
  Vec delta;                          // covector of delta on a_basis
  long max_level = 0;

  Subspace n_space;                   // sum of positive root spaces
  Subspace an_space;                  // a (+) n

  /// lambda(H) for H given in ambient coordinates, H in a.
  Scalar evaluate(const Vec& covector, const Element& h_ambient) const {
    const auto coords = solve(a_space.basis().transpose(), h_ambient);
    if (!coords) throw Error("RootSystemData::evaluate: element not in a");
    Scalar s;
    for (size_t i = 0; i < covector.size(); ++i) s += covector[i] * (*coords)[i];
    return s;
  }

  /// <lambda, mu> via metric duals: cov_lambda^T Gram(a)^{-1} cov_mu.
  Scalar covector_inner(const Vec& x, const Vec& y) const {
    return form_apply(a_gram_inv, x, y);
  }

  std::optional<size_t> find_root(const Vec& covector) const {
    for (size_t i = 0; i < roots.size(); ++i)
      if (roots[i].covector == covector) return i;
    return std::nullopt;
  }

  const Root& simple_root(size_t k) const {
    if (k >= simple_ids.size()) throw Error("simple root index out of range");
    return roots[simple_ids[k]];
  }

  /// dim g_{2 lambda}, zero when 2*lambda is not a root.
  size_t double_root_multiplicity(const Root& r) const {
    Vec twice(r.covector.size());
    for (size_t i = 0; i < twice.size(); ++i) twice[i] = Scalar(2) * r.covector[i];
    const auto idx = find_root(twice);
    return idx ? roots[*idx].multiplicity : 0;
  }
};

namespace roots_detail {

/// Coordinates of each target on the canonical basis of V; error if some
/// target is not in V.
inline Mat coords_in(const Subspace& v, const std::vector<Vec>& targets) {
  const size_t d = v.dim();
  Mat bt = v.basis().transpose();
  Mat out(targets.size(), d);
  for (size_t t = 0; t < targets.size(); ++t) {
    const auto c = solve(bt, targets[t]);
    if (!c || bt * *c != targets[t]) throw Error("coords_in: vector not in subspace");
    for (size_t j = 0; j < d; ++j) out(t, j) = (*c)[j];
  }
  return out;
}

}  // namespace roots_detail

/// Simultaneous eigenspace decomposition of g under ad(a), positivity by the
/// fixed regular element H_reg = sum 10^i a_basis[i], simple roots as
/// indecomposable positives. Certifies the structural identities it relies
/// on; throws on any violation.
inline RootSystemData decompose(const LieAlgebraData& g, const Subspace& a) {
  RootSystemData rs;
  if (!g.p_space.contains(a)) throw Error("decompose: a not contained in p");
  if (!is_abelian(g, a)) throw Error("decompose: a not abelian");
  if (centralizer_in(g, a, g.p_space) != a) throw Error("decompose: a not maximal abelian in p");
  rs.a_space = a;
  const size_t r = a.dim();
  for (size_t i = 0; i < r; ++i) rs.a_basis.push_back(a.basis_vector(i));

  rs.a_gram = Mat(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) rs.a_gram(i, j) = inner(g, rs.a_basis[i], rs.a_basis[j]);
  rs.a_gram_inv = inverse(rs.a_gram);

  // Joint eigenspace refinement over ad(a_i), one basis vector at a time.
  struct Piece {
    Vec values;
    Subspace space;
  };
  std::vector<Piece> pieces{{Vec{}, Subspace::full(g.dim)}};
  for (size_t i = 0; i < r; ++i) {
    const Mat ad_h = ad_matrix(g, rs.a_basis[i]);
    std::vector<Piece> next;
    for (const auto& piece : pieces) {
      std::vector<Vec> images;
      for (size_t j = 0; j < piece.space.dim(); ++j)
        images.push_back(ad_h * piece.space.basis_vector(j));
      const Mat coords = roots_detail::coords_in(piece.space, images);
      // coords rows are images of basis vectors: restricted operator is the transpose.
      const auto eigen = rational_eigenvalues(coords.transpose());
      for (const auto& [lambda, eigspace] : eigen) {
        std::vector<Vec> lifted;
        for (size_t e = 0; e < eigspace.dim(); ++e) {
          Vec v(g.dim);
          const Vec c = eigspace.basis_vector(e);
          for (size_t j = 0; j < piece.space.dim(); ++j)
            vec_axpy(v, c[j], piece.space.basis_vector(j));
          lifted.push_back(std::move(v));
        }
        Piece p{piece.values, Subspace::span_of(lifted, g.dim)};
        p.values.push_back(lambda);
        next.push_back(std::move(p));
      }
    }
    pieces = std::move(next);
  }

  size_t dim_check = 0;
  for (auto& piece : pieces) {
    dim_check += piece.space.dim();
    if (vec_is_zero(piece.values)) {
      rs.g0 = piece.space;
      continue;
    }
    Root root;
    root.covector = piece.values;
    root.multiplicity = piece.space.dim();
    root.space = std::move(piece.space);
    rs.roots.push_back(std::move(root));
  }
  if (dim_check != g.dim || rs.g0.ambient_dim() == 0)
    throw Error("decompose: eigenspace dimensions do not fill g");

  rs.k0 = centralizer_in(g, a, g.k_space);
  if (sum(rs.k0, a) != rs.g0 || rs.k0.dim() + a.dim() != rs.g0.dim())
    throw Error("decompose: g0 != k0 (+) a");

  // Positivity by the regular element H_reg = sum 10^i a_i (evaluated on
  // covectors directly).
  for (auto& root : rs.roots) {
    Scalar value;
    Scalar weight(1);
    for (size_t i = 0; i < r; ++i) {
      value += weight * root.covector[i];
      weight *= Scalar(10);
    }
    if (value.is_zero()) throw Error("decompose: chosen regular element is not regular");
    root.positive = value.sign() > 0;
  }

  // Root pairing and theta g_lambda = g_{-lambda}.
  for (const auto& root : rs.roots) {
    Vec neg(r);
    for (size_t i = 0; i < r; ++i) neg[i] = -root.covector[i];
    bool found = false;
    for (const auto& other : rs.roots)
      if (other.covector == neg) {
        if (other.multiplicity != root.multiplicity ||
            apply_map(g.theta, root.space) != other.space)
          throw Error("decompose: theta does not pair root spaces");
        found = true;
        break;
      }
    if (!found) throw Error("decompose: roots do not come in +/- pairs");
  }

  // Simple roots: positive roots that are not sums of two positive roots.
  std::vector<Vec> positive_covs;
  for (const auto& root : rs.roots)
    if (root.positive) positive_covs.push_back(root.covector);
  std::vector<Vec> simple_covs;
  for (const auto& cov : positive_covs) {
    bool decomposable = false;
    for (const auto& x : positive_covs) {
      if (decomposable) break;
      for (const auto& y : positive_covs)
        if (vec_add(x, y) == cov) {
          decomposable = true;
          break;
        }
    }
    if (!decomposable) simple_covs.push_back(cov);
  }
  std::sort(simple_covs.begin(), simple_covs.end(), vec_lex_less);
  if (simple_covs.size() != r) throw Error("decompose: simple root count != rank");

  // Expand every root over the simple ones; entries must be integers of a
  // single sign.
  Mat simple_mat(r, simple_covs.size());
  for (size_t j = 0; j < simple_covs.size(); ++j)
    for (size_t i = 0; i < r; ++i) simple_mat(i, j) = simple_covs[j][i];
  for (auto& root : rs.roots) {
    const auto c = solve(simple_mat, root.covector);
    if (!c) throw Error("decompose: root not in the span of simple roots");
    root.simple_coords = *c;
    Scalar level_sum;
    for (const auto& ci : *c) {
      if (!ci.is_integer()) throw Error("decompose: non-integer simple-root coefficient");
      if (root.positive && ci.sign() < 0) throw Error("decompose: positive root with negative coefficient");
      if (!root.positive && ci.sign() > 0) throw Error("decompose: negative root with positive coefficient");
      level_sum += ci;
    }
    root.level = level_sum.num().get_si();
    rs.max_level = std::max(rs.max_level, root.level);
    // Metric dual H_lambda.
    const Vec dual_coords = rs.a_gram_inv * root.covector;
    Element dual(g.dim);
    for (size_t i = 0; i < r; ++i) vec_axpy(dual, dual_coords[i], rs.a_basis[i]);
    root.dual = std::move(dual);
  }

  std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& x, const Root& y) {
    if (x.level != y.level) return x.level < y.level;
    return vec_lex_less(x.covector, y.covector);
  });
  for (size_t i = 0; i < rs.roots.size(); ++i)
    if (rs.roots[i].positive) rs.positive_ids.push_back(i);
  for (size_t i = 0; i < rs.roots.size(); ++i)
    if (rs.roots[i].level == 1) rs.simple_ids.push_back(i);
  if (rs.simple_ids.size() != r) throw Error("decompose: level-1 roots are not exactly the simple roots");

  // Dual basis {H^i} of the simple roots and H^Lambda.
  Mat alpha_on_a(r, r);  // alpha_i(a_k)
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < r; ++k) alpha_on_a(i, k) = rs.simple_root(i).covector[k];
  rs.h_lambda = Element(g.dim);
  Vec h_lambda_acoords(r);
  for (size_t j = 0; j < r; ++j) {
    const auto x = solve(alpha_on_a, unit_vec(r, j));
    if (!x) throw Error("decompose: simple roots do not form a basis");
    for (size_t k = 0; k < r; ++k) h_lambda_acoords[k] += (*x)[k];
  }
  for (size_t k = 0; k < r; ++k) vec_axpy(rs.h_lambda, h_lambda_acoords[k], rs.a_basis[k]);

  // level(lambda) = lambda(H^Lambda) as an integer, for every root.
  for (const auto& root : rs.roots) {
    Scalar lv;
    for (size_t k = 0; k < r; ++k) lv += root.covector[k] * h_lambda_acoords[k];
    if (lv != Scalar(root.level)) throw Error("decompose: level mismatch with H^Lambda");
  }

  // delta = (1/2) sum over positive roots of (dim g_lambda) lambda.
  rs.delta = Vec(r);
  for (size_t id : rs.positive_ids) {
    const Root& root = rs.roots[id];
    vec_axpy(rs.delta, Scalar(static_cast<long>(root.multiplicity), 2), root.covector);
  }

  // Exact eigenvector identity ad(H) X = lambda(H) X on all root-space bases.
  std::vector<Mat> ad_basis;
  for (size_t i = 0; i < r; ++i) ad_basis.push_back(ad_matrix(g, rs.a_basis[i]));
  for (const auto& root : rs.roots)
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < root.space.dim(); ++j) {
        const Vec x = root.space.basis_vector(j);
        if (ad_basis[i] * x != vec_scale(root.covector[i], x))
          throw Error("decompose: eigenvector identity fails");
      }

  std::vector<Vec> n_rows;
  for (size_t id : rs.positive_ids)
    for (size_t j = 0; j < rs.roots[id].space.dim(); ++j)
      n_rows.push_back(rs.roots[id].space.basis_vector(j));
  rs.n_space = Subspace::span_of(n_rows, g.dim);
  rs.an_space = sum(rs.a_space, rs.n_space);
  if (rs.n_space.dim() + rs.a_space.dim() != rs.an_space.dim())
    throw Error("decompose: a and n overlap");

  return rs;
}

/// [g_lambda, g_mu] contained in g_{lambda+mu} (in g_0 when mu = -lambda, in
/// {0} when lambda+mu is neither a root nor zero), over all pairs including
/// g_0 itself.
inline bool check_bracket_grading(const LieAlgebraData& g, const RootSystemData& rs) {
  const size_t r = rs.a_basis.size();
  std::vector<std::pair<Vec, const Subspace*>> blocks;
  const Vec zero_cov(r);
  blocks.emplace_back(zero_cov, &rs.g0);
  for (const auto& root : rs.roots) blocks.emplace_back(root.covector, &root.space);
  for (const auto& [cov_a, space_a] : blocks)
    for (const auto& [cov_b, space_b] : blocks) {
      const Subspace span = bracket_span(g, *space_a, *space_b);
      if (span.is_zero()) continue;
      const Vec target_cov = vec_add(cov_a, cov_b);
      const Subspace* target = nullptr;
      if (vec_is_zero(target_cov)) {
        target = &rs.g0;
      } else if (auto idx = rs.find_root(target_cov)) {
        target = &rs.roots[*idx].space;
      }
      if (target == nullptr) return false;  // bracket must vanish then
      if (!target->contains(span)) return false;
    }
  return true;
}

/// 2<delta,alpha> = |alpha|^2 (dim g_alpha + 2 dim g_2alpha) for every
/// simple root alpha.
inline bool delta_check(const RootSystemData& rs) {
  for (size_t k = 0; k < rs.simple_ids.size(); ++k) {
    const Root& alpha = rs.simple_root(k);
    const Scalar lhs = Scalar(2) * rs.covector_inner(rs.delta, alpha.covector);
    const Scalar norm2 = rs.covector_inner(alpha.covector, alpha.covector);
    const Scalar rhs = norm2 * Scalar(static_cast<long>(alpha.multiplicity) +
                                      2 * static_cast<long>(rs.double_root_multiplicity(alpha)));
    if (lhs != rhs) return false;
  }
  return true;
}

/// Applies the reflection s_alpha for a simple root; returns the permutation
/// of root indices. Verifies multiplicity invariance and that positive roots
/// not proportional to alpha stay positive.
inline std::vector<size_t> simple_reflection(const RootSystemData& rs, size_t simple_index) {
  const Root& alpha = rs.simple_root(simple_index);
  const Scalar alpha_norm2 = rs.covector_inner(alpha.covector, alpha.covector);
  std::vector<size_t> perm(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    const Root& lambda = rs.roots[i];
    const Scalar c = Scalar(2) * rs.covector_inner(lambda.covector, alpha.covector) / alpha_norm2;
    if (!c.is_integer()) throw Error("simple_reflection: non-integral Cartan pairing");
    Vec image = lambda.covector;
    vec_axpy(image, -c, alpha.covector);
    const auto target = rs.find_root(image);
    if (!target) throw Error("simple_reflection: image not a root");
    if (rs.roots[*target].multiplicity != lambda.multiplicity)
      throw Error("simple_reflection: multiplicity not preserved");
    // Proportional to alpha iff the covectors are linearly dependent.
    bool proportional = true;
    for (size_t u = 0; u < lambda.covector.size() && proportional; ++u)
      for (size_t v = u + 1; v < lambda.covector.size() && proportional; ++v)
        proportional = (lambda.covector[u] * alpha.covector[v] ==
                        lambda.covector[v] * alpha.covector[u]);
    if (lambda.positive && !proportional && !rs.roots[*target].positive)
      throw Error("simple_reflection: positivity not preserved");
    perm[i] = *target;
  }
  return perm;
}

/// The level gradation g^k, k = -m..m (indexed k+m). Certifies
/// theta g^k = g^{-k} and g^{k+1} = [g^1, g^k] for k >= 1.
inline std::vector<Subspace> gradation(const LieAlgebraData& g, const RootSystemData& rs) {
  const long m = rs.max_level;
  std::vector<Subspace> layers(static_cast<size_t>(2 * m + 1), Subspace(g.dim));
  layers[static_cast<size_t>(m)] = rs.g0;
  for (const auto& root : rs.roots) {
    auto& layer = layers[static_cast<size_t>(root.level + m)];
    layer = sum(layer, root.space);
  }
  for (long k = 1; k <= m; ++k) {
    if (apply_map(g.theta, layers[static_cast<size_t>(m + k)]) != layers[static_cast<size_t>(m - k)])
      throw Error("gradation: theta does not flip levels");
  }
  for (long k = 1; k + 1 <= m; ++k) {
    const Subspace generated =
        bracket_span(g, layers[static_cast<size_t>(m + 1)], layers[static_cast<size_t>(m + k)]);
    if (generated != layers[static_cast<size_t>(m + k + 1)])
      throw Error("gradation: generation failure");
  }
  return layers;
}

/// n, a (+) n, a maximal abelian torus part t of k0, and the maximally
/// noncompact Borel subalgebra t (+) a (+) n.
struct IwasawaData {
  Subspace n;
  Subspace an;
  Subspace t;
  Subspace borel;
};

inline IwasawaData nilpotent_part(const LieAlgebraData& g, const RootSystemData& rs) {
  IwasawaData iw;
  iw.n = rs.n_space;
  iw.an = rs.an_space;

  if (!is_subalgebra(g, iw.n)) throw Error("nilpotent_part: n not a subalgebra");
  Subspace series = iw.n;
  for (long k = 0; !series.is_zero(); ++k) {
    if (k > rs.max_level + 1) throw Error("nilpotent_part: n not nilpotent");
    series = bracket_span(g, iw.n, series);
  }
  if (bracket_span(g, iw.an, iw.an) != iw.n)
    throw Error("nilpotent_part: derived algebra of a+n is not n");

  // Torus part: repeatedly adjoin a centralizing vector of k0 until t equals
  // its own centralizer in k0.
  Subspace t(g.dim);
  while (true) {
    const Subspace candidates = centralizer_in(g, t, rs.k0);
    bool grown = false;
    for (size_t i = 0; i < candidates.dim(); ++i) {
      const Vec v = candidates.basis_vector(i);
      if (t.contains(v)) continue;
      Subspace bigger = sum(t, Subspace::span_of({v}, g.dim));
      if (is_abelian(g, bigger)) {
        t = std::move(bigger);
        grown = true;
        break;
      }
    }
    if (!grown) break;
  }
  if (centralizer_in(g, t, rs.k0) != t)
    throw Error("nilpotent_part: torus part not maximal abelian in k0");
  iw.t = t;
  iw.borel = sum(t, iw.an);
  if (!is_subalgebra(g, iw.borel)) throw Error("nilpotent_part: borel candidate not a subalgebra");
  return iw;
}

}  // namespace polarfol

#endif  // POLARFOL_ROOTS_HPP
