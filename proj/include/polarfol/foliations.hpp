#ifndef POLARFOL_FOLIATIONS_HPP
#define POLARFOL_FOLIATIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarfol/prng.hpp"
#include "polarfol/roots.hpp"

namespace polarfol {

/// The five families of codimension-two candidates inside a (+) n:
///   A: (a - v) (+) n                v a plane in a
///   B: (a - l) (+) (n - l_alpha)    l a line in ker alpha, l_alpha in g_alpha
///   C: a (+) (n - (l_alpha (+) l_beta))   alpha, beta orthogonal simple roots
///   D: (ker alpha) (+) (n - l_alpha)
///   E: a (+) (n - v_alpha)          v_alpha an abelian plane in g_alpha
enum class FoliationCase { A, B, C, D, E };

inline char case_letter(FoliationCase c) { return "ABCDE"[static_cast<int>(c)]; }

struct FoliationSpec {
  FoliationCase kase = FoliationCase::A;
  long root = -1;    // simple root index (unused for case A)
  long root2 = -1;   // second simple root, case C only
  std::vector<Element> params;
  std::string variant = "canonical";
};

namespace foliation_detail {

inline void require(bool cond, const std::string& message) {
  if (!cond) throw Error(message);
}

inline Subspace line(const Element& v, size_t ambient) {
  return Subspace::span_of({v}, ambient);
}

}  // namespace foliation_detail

/// ker alpha as a subspace of a.
inline Subspace kernel_of_root(const LieAlgebraData& g, const RootSystemData& rs, const Root& alpha) {
  std::vector<Vec> rows;
  // H in a with alpha(H) = 0: orthogonal complement of the dual H_alpha.
  return form_complement(foliation_detail::line(alpha.dual, g.dim), rs.a_space, g.metric);
}

/// Builds the candidate subalgebra of a foliation spec and certifies it: a
/// subalgebra of a (+) n of codimension exactly two. Violated preconditions
/// throw with the violated clause named.
inline Subspace build_candidate(const LieAlgebraData& g, const RootSystemData& rs, const FoliationSpec& spec) {
  using foliation_detail::line;
  using foliation_detail::require;
  const size_t n = g.dim;

  const auto simple = [&](long k) -> const Root& {
    require(k >= 0 && static_cast<size_t>(k) < rs.simple_ids.size(), "root index not a simple root");
    return rs.simple_root(static_cast<size_t>(k));
  };

  Subspace s(n);
  switch (spec.kase) {
    case FoliationCase::A: {
      require(spec.params.size() == 2, "case A: expected two plane generators");
      const Subspace plane = Subspace::span_of({spec.params[0], spec.params[1]}, n);
      require(plane.dim() == 2, "case A: v not 2-dimensional");
      require(rs.a_space.contains(plane), "case A: v not contained in a");
      s = sum(form_complement(plane, rs.a_space, g.metric), rs.n_space);
      break;
    }
    case FoliationCase::B: {
      const Root& alpha = simple(spec.root);
      require(spec.params.size() == 2, "case B: expected line generators for l and l_alpha");
      const Subspace ker = kernel_of_root(g, rs, alpha);
      require(!ker.is_zero(), "case B: ker alpha is trivial");
      const Element& ell = spec.params[0];
      require(!vec_is_zero(ell) && ker.contains(ell), "case B: l not a line in ker alpha");
      const Element& xi = spec.params[1];
      require(!vec_is_zero(xi) && alpha.space.contains(xi), "case B: l_alpha not a line in g_alpha");
      s = sum(form_complement(line(ell, n), rs.a_space, g.metric),
              form_complement(line(xi, n), rs.n_space, g.metric));
      break;
    }
    case FoliationCase::C: {
      const Root& alpha = simple(spec.root);
      const Root& beta = simple(spec.root2);
      require(spec.root != spec.root2, "case C: simple roots must be distinct");
      require(rs.covector_inner(alpha.covector, beta.covector).is_zero(),
              "simple roots not orthogonal");
      require(spec.params.size() == 2, "case C: expected line generators in g_alpha and g_beta");
      const Element& xi = spec.params[0];
      const Element& eta = spec.params[1];
      require(!vec_is_zero(xi) && alpha.space.contains(xi), "case C: l_alpha not a line in g_alpha");
      require(!vec_is_zero(eta) && beta.space.contains(eta), "case C: l_beta not a line in g_beta");
      s = sum(rs.a_space,
              form_complement(sum(line(xi, n), line(eta, n)), rs.n_space, g.metric));
      break;
    }
    case FoliationCase::D: {
      const Root& alpha = simple(spec.root);
      require(spec.params.size() == 1, "case D: expected a single xi");
      const Element& xi = spec.params[0];
      require(!vec_is_zero(xi) && alpha.space.contains(xi), "case D: xi not a nonzero vector of g_alpha");
      s = sum(kernel_of_root(g, rs, alpha), form_complement(line(xi, n), rs.n_space, g.metric));
      break;
    }
    case FoliationCase::E: {
      const Root& alpha = simple(spec.root);
      require(spec.params.size() == 2, "case E: expected two plane generators");
      const Subspace plane = Subspace::span_of({spec.params[0], spec.params[1]}, n);
      require(plane.dim() == 2 && alpha.space.contains(plane), "case E: v not a plane in g_alpha");
      require(vec_is_zero(bracket(g, spec.params[0], spec.params[1])), "case E: v not abelian");
      s = sum(rs.a_space, form_complement(plane, rs.n_space, g.metric));
      break;
    }
  }

  if (!rs.an_space.contains(s) || rs.an_space.dim() - s.dim() != 2)
    throw Error("build_candidate: codimension in a+n is not two");
  if (!is_subalgebra(g, s)) throw Error("build_candidate: result is not a subalgebra");
  return s;
}

/// Searches g_alpha for an abelian plane. Deterministic fast paths first
/// (no 2-alpha root: any plane; scan of basis pairs), then a seeded random
/// search capped at 1000 draws. Returns nullopt when nothing was found --
/// absence within the cap, not a proof of nonexistence.
inline std::optional<std::pair<Element, Element>> find_abelian_plane(
    const LieAlgebraData& g, const RootSystemData& rs, const Root& alpha, uint64_t seed) {
  const Subspace& ga = alpha.space;
  if (ga.dim() < 2) return std::nullopt;
  if (rs.double_root_multiplicity(alpha) == 0)
    return std::make_pair(ga.basis_vector(0), ga.basis_vector(1));
  for (size_t i = 0; i < ga.dim(); ++i)
    for (size_t j = i + 1; j < ga.dim(); ++j)
      if (vec_is_zero(bracket(g, ga.basis_vector(i), ga.basis_vector(j))))
        return std::make_pair(ga.basis_vector(i), ga.basis_vector(j));
  Prng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Element v = rng.nonzero_in(ga);
    // Commutant of v inside g_alpha; any second independent direction there
    // spans an abelian plane with v.
    const Mat ad_v = ad_matrix(g, v);
    std::vector<Vec> rows;
    for (size_t j = 0; j < ga.dim(); ++j) rows.push_back(ad_v * ga.basis_vector(j));
    const Mat images = Mat::from_rows(rows);
    const Mat coeffs = kernel_basis(images.transpose());
    Subspace commutant(g.dim);
    {
      std::vector<Vec> cm;
      for (size_t r = 0; r < coeffs.rows(); ++r) {
        Vec w(g.dim);
        for (size_t j = 0; j < ga.dim(); ++j) vec_axpy(w, coeffs(r, j), ga.basis_vector(j));
        cm.push_back(std::move(w));
      }
      commutant = Subspace::span_of(cm, g.dim);
    }
    if (commutant.dim() < 2) continue;
    for (size_t r = 0; r < commutant.dim(); ++r) {
      const Vec w = commutant.basis_vector(r);
      if (Subspace::span_of({v, w}, g.dim).dim() == 2)
        return std::make_pair(v, w);
    }
  }
  return std::nullopt;
}

/// Random nonzero vector / plane parameter helpers with per-candidate seeds,
/// so reports are reproducible per (seed, case, root, variant).
namespace foliation_detail {
inline uint64_t sub_seed(uint64_t seed, FoliationCase c, long root, long root2, int variant) {
  uint64_t h = seed;
  h = h * 1000003ull + static_cast<uint64_t>(static_cast<int>(c) + 1);
  h = h * 1000003ull + static_cast<uint64_t>(root + 2);
  h = h * 1000003ull + static_cast<uint64_t>(root2 + 2);
  h = h * 1000003ull + static_cast<uint64_t>(variant + 1);
  return h;
}
}  // namespace foliation_detail

/// Enumerates every applicable case for this root system with canonical
/// parameters; `extra_variants` adds that many seeded-random parameter
/// choices per applicable candidate. Case E is skipped (honestly) when no
/// abelian plane was found.
inline std::vector<FoliationSpec> enumerate_candidates(const LieAlgebraData& g,
                                                       const RootSystemData& rs,
                                                       uint64_t seed,
                                                       int extra_variants = 0) {
  using foliation_detail::sub_seed;
  std::vector<FoliationSpec> out;
  const size_t rank = rs.a_basis.size();
  const long nsimple = static_cast<long>(rs.simple_ids.size());

  const auto emit = [&](FoliationSpec spec) { out.push_back(std::move(spec)); };

  // Case A: any plane in a; applicable when rank >= 2.
  if (rank >= 2) {
    FoliationSpec spec;
    spec.kase = FoliationCase::A;
    spec.params = {rs.a_basis[0], rs.a_basis[1]};
    emit(spec);
    for (int v = 1; v <= extra_variants; ++v) {
      Prng rng(sub_seed(seed, FoliationCase::A, -1, -1, v));
      FoliationSpec sv;
      sv.kase = FoliationCase::A;
      sv.variant = "seed:" + std::to_string(v);
      do {
        sv.params = {rng.nonzero_in(rs.a_space), rng.nonzero_in(rs.a_space)};
      } while (Subspace::span_of(sv.params, g.dim).dim() != 2);
      emit(sv);
    }
  }

  // Case B: per simple root, needs ker alpha nonzero.
  if (rank >= 2) {
    for (long k = 0; k < nsimple; ++k) {
      const Root& alpha = rs.simple_root(static_cast<size_t>(k));
      const Subspace ker = kernel_of_root(g, rs, alpha);
      FoliationSpec spec;
      spec.kase = FoliationCase::B;
      spec.root = k;
      spec.params = {ker.basis_vector(0), alpha.space.basis_vector(0)};
      emit(spec);
      for (int v = 1; v <= extra_variants; ++v) {
        Prng rng(sub_seed(seed, FoliationCase::B, k, -1, v));
        FoliationSpec sv;
        sv.kase = FoliationCase::B;
        sv.root = k;
        sv.variant = "seed:" + std::to_string(v);
        sv.params = {rng.nonzero_in(ker), rng.nonzero_in(alpha.space)};
        emit(sv);
      }
    }
  }

  // Case C: orthogonal pairs of simple roots.
  for (long k = 0; k < nsimple; ++k)
    for (long l = k + 1; l < nsimple; ++l) {
      const Root& alpha = rs.simple_root(static_cast<size_t>(k));
      const Root& beta = rs.simple_root(static_cast<size_t>(l));
      if (!rs.covector_inner(alpha.covector, beta.covector).is_zero()) continue;
      FoliationSpec spec;
      spec.kase = FoliationCase::C;
      spec.root = k;
      spec.root2 = l;
      spec.params = {alpha.space.basis_vector(0), beta.space.basis_vector(0)};
      emit(spec);
      for (int v = 1; v <= extra_variants; ++v) {
        Prng rng(sub_seed(seed, FoliationCase::C, k, l, v));
        FoliationSpec sv = spec;
        sv.variant = "seed:" + std::to_string(v);
        sv.params = {rng.nonzero_in(alpha.space), rng.nonzero_in(beta.space)};
        emit(sv);
      }
    }

  // Case D: every simple root.
  for (long k = 0; k < nsimple; ++k) {
    const Root& alpha = rs.simple_root(static_cast<size_t>(k));
    FoliationSpec spec;
    spec.kase = FoliationCase::D;
    spec.root = k;
    spec.params = {alpha.space.basis_vector(0)};
    emit(spec);
    for (int v = 1; v <= extra_variants; ++v) {
      Prng rng(sub_seed(seed, FoliationCase::D, k, -1, v));
      FoliationSpec sv;
      sv.kase = FoliationCase::D;
      sv.root = k;
      sv.variant = "seed:" + std::to_string(v);
      sv.params = {rng.nonzero_in(alpha.space)};
      emit(sv);
    }
  }

  // Case E: simple roots whose g_alpha contains an abelian plane.
  for (long k = 0; k < nsimple; ++k) {
    const Root& alpha = rs.simple_root(static_cast<size_t>(k));
    const auto plane = find_abelian_plane(g, rs, alpha, sub_seed(seed, FoliationCase::E, k, -1, 0));
    if (!plane) continue;
    FoliationSpec spec;
    spec.kase = FoliationCase::E;
    spec.root = k;
    spec.params = {plane->first, plane->second};
    emit(spec);
    for (int v = 1; v <= extra_variants; ++v) {
      Prng rng(sub_seed(seed, FoliationCase::E, k, -1, v));
      // Seeded re-draw: random v, then a commuting partner.
      std::optional<std::pair<Element, Element>> p;
      for (int attempt = 0; attempt < 1000 && !p; ++attempt) {
        const Element x = rng.nonzero_in(alpha.space);
        const Element y = rng.nonzero_in(alpha.space);
        if (!vec_is_zero(bracket(g, x, y))) continue;
        if (Subspace::span_of({x, y}, g.dim).dim() != 2) continue;
        p = std::make_pair(x, y);
      }
      if (!p) p = plane;
      FoliationSpec sv;
      sv.kase = FoliationCase::E;
      sv.root = k;
      sv.variant = "seed:" + std::to_string(v);
      sv.params = {p->first, p->second};
      emit(sv);
    }
  }

  return out;
}

/// Langlands data of the parabolic subalgebra q_Phi determined by a subset
/// Phi of simple roots. Every structural identity is certified exactly.
struct ParabolicData {
  std::vector<size_t> phi;
  Subspace a_phi;  // intersection of ker alpha over Phi
  Subspace l_phi;  // g_0 (+) root spaces spanned by Phi
  Subspace n_phi;  // positive root spaces outside Phi's span
  Subspace m_phi;  // l_phi minus a_phi
  Subspace g_phi;  // [l_phi, l_phi]
};

inline ParabolicData parabolic(const LieAlgebraData& g, const RootSystemData& rs,
                               std::vector<size_t> phi) {
  std::sort(phi.begin(), phi.end());
  for (size_t k : phi)
    if (k >= rs.simple_ids.size()) throw Error("parabolic: index not a simple root");

  ParabolicData pd;
  pd.phi = phi;

  // a_Phi: common kernel of the roots in Phi. alpha(H) = <H, H_alpha>, so
  // intersecting with ker alpha means complementing the projection of the
  // dual into the current space.
  Subspace a_phi = rs.a_space;
  for (size_t k : phi) {
    const Vec proj = project_onto(rs.simple_root(k).dual, a_phi, g.metric);
    if (vec_is_zero(proj)) continue;
    a_phi = form_complement(Subspace::span_of({proj}, g.dim), a_phi, g.metric);
  }
  pd.a_phi = a_phi;

  const auto supported_in_phi = [&](const Root& root) {
    for (size_t i = 0; i < root.simple_coords.size(); ++i) {
      if (root.simple_coords[i].is_zero()) continue;
      if (std::find(phi.begin(), phi.end(), i) == phi.end()) return false;
    }
    return true;
  };

  Subspace l_phi = rs.g0;
  Subspace n_phi(g.dim);
  for (const auto& root : rs.roots) {
    if (supported_in_phi(root)) {
      l_phi = sum(l_phi, root.space);
    } else if (root.positive) {
      n_phi = sum(n_phi, root.space);
    }
  }
  pd.l_phi = l_phi;
  pd.n_phi = n_phi;
  pd.m_phi = form_complement(pd.a_phi, l_phi, g.metric);
  pd.g_phi = bracket_span(g, l_phi, l_phi);

  if (pd.g_phi != bracket_span(g, pd.m_phi, pd.m_phi))
    throw Error("parabolic: [l,l] != [m,m]");
  if (!is_abelian(g, pd.a_phi)) throw Error("parabolic: a_phi not abelian");
  if (!pd.n_phi.is_zero() && !is_subalgebra(g, pd.n_phi))
    throw Error("parabolic: n_phi not a subalgebra");
  const Subspace an_phi = sum(pd.a_phi, pd.n_phi);
  const Subspace q_phi = sum(pd.l_phi, pd.n_phi);
  if (!is_subalgebra(g, q_phi)) throw Error("parabolic: q_phi not a subalgebra");
  // [l_phi, n_phi] inside n_phi.
  if (!pd.n_phi.contains(bracket_span(g, pd.l_phi, pd.n_phi)))
    throw Error("parabolic: l_phi does not normalize n_phi");
  // Boundary component rank: dim(a intersect g_phi) = |Phi|.
  if (intersect(rs.a_space, pd.g_phi).dim() != phi.size())
    throw Error("parabolic: boundary component rank mismatch");
  return pd;
}

/// h_hat (+) a_Phi (+) n_Phi for a subalgebra h_hat of g_Phi; certifies the
/// result is a subalgebra and that m_Phi normalizes a_Phi (+) n_Phi.
inline Subspace canonical_extension(const LieAlgebraData& g, const ParabolicData& pd,
                                    const Subspace& h_hat) {
  if (!pd.g_phi.contains(h_hat)) throw Error("canonical_extension: h_hat not inside g_Phi");
  if (!is_subalgebra(g, h_hat)) throw Error("canonical_extension: h_hat not a subalgebra");
  const Subspace an_phi = sum(pd.a_phi, pd.n_phi);
  if (!an_phi.contains(bracket_span(g, pd.m_phi, an_phi)))
    throw Error("canonical_extension: m_Phi does not normalize a_Phi + n_Phi");
  const Subspace ext = sum(h_hat, an_phi);
  if (!is_subalgebra(g, ext)) throw Error("canonical_extension: extension not a subalgebra");
  return ext;
}

}  // namespace polarfol

#endif  // POLARFOL_FOLIATIONS_HPP
