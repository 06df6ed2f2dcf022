#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "polarfol/foliations.hpp"
#include "polarfol/prng.hpp"

using namespace polarfol;

namespace {

struct Ctx {
  BuiltAlgebra built;
  RootSystemData rs;
};

const Ctx& ctx(const std::string& name) {
  static std::map<std::string, Ctx> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    BuiltAlgebra b = build(name);
    RootSystemData rs = decompose(b.g, b.canonical_a);
    it = cache.emplace(name, Ctx{std::move(b), std::move(rs)}).first;
  }
  return it->second;
}

std::set<char> cases_of(const std::vector<FoliationSpec>& specs) {
  std::set<char> letters;
  for (const auto& s : specs) letters.insert(case_letter(s.kase));
  return letters;
}

Subspace subalgebra_closure(const LieAlgebraData& g, Subspace s) {
  while (true) {
    const Subspace next = sum(s, bracket_span(g, s, s));
    if (next == s) return s;
    s = next;
  }
}

}  // namespace

TEST_CASE("build_candidate: case D on su(2,1) has dimension 2") {
  const auto& c = ctx("su21");
  FoliationSpec spec;
  spec.kase = FoliationCase::D;
  spec.root = 0;
  spec.params = {c.rs.simple_root(0).space.basis_vector(0)};
  const Subspace s = build_candidate(c.built.g, c.rs, spec);
  CHECK(s.dim() == 2);  // ker alpha = 0 in rank one, dim n = 3
  CHECK(c.rs.an_space.dim() - s.dim() == 2);
}

TEST_CASE("build_candidate: case A with v = a degenerates to n") {
  const auto& c = ctx("sl3r");
  FoliationSpec spec;
  spec.kase = FoliationCase::A;
  spec.params = {c.rs.a_basis[0], c.rs.a_basis[1]};
  const Subspace s = build_candidate(c.built.g, c.rs, spec);
  CHECK(s == c.rs.n_space);
}

TEST_CASE("build_candidate: every case is a codimension-2 subalgebra where applicable") {
  for (const auto& name : catalog_family_names()) {
    INFO(name);
    const auto& c = ctx(name);
    for (const auto& spec : enumerate_candidates(c.built.g, c.rs, 1, 2)) {
      INFO(std::string(1, case_letter(spec.kase)) << " root=" << spec.root << " " << spec.variant);
      const Subspace s = build_candidate(c.built.g, c.rs, spec);
      CHECK(is_subalgebra(c.built.g, s));
      CHECK(c.rs.an_space.dim() - s.dim() == 2);
      CHECK(c.rs.an_space.contains(s));
    }
  }
}

TEST_CASE("enumerate_candidates: applicable cases per family") {
  CHECK(cases_of(enumerate_candidates(ctx("sl2r").built.g, ctx("sl2r").rs, 0)) ==
        std::set<char>{'D'});
  CHECK(enumerate_candidates(ctx("sl2r").built.g, ctx("sl2r").rs, 0).size() == 1);

  // A2 has no orthogonal simple pair and multiplicity 1 everywhere.
  CHECK(cases_of(enumerate_candidates(ctx("sl3r").built.g, ctx("sl3r").rs, 0)) ==
        std::set<char>{'A', 'B', 'D'});

  // B2: simple roots not orthogonal, short multiplicity 3 admits planes.
  CHECK(cases_of(enumerate_candidates(ctx("so25").built.g, ctx("so25").rs, 0)) ==
        std::set<char>{'A', 'B', 'D', 'E'});

  // A3 has a disconnected simple pair, so case C appears.
  CHECK(cases_of(enumerate_candidates(ctx("sl4r").built.g, ctx("sl4r").rs, 0)) ==
        std::set<char>{'A', 'B', 'C', 'D'});

  // su(2,1): rank one and the only plane in g_alpha is not abelian.
  CHECK(cases_of(enumerate_candidates(ctx("su21").built.g, ctx("su21").rs, 0)) ==
        std::set<char>{'D'});

  // su(3,1): g_alpha ~ C^2 contains totally real planes even with g_2alpha != 0.
  CHECK(cases_of(enumerate_candidates(ctx("su31").built.g, ctx("su31").rs, 0)) ==
        std::set<char>{'D', 'E'});
}

TEST_CASE("abelian plane search: honest absence and presence") {
  {
    const auto& c = ctx("su21");
    CHECK(!find_abelian_plane(c.built.g, c.rs, c.rs.simple_root(0), 7).has_value());
  }
  {
    const auto& c = ctx("su31");
    const auto plane = find_abelian_plane(c.built.g, c.rs, c.rs.simple_root(0), 7);
    REQUIRE(plane.has_value());
    CHECK(vec_is_zero(bracket(c.built.g, plane->first, plane->second)));
    CHECK(Subspace::span_of({plane->first, plane->second}, c.built.g.dim).dim() == 2);
  }
  {
    const auto& c = ctx("sl2r");
    CHECK(!find_abelian_plane(c.built.g, c.rs, c.rs.simple_root(0), 7).has_value());
  }
}

TEST_CASE("build_candidate: violated clauses are named") {
  {
    const auto& c = ctx("sl3r");
    FoliationSpec spec;
    spec.kase = FoliationCase::C;
    spec.root = 0;
    spec.root2 = 1;
    spec.params = {c.rs.simple_root(0).space.basis_vector(0),
                   c.rs.simple_root(1).space.basis_vector(0)};
    CHECK_THROWS_WITH(build_candidate(c.built.g, c.rs, spec), "simple roots not orthogonal");
  }
  {
    const auto& c = ctx("su21");
    FoliationSpec spec;
    spec.kase = FoliationCase::E;
    spec.root = 0;
    spec.params = {c.rs.simple_root(0).space.basis_vector(0),
                   c.rs.simple_root(0).space.basis_vector(1)};
    CHECK_THROWS_WITH(build_candidate(c.built.g, c.rs, spec), "case E: v not abelian");
  }
  {
    const auto& c = ctx("su21");
    FoliationSpec spec;
    spec.kase = FoliationCase::D;
    spec.root = 0;
    spec.params = {c.rs.a_basis[0]};  // not in g_alpha
    CHECK_THROWS_AS(build_candidate(c.built.g, c.rs, spec), Error);
  }
}

TEST_CASE("parabolic: empty and full Phi") {
  const auto& c = ctx("sl3r");
  {
    const ParabolicData pd = parabolic(c.built.g, c.rs, {});
    CHECK(pd.a_phi == c.rs.a_space);
    CHECK(pd.n_phi == c.rs.n_space);
    CHECK(pd.l_phi == c.rs.g0);
    CHECK(pd.g_phi.is_zero());
  }
  {
    const ParabolicData pd = parabolic(c.built.g, c.rs, {0, 1});
    CHECK(pd.n_phi.is_zero());
    CHECK(pd.a_phi.is_zero());
    CHECK(pd.l_phi == Subspace::full(c.built.g.dim));
    CHECK(sum(pd.l_phi, pd.n_phi) == Subspace::full(c.built.g.dim));
  }
}

TEST_CASE("parabolic: sl(3,R) with Phi = {alpha_1}") {
  const auto& c = ctx("sl3r");
  const ParabolicData pd = parabolic(c.built.g, c.rs, {0});
  CHECK(pd.a_phi.dim() == 1);
  CHECK(pd.n_phi.dim() == 2);
  CHECK(pd.g_phi.dim() == 3);  // a copy of sl(2,R)
  CHECK(is_subalgebra(c.built.g, pd.g_phi));
  CHECK(intersect(c.rs.a_space, pd.g_phi).dim() == 1);
}

TEST_CASE("parabolic: boundary component rank across the catalog") {
  for (const auto& name : catalog_family_names()) {
    INFO(name);
    const auto& c = ctx(name);
    for (size_t k = 0; k < c.rs.simple_ids.size(); ++k) {
      const ParabolicData pd = parabolic(c.built.g, c.rs, {k});
      CHECK(intersect(c.rs.a_space, pd.g_phi).dim() == 1);
    }
  }
}

TEST_CASE("canonical_extension: trivial subgroup extends to a_Phi + n_Phi") {
  const auto& c = ctx("sl3r");
  const ParabolicData pd = parabolic(c.built.g, c.rs, {0});
  const Subspace ext = canonical_extension(c.built.g, pd, Subspace(c.built.g.dim));
  CHECK(ext == sum(pd.a_phi, pd.n_phi));
}

TEST_CASE("canonical_extension: h_hat outside g_Phi is rejected") {
  const auto& c = ctx("sl3r");
  const ParabolicData pd = parabolic(c.built.g, c.rs, {0});
  const Subspace bad = Subspace::span_of({c.rs.simple_root(1).space.basis_vector(0)}, c.built.g.dim);
  CHECK_THROWS_WITH(canonical_extension(c.built.g, pd, bad),
                    "canonical_extension: h_hat not inside g_Phi");
}

TEST_CASE("a subalgebra whose a+n projection covers g_lambda and a nonzero H contains g_lambda") {
  // Constructive property check on small instances: tilt a generating set of
  // g_lambda into the compact torus direction, close under brackets, and
  // observe the tilt is forced away.
  for (const std::string name : {"su21", "su22", "so24"}) {
    INFO(name);
    const auto& c = ctx(name);
    const LieAlgebraData& g = c.built.g;
    const IwasawaData iw = nilpotent_part(g, c.rs);
    if (iw.t.is_zero()) continue;
    Prng rng(91);
    for (size_t k = 0; k < c.rs.simple_ids.size(); ++k) {
      const Root& lambda = c.rs.simple_root(k);
      // H in a with lambda(H) != 0: the metric dual works.
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Vec> gens;
        Vec th = lambda.dual;
        vec_axpy(th, rng.small_scalar(), iw.t.basis_vector(0));
        gens.push_back(th);
        for (size_t i = 0; i < lambda.space.dim(); ++i) {
          Vec tx = lambda.space.basis_vector(i);
          vec_axpy(tx, rng.small_scalar(), iw.t.basis_vector(0));
          gens.push_back(tx);
        }
        const Subspace q = subalgebra_closure(g, Subspace::span_of(gens, g.dim));
        REQUIRE(iw.borel.contains(q));
        // Hypotheses hold by construction; the conclusion must follow.
        CHECK(q.contains(lambda.space));
      }
    }
  }
}
