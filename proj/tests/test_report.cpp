#include <catch2/catch_amalgamated.hpp>

#include "polarfol/report.hpp"

using namespace polarfol;

TEST_CASE("scalars serialize as p/q, or p when the denominator is 1") {
  CHECK(to_json(Scalar(3, 4)) == "3/4");
  CHECK(to_json(Scalar(-3, 4)) == "-3/4");
  CHECK(to_json(Scalar(7)) == "7");
  CHECK(to_json(Scalar(0)) == "0");
  CHECK(to_json(Scalar(6, 3)) == "2");  // lowest terms
  CHECK(Scalar::from_string("3/4") == Scalar(3, 4));
  CHECK(Scalar::from_string("-5") == Scalar(-5));
  CHECK_THROWS_AS(Scalar::from_string("x"), Error);
  CHECK_THROWS_AS(Scalar::from_string("1/0"), Error);
}

TEST_CASE("Lie algebra bundles round-trip through JSON") {
  const BuiltAlgebra built = build("su21");
  const json j = lie_to_json(built.g);
  const LieAlgebraData back = lie_from_json(j);
  CHECK(back.dim == built.g.dim);
  CHECK(back.basis_labels == built.g.basis_labels);
  for (size_t i = 0; i < back.dim; ++i)
    for (size_t k = 0; k < back.dim; ++k) CHECK(back.table[i][k] == built.g.table[i][k]);
  CHECK(back.theta == built.g.theta);
  CHECK(back.killing == built.g.killing);
  // Derived data is rebuilt, not stored.
  CHECK(back.metric == built.g.metric);
  CHECK(back.k_space == built.g.k_space);
  CHECK(back.p_space == built.g.p_space);
  // The reloaded algebra decomposes identically.
  const RootSystemData rs = decompose(back, built.canonical_a);
  CHECK(rs.simple_ids.size() == 1);
}

TEST_CASE("dynkin labels for the catalog (cosmetic)") {
  const auto label = [](const std::string& name) {
    const BuiltAlgebra b = build(name);
    return dynkin_label(decompose(b.g, b.canonical_a));
  };
  CHECK(label("sl2r") == "A1");
  CHECK(label("sl3r") == "A2");
  CHECK(label("sl4r") == "A3");
  CHECK(label("su21") == "BC1");
  CHECK(label("su31") == "BC1");
  CHECK(label("su22") == "C2");
  CHECK(label("so1n:4") == "A1");
  CHECK(label("sum:sl2r+sl2r") == "A1xA1");
}
