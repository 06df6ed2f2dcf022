#ifndef POLARFOL_REPORT_HPP
#define POLARFOL_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "polarfol/geometry.hpp"

namespace polarfol {

using nlohmann::json;

inline json to_json(const Scalar& s) { return s.str(); }

inline json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline Vec vec_from_json(const json& a) {
  Vec v;
  for (const auto& x : a) v.push_back(Scalar::from_string(x.get<std::string>()));
  return v;
}

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

inline Mat mat_from_json(const json& rows) {
  std::vector<Vec> r;
  for (const auto& row : rows) r.push_back(vec_from_json(row));
  return Mat::from_rows(r);
}

inline json to_json(const Subspace& s) {
  json out;
  out["ambient_dim"] = s.ambient_dim();
  out["basis"] = to_json(s.basis());
  return out;
}

/// Cacheable bundle for a Lie algebra: basis labels, structure constants,
/// theta, and the Killing form. The derived data (metric, k/p split) is
/// rebuilt on load.
inline json lie_to_json(const LieAlgebraData& g) {
  json out;
  out["dim"] = g.dim;
  out["basis_labels"] = g.basis_labels;
  json table = json::array();
  for (size_t i = 0; i < g.dim; ++i) {
    json row = json::array();
    for (size_t j = 0; j < g.dim; ++j) row.push_back(to_json(g.table[i][j]));
    table.push_back(row);
  }
  out["structure_constants"] = table;
  out["theta"] = to_json(g.theta);
  out["killing"] = to_json(g.killing);
  return out;
}

inline LieAlgebraData lie_from_json(const json& in) {
  LieAlgebraData g;
  g.dim = in.at("dim").get<size_t>();
  g.basis_labels = in.at("basis_labels").get<std::vector<std::string>>();
  g.table.assign(g.dim, std::vector<Vec>(g.dim));
  const json& table = in.at("structure_constants");
  for (size_t i = 0; i < g.dim; ++i)
    for (size_t j = 0; j < g.dim; ++j) g.table[i][j] = vec_from_json(table[i][j]);
  g.theta = mat_from_json(in.at("theta"));
  g.killing = mat_from_json(in.at("killing"));
  g.metric = Scalar(-1) * (g.killing * g.theta);
  g.k_space = kernel(g.theta - Mat::identity(g.dim));
  g.p_space = kernel(g.theta + Mat::identity(g.dim));
  return g;
}

/// Cosmetic component label from the Cartan pairings of the simple roots.
inline std::string dynkin_label(const RootSystemData& rs) {
  const size_t r = rs.simple_ids.size();
  std::vector<std::vector<size_t>> adj(r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j)
      if (!rs.covector_inner(rs.simple_root(i).covector, rs.simple_root(j).covector).is_zero()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<int> comp(r, -1);
  int ncomp = 0;
  for (size_t i = 0; i < r; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      const size_t u = stack.back();
      stack.pop_back();
      for (size_t v : adj[u])
        if (comp[v] < 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  std::string label;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<size_t> nodes;
    for (size_t i = 0; i < r; ++i)
      if (comp[i] == c) nodes.push_back(i);
    const size_t k = nodes.size();
    bool nonreduced = false;
    for (size_t i : nodes) nonreduced = nonreduced || rs.double_root_multiplicity(rs.simple_root(i)) > 0;
    std::string piece;
    if (nonreduced) {
      piece = "BC" + std::to_string(k);
    } else if (k == 1) {
      piece = "A1";
    } else {
      // Single vs double edges, from the Cartan integers.
      bool has_double = false;
      for (size_t a = 0; a < k && !has_double; ++a)
        for (size_t b = a + 1; b < k && !has_double; ++b) {
          const Vec& x = rs.simple_root(nodes[a]).covector;
          const Vec& y = rs.simple_root(nodes[b]).covector;
          const Scalar prod = (Scalar(2) * rs.covector_inner(x, y) / rs.covector_inner(y, y)) *
                              (Scalar(2) * rs.covector_inner(x, y) / rs.covector_inner(x, x));
          if (prod == Scalar(2)) has_double = true;
        }
      if (!has_double) {
        piece = "A" + std::to_string(k);
      } else {
        // B vs C is a naming convention at rank 2; take the lex-first
        // simple root long for B.
        const Scalar n0 = rs.covector_inner(rs.simple_root(nodes[0]).covector,
                                            rs.simple_root(nodes[0]).covector);
        const Scalar n1 = rs.covector_inner(rs.simple_root(nodes[1]).covector,
                                            rs.simple_root(nodes[1]).covector);
        piece = (n0 > n1 ? "B" : "C") + std::to_string(k);
      }
    }
    if (!label.empty()) label += "x";
    label += piece;
  }
  return label.empty() ? "trivial" : label;
}

inline json root_system_to_json(const RootSystemData& rs) {
  json out;
  out["rank"] = rs.a_basis.size();
  out["dynkin"] = dynkin_label(rs);
  out["k0_dim"] = rs.k0.dim();
  out["g0_dim"] = rs.g0.dim();
  out["max_level"] = rs.max_level;
  out["delta"] = to_json(rs.delta);
  json simples = json::array();
  for (size_t k = 0; k < rs.simple_ids.size(); ++k) {
    const Root& alpha = rs.simple_root(k);
    json s;
    s["index"] = k;
    s["covector"] = to_json(alpha.covector);
    s["multiplicity"] = alpha.multiplicity;
    s["double_multiplicity"] = rs.double_root_multiplicity(alpha);
    s["norm2"] = rs.covector_inner(alpha.covector, alpha.covector).str();
    simples.push_back(s);
  }
  out["simple_roots"] = simples;
  json roots = json::array();
  for (const auto& root : rs.roots) {
    json rj;
    rj["covector"] = to_json(root.covector);
    rj["simple_coords"] = to_json(root.simple_coords);
    rj["multiplicity"] = root.multiplicity;
    rj["level"] = root.level;
    rj["positive"] = root.positive;
    rj["dual"] = to_json(root.dual);
    roots.push_back(rj);
  }
  out["roots"] = roots;
  return out;
}

inline json spec_to_json(const FoliationSpec& spec) {
  json out;
  out["case"] = std::string(1, case_letter(spec.kase));
  if (spec.root >= 0) out["root"] = spec.root;
  if (spec.root2 >= 0) out["root2"] = spec.root2;
  out["variant"] = spec.variant;
  json params = json::array();
  for (const auto& p : spec.params) params.push_back(to_json(p));
  out["parameters"] = params;
  return out;
}

inline json report_to_json(const VerificationReport& rep) {
  json out;
  out["spec"] = spec_to_json(rep.spec);
  out["is_subalgebra"] = rep.is_subalgebra;
  out["codimension"] = rep.codimension;
  out["is_polar"] = rep.is_polar;
  out["is_hyperpolar"] = rep.is_hyperpolar;
  out["normal_space"] = to_json(rep.normal_space);
  out["section_curvature"] =
      rep.section_curvature ? json(rep.section_curvature->str()) : json(nullptr);
  out["mean_curvature_at_e"] = to_json(rep.mean_curvature);
  out["mean_curvature_coeff"] =
      rep.mean_curvature_coeff ? json(rep.mean_curvature_coeff->str()) : json(nullptr);
  out["extension_verified"] =
      rep.extension_verified ? json(*rep.extension_verified) : json(nullptr);
  out["ideal_in_an"] = rep.ideal_in_an;
  out["expected_polar"] = rep.expected_polar;
  out["expected_hyperpolar"] = rep.expected_hyperpolar;
  out["matches_expectation"] = rep.matches_expectation;
  return out;
}

inline constexpr const char* kSchema = "polarfol/1";
inline constexpr const char* kToolVersion = "1.0.0";

inline json bundle_header(const std::string& family, uint64_t seed) {
  json out;
  out["schema"] = kSchema;
  out["tool_version"] = kToolVersion;
  out["family"] = family;
  out["seed"] = seed;
  return out;
}

}  // namespace polarfol

#endif  // POLARFOL_REPORT_HPP
