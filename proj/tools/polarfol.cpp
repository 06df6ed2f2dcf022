// polarfol: exact certification of codimension-two polar homogeneous
// foliation candidates on noncompact symmetric spaces.
//
// Commands:
//   info     <family>                  algebra summary (dim, rank, multiplicities)
//   roots show <family>                restricted root table
//   classify <family> [--seed N]       enumerate + certify all candidates
//   verify   <family> --case X ...     certify one candidate
//
// Exit codes: 0 certified, 1 certification failure, 2 invalid input.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "polarfol/report.hpp"

namespace {

using namespace polarfol;

struct LoadedAlgebra {
  BuiltAlgebra built;
  RootSystemData rs;
  ANMetric an;
};

LoadedAlgebra load(const std::string& family) {
  LoadedAlgebra out{build(family), {}, {}};
  out.rs = decompose(out.built.g, out.built.canonical_a);
  out.an = an_metric(out.built.g, out.rs);
  return out;
}

std::string known_families() {
  std::string s;
  for (const auto& n : catalog_family_names()) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s + ", sum:<a>+<b>";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_info(const std::string& family, const std::string& format) {
  const LoadedAlgebra la = load(family);
  json out = bundle_header(family, 0);
  out.erase("seed");
  out["dim"] = la.built.g.dim;
  out["rank"] = la.rs.a_basis.size();
  out["dynkin"] = dynkin_label(la.rs);
  out["k0_dim"] = la.rs.k0.dim();
  json mults = json::array();
  for (size_t k = 0; k < la.rs.simple_ids.size(); ++k) {
    const Root& alpha = la.rs.simple_root(k);
    mults.push_back({{"root", k},
                     {"multiplicity", alpha.multiplicity},
                     {"double_multiplicity", la.rs.double_root_multiplicity(alpha)}});
  }
  out["simple_root_multiplicities"] = mults;
  if (format == "json") {
    emit(out);
  } else {
    std::cout << family << ": dim " << la.built.g.dim << ", rank " << la.rs.a_basis.size()
              << ", type " << dynkin_label(la.rs) << ", dim k0 " << la.rs.k0.dim() << "\n";
    for (const auto& m : mults)
      std::cout << "  simple root " << m["root"] << ": dim g_a = " << m["multiplicity"]
                << ", dim g_2a = " << m["double_multiplicity"] << "\n";
  }
  return 0;
}

int run_roots_show(const std::string& family, const std::string& format) {
  const LoadedAlgebra la = load(family);
  json out = bundle_header(family, 0);
  out.erase("seed");
  out["root_system"] = root_system_to_json(la.rs);
  if (format == "json") {
    emit(out);
    return 0;
  }
  std::cout << "# " << family << " (" << dynkin_label(la.rs) << ", rank "
            << la.rs.a_basis.size() << ")\n\n";
  std::cout << "| covector | simple coords | mult | level |\n";
  std::cout << "|---|---|---|---|\n";
  const auto render = [](const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
  };
  for (const auto& root : la.rs.roots)
    std::cout << "| " << render(root.covector) << " | " << render(root.simple_coords) << " | "
              << root.multiplicity << " | " << root.level << " |\n";
  return 0;
}

std::string candidate_tag(const FoliationSpec& spec) {
  std::string tag = "case ";
  tag += case_letter(spec.kase);
  if (spec.root >= 0) tag += " root " + std::to_string(spec.root);
  if (spec.root2 >= 0) tag += "," + std::to_string(spec.root2);
  tag += " (" + spec.variant + ")";
  return tag;
}

void render_reports_md(const std::vector<VerificationReport>& reports) {
  std::cout << "| case | root | variant | subalg | codim | polar | hyperpolar | sec curv | "
               "mean curv coeff | extension | ok |\n";
  std::cout << "|---|---|---|---|---|---|---|---|---|---|---|\n";
  const auto opt_str = [](const std::optional<Scalar>& s) { return s ? s->str() : "-"; };
  for (const auto& r : reports) {
    std::cout << "| " << case_letter(r.spec.kase) << " | ";
    if (r.spec.root >= 0) {
      std::cout << r.spec.root;
      if (r.spec.root2 >= 0) std::cout << "," << r.spec.root2;
    } else {
      std::cout << "-";
    }
    std::cout << " | " << r.spec.variant << " | " << (r.is_subalgebra ? "yes" : "NO") << " | "
              << r.codimension << " | " << (r.is_polar ? "yes" : "NO") << " | "
              << (r.is_hyperpolar ? "yes" : "no") << " | " << opt_str(r.section_curvature)
              << " | " << opt_str(r.mean_curvature_coeff) << " | "
              << (r.extension_verified ? (*r.extension_verified ? "yes" : "NO") : "-") << " | "
              << (r.matches_expectation ? "yes" : "NO") << " |\n";
  }
}

int run_classify(const std::string& family, uint64_t seed, const std::string& format) {
  const LoadedAlgebra la = load(family);
  const auto specs = enumerate_candidates(la.built.g, la.rs, seed);
  std::vector<VerificationReport> reports;
  for (const auto& spec : specs)
    reports.push_back(verify_candidate(la.built.g, la.rs, la.an, spec));

  json out = bundle_header(family, seed);
  out["algebra"] = {{"dim", la.built.g.dim},
                    {"rank", la.rs.a_basis.size()},
                    {"dynkin", dynkin_label(la.rs)},
                    {"k0_dim", la.rs.k0.dim()}};
  json rj = json::array();
  for (const auto& r : reports) rj.push_back(report_to_json(r));
  out["reports"] = rj;

  if (format == "json")
    emit(out);
  else
    render_reports_md(reports);

  int rc = 0;
  for (const auto& r : reports)
    if (!r.matches_expectation) {
      std::cerr << "certification mismatch: " << candidate_tag(r.spec) << "\n";
      rc = 1;
    }
  return rc;
}

FoliationSpec make_spec(const LoadedAlgebra& la, FoliationCase kase, long root, long root2,
                        std::optional<uint64_t> seed) {
  const LieAlgebraData& g = la.built.g;
  const RootSystemData& rs = la.rs;
  const long nsimple = static_cast<long>(rs.simple_ids.size());
  const auto need_root = [&](long k) -> const Root& {
    if (k < 0 || k >= nsimple)
      throw Error("--root must name a simple root in [0," + std::to_string(nsimple - 1) + "]");
    return rs.simple_root(static_cast<size_t>(k));
  };

  FoliationSpec spec;
  spec.kase = kase;
  spec.root = kase == FoliationCase::A ? -1 : root;
  spec.root2 = kase == FoliationCase::C ? root2 : -1;
  const uint64_t draw =
      foliation_detail::sub_seed(seed.value_or(0), kase, spec.root, spec.root2, 1);
  if (seed) spec.variant = "seed:1";

  switch (kase) {
    case FoliationCase::A: {
      if (rs.a_basis.size() < 2) throw Error("case A needs rank >= 2");
      if (!seed) {
        spec.params = {rs.a_basis[0], rs.a_basis[1]};
      } else {
        Prng rng(draw);
        do {
          spec.params = {rng.nonzero_in(rs.a_space), rng.nonzero_in(rs.a_space)};
        } while (Subspace::span_of(spec.params, g.dim).dim() != 2);
      }
      break;
    }
    case FoliationCase::B: {
      const Root& alpha = need_root(root);
      const Subspace ker = kernel_of_root(g, rs, alpha);
      if (ker.is_zero()) throw Error("case B needs rank >= 2");
      if (!seed) {
        spec.params = {ker.basis_vector(0), alpha.space.basis_vector(0)};
      } else {
        Prng rng(draw);
        spec.params = {rng.nonzero_in(ker), rng.nonzero_in(alpha.space)};
      }
      break;
    }
    case FoliationCase::C: {
      const Root& alpha = need_root(root);
      if (root2 < 0) throw Error("case C needs --root2");
      const Root& beta = need_root(root2);
      if (!seed) {
        spec.params = {alpha.space.basis_vector(0), beta.space.basis_vector(0)};
      } else {
        Prng rng(draw);
        spec.params = {rng.nonzero_in(alpha.space), rng.nonzero_in(beta.space)};
      }
      break;
    }
    case FoliationCase::D: {
      const Root& alpha = need_root(root);
      if (!seed) {
        spec.params = {alpha.space.basis_vector(0)};
      } else {
        Prng rng(draw);
        spec.params = {rng.nonzero_in(alpha.space)};
      }
      break;
    }
    case FoliationCase::E: {
      const Root& alpha = need_root(root);
      const auto plane = find_abelian_plane(g, rs, alpha, seed.value_or(0));
      if (!plane) throw Error("no abelian plane in g_alpha");
      spec.params = {plane->first, plane->second};
      break;
    }
  }
  return spec;
}

int run_verify(const std::string& family, const std::string& case_name, long root, long root2,
               std::optional<uint64_t> seed, const std::vector<std::string>& t_values,
               const std::string& format) {
  if (case_name.size() != 1 || case_name[0] < 'A' || case_name[0] > 'E')
    throw Error("--case must be one of A, B, C, D, E");
  const auto kase = static_cast<FoliationCase>(case_name[0] - 'A');

  const LoadedAlgebra la = load(family);
  const FoliationSpec spec = make_spec(la, kase, root, root2, seed);
  const VerificationReport rep = verify_candidate(la.built.g, la.rs, la.an, spec);

  json out = bundle_header(family, seed.value_or(0));
  out["report"] = report_to_json(rep);

  if (!t_values.empty()) {
    if (kase != FoliationCase::E) throw Error("--t applies to case E only");
    json orbit = json::array();
    for (const auto& ts : t_values) {
      const Scalar t = Scalar::from_string(ts);
      const OrbitMeanCurvature o =
          mean_curvature_along_orbit(la.built.g, la.an, la.rs, spec, spec.params[0], t);
      orbit.push_back({{"t", t.str()},
                       {"mean_curvature", to_json(o.computed)},
                       {"matches_closed_form", o.computed == o.closed_form}});
    }
    out["orbit"] = orbit;
  }

  if (format == "json")
    emit(out);
  else
    render_reports_md({rep});

  if (!rep.matches_expectation) {
    std::cerr << "certification mismatch: " << candidate_tag(spec) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for codimension-two polar homogeneous foliations"};
  app.require_subcommand(1);

  std::string family, format = "json";
  uint64_t seed = 0;
  std::string case_name;
  long root = -1, root2 = -1;
  std::vector<std::string> t_values;
  bool seed_given = false;

  const auto add_common = [&](CLI::App* cmd, bool with_seed) {
    cmd->add_option("family", family, "algebra family name")->required();
    cmd->add_option("--format", format, "json|md")->check(CLI::IsMember({"json", "md"}));
    if (with_seed)
      cmd->add_option("--seed", seed, "seed for parameter draws")
          ->envname("POLARFOL_SEED")
          ->each([&](const std::string&) { seed_given = true; });
  };

  auto* info = app.add_subcommand("info", "algebra summary");
  add_common(info, false);

  auto* roots = app.add_subcommand("roots", "root system commands");
  auto* show = roots->add_subcommand("show", "print the restricted root table");
  add_common(show, false);
  roots->require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "enumerate and certify all candidates");
  add_common(classify, true);

  auto* verify = app.add_subcommand("verify", "certify one candidate");
  add_common(verify, true);
  verify->add_option("--case", case_name, "candidate case A..E")->required();
  verify->add_option("--root", root, "simple root index");
  verify->add_option("--root2", root2, "second simple root index (case C)");
  verify->add_option("--t", t_values, "orbit parameter(s) p/q for case E");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*info) return run_info(family, format);
    if (*show) return run_roots_show(family, format);
    if (*classify) return run_classify(family, seed, format);
    if (*verify)
      return run_verify(family, case_name, root, root2,
                        seed_given ? std::optional<uint64_t>(seed) : std::nullopt, t_values,
                        format);
  } catch (const polarfol::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (std::string(e.what()).find("unknown family") != std::string::npos)
      std::cerr << "known families: " << known_families() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
