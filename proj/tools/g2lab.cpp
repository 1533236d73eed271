// g2lab: exact pointwise calculator for G2-structure algebra on R^7.
//
// Subcommands
//   verify      run the identity catalog (exit 1 on any failure)
//   decompose   split an endomorphism into its four components
//   derive      model exterior derivatives, torsion forms, class
//   recover     torsion tensor from a (d phi, d* phi) pair (exit 3 if the
//               pair is not realized by any single tensor)
//   compare     resolve the scalar-curvature formulas against the reference
//   classify    Fernandez-Gray type of a torsion tensor
//
// All input and output is JSON; verify/decompose/compare/classify can render
// markdown instead.  Exit codes: 0 ok, 1 failed checks, 2 usage or input
// errors, 3 inconsistent recover input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "g2/g2maps.hpp"
#include "g2/json_io.hpp"
#include "g2/torsion.hpp"
#include "g2/verify.hpp"

namespace {

using g2::Json;

struct Options {
  g2::RunConfig cfg;
  std::string mode = "exact";
  std::string format = "json";
  std::string input_path;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw g2::ParseError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw g2::ParseError(std::string("input is not valid JSON: ") + e.what());
  }
}

template <class S>
g2::Endo7<S> endo_input(const Json& doc) {
  if (doc.is_object() && doc.contains("rows")) return g2::endo_from_json<S>(doc, "input");
  if (doc.is_object() && doc.contains("T")) return g2::endo_from_json<S>(doc["T"], "input.T");
  throw g2::ParseError("input: expected {\"rows\": ...} or {\"T\": {\"rows\": ...}}");
}

template <class S>
S class_tolerance(const g2::Endo7<S>& t) {
  if constexpr (g2::scalar_traits<S>::exact) {
    return S(0);
  } else {
    double scale = g2::endo_norm_sq(t);
    return 1e-9 * (scale < 1.0 ? 1.0 : scale);
  }
}

template <class S>
Json class_json(const g2::Endo7<S>& t) {
  auto cls = g2::fg_class(t, class_tolerance(t));
  Json arr = Json::array();
  for (int k = 0; k < 4; ++k)
    if (cls[k]) arr.push_back(k + 1);
  return arr;
}

std::string class_text(const Json& cls) {
  if (cls.empty()) return "torsion-free";
  std::string out;
  for (const auto& k : cls) {
    if (!out.empty()) out += " + ";
    out += std::to_string(k.get<int>());
  }
  return out;
}

// ---- decompose --------------------------------------------------------------

template <class S>
int run_decompose(const Json& doc, const Options& opt) {
  g2::Endo7<S> a = endo_input<S>(doc);
  g2::Components<S> c = g2::components(a);
  auto n = g2::component_norms_sq(a);
  g2::InvariantSet<S> inv = g2::invariants(a);

  Json out;
  out["components"] = {{"a1", g2::endo_to_json(c.c1)},
                       {"a2", g2::endo_to_json(c.c2)},
                       {"a3", g2::endo_to_json(c.c3)},
                       {"a4", g2::endo_to_json(c.c4)}};
  out["norms_sq"] = {{"n1", g2::scalar_to_json<S>(n[0])},
                     {"n2", g2::scalar_to_json<S>(n[1])},
                     {"n3", g2::scalar_to_json<S>(n[2])},
                     {"n4", g2::scalar_to_json<S>(n[3])}};
  out["p_vector"] = g2::vec_to_json(g2::p_map(a));
  out["sigma1"] = g2::scalar_to_json<S>(inv.sigma1);
  out["sigma2"] = g2::scalar_to_json<S>(inv.sigma2);
  out["i0"] = g2::scalar_to_json<S>(inv.i0);
  out["i1"] = g2::scalar_to_json<S>(inv.i1);
  out["i2"] = g2::scalar_to_json<S>(inv.i2);
  out["class"] = class_json(a);

  if (opt.format == "markdown") {
    std::string md = "# decomposition\n\n";
    md += "- class: " + class_text(out["class"]) + "\n";
    const char* nk[4] = {"n1", "n2", "n3", "n4"};
    for (int k = 0; k < 4; ++k)
      md += std::string("- ") + nk[k] + " = " + out["norms_sq"][nk[k]].dump() + "\n";
    for (const char* key : {"sigma1", "sigma2", "i0", "i1", "i2"})
      md += std::string("- ") + key + " = " + out[key].dump() + "\n";
    md += "- p vector: " + out["p_vector"].dump() + "\n";
    for (const char* key : {"a1", "a2", "a3", "a4"}) {
      md += std::string("\n## ") + key + "\n\n";
      for (const auto& row : out["components"][key]["rows"])
        md += "    " + row.dump() + "\n";
    }
    std::cout << md;
    return 0;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

// ---- derive -----------------------------------------------------------------

template <class S>
int run_derive(const Json& doc, const Options&) {
  g2::Endo7<S> t = endo_input<S>(doc);
  g2::TauForms<S> tau = g2::tau_forms(t);
  auto n = g2::component_norms_sq(t);

  Json out;
  out["d_phi"] = g2::form_to_json(g2::d_phi(t));
  out["d_star_phi"] = g2::form_to_json(g2::d_star_phi(t));
  out["tau"] = {{"tau0", g2::scalar_to_json<S>(tau.tau0)},
                {"tau1", g2::form_to_json(tau.tau1)},
                {"tau2", g2::form_to_json(tau.tau2)},
                {"tau3", g2::form_to_json(tau.tau3)}};
  out["skew_torsion"] = g2::form_to_json(g2::skew_torsion(t));
  out["class"] = class_json(t);
  if (n[1] > class_tolerance(t))
    out["notes"] = Json::array(
        {"the torsion has a type-2 component, which the skew-torsion 3-form "
         "does not carry"});
  std::cout << out.dump(2) << "\n";
  return 0;
}

// ---- recover ----------------------------------------------------------------

template <class S>
int run_recover(const Json& doc, const Options&) {
  if (!doc.is_object() || !doc.contains("d_phi") || !doc.contains("d_star_phi"))
    throw g2::ParseError("input: expected {\"d_phi\": ..., \"d_star_phi\": ...}");
  g2::Form<S> dp = g2::form_from_json<S>(doc["d_phi"], "input.d_phi");
  g2::Form<S> dsp = g2::form_from_json<S>(doc["d_star_phi"], "input.d_star_phi");
  if (dp.degree != 4) throw g2::ParseError("input.d_phi: expected a 4-form");
  if (dsp.degree != 5) throw g2::ParseError("input.d_star_phi: expected a 5-form");

  S tol = g2::scalar_traits<S>::zero();
  if constexpr (!g2::scalar_traits<S>::exact)
    tol = 1e-9 * (1.0 + g2::l1(dp) + g2::l1(dsp));
  g2::RecoverResult<S> r = g2::recover_torsion(dp, dsp, tol);

  Json out;
  out["T"] = g2::endo_to_json(r.t);
  out["round_trip"] = {{"residual_d_phi", g2::scalar_to_json<S>(r.residual_d_phi)},
                       {"residual_d_star_phi", g2::scalar_to_json<S>(r.residual_d_star_phi)},
                       {"consistent", r.consistent}};
  std::cout << out.dump(2) << "\n";
  if (!r.consistent) {
    std::cerr << "recover: the pair is not realized by any single torsion tensor "
                 "(residuals "
              << g2::scalar_traits<S>::str(r.residual_d_phi) << ", "
              << g2::scalar_traits<S>::str(r.residual_d_star_phi) << ")\n";
    return 3;
  }
  return 0;
}

// ---- compare ----------------------------------------------------------------

template <class S>
int run_compare(const Json& doc, const Options& opt) {
  g2::Endo7<S> t = endo_input<S>(doc);
  S tol = g2::scalar_traits<S>::zero();
  if constexpr (!g2::scalar_traits<S>::exact) tol = 1e-9;
  auto reports = g2::compare_formulas(t, opt.cfg.seed, tol);

  Json out;
  out["seed"] = opt.cfg.seed;
  Json ref = Json::array();
  for (const auto& c : g2::reference_curvature_coeffs())
    ref.push_back(g2::scalar_to_json<S>(g2::scalar_traits<S>::from_rational(c)));
  out["reference"] = ref;
  out["formulas"] = Json::object();
  for (const auto& [name, rep] : reports) {
    Json coeffs = Json::array(), residual = Json::array();
    for (int k = 0; k < 4; ++k) {
      coeffs.push_back(g2::scalar_to_json<S>(rep.coeffs[k]));
      residual.push_back(g2::scalar_to_json<S>(rep.residual[k]));
    }
    out["formulas"][name] = {{"coeffs", coeffs},
                             {"residual", residual},
                             {"in_span", rep.in_span},
                             {"matches_reference", rep.matches_reference}};
  }

  if (opt.format == "markdown") {
    std::string md = "# scalar curvature comparison\n\n";
    md += "reference coefficients on (n1, n2, n3, n4): " + ref.dump() + "\n\n";
    md += "| formula | coefficients | residual | in span | matches |\n";
    md += "|---|---|---|---|---|\n";
    for (const auto& [name, rep] : reports) {
      const Json& body = out["formulas"][name];
      md += "| " + name + " | " + body["coeffs"].dump() + " | " + body["residual"].dump() +
            " | " + (rep.in_span ? "yes" : "no") + " | " +
            (rep.matches_reference ? "yes" : "no") + " |\n";
    }
    std::cout << md;
    return 0;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

// ---- classify ---------------------------------------------------------------

template <class S>
int run_classify(const Json& doc, const Options& opt) {
  g2::Endo7<S> t = endo_input<S>(doc);
  auto n = g2::component_norms_sq(t);
  Json out;
  out["class"] = class_json(t);
  out["norms_sq"] = {{"n1", g2::scalar_to_json<S>(n[0])},
                     {"n2", g2::scalar_to_json<S>(n[1])},
                     {"n3", g2::scalar_to_json<S>(n[2])},
                     {"n4", g2::scalar_to_json<S>(n[3])}};
  if (opt.format == "markdown") {
    std::string md = "# torsion class\n\n";
    md += "- class: " + class_text(out["class"]) + "\n";
    const char* nk[4] = {"n1", "n2", "n3", "n4"};
    for (int k = 0; k < 4; ++k)
      md += std::string("- ") + nk[k] + " = " + out["norms_sq"][nk[k]].dump() + "\n";
    std::cout << md;
    return 0;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

template <class S>
int dispatch(const std::string& cmd, const Options& opt) {
  Json doc;
  if (cmd != "verify") doc = parse_document(read_input(opt.input_path));
  if (cmd == "decompose") return run_decompose<S>(doc, opt);
  if (cmd == "derive") return run_derive<S>(doc, opt);
  if (cmd == "recover") return run_recover<S>(doc, opt);
  if (cmd == "compare") return run_compare<S>(doc, opt);
  if (cmd == "classify") return run_classify<S>(doc, opt);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact pointwise algebra of G2-structures on R^7"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", opt.cfg.seed, "sampling seed")
      ->envname("G2LAB_SEED")
      ->capture_default_str();
  app.add_option("--samples", opt.cfg.samples, "random samples per identity (0: structural only)")
      ->capture_default_str();
  app.add_option("--mode", opt.mode, "arithmetic mode")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  app.add_option("--range", opt.cfg.range, "coefficient range [-N, N] for samples")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  app.add_flag("--strict", opt.cfg.strict, "treat domain restrictions as errors");

  CLI::App* verify = app.add_subcommand("verify", "run the identity catalog");
  CLI::App* decompose = app.add_subcommand("decompose", "split an endomorphism");
  CLI::App* derive = app.add_subcommand("derive", "exterior derivatives and torsion forms");
  CLI::App* recover = app.add_subcommand("recover", "torsion from (d phi, d* phi)");
  CLI::App* compare = app.add_subcommand("compare", "resolve scalar-curvature formulas");
  CLI::App* classify = app.add_subcommand("classify", "Fernandez-Gray type");
  for (CLI::App* sub : {decompose, derive, recover, compare, classify})
    sub->add_option("input", opt.input_path, "input JSON file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string cmd;
  for (const auto* sub :
       {verify, decompose, derive, recover, compare, classify})
    if (sub->parsed()) cmd = sub->get_name();

  opt.cfg.float_mode = opt.mode == "float";
  if (opt.cfg.samples < 0) {
    std::cerr << "g2lab: --samples must be nonnegative\n";
    return 2;
  }
  if (opt.cfg.range <= 0) {
    std::cerr << "g2lab: --range must be positive\n";
    return 2;
  }
  if (opt.format == "markdown" && (cmd == "derive" || cmd == "recover")) {
    std::cerr << "g2lab: markdown output is not available for '" << cmd
              << "'; it would drop exact coefficients\n";
    return 2;
  }

  try {
    if (cmd == "verify") {
      g2::VerificationReport rep = g2::run_verify(opt.cfg);
      std::cout << (opt.format == "markdown" ? g2::report_to_markdown(rep)
                                             : g2::report_to_json(rep));
      return rep.all_pass ? 0 : 1;
    }
    if (opt.cfg.float_mode) return dispatch<double>(cmd, opt);
    return dispatch<g2::Rational>(cmd, opt);
  } catch (const g2::ParseError& e) {
    std::cerr << "g2lab: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "g2lab: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "g2lab: " << e.what() << "\n";
    return 2;
  }
}
