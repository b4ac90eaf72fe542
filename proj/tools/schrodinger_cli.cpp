// Command-line front end: element arithmetic, twisting, module actions and
// verification reports. Exit codes: 0 success, 1 verification failure,
// 2 usage or parameter error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "schrodinger/analysis.hpp"
#include "schrodinger/errors.hpp"
#include "schrodinger/io.hpp"
#include "schrodinger/module.hpp"
#include "schrodinger/twisting.hpp"

namespace {

using namespace schrodinger;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct ModuleFlags {
  std::string family = "B_q";
  std::string lambda = "-1/2";
  std::string c = "1";
  std::string x = "1/2";
  long i_min = kDefaultWindow.i_min;
  long i_max = kDefaultWindow.i_max;

  void add_to(CLI::App* cmd, bool with_window) {
    cmd->add_option("--family", family, "Module family: M, N or B_q")
        ->check(CLI::IsMember({"M", "N", "B_q"}));
    cmd->add_option("--lambda", lambda, "Highest weight, exact rational");
    cmd->add_option("--c", c, "Central charge, exact rational");
    cmd->add_option("--x", x, "Twist parameter (B_q only), exact rational");
    if (with_window) {
      cmd->add_option("--i-min", i_min, "Window lower bound on i");
      cmd->add_option("--i-max", i_max, "Window upper bound on i (depth bound for M)");
    }
  }

  ModuleSpec spec() const {
    const Scalar l = Scalar::parse(lambda);
    const Scalar cc = Scalar::parse(c);
    if (family == "M") return ModuleSpec::verma_quotient(l, cc);
    if (family == "N") return ModuleSpec::top_row(l, cc);
    return ModuleSpec::twisted_bq(l, cc, Scalar::parse(x));
  }

  Window window() const { return {i_min, i_max}; }
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string count_detail(std::size_t checked, std::size_t failures, const char* unit) {
  return std::to_string(checked) + " " + unit + ", " + std::to_string(failures) + " failures";
}

SuiteResult suite_axioms(const ModuleSpec& spec, const Window& w) {
  const AxiomReport r = check_axioms(WeightModule(spec), w);
  return {"axioms", r.pass(), count_detail(r.checked_pairs, r.violations.size(), "checks")};
}

SuiteResult suite_theta() {
  std::size_t checked = 0;
  std::size_t failures = 0;
  const std::vector<std::pair<Scalar, Scalar>> pairs = {
      {Scalar(1, 2), Scalar(1, 3)}, {Scalar(-2), Scalar(5, 7)}, {Scalar(3, 4), Scalar(-3, 4)}};
  for (Generator u : {Generator::q, Generator::f}) {
    const auto hom = verify_theta_homomorphism(u, kMinThetaSamples + 1);
    const auto add = verify_theta_additivity(u, pairs);
    checked += hom.checked + add.checked;
    failures += hom.violations.size() + add.violations.size();
  }
  return {"theta", failures == 0, count_detail(checked, failures, "identities")};
}

void require_bq(const ModuleSpec& spec, const char* suite) {
  if (spec.family != Family::TwistedB_q) {
    throw std::invalid_argument(std::string("suite ") + suite + " needs --family B_q");
  }
}

SuiteResult suite_twist_coherence(const ModuleSpec& spec, const Window& w) {
  require_bq(spec, "twist-coherence");
  const ModuleSpec b0 = ModuleSpec::twisted_bq(spec.lambda, spec.c, Scalar(0));
  const ModuleSpec doubled = ModuleSpec::twisted_bq(spec.lambda, spec.c, spec.x + spec.x);
  const ActionComparison direct =
      compare_actions(WeightModule(twist_module(b0, Generator::q, spec.x)), WeightModule(spec), w);
  const ActionComparison composed = compare_actions(
      WeightModule(twist_module(twist_module(b0, Generator::q, spec.x), Generator::q, spec.x)),
      WeightModule(doubled), w);
  const ActionComparison trivial =
      compare_actions(WeightModule(twist_module(spec, Generator::q, Scalar(0))), WeightModule(spec), w);
  const std::size_t checked = direct.checked + composed.checked + trivial.checked;
  const std::size_t bad =
      direct.mismatches.size() + composed.mismatches.size() + trivial.mismatches.size();
  return {"twist-coherence", bad == 0, count_detail(checked, bad, "actions compared")};
}

SuiteResult suite_shift_iso(const ModuleSpec& spec, const Window& w,
                            const std::optional<std::string>& x2) {
  require_bq(spec, "shift-iso");
  if (x2) {
    const ModuleSpec other = ModuleSpec::twisted_bq(spec.lambda, spec.c, Scalar::parse(*x2));
    const IsomorphismVerdict v = classify_isomorphism(spec, other, w);
    std::string detail = v.reason;
    if (v.shift) detail += ", witness n=" + std::to_string(*v.shift);
    return {"shift-iso", v.isomorphic && v.witness_verified, detail};
  }
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (long n = -2; n <= 2; ++n) {
    const ActionComparison cmp = verify_intertwining(shift_isomorphism(spec, n), w);
    checked += cmp.checked;
    bad += cmp.mismatches.size();
  }
  return {"shift-iso", bad == 0, count_detail(checked, bad, "intertwining checks")};
}

SuiteResult suite_simplicity(const ModuleSpec& spec, const Window& w) {
  const SimplicityReport r = simplicity_probe(WeightModule(spec), w);
  std::string detail;
  if (r.structural_flag) {
    detail = *r.structural_flag;
  } else if (r.pass) {
    detail = std::string(SimplicityReport::kCertification) + ", " +
             std::to_string(r.starts_checked) + " start vectors";
  } else {
    detail = "weight " + r.unreached_weight->str() + " not generated from v(" +
             std::to_string(r.failed_start->i) + "," + std::to_string(r.failed_start->j) + ")";
  }
  return {"simplicity", r.pass, detail};
}

int emit(std::ostream& os, const std::string& text) {
  os << text << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Schrödinger algebra and its weight modules"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  // normalize
  std::string norm_expr;
  std::string norm_mode = "none";
  auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite an expression into PBW form");
  normalize_cmd->add_option("expr", norm_expr, "Expression, e.g. \"p*q\"")->required();
  normalize_cmd->add_option("--mode", norm_mode, "Localization: none, at_q or at_f")
      ->check(CLI::IsMember({"none", "at_q", "at_f"}));

  // theta
  std::string theta_expr;
  std::string theta_u = "q";
  std::string theta_x = "0";
  auto* theta_cmd = app.add_subcommand("theta", "Apply the twisting automorphism");
  theta_cmd->add_option("expr", theta_expr, "Expression in the localized algebra")->required();
  theta_cmd->add_option("--u", theta_u, "Localized generator: q or f")
      ->check(CLI::IsMember({"q", "f"}));
  theta_cmd->add_option("--x", theta_x, "Twist parameter, exact rational");

  // act
  ModuleFlags act_flags;
  std::string act_expr;
  std::string act_on;
  auto* act_cmd = app.add_subcommand("act", "Apply an element to a basis vector");
  act_cmd->add_option("expr", act_expr, "Element of U (q^-1 allowed on B_q)")->required();
  act_cmd->add_option("--on", act_on, "Basis index \"i,j\"")->required();
  act_flags.add_to(act_cmd, false);

  // verify
  ModuleFlags verify_flags;
  std::string suite = "all";
  std::string format = "text";
  std::optional<std::string> x2;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "axioms, theta, twist-coherence, shift-iso, simplicity or all")
      ->check(CLI::IsMember({"axioms", "theta", "twist-coherence", "shift-iso", "simplicity", "all"}));
  verify_cmd->add_option("--x2", x2, "Second twist parameter for shift-iso");
  verify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_flags.add_to(verify_cmd, true);

  // classify
  ModuleFlags first;
  std::optional<std::string> lambda2;
  std::optional<std::string> c2;
  std::optional<std::string> x2c;
  auto* classify_cmd = app.add_subcommand("classify", "Decide isomorphism of two B_q modules");
  first.add_to(classify_cmd, true);
  classify_cmd->add_option("--lambda2", lambda2, "Second module's lambda (default: --lambda)");
  classify_cmd->add_option("--c2", c2, "Second module's c (default: --c)");
  classify_cmd->add_option("--x2", x2c, "Second module's x (default: --x)");

  // diagram
  ModuleFlags diagram_flags;
  auto* diagram_cmd = app.add_subcommand("diagram", "Weight diagram with axiom report as JSON");
  diagram_flags.add_to(diagram_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Output out(out_path);
    std::ostream& os = out.stream();

    if (*normalize_cmd) {
      return emit(os, io::print_element(io::parse_element(norm_expr, *mode_from_name(norm_mode))));
    }

    if (*theta_cmd) {
      const TwistSpec t{*generator_from_name(theta_u), Scalar::parse(theta_x)};
      return emit(os, io::print_element(theta(t, io::parse_element(theta_expr, t.mode()))));
    }

    if (*act_cmd) {
      const ModuleSpec spec = act_flags.spec();
      const auto comma = act_on.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("--on expects \"i,j\"");
      const BasisIndex b{std::stol(act_on.substr(0, comma)), std::stol(act_on.substr(comma + 1))};
      const WeightModule module(spec);
      if (!module.contains(b)) throw std::invalid_argument("basis index outside the module");
      const LocalizationMode mode =
          spec.family == Family::TwistedB_q ? LocalizationMode::at_q : LocalizationMode::none;
      return emit(os, io::print_vector(module.act(io::parse_element(act_expr, mode),
                                                  ModuleVector::basis(b))));
    }

    if (*verify_cmd) {
      const ModuleSpec spec = verify_flags.spec();
      const Window w = verify_flags.window();
      std::vector<SuiteResult> results;
      const bool all = suite == "all";
      const bool bq = spec.family == Family::TwistedB_q;
      if (all || suite == "axioms") results.push_back(suite_axioms(spec, w));
      if (all || suite == "theta") results.push_back(suite_theta());
      if ((all && bq) || suite == "twist-coherence") results.push_back(suite_twist_coherence(spec, w));
      if ((all && bq) || suite == "shift-iso") results.push_back(suite_shift_iso(spec, w, x2));
      if (all || suite == "simplicity") results.push_back(suite_simplicity(spec, w));

      bool pass = true;
      for (const auto& r : results) pass = pass && r.pass;
      if (format == "json") {
        nlohmann::ordered_json doc;
        doc["pass"] = pass;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : results) {
          arr.push_back(nlohmann::ordered_json{{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        doc["suites"] = std::move(arr);
        os << doc.dump(2) << '\n';
      } else {
        for (const auto& r : results) {
          os << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")\n";
        }
      }
      return pass ? kExitOk : kExitFailed;
    }

    if (*classify_cmd) {
      const ModuleSpec a = first.spec();
      if (a.family != Family::TwistedB_q) throw std::invalid_argument("classify compares B_q modules");
      const ModuleSpec b = ModuleSpec::twisted_bq(Scalar::parse(lambda2.value_or(first.lambda)),
                                                  Scalar::parse(c2.value_or(first.c)),
                                                  Scalar::parse(x2c.value_or(first.x)));
      const IsomorphismVerdict v = classify_isomorphism(a, b, first.window());
      os << io::to_json(v).dump(2) << '\n';
      return v.isomorphic && !v.witness_verified ? kExitFailed : kExitOk;
    }

    if (*diagram_cmd) {
      const WeightModule module(diagram_flags.spec());
      const Window w = diagram_flags.window();
      const WeightReport report = weight_report(module, w);
      if (w.empty()) {
        os << io::export_weight_diagram(report).dump(2) << '\n';
        return kExitOk;
      }
      const AxiomReport axioms = check_axioms(module, w);
      os << io::export_weight_diagram(report, &axioms).dump(2) << '\n';
      return axioms.pass() ? kExitOk : kExitFailed;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidSpec& e) {
    std::cerr << "invalid module parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IllegalNegativeExponent& e) {
    std::cerr << "illegal negative exponent: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
