#include "rumin/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rumin/generators.hpp"
#include "rumin/literals.hpp"
#include "rumin/rumin_fibers.hpp"
#include "rumin/theorems.hpp"

namespace rumin {

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "rumin";
  for (const auto& a : args) {
    s += " ";
    s += a;
  }
  return s;
}

Box default_box(int dim) { return Box::cube(dim, Rational(0), Rational(1)); }

CheckRecord make_record(const std::string& name, bool pass, nlohmann::json witness,
                        double ms, bool vacuous = false) {
  CheckRecord rec;
  rec.name = name;
  rec.status = vacuous ? CheckRecord::Status::vacuous
                       : (pass ? CheckRecord::Status::pass : CheckRecord::Status::fail);
  rec.witness = std::move(witness);
  rec.runtime_ms = ms;
  return rec;
}

void run_dims(int n, Report& report) {
  Timer timer;
  std::vector<int> dims = rumin_fiber_dims(n);
  std::vector<long> formula;
  bool ok = true;
  for (int k = 0; k <= 2 * n + 1; ++k) {
    int kk = std::min(k, 2 * n + 1 - k);
    long expect = binomial(2 * n, kk) - binomial(2 * n, kk - 2);
    formula.push_back(expect);
    ok = ok && dims[k] == expect;
  }
  std::ostringstream line;
  for (size_t i = 0; i < dims.size(); ++i) line << (i ? " " : "") << dims[i];
  nlohmann::json witness;
  witness["dims"] = dims;
  witness["binomial_formula"] = formula;
  witness["summary"] = line.str();
  report.checks.push_back(make_record("dims", ok, std::move(witness), timer.ms()));
}

void run_lemma32(int n, Report& report) {
  GradedAlgebra g = GradedAlgebra::heisenberg(n);
  for (int k = 0; k <= 2 * n; ++k) {
    Timer timer;
    LefschetzReport rep = lefschetz(n, k);
    bool want_inj = k <= n - 1;
    bool want_surj = k >= n - 1;
    bool ok = rep.injective == want_inj && rep.surjective == want_surj;
    nlohmann::json witness;
    witness["rank"] = rep.rank;
    witness["dim_source"] = rep.dim_source;
    witness["dim_target"] = rep.dim_target;
    witness["injective"] = rep.injective;
    witness["surjective"] = rep.surjective;
    std::ostringstream sum;
    sum << "W_" << k << ": " << rep.dim_source << "->" << rep.dim_target << " rank " << rep.rank
        << (rep.injective ? " inj" : "") << (rep.surjective ? " surj" : "");
    witness["summary"] = sum.str();
    report.checks.push_back(
        make_record("lefschetz_k" + std::to_string(k), ok, std::move(witness), timer.ms()));
  }
  for (int k = 0; k <= n; ++k) {
    Timer timer;
    PairingReport rep = duality_pairing(g, k);
    nlohmann::json witness;
    witness["det"] = rep.det.to_string();
    witness["size"] = rep.matrix.rows();
    witness["summary"] = "pairing " + std::to_string(rep.matrix.rows()) + "x" +
                         std::to_string(rep.matrix.cols()) + " det " + rep.det.to_string();
    report.checks.push_back(make_record("duality_k" + std::to_string(k), rep.nondegenerate,
                                        std::move(witness), timer.ms()));
  }
}

void run_rumin_d(int n, int k, const std::string& alpha_text, int degree_bound,
                 Report& report) {
  Timer timer;
  const RuminComplex& rc = RuminComplex::get(n);
  PolyForm alpha = parse_poly_form(n, alpha_text, k);
  nlohmann::json witness;
  witness["alpha"] = alpha.to_string();
  if (k == n) {
    PolyForm lift = rc.rumin_lift(alpha, degree_bound);
    witness["lift"] = lift.to_string();
  }
  PolyForm result = rc.rumin_d(k, k <= n ? rc.canonical_rep(k, alpha) : alpha);
  witness["result"] = result.to_string();
  witness["summary"] = "d_" + std::to_string(k) + " = " + result.to_string();
  report.checks.push_back(make_record("rumin_d", true, std::move(witness), timer.ms()));
}

void run_weak_check(int n, int k, const std::string& alpha_text, const Box& box, int trials,
                    std::uint64_t seed, int eta_degree, Report& report) {
  Timer timer;
  const RuminComplex& rc = RuminComplex::get(n);
  PolyForm beta = parse_poly_form(n, alpha_text, k);
  if (k <= n) beta = rc.canonical_rep(k, beta);
  PolyForm gamma = rc.rumin_d(k, beta);
  Rng rng(seed);
  int zero = 0;
  nlohmann::json failures = nlohmann::json::array();
  int j = 2 * n - k;
  for (int t = 0; t < trials; ++t) {
    BumpForm eta = (k > n) ? random_eta_arbitrary(rng, rc, j, box, eta_degree)
                           : random_rumin_eta(rng, rc, j, box, eta_degree);
    Rational residual = weak_identity_check(rc, k, beta, gamma, eta, box);
    if (residual.is_zero()) {
      ++zero;
    } else if (failures.size() < 3) {
      nlohmann::json f;
      f["trial"] = t;
      f["eta"] = eta.form.to_string();
      f["residual"] = residual.to_string();
      failures.push_back(std::move(f));
    }
  }
  nlohmann::json witness;
  witness["beta"] = beta.to_string();
  witness["gamma"] = gamma.to_string();
  witness["trials"] = trials;
  witness["zero_residuals"] = zero;
  if (!failures.empty()) witness["failures"] = failures;
  witness["summary"] =
      "residual=0 (" + std::to_string(zero) + "/" + std::to_string(trials) + ")";
  report.checks.push_back(make_record("weak-check", zero == trials, std::move(witness),
                                      timer.ms()));
}

void run_j_check(int n, int k, const std::string& map_text, const std::string& alpha_text,
                 const Box& box, int trials, std::uint64_t seed, int eta_degree,
                 Report& report) {
  Timer timer;
  const RuminComplex& rc = RuminComplex::get(n);
  ContactMap f = parse_contact_map(n, map_text);
  Rng rng(seed);
  int zero = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (int t = 0; t < trials; ++t) {
    PolyForm alpha = alpha_text.empty() ? random_rumin_rep(rng, rc, k, eta_degree)
                                        : parse_poly_form(n, alpha_text, k);
    BumpForm eta = random_eta_arbitrary(rng, rc, rc.N() - k - 1, box, eta_degree);
    Rational residual = theorem_j_check(rc, f, k, alpha, eta, box);
    if (residual.is_zero()) {
      ++zero;
    } else if (failures.size() < 3) {
      nlohmann::json fj;
      fj["trial"] = t;
      fj["alpha"] = alpha.to_string();
      fj["eta"] = eta.form.to_string();
      fj["residual"] = residual.to_string();
      failures.push_back(std::move(fj));
    }
  }
  nlohmann::json witness;
  witness["map"] = map_text;
  witness["trials"] = trials;
  witness["zero_residuals"] = zero;
  if (!failures.empty()) witness["failures"] = failures;
  witness["summary"] =
      "residual=0 (" + std::to_string(zero) + "/" + std::to_string(trials) + ")";
  report.checks.push_back(make_record("j-check", zero == trials, std::move(witness), timer.ms()));
}

void run_chain_check(int n, int k, const std::string& map_text, const std::string& alpha_text,
                     const Box& box, int trials, std::uint64_t seed, int eta_degree,
                     Report& report) {
  Timer timer;
  const RuminComplex& rc = RuminComplex::get(n);
  ContactMap f = parse_contact_map(n, map_text);
  Rng rng(seed);
  int zero = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (int t = 0; t < trials; ++t) {
    PolyForm alpha = alpha_text.empty() ? random_rumin_rep(rng, rc, k, eta_degree)
                                        : parse_poly_form(n, alpha_text, k);
    BumpForm eta = random_rumin_eta(rng, rc, 2 * n - k, box, eta_degree);
    Rational residual = rumin_chain_check(rc, f, k, alpha, eta, box);
    if (residual.is_zero()) {
      ++zero;
    } else if (failures.size() < 3) {
      nlohmann::json fj;
      fj["trial"] = t;
      fj["alpha"] = alpha.to_string();
      fj["eta"] = eta.form.to_string();
      fj["residual"] = residual.to_string();
      failures.push_back(std::move(fj));
    }
  }
  nlohmann::json witness;
  witness["map"] = map_text;
  witness["trials"] = trials;
  witness["zero_residuals"] = zero;
  if (!failures.empty()) witness["failures"] = failures;
  witness["summary"] =
      "residual=0 (" + std::to_string(zero) + "/" + std::to_string(trials) + ")";
  report.checks.push_back(
      make_record("chain-check", zero == trials, std::move(witness), timer.ms()));
}

void run_pansu_numeric(int n, const std::string& map_text, const Box& box, int trials,
                       std::uint64_t seed, Report& report) {
  ContactMap f = parse_contact_map(n, map_text);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Timer timer;
    HeisPoint p = random_point_in_box(rng, box);
    PansuDifferential exact = pansu_exact(f, p);
    HeisPointD pd;
    for (const auto& v : p.x) pd.x.push_back(v.to_double());
    pd.t = p.t.to_double();
    PansuNumericReport num = pansu_numeric(f, pd);

    double extrap_err = std::abs(num.vertical - exact.vertical.to_double());
    for (int j = 0; j < 2 * n; ++j)
      for (int i = 0; i < 2 * n; ++i)
        extrap_err = std::max(extrap_err,
                              std::abs(num.horizontal[j][i] - exact.horizontal.at(j, i).to_double()));
    // Convergence gate: no blow-up, the extrapolant matches the exact
    // differential, and the observed order is first-order-like (higher-order
    // terms can nudge the fitted slope slightly below one at single points).
    bool ok = !num.diverged && extrap_err <= 1e-6 &&
              (num.errors_all_zero || num.slope >= 0.9);

    nlohmann::json witness;
    witness["point"] = nlohmann::json::array();
    for (const auto& v : p.x) witness["point"].push_back(v.to_string());
    witness["point"].push_back(p.t.to_string());
    witness["scales"] = num.scales;
    witness["scale_errors"] = num.scale_errors;
    witness["slope"] = num.slope;
    witness["extrapolated_error"] = extrap_err;
    witness["exact_at_every_scale"] = num.errors_all_zero;
    std::ostringstream sum;
    if (num.errors_all_zero)
      sum << "exact at every scale";
    else
      sum << "slope " << num.slope << ", extrapolated error " << extrap_err;
    witness["summary"] = sum.str();
    report.checks.push_back(
        make_record("pansu-numeric_p" + std::to_string(t), ok, std::move(witness), timer.ms()));
  }
}

std::string render_csv(const Report& report) {
  // Dimension tables only.
  std::ostringstream os;
  os << "k,dim\n";
  for (const CheckRecord& c : report.checks) {
    if (!c.witness.contains("dims")) continue;
    const auto& dims = c.witness["dims"];
    for (size_t k = 0; k < dims.size(); ++k) os << k << "," << dims[k].get<int>() << "\n";
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Rumin-complex calculator and verifier on Heisenberg groups"};
  app.require_subcommand(1);

  int n = 1;
  int k = 0;
  int trials = 20;
  int eta_degree = 1;
  int degree_bound = -1;
  std::uint64_t seed = kDefaultSeed;
  std::string map_text = "identity";
  std::string alpha_text;
  std::string box_text;
  std::string format = "text";

  auto add_common = [&](CLI::App* cmd, bool with_map) {
    cmd->add_option("--n", n, "Heisenberg rank")->required();
    cmd->add_option("--format", format, "Output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    if (with_map) cmd->add_option("--map", map_text, "Contact map literal");
    return cmd;
  };

  CLI::App* dims = add_common(app.add_subcommand("dims", "Rumin fiber dimension table"), false);

  CLI::App* lemma32 = add_common(
      app.add_subcommand("lemma32", "Symplectic wedge-map ranks and the duality pairing"),
      false);

  CLI::App* rumind =
      add_common(app.add_subcommand("rumin-d", "Apply the Rumin differential"), false);
  rumind->add_option("--k", k, "Form degree")->required();
  rumind->add_option("--alpha", alpha_text, "Form literal")->required();
  rumind->add_option("--degree-bound", degree_bound, "Polynomial degree bound for the lift");

  CLI::App* weak = add_common(
      app.add_subcommand("weak-check", "Weak identity residuals for the Rumin differential"),
      false);
  weak->add_option("--k", k, "Form degree")->required();
  weak->add_option("--alpha", alpha_text, "Form literal for beta")->required();
  weak->add_option("--box", box_text, "Domain box");
  weak->add_option("--trials", trials, "Number of random test forms");
  weak->add_option("--seed", seed, "Random seed");
  weak->add_option("--eta-degree", eta_degree, "Polynomial degree of test-form coefficients");

  CLI::App* jcheck = add_common(
      app.add_subcommand("j-check", "Pullback/derivative exchange on the differential ideal"),
      true);
  jcheck->add_option("--k", k, "Form degree")->required();
  jcheck->add_option("--alpha", alpha_text, "Form literal (random J-valued forms if omitted)");
  jcheck->add_option("--box", box_text, "Domain box");
  jcheck->add_option("--trials", trials, "Number of random trials");
  jcheck->add_option("--seed", seed, "Random seed");
  jcheck->add_option("--eta-degree", eta_degree, "Polynomial degree of test-form coefficients");

  CLI::App* chain = add_common(
      app.add_subcommand("chain-check", "Chain-map identity for Pansu pullback"), true);
  chain->add_option("--k", k, "Form degree")->required();
  chain->add_option("--alpha", alpha_text, "Form literal (random representatives if omitted)");
  chain->add_option("--box", box_text, "Domain box");
  chain->add_option("--trials", trials, "Number of random trials");
  chain->add_option("--seed", seed, "Random seed");
  chain->add_option("--eta-degree", eta_degree, "Polynomial degree of test-form coefficients");

  CLI::App* numeric = add_common(
      app.add_subcommand("pansu-numeric", "Difference-quotient Pansu differential estimates"),
      true);
  numeric->add_option("--box", box_text, "Box to sample base points from");
  numeric->add_option("--trials", trials, "Number of sample points");
  numeric->add_option("--seed", seed, "Random seed");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      out << app.help();
      return 0;
    }
    err << e.what() << "\n" << app.help();
    return 2;
  }

  Report report;
  report.command = join_args(args);
  try {
    if (dims->parsed()) {
      run_dims(n, report);
    } else if (lemma32->parsed()) {
      run_lemma32(n, report);
    } else if (rumind->parsed()) {
      run_rumin_d(n, k, alpha_text, degree_bound, report);
    } else {
      Box box = box_text.empty() ? default_box(2 * n + 1) : parse_box(box_text);
      if (weak->parsed())
        run_weak_check(n, k, alpha_text, box, trials, seed, eta_degree, report);
      else if (jcheck->parsed())
        run_j_check(n, k, map_text, alpha_text, box, trials, seed, eta_degree, report);
      else if (chain->parsed())
        run_chain_check(n, k, map_text, alpha_text, box, trials, seed, eta_degree, report);
      else if (numeric->parsed()) {
        if (box_text.empty()) box = Box::cube(2 * n + 1, Rational(-1), Rational(1));
        run_pansu_numeric(n, map_text, box, trials, seed, report);
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    CheckRecord rec;
    rec.name = "error";
    rec.status = CheckRecord::Status::fail;
    rec.witness["error"] = e.what();
    rec.witness["summary"] = std::string(e.what());
    report.checks.push_back(std::move(rec));
  }

  if (format == "json") {
    out << render_json(report);
  } else if (format == "csv") {
    if (!dims->parsed()) {
      err << "csv output is available for dimension tables only\n";
      return 2;
    }
    out << render_csv(report);
  } else {
    out << render_text(report);
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace rumin
