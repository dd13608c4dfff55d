#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bixu/comparison.hpp"
#include "bixu/dims.hpp"
#include "bixu/errors.hpp"
#include "bixu/harness.hpp"
#include "bixu/inference.hpp"
#include "bixu/kernels.hpp"
#include "bixu/wbedd.hpp"

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

nlohmann::json interval_json(const std::optional<bixu::Interval>& ci) {
  if (!ci) return nullptr;
  return {{"lo", ci->lo}, {"hi", ci->hi}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadruplet U-statistic inference on bipartite weighted networks"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "draw a WBEDD network and write it as CSV");
  double sim_lambda = 1.0, sim_c = 0.5, sim_gamma_shape = 1.0;
  std::optional<double> sim_f2, sim_g2, sim_alpha_f, sim_alpha_g;
  int sim_n_index = 0;
  std::uint64_t sim_seed = 0;
  std::string sim_out;
  bool sim_version2 = false;
  sim->add_option("--lambda", sim_lambda, "mean intensity");
  sim->add_option("--f2", sim_f2, "target row moment F2 (sets the f exponent)");
  sim->add_option("--g2", sim_g2, "target column moment G2 (sets the g exponent)");
  sim->add_option("--alpha-f", sim_alpha_f, "row power exponent (alternative to --f2)");
  sim->add_option("--alpha-g", sim_alpha_g, "column power exponent (alternative to --g2)");
  sim->add_option("--c", sim_c, "row fraction in (0,1)");
  sim->add_option("--n-index", sim_n_index, "asymptotic index N; sets (m,n)")->required();
  sim->add_option("--seed", sim_seed, "RNG seed");
  sim->add_option("--out", sim_out, "output CSV path")->required();
  sim->add_flag("--version2", sim_version2, "draw lambda from a Gamma law per network");
  sim->add_option("--gamma-shape", sim_gamma_shape, "Gamma shape for --version2");

  // ustat
  auto* ust = app.add_subcommand("ustat", "evaluate a quadruplet U-statistic");
  std::string ust_kernel = "h1", ust_input;
  bool ust_brute = false;
  ust->add_option("--kernel", ust_kernel, "h1..h6, product-form, motif5");
  ust->add_option("--input", ust_input, "matrix CSV path")->required();
  ust->add_flag("--brute-force", ust_brute, "force O(m^2 n^2) enumeration");

  // estimate
  auto* est = app.add_subcommand("estimate", "estimate F2 with confidence intervals");
  std::string est_input, est_variant = "vd";
  double est_alpha = 0.05;
  std::optional<double> est_lambda, est_f2, est_g2, est_c;
  est->add_option("--input", est_input, "matrix CSV path")->required();
  est->add_option("--alpha", est_alpha, "miscoverage level");
  est->add_option("--variant", est_variant, "v, vt, vd or vdt");
  est->add_option("--true-lambda", est_lambda, "true lambda (for vt/vdt)");
  est->add_option("--true-f2", est_f2, "true F2 (for vt/vdt)");
  est->add_option("--true-g2", est_g2, "true G2 (for vt/vdt)");
  est->add_option("--c", est_c, "row fraction override (default: m/(m+n))");

  // compare
  auto* cmp = app.add_subcommand("compare", "test equality of F2 across two networks");
  std::string cmp_a, cmp_b;
  double cmp_alpha = 0.05;
  cmp->add_option("--input-a", cmp_a, "first matrix CSV")->required();
  cmp->add_option("--input-b", cmp_b, "second matrix CSV")->required();
  cmp->add_option("--alpha", cmp_alpha, "test level");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a Monte-Carlo experiment from a JSON config");
  std::string exp_config, exp_out;
  exp->add_option("--config", exp_config, "JSON config path")->required();
  exp->add_option("--out", exp_out, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      bixu::WbeddParams params;
      params.lambda = sim_lambda;
      if (sim_alpha_f && sim_f2) throw bixu::domain_error("give --alpha-f or --f2, not both");
      if (sim_alpha_g && sim_g2) throw bixu::domain_error("give --alpha-g or --g2, not both");
      if (sim_alpha_f) params.alpha_f = *sim_alpha_f;
      else if (sim_f2) params.alpha_f = bixu::alpha_for_moment(*sim_f2);
      if (sim_alpha_g) params.alpha_g = *sim_alpha_g;
      else if (sim_g2) params.alpha_g = bixu::alpha_for_moment(*sim_g2);
      if (sim_version2) {
        params.version = bixu::WbeddVersion::RandomLambda;
        params.random_lambda_law = bixu::LambdaLaw{bixu::LambdaLaw::Kind::Gamma, sim_gamma_shape};
      }
      params.validate();
      const auto [m, n] = bixu::dims_sequence(sim_c, sim_n_index);
      const auto y = bixu::sample_network(params, static_cast<int>(m), static_cast<int>(n), sim_seed);
      bixu::save_matrix(y, sim_out);
      std::cout << "wrote " << m << "x" << n << " network to " << sim_out << "\n";
    } else if (ust->parsed()) {
      const auto id = bixu::parse_kernel_id(ust_kernel);
      if (!id) throw bixu::domain_error("unknown kernel '" + ust_kernel + "'");
      const auto y = bixu::load_matrix(ust_input);
      double value;
      const bool has_fast = (*id >= bixu::KernelId::H1 && *id <= bixu::KernelId::H6);
      if (ust_brute || !has_fast)
        value = bixu::ustat_bruteforce(y, bixu::named_kernel(*id));
      else
        value = bixu::ustat_fast(y, *id);
      std::cout << fmt17(value) << "\n";
    } else if (est->parsed()) {
      const auto y = bixu::load_matrix(est_input);
      const auto variant = bixu::parse_ci_variant(est_variant);
      if (!variant) throw bixu::domain_error("unknown CI variant '" + est_variant + "'");
      std::optional<bixu::TrueParams> truth;
      if (est_lambda || est_f2 || est_g2) {
        if (!(est_lambda && est_f2 && est_g2))
          throw bixu::domain_error("--true-lambda, --true-f2 and --true-g2 must be given together");
        bixu::WbeddParams p;
        p.lambda = *est_lambda;
        p.alpha_f = bixu::alpha_for_moment(*est_f2);
        p.alpha_g = bixu::alpha_for_moment(*est_g2);
        truth = bixu::TrueParams{p.lambda, bixu::moments_of(p), est_c ? *est_c : y.c_hat()};
      }
      const auto report = bixu::full_report(y, est_alpha, truth, est_c);
      nlohmann::json j;
      j["theta_hat"] = report.theta_hat;
      j["u_stats"] = {{"h1", report.u_stats.h1}, {"h2", report.u_stats.h2},
                      {"h3", report.u_stats.h3}, {"h4", report.u_stats.h4},
                      {"h5", report.u_stats.h5}, {"h6", report.u_stats.h6}};
      j["v_hat"] = {{"value", report.v_hat.value}, {"valid", report.v_hat.valid}};
      j["v_delta_hat"] = {{"value", report.v_delta_hat.value}, {"valid", report.v_delta_hat.valid}};
      j["ci"] = {{"v", interval_json(report.ci[0])},
                 {"vt", interval_json(report.ci[1])},
                 {"vd", interval_json(report.ci[2])},
                 {"vdt", interval_json(report.ci[3])}};
      j["variant"] = bixu::ci_variant_name(*variant);
      j["n_index"] = report.n_index;
      j["c_hat"] = report.c_hat;
      std::cout << j.dump(2) << "\n";
    } else if (cmp->parsed()) {
      const auto a = bixu::load_matrix(cmp_a);
      const auto b = bixu::load_matrix(cmp_b);
      const auto r = bixu::compare_f2(a, b, cmp_alpha);
      nlohmann::json j;
      j["delta_hat"] = r.delta_hat;
      j["z"] = r.z;
      j["p_value"] = r.p_value;
      j["reject"] = r.reject;
      j["n_total"] = r.n_total;
      j["rho"] = r.rho;
      std::cout << j.dump(2) << "\n";
    } else if (exp->parsed()) {
      std::ifstream in(exp_config);
      if (!in) throw bixu::parse_error("cannot open config: " + exp_config);
      std::stringstream ss;
      ss << in.rdbuf();
      const auto config = bixu::parse_experiment_config(ss.str());
      const std::string csv = bixu::run_experiment_csv(config);
      std::ofstream out(exp_out);
      if (!out) throw bixu::parse_error("cannot open output file: " + exp_out);
      out << csv;
      if (!out.flush()) throw bixu::parse_error("write failed: " + exp_out);
      std::cout << "wrote " << exp_out << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
