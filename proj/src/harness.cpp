#include "bixu/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bixu/comparison.hpp"
#include "bixu/dims.hpp"
#include "bixu/errors.hpp"
#include "bixu/rng.hpp"
#include "bixu/stats.hpp"

namespace bixu {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

BipartiteNetwork load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open matrix file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        throw parse_error(path + ": row " + std::to_string(line_no) + ": bad cell '" + cell + "'");
      }
      while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
      if (pos != cell.size())
        throw parse_error(path + ": row " + std::to_string(line_no) + ": bad cell '" + cell + "'");
      row.push_back(v);
    }
    if (row.empty()) throw parse_error(path + ": row " + std::to_string(line_no) + ": empty row");
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_error(path + ": row " + std::to_string(line_no) + ": expected " +
                        std::to_string(rows.front().size()) + " columns, got " +
                        std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error(path + ": no data rows");
  BipartiteNetwork y(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) {
      if (!(rows[i][j] >= 0.0) || !std::isfinite(rows[i][j]))
        throw parse_error(path + ": row " + std::to_string(i + 1) + ", column " +
                          std::to_string(j + 1) + ": entries must be finite and nonnegative");
      y(i, j) = rows[i][j];
    }
  return y;
}

void save_matrix(const BipartiteNetwork& y, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot open output file: " + path);
  for (int i = 0; i < y.rows(); ++i) {
    for (int j = 0; j < y.cols(); ++j) {
      if (j) out << ',';
      out << fmt17(y(i, j));
    }
    out << '\n';
  }
  if (!out) throw parse_error("write failed: " + path);
}

double ks_statistic(const std::vector<double>& samples, double mean, double var) {
  if (samples.empty()) throw domain_error("ks_statistic: no samples");
  if (var < 0.0) throw domain_error("ks_statistic: negative variance");
  const std::size_t k = samples.size();
  if (var == 0.0) {
    for (double x : samples)
      if (x != mean) return 1.0;
    return 0.0;
  }
  std::vector<double> s(samples);
  std::sort(s.begin(), s.end());
  const double sd = std::sqrt(var);
  double d = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double f = normal_cdf((s[i] - mean) / sd);
    d = std::max(d, static_cast<double>(i + 1) / k - f);
    d = std::max(d, f - static_cast<double>(i) / k);
  }
  return d;
}

void ExperimentConfig::validate() const {
  params.validate();
  if (!(c > 0.0 && c < 1.0)) throw domain_error("experiment: c must lie in (0,1)");
  if (n_index_list.empty()) throw domain_error("experiment: n_index_list is empty");
  for (int n : n_index_list)
    if (n < 1) throw domain_error("experiment: n_index entries must be >= 1");
  if (replicates < 1) throw domain_error("experiment: replicates must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw domain_error("experiment: alpha must lie in (0,1)");
  if (experiment == ExperimentKind::Coverage && ci_variants.empty())
    throw domain_error("coverage experiment: ci_variants is empty");
  if (experiment == ExperimentKind::Power) {
    if (f2_b_grid.empty()) throw domain_error("power experiment: f2_b_grid is empty");
    for (double f2 : f2_b_grid)
      if (!(f2 >= 1.0)) throw domain_error("power experiment: f2_b entries must be >= 1");
  }
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("config: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    const std::string kind = j.at("experiment").get<std::string>();
    if (kind == "coverage")
      cfg.experiment = ExperimentKind::Coverage;
    else if (kind == "distribution")
      cfg.experiment = ExperimentKind::Distribution;
    else if (kind == "power")
      cfg.experiment = ExperimentKind::Power;
    else
      throw parse_error("config: unknown experiment '" + kind + "'");

    const auto& p = j.at("params");
    cfg.params.lambda = p.value("lambda", 1.0);
    if (p.contains("alpha_f"))
      cfg.params.alpha_f = p.at("alpha_f").get<double>();
    else if (p.contains("f2"))
      cfg.params.alpha_f = alpha_for_moment(p.at("f2").get<double>());
    if (p.contains("alpha_g"))
      cfg.params.alpha_g = p.at("alpha_g").get<double>();
    else if (p.contains("g2"))
      cfg.params.alpha_g = alpha_for_moment(p.at("g2").get<double>());
    if (p.value("random_lambda", false)) {
      cfg.params.version = WbeddVersion::RandomLambda;
      LambdaLaw law;
      if (p.value("lambda_law", std::string("gamma")) == "point_mass")
        law.kind = LambdaLaw::Kind::PointMass;
      law.gamma_shape = p.value("gamma_shape", 1.0);
      cfg.params.random_lambda_law = law;
    }

    cfg.c = j.value("c", 0.5);
    cfg.n_index_list = j.at("n_index_list").get<std::vector<int>>();
    cfg.replicates = j.at("replicates").get<int>();
    cfg.alpha = j.value("alpha", 0.05);
    cfg.master_seed = j.value("master_seed", std::uint64_t{0});
    if (j.contains("ci_variants")) {
      for (const auto& name : j.at("ci_variants")) {
        auto v = parse_ci_variant(name.get<std::string>());
        if (!v) throw parse_error("config: unknown ci variant '" + name.get<std::string>() + "'");
        cfg.ci_variants.push_back(*v);
      }
    }
    if (j.contains("f2_b_grid")) cfg.f2_b_grid = j.at("f2_b_grid").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

std::vector<CoverageRow> run_coverage_experiment(const ExperimentConfig& config) {
  config.validate();
  const TrueMoments moments = moments_of(config.params);
  const TrueParams truth{config.params.lambda, moments, config.c};
  const int n_variants = static_cast<int>(config.ci_variants.size());
  std::vector<CoverageRow> rows;
  for (int n_index : config.n_index_list) {
    const auto [m, n] = dims_sequence(config.c, n_index);
    const int k = config.replicates;
    // Replicate-indexed outcome arrays keep the aggregation order fixed, so
    // the output is identical for any thread count.
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(k) * n_variants, 0);
    std::vector<std::uint8_t> invalid(static_cast<std::size_t>(k) * n_variants, 0);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < k; ++r) {
      const std::uint64_t seed = derive_seed({config.master_seed, static_cast<std::uint64_t>(n_index),
                                              static_cast<std::uint64_t>(r)});
      const BipartiteNetwork y =
          sample_network(config.params, static_cast<int>(m), static_cast<int>(n), seed);
      for (int v = 0; v < n_variants; ++v) {
        const std::size_t slot = static_cast<std::size_t>(r) * n_variants + v;
        try {
          const Interval ci = confidence_interval(y, config.alpha, config.ci_variants[v], truth);
          covered[slot] = (ci.lo <= moments.f2 && moments.f2 <= ci.hi) ? 1 : 0;
        } catch (const invalid_variance_error&) {
          invalid[slot] = 1;
        } catch (const degenerate_input_error&) {
          invalid[slot] = 1;
        }
      }
    }
    const auto band = binomial_band(k, 1.0 - config.alpha, 0.95);
    for (int v = 0; v < n_variants; ++v) {
      long n_cov = 0, n_inv = 0;
      for (int r = 0; r < k; ++r) {
        n_cov += covered[static_cast<std::size_t>(r) * n_variants + v];
        n_inv += invalid[static_cast<std::size_t>(r) * n_variants + v];
      }
      rows.push_back({n_index, config.ci_variants[v], static_cast<double>(n_cov) / k,
                      static_cast<int>(n_inv), band.first, band.second});
    }
  }
  return rows;
}

std::vector<DistributionRow> run_distribution_experiment(const ExperimentConfig& config) {
  config.validate();
  const TrueMoments moments = moments_of(config.params);
  const VarianceSet vs = theoretical_variances(config.params.lambda, moments, config.c);
  std::vector<DistributionRow> rows;
  for (int n_index : config.n_index_list) {
    const auto [m, n] = dims_sequence(config.c, n_index);
    const int k = config.replicates;
    std::vector<double> theta(k, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < k; ++r) {
      const std::uint64_t seed = derive_seed({config.master_seed, static_cast<std::uint64_t>(n_index),
                                              static_cast<std::uint64_t>(r)});
      const BipartiteNetwork y =
          sample_network(config.params, static_cast<int>(m), static_cast<int>(n), seed);
      theta[r] = estimate_f2(y);
    }
    double mean = 0.0;
    for (int r = 0; r < k; ++r) mean += theta[r];
    mean /= k;
    double var = 0.0;
    for (int r = 0; r < k; ++r) var += (theta[r] - mean) * (theta[r] - mean);
    var = (k > 1) ? var / (k - 1) : 0.0;
    const double ks = ks_statistic(theta, moments.f2, vs.v_delta / n_index);
    rows.push_back({n_index, mean, var, ks});
  }
  return rows;
}

std::vector<PowerRow> run_power_experiment(const ExperimentConfig& config) {
  config.validate();
  const TrueMoments moments_a = moments_of(config.params);
  const SideParams side_a{config.params.lambda, moments_a, config.c};
  std::vector<PowerRow> rows;
  for (int n_index : config.n_index_list) {
    if (n_index % 2 != 0)
      throw domain_error("power experiment: n_index must be even (two equal halves)");
    const auto [m, n] = dims_sequence(config.c, n_index / 2);
    for (std::size_t g = 0; g < config.f2_b_grid.size(); ++g) {
      WbeddParams params_b = config.params;
      params_b.alpha_f = alpha_for_moment(config.f2_b_grid[g]);
      const TrueMoments moments_b = moments_of(params_b);
      const SideParams side_b{params_b.lambda, moments_b, config.c};
      const int k = config.replicates;
      std::vector<std::uint8_t> rejected(k, 0);
#pragma omp parallel for schedule(dynamic)
      for (int r = 0; r < k; ++r) {
        const std::uint64_t base = derive_seed(
            {config.master_seed, static_cast<std::uint64_t>(n_index), static_cast<std::uint64_t>(g),
             static_cast<std::uint64_t>(r)});
        const BipartiteNetwork ya = sample_network(config.params, static_cast<int>(m),
                                                   static_cast<int>(n), derive_seed({base, 0}));
        const BipartiteNetwork yb =
            sample_network(params_b, static_cast<int>(m), static_cast<int>(n), derive_seed({base, 1}));
        try {
          rejected[r] = compare_f2(ya, yb, config.alpha).reject ? 1 : 0;
        } catch (const invalid_variance_error&) {
          rejected[r] = 0;  // unusable variance: cannot reject
        } catch (const degenerate_input_error&) {
          rejected[r] = 0;
        }
      }
      long n_rej = 0;
      for (int r = 0; r < k; ++r) n_rej += rejected[r];
      const double reject_freq = static_cast<double>(n_rej) / k;
      const double psi = theoretical_power(side_a, side_b, n_index, 0.5, config.alpha);
      rows.push_back({n_index, config.f2_b_grid[g], reject_freq, 1.0 - reject_freq, psi});
    }
  }
  return rows;
}

std::string to_csv(const std::vector<CoverageRow>& rows) {
  std::string out = "N,variant,covered_freq,invalid_count,binom_lo,binom_hi\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n_index);
    out += ',';
    out += ci_variant_name(r.variant);
    out += ',';
    out += fmt17(r.covered_freq);
    out += ',';
    out += std::to_string(r.invalid_count);
    out += ',';
    out += fmt17(r.binom_lo);
    out += ',';
    out += fmt17(r.binom_hi);
    out += '\n';
  }
  return out;
}

std::string to_csv(const std::vector<DistributionRow>& rows) {
  std::string out = "N,mean_theta,var_theta,ks_D\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n_index);
    out += ',';
    out += fmt17(r.mean_theta);
    out += ',';
    out += fmt17(r.var_theta);
    out += ',';
    out += fmt17(r.ks_d);
    out += '\n';
  }
  return out;
}

std::string to_csv(const std::vector<PowerRow>& rows) {
  std::string out = "N,f2_b,reject_freq,accept_freq,psi_theoretical\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n_index);
    out += ',';
    out += fmt17(r.f2_b);
    out += ',';
    out += fmt17(r.reject_freq);
    out += ',';
    out += fmt17(r.accept_freq);
    out += ',';
    out += fmt17(r.psi_theoretical);
    out += '\n';
  }
  return out;
}

std::string run_experiment_csv(const ExperimentConfig& config) {
  switch (config.experiment) {
    case ExperimentKind::Coverage:
      return to_csv(run_coverage_experiment(config));
    case ExperimentKind::Distribution:
      return to_csv(run_distribution_experiment(config));
    case ExperimentKind::Power:
      return to_csv(run_power_experiment(config));
  }
  throw domain_error("unknown experiment kind");
}

}  // namespace bixu
