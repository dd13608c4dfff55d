#ifndef BIXU_HARNESS_HPP_
#define BIXU_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bixu/inference.hpp"
#include "bixu/network.hpp"
#include "bixu/wbedd.hpp"

namespace bixu {

BipartiteNetwork load_matrix(const std::string& path);
void save_matrix(const BipartiteNetwork& y, const std::string& path);

/// Exact sup-distance between the empirical CDF of the samples and the
/// normal CDF with the given mean and variance.
double ks_statistic(const std::vector<double>& samples, double mean, double var);

enum class ExperimentKind { Coverage, Distribution, Power };

/// Declarative Monte-Carlo experiment description; mirrors the JSON config.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Coverage;
  WbeddParams params;                    // generating model (network A for power)
  double c = 0.5;                        // row fraction, sets (m, n) per N
  std::vector<int> n_index_list;
  int replicates = 1;
  double alpha = 0.05;
  std::uint64_t master_seed = 0;
  std::vector<CiVariant> ci_variants;    // coverage only
  std::vector<double> f2_b_grid;         // power only

  void validate() const;
};

/// Parses the JSON text of a config file.
ExperimentConfig parse_experiment_config(const std::string& json_text);

struct CoverageRow {
  int n_index;
  CiVariant variant;
  double covered_freq;
  int invalid_count;
  double binom_lo, binom_hi;
};

struct DistributionRow {
  int n_index;
  double mean_theta;
  double var_theta;
  double ks_d;
};

struct PowerRow {
  int n_index;
  double f2_b;
  double reject_freq;
  double accept_freq;
  double psi_theoretical;
};

std::vector<CoverageRow> run_coverage_experiment(const ExperimentConfig& config);
std::vector<DistributionRow> run_distribution_experiment(const ExperimentConfig& config);
std::vector<PowerRow> run_power_experiment(const ExperimentConfig& config);

std::string to_csv(const std::vector<CoverageRow>& rows);
std::string to_csv(const std::vector<DistributionRow>& rows);
std::string to_csv(const std::vector<PowerRow>& rows);

/// Runs whichever experiment the config declares and returns the CSV text.
std::string run_experiment_csv(const ExperimentConfig& config);

}  // namespace bixu

#endif  // BIXU_HARNESS_HPP_
