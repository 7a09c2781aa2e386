#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kawasaki/config.hpp"
#include "kawasaki/geometry.hpp"
#include "kawasaki/grid.hpp"
#include "kawasaki/kernels.hpp"
#include "kawasaki/stats.hpp"
#include "kawasaki/test_function.hpp"

namespace kawasaki {

// Scaling-limit experiment: particles started from Poisson(rho0/eps) and run with the
// eps-scaled generator, compared against the mean-field solution rho_t.
struct ExperimentConfig {
  Torus torus{1, 10.0};
  int grid_n = 256;    // PDE grid
  int bins = 16;       // density histogram bins per axis
  int pair_bins = 4;   // bins per axis of the pair-density check
  PairKernel a = PairKernel::tophat(1.0, 1.0, 1, 10.0);
  PairKernel phi = PairKernel::tophat(0.0, 1.0, 1, 10.0);
  Rho0Spec rho0;
  std::vector<double> epsilons{0.5, 0.2, 0.1};
  double t_end = 0.0;
  std::vector<double> observation_times;
  int replicas = 50;
  std::vector<TestFunction> thetas;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = ".";
  double dt = 1e-3;
  // Scale used for the conservative existence time; defaults to alpha0 = 1/max rho0
  // and alpha = alpha0/2.
  std::optional<double> alpha;
  std::optional<double> alpha0;
  Json source;  // the parsed JSON, hashed into the manifest

  // Throws ConfigError when an invariant fails.
  void validate() const;
  double expected_particles(double epsilon) const;
};

ExperimentConfig parse_experiment_config(const Json& j);

struct TimeError {
  double time = 0.0;
  double l1_error = 0.0;
  double l1_stderr = 0.0;  // jackknife over replicas
  double linf_error = 0.0;
};

struct GfGap {
  double epsilon = 0.0;
  double time = 0.0;
  int theta_id = 0;
  double b_emp = 0.0;
  double b_pde = 0.0;
  double std_error = 0.0;
  double gap = 0.0;
};

struct DensityRow {
  double epsilon = 0.0;
  double time = 0.0;
  Point x{0.0, 0.0, 0.0};
  double rho_emp = 0.0;
  double rho_pde = 0.0;
  double abs_err = 0.0;
};

// t = 0 check of the renormalized histogram against rho0 using exact Poisson variances.
struct InitialCheck {
  double chi_square = 0.0;
  int dof = 0;
  double p_value = 1.0;
  double max_abs_z = 0.0;
};

// Position-resolved factorization eps^2 k2(A, B) ~ rho_t(A) rho_t(B) over unordered bin pairs.
struct PairCheck {
  double epsilon = 0.0;
  double time = 0.0;
  int tested = 0;
  int within_3sigma = 0;
  double max_abs_z = 0.0;
};

struct EpsilonSummary {
  double epsilon = 0.0;
  std::uint64_t first_seed = 0;
  double mean_particles = 0.0;
  InitialCheck initial;
  std::vector<TimeError> errors;  // one per observation time
  double runtime_seconds = 0.0;   // reported on the console only
};

struct ScalingReport {
  std::vector<double> times;  // observation times
  std::vector<EpsilonSummary> per_epsilon;
  std::vector<DensityRow> density;
  std::vector<GfGap> gf;
  std::optional<PairCheck> pair;
  double existence_time = 0.0;
  bool within_existence_time = true;
  double pde_mass_drift = 0.0;
  // err_{i+1} <= err_i + sqrt(se_i^2 + se_{i+1}^2) for consecutive epsilons.
  bool l1_monotone = true;
  bool gf_monotone = true;
  bool initial_ok = true;  // every chi-square p-value >= 0.0027 (the 3 sigma level)

  Json to_json() const;
  std::string density_csv(int dim) const;
  std::string gf_csv() const;
};

ScalingReport run_scaling_experiment(const ExperimentConfig& config);
void write_scaling_outputs(const ScalingReport& report, const ExperimentConfig& config);

struct EquilibriumResult {
  std::vector<double> edges;
  std::vector<double> observed;
  std::vector<double> probability;        // Gibbs target, normalized
  std::vector<double> ideal_probability;  // phi = 0 reference
  stats::ChiSquareResult chi_square;
  long long samples = 0;
  double acceptance_rate = 0.0;
};

/**
 * Two-particle equilibrium. Samples the minimum-image distance every sample_interval
 * over [t_burn, t_burn + t_sample] and compares its histogram with the stationary law
 * proportional to e^{-phi(r)} times the ideal distance density, obtained by quadrature.
 * sample_interval <= 0 selects 5 / ||a||_1. Throws StatisticsError with fewer than
 * 5 samples per bin.
 */
EquilibriumResult run_equilibrium_check(const PairKernel& a, const PairKernel& phi, double t_burn,
                                        double t_sample, Rng& rng, int bins = 20,
                                        double sample_interval = 0.0);

// Normalized bin probabilities of the minimum-image distance for the law
// proportional to e^{-phi(u)} du on the displacement cube [-L/2, L/2)^d.
std::vector<double> gibbs_distance_probabilities(const PairKernel& phi, std::span<const double> edges);

// Entry point of the command-line tool. Returns 0 on success, 1 on validation errors,
// 2 on numerical failures.
int cli_main(int argc, const char* const* argv);

}  // namespace kawasaki
