#pragma once

#include <functional>
#include <span>
#include <vector>

namespace kawasaki::stats {

struct MeanStderr {
  double mean = 0.0;
  double std_error = 0.0;
};

// Sample mean and standard error of the mean (0 for fewer than two samples).
MeanStderr mean_stderr(std::span<const double> samples);

// Componentwise mean/stderr over equally sized per-replica vectors.
struct VectorMoments {
  std::vector<double> mean;
  std::vector<double> std_error;
};
VectorMoments vector_moments(std::span<const std::vector<double>> replicas);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Upper-tail probability of a chi-square variable with dof degrees of freedom.
double chi_square_survival(double statistic, int dof);

/**
 * Pearson goodness-of-fit of binned counts against bin probabilities.
 *
 * Adjacent bins are merged left to right until each merged bin expects at least
 * min_expected counts (a short last group is folded into its predecessor).
 * Probabilities are renormalized to sum to one. dof = merged bins - 1 - fitted.
 */
ChiSquareResult chi_square_test(std::span<const double> observed,
                                std::span<const double> probabilities, int fitted = 0,
                                double min_expected = 5.0);

// Goodness-of-fit of integer samples against Poisson(mean).
ChiSquareResult poisson_test(std::span<const long long> samples, double mean);

// Kolmogorov-Smirnov distance between samples and a continuous CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// Asymptotic Kolmogorov survival function P(K > lambda).
double kolmogorov_survival(double lambda);

// Two-sided normal p-value of a z-score.
double two_sided_normal_p(double z);

}  // namespace kawasaki::stats
