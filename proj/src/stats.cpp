#include "kawasaki/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>
#include <cmath>

#include "kawasaki/errors.hpp"

namespace kawasaki::stats {

MeanStderr mean_stderr(std::span<const double> samples) {
  MeanStderr out;
  if (samples.empty()) return out;
  double sum = 0.0;
  for (double v : samples) sum += v;
  out.mean = sum / static_cast<double>(samples.size());
  if (samples.size() < 2) return out;
  double ss = 0.0;
  for (double v : samples) ss += (v - out.mean) * (v - out.mean);
  const double n = static_cast<double>(samples.size());
  out.std_error = std::sqrt(ss / (n - 1.0) / n);
  return out;
}

VectorMoments vector_moments(std::span<const std::vector<double>> replicas) {
  VectorMoments out;
  if (replicas.empty()) return out;
  const std::size_t m = replicas.front().size();
  out.mean.assign(m, 0.0);
  out.std_error.assign(m, 0.0);
  for (const auto& r : replicas) {
    if (r.size() != m) throw InputError("replica vectors differ in size");
    for (std::size_t k = 0; k < m; ++k) out.mean[k] += r[k];
  }
  const double n = static_cast<double>(replicas.size());
  for (double& v : out.mean) v /= n;
  if (replicas.size() < 2) return out;
  for (const auto& r : replicas)
    for (std::size_t k = 0; k < m; ++k) out.std_error[k] += (r[k] - out.mean[k]) * (r[k] - out.mean[k]);
  for (double& v : out.std_error) v = std::sqrt(v / (n - 1.0) / n);
  return out;
}

double chi_square_survival(double statistic, int dof) {
  if (dof < 1) throw StatisticsError("chi-square test needs at least one degree of freedom");
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, std::max(statistic, 0.0)));
}

ChiSquareResult chi_square_test(std::span<const double> observed,
                                std::span<const double> probabilities, int fitted,
                                double min_expected) {
  if (observed.size() != probabilities.size() || observed.empty())
    throw InputError("observed and probability bins must match");
  double total = 0.0;
  double mass = 0.0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    total += observed[k];
    mass += probabilities[k];
  }
  if (total <= 0.0 || mass <= 0.0) throw StatisticsError("chi-square test on empty data");

  std::vector<double> obs;
  std::vector<double> exp;
  double o = 0.0;
  double e = 0.0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    o += observed[k];
    e += total * probabilities[k] / mass;
    if (e >= min_expected) {
      obs.push_back(o);
      exp.push_back(e);
      o = e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (exp.empty()) {
      obs.push_back(o);
      exp.push_back(e);
    } else {
      obs.back() += o;
      exp.back() += e;
    }
  }
  ChiSquareResult r;
  for (std::size_t k = 0; k < obs.size(); ++k) r.statistic += (obs[k] - exp[k]) * (obs[k] - exp[k]) / exp[k];
  r.dof = static_cast<int>(obs.size()) - 1 - fitted;
  if (r.dof < 1) throw StatisticsError("too few populated bins for a chi-square test");
  r.p_value = chi_square_survival(r.statistic, r.dof);
  return r;
}

ChiSquareResult poisson_test(std::span<const long long> samples, double mean) {
  if (samples.empty()) throw StatisticsError("Poisson test on no samples");
  if (!(mean > 0.0)) throw InputError("Poisson mean must be positive");
  boost::math::poisson_distribution<double> dist(mean);
  // bins 0..k_max-1 plus an upper tail bin
  long long observed_max = *std::max_element(samples.begin(), samples.end());
  const auto k_max = static_cast<long long>(
      std::max<double>(observed_max + 1, std::ceil(mean + 10.0 * std::sqrt(mean) + 10.0)));
  std::vector<double> counts(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (long long s : samples) {
    if (s < 0) throw InputError("negative count");
    counts[static_cast<std::size_t>(std::min(s, k_max))] += 1.0;
  }
  std::vector<double> probs(counts.size());
  double below = 0.0;
  for (long long k = 0; k < k_max; ++k) {
    probs[static_cast<std::size_t>(k)] = boost::math::pdf(dist, static_cast<double>(k));
    below += probs[static_cast<std::size_t>(k)];
  }
  probs.back() = std::max(0.0, 1.0 - below);
  return chi_square_test(counts, probs);
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw StatisticsError("KS test on no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.3) return 1.0;  // series converges slowly; the survival is 1 to ~1e-9 here
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double two_sided_normal_p(double z) { return std::erfc(std::fabs(z) / std::sqrt(2.0)); }

}  // namespace kawasaki::stats
