#pragma once

#include <cmath>
#include <numeric>
#include <span>
#include <vector>

namespace test_support {

struct Sample {
  double mean = 0.0;
  double var = 0.0;  // unbiased
  double n = 0.0;
  double mean_se() const { return std::sqrt(var / n); }
};

inline Sample describe(std::span<const double> xs) {
  Sample s;
  s.n = static_cast<double>(xs.size());
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / s.n;
  double ss = 0.0;
  for (double x : xs) ss += (x - s.mean) * (x - s.mean);
  s.var = ss / (s.n - 1.0);
  return s;
}

inline bool within(double value, double target, double sigma, double k = 3.0) {
  return std::fabs(value - target) <= k * sigma;
}

}  // namespace test_support
