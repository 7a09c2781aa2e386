#include "kawasaki/harmonic.hpp"

#include <bit>
#include <cstdint>

#include "kawasaki/errors.hpp"

namespace kawasaki {

namespace {

void require_enumerable(const Configuration& c) {
  if (c.size() > kMaxSubsetPoints)
    throw SizeError("subset enumeration is limited to 25 points, got " +
                    std::to_string(c.size()));
}

}  // namespace

double k_transform(const FiniteFunctional& g, const Configuration& gamma) {
  require_enumerable(gamma);
  const std::uint64_t subsets = std::uint64_t{1} << gamma.size();
  double sum = 0.0;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) sum += g(gamma.subset(mask));
  return sum;
}

double k_inverse(const FiniteFunctional& f, const Configuration& eta) {
  require_enumerable(eta);
  const std::size_t n = eta.size();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  double sum = 0.0;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const auto missing = n - static_cast<std::size_t>(std::popcount(mask));
    const double sign = missing % 2 ? -1.0 : 1.0;
    sum += sign * f(eta.subset(mask));
  }
  return sum;
}

double coherent_state(const PointFunction& f, const Configuration& eta) {
  double prod = 1.0;
  for (const Point& x : eta.points()) prod *= f(x);
  return prod;
}

double lp_exponential_integral(double mass, int n_max) {
  if (n_max < 0) throw InputError("n_max must be nonnegative");
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    term *= mass / n;
    sum += term;
  }
  return sum;
}

double lp_exponential_integral(const DensityField& f, int n_max) {
  return lp_exponential_integral(f.integral(), n_max);
}

void subset_zeta(std::span<double> table) {
  if (!std::has_single_bit(table.size())) throw InputError("subset table size must be 2^n");
  for (std::size_t bit = 1; bit < table.size(); bit <<= 1)
    for (std::size_t mask = 0; mask < table.size(); ++mask)
      if (mask & bit) table[mask] += table[mask ^ bit];
}

void subset_moebius(std::span<double> table) {
  if (!std::has_single_bit(table.size())) throw InputError("subset table size must be 2^n");
  for (std::size_t bit = 1; bit < table.size(); bit <<= 1)
    for (std::size_t mask = 0; mask < table.size(); ++mask)
      if (mask & bit) table[mask] -= table[mask ^ bit];
}

std::vector<double> tabulate(const FiniteFunctional& g, const Configuration& gamma) {
  require_enumerable(gamma);
  const std::uint64_t subsets = std::uint64_t{1} << gamma.size();
  std::vector<double> table(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) table[mask] = g(gamma.subset(mask));
  return table;
}

}  // namespace kawasaki
