#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kawasaki/geometry.hpp"

namespace kawasaki {

// A function on finite configurations (subsets of some base configuration).
using FiniteFunctional = std::function<double(const Configuration&)>;
using PointFunction = std::function<double(const Point&)>;

inline constexpr std::size_t kMaxSubsetPoints = 25;

// (KG)(gamma) = sum over all subsets eta of gamma of G(eta); subsets visited in
// binary-counter order of their index masks.
double k_transform(const FiniteFunctional& g, const Configuration& gamma);

// (K^{-1}F)(eta) = sum over xi subset of eta of (-1)^{|eta \ xi|} F(xi).
double k_inverse(const FiniteFunctional& f, const Configuration& eta);

// e_lambda(f, eta) = prod_{x in eta} f(x); 1 on the empty configuration.
double coherent_state(const PointFunction& f, const Configuration& eta);

// Truncated Lebesgue-Poisson integral  sum_{n <= n_max} s^n / n!  with s = \int f.
double lp_exponential_integral(double mass, int n_max);
double lp_exponential_integral(const DensityField& f, int n_max);

// In-place subset-sum (zeta) and Moebius transforms over tables indexed by bit masks.
// table.size() must be a power of two; these are the fast O(n 2^n) counterparts of
// k_transform / k_inverse evaluated on every subset of a base configuration at once.
void subset_zeta(std::span<double> table);
void subset_moebius(std::span<double> table);

// G tabulated on every subset of gamma (index = mask).
std::vector<double> tabulate(const FiniteFunctional& g, const Configuration& gamma);

}  // namespace kawasaki
