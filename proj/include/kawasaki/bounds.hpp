#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kawasaki/grid.hpp"
#include "kawasaki/kernels.hpp"

namespace kawasaki {

// Data of the Banach scale: 0 < alpha <= alpha' < alpha'' <= alpha0, plus an optional epsilon.
struct ScaleParameters {
  double alpha = 0.0;
  double alpha_prime = 0.0;
  double alpha_dprime = 0.0;
  double alpha0 = 0.0;
  std::optional<double> epsilon;

  // Throws DomainError if the ordering fails or epsilon is present but not positive.
  void validate() const;
};

// ||exp(\int rho theta)||_alpha: 1 when max rho <= 1/alpha, otherwise unbounded (nullopt).
std::optional<double> scale_norm_exponential(const DensityField& rho, double alpha);

// 2 e^{c1/alpha} ||a||_1 alpha' / (alpha - c0 alpha'), requires c0 alpha' < alpha.
double lemma2_bound(double c0, double c1, double alpha, double alpha_prime, double a_l1);

// 2 e^{||phi||_1/alpha} ||a||_1 alpha0 / (alpha'' - alpha').
double prop2_bound(const ScaleParameters& params, double a_l1, double phi_l1);

// 2 eps ||a||_1 ||phi||_inf (e alpha0/alpha) B e^{||phi||_1/alpha}
//   * [(2e ||phi||_1 + alpha0/e)/(alpha'' - alpha') + 8 alpha0^2/(alpha'' - alpha')^2].
// Needs params.epsilon >= 0.
double prop3_bound(const ScaleParameters& params, double a_l1, double phi_l1, double phi_linf,
                   double b_norm);

// Conservative local existence time (alpha0 - alpha) / (e M) with
// M = 2 e^{||phi||_1/alpha} ||a||_1 alpha0.
double existence_time(double alpha, double alpha0, double a_l1, double phi_l1);

enum class BoundVariant { lemma2_as_prop2, prop2, prop3 };

std::string to_string(BoundVariant variant);
BoundVariant parse_bound_variant(const std::string& name);

struct BoundCheck {
  BoundVariant variant = BoundVariant::prop2;
  double max_ratio = 0.0;
  int n_samples = 0;
  std::uint64_t seed = 0;
  double bound = 0.0;
};

/**
 * Falsification harness on the exponential subclass B = exp(\int rho theta).
 *
 * Draws n_theta random test functions (family, placement and shape random; L1 norm
 * uniform in (0, 20 alpha0]) and returns the largest
 *   |operator value| e^{-||theta||_1/alpha'} / bound.
 * Variants:
 *   lemma2_as_prop2  kawasaki operator against prop2_bound
 *   prop2            eps_ren and vlasov operators against prop2_bound
 *   prop3            |eps_ren - vlasov| against prop3_bound with B = 1
 * Norms of theta, a and phi are the discrete grid norms. Sample i uses seed + i.
 * Requires max rho <= 1/alpha'' so that ||B||_{alpha''} = 1.
 */
BoundCheck verify_bound_randomized(BoundVariant variant, const DensityField& rho,
                                   const PairKernel& a, const PairKernel& phi,
                                   const ScaleParameters& params, int n_theta,
                                   std::uint64_t seed);

}  // namespace kawasaki
