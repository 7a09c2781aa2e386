#pragma once

#include <span>
#include <string>
#include <vector>

#include "kawasaki/geometry.hpp"
#include "kawasaki/grid.hpp"
#include "kawasaki/kernels.hpp"
#include "kawasaki/spectral.hpp"
#include "kawasaki/stats.hpp"
#include "kawasaki/test_function.hpp"
#include "kawasaki/vlasov.hpp"

namespace kawasaki {

// B(theta) = exp(\int rho theta), the generating functional of a Poisson field with
// intensity rho. Its first variation is delta B(theta; x) = rho(x) B(theta).
class ExponentialGF {
public:
  explicit ExponentialGF(DensityField rho);

  const DensityField& density() const { return rho_; }
  double evaluate(const DensityField& theta) const;
  double evaluate(const TestFunction& theta) const;
  DensityField first_variation(const DensityField& theta) const;

private:
  DensityField rho_;
};

// Monte-Carlo estimate of B(theta) = E prod_{x in gamma} (1 + theta(x)) over an
// ensemble of equal-time configurations. theta must stay above -1.
class EmpiricalGF {
public:
  explicit EmpiricalGF(std::vector<Configuration> ensemble);

  std::size_t replicas() const { return ensemble_.size(); }
  const std::vector<Configuration>& ensemble() const { return ensemble_; }

  stats::MeanStderr evaluate(const TestFunction& theta) const;
  // B_ren(theta) = B(epsilon theta).
  stats::MeanStderr evaluate_renormalized(const TestFunction& theta, double epsilon) const;

private:
  std::vector<Configuration> ensemble_;
};

enum class OperatorVariant { kawasaki, eps_ren, vlasov };

std::string to_string(OperatorVariant variant);

/**
 * Closed-form action of the generating-functional evolution operators on
 * B = exp(\int rho theta). With delta B(theta'; x) = rho(x) exp(\int rho theta')
 * every variant reduces to grid convolutions (w = e^{-phi}, w_eps = e^{-eps phi}):
 *
 *   kawasaki  \int dy e^{g(y)} [theta(y)(rho*(a w))(y) - ((rho theta)*(a w))(y)]
 *             g = (rho theta)*w + rho*(w - 1)
 *   eps_ren   same with w_eps, g = (rho theta)*w_eps + rho*(w_eps - 1)/eps
 *   vlasov    e^{\int rho theta} \int dy e^{-(rho*phi)(y)} [theta(y)(rho*a)(y) - ((rho theta)*a)(y)]
 *
 * Kernel fields and spectra are cached per instance.
 */
class GfOperator {
public:
  GfOperator(const Grid& grid, const PairKernel& a, const PairKernel& phi);

  const Grid& grid() const { return grid_; }
  double apply(const DensityField& rho, const DensityField& theta, OperatorVariant variant,
               double epsilon = 1.0) const;

private:
  double apply_weighted(const DensityField& rho, const DensityField& theta,
                        const DensityField& weight, const DensityField& weight_minus_one) const;

  Grid grid_;
  PairKernel a_;
  PairKernel phi_;
  Convolver convolver_;
  DensityField a_field_;
  DensityField phi_field_;
  Spectrum a_hat_;
  Spectrum phi_hat_;
};

double apply_operator(const DensityField& rho, const DensityField& theta, OperatorVariant variant,
                      const PairKernel& a, const PairKernel& phi, double epsilon = 1.0);

struct ConsistencyCheck {
  double time_derivative = 0.0;  // central difference of B(rho_t)(theta)
  double operator_value = 0.0;   // (L_V B_t)(theta)
  double residual = 0.0;         // |time_derivative - operator_value|
  double relative = 0.0;         // residual / |operator_value|
};

// Compares d/dt exp(\int rho_t theta) by central differences on a trajectory containing
// t - dt_fd, t, t + dt_fd against the Vlasov operator applied at rho_t.
ConsistencyCheck gf_time_consistency(const Trajectory& trajectory, const DensityField& theta,
                                     double t, double dt_fd, const GfOperator& op);

// k(eta) = prod_{x in eta} rho(x) for B = exp(\int rho theta) (nearest-cell rho).
double correlation_from_exponential(const DensityField& rho, const Configuration& eta);

}  // namespace kawasaki
