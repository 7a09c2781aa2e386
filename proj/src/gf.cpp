#include "kawasaki/gf.hpp"

#include <cmath>

#include "kawasaki/errors.hpp"

namespace kawasaki {

ExponentialGF::ExponentialGF(DensityField rho) : rho_(std::move(rho)) {
  if (rho_.min() < 0.0) throw InputError("exponential GF needs a nonnegative density");
}

double ExponentialGF::evaluate(const DensityField& theta) const {
  return std::exp(inner_product(rho_, theta));
}

double ExponentialGF::evaluate(const TestFunction& theta) const {
  return evaluate(theta.sample(rho_.grid()));
}

DensityField ExponentialGF::first_variation(const DensityField& theta) const {
  return evaluate(theta) * DensityField(rho_);
}

EmpiricalGF::EmpiricalGF(std::vector<Configuration> ensemble) : ensemble_(std::move(ensemble)) {
  if (ensemble_.empty()) throw InputError("empirical GF needs at least one configuration");
}

stats::MeanStderr EmpiricalGF::evaluate(const TestFunction& theta) const {
  if (!(theta.min_value() > -1.0))
    throw InputError("empirical GF requires theta > -1 everywhere");
  std::vector<double> products;
  products.reserve(ensemble_.size());
  for (const Configuration& c : ensemble_) {
    double prod = 1.0;
    for (const Point& x : c.points()) prod *= 1.0 + theta.evaluate(x);
    products.push_back(prod);
  }
  return stats::mean_stderr(products);
}

stats::MeanStderr EmpiricalGF::evaluate_renormalized(const TestFunction& theta,
                                                     double epsilon) const {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  return evaluate(theta.scaled(epsilon));
}

std::string to_string(OperatorVariant variant) {
  switch (variant) {
    case OperatorVariant::kawasaki: return "kawasaki";
    case OperatorVariant::eps_ren: return "eps_ren";
    case OperatorVariant::vlasov: return "vlasov";
  }
  return "unknown";
}

GfOperator::GfOperator(const Grid& grid, const PairKernel& a, const PairKernel& phi)
    : grid_(grid),
      a_(a),
      phi_(phi),
      convolver_(grid),
      a_field_(DensityField::from_kernel(grid, a)),
      phi_field_(DensityField::from_kernel(grid, phi)) {
  a_hat_ = convolver_.forward(a_field_);
  phi_hat_ = convolver_.forward(phi_field_);
}

double GfOperator::apply_weighted(const DensityField& rho, const DensityField& theta,
                                  const DensityField& weight,
                                  const DensityField& weight_minus_one) const {
  // exponent g(y) - \int rho theta, kept separate so the common factor is pulled out
  const DensityField rho_theta = rho * theta;
  const double mass = inner_product(rho, theta);
  const DensityField w_minus_one = weight.map([](double w) { return w - 1.0; });
  const DensityField exponent = convolver_.convolve(rho_theta, w_minus_one) +
                                convolver_.convolve(rho, weight_minus_one);
  const Spectrum aw_hat = convolver_.forward(a_field_ * weight);
  const DensityField gain = convolver_.convolve(rho, aw_hat);
  const DensityField loss = convolver_.convolve(rho_theta, aw_hat);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i)
    sum += std::exp(exponent[i]) * (theta[i] * gain[i] - loss[i]);
  return std::exp(mass) * sum * grid_.cell_volume();
}

double GfOperator::apply(const DensityField& rho, const DensityField& theta,
                         OperatorVariant variant, double epsilon) const {
  if (!(rho.grid() == grid_) || !(theta.grid() == grid_))
    throw InputError("grid mismatch in operator application");
  if (rho.min() < 0.0) throw InputError("operator needs a nonnegative density");

  switch (variant) {
    case OperatorVariant::kawasaki: {
      const DensityField w = phi_field_.map([](double p) { return std::exp(-p); });
      const DensityField wm1 = phi_field_.map([](double p) { return std::expm1(-p); });
      return apply_weighted(rho, theta, w, wm1);
    }
    case OperatorVariant::eps_ren: {
      if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw InputError("eps_ren operator needs epsilon > 0");
      const DensityField w = phi_field_.map([epsilon](double p) { return std::exp(-epsilon * p); });
      const DensityField wm1 =
          phi_field_.map([epsilon](double p) { return std::expm1(-epsilon * p) / epsilon; });
      return apply_weighted(rho, theta, w, wm1);
    }
    case OperatorVariant::vlasov: {
      const double mass = inner_product(rho, theta);
      const DensityField crowding = convolver_.convolve(rho, phi_hat_);
      const DensityField gain = convolver_.convolve(rho, a_hat_);
      const DensityField loss = convolver_.convolve(rho * theta, a_hat_);
      double sum = 0.0;
      for (std::size_t i = 0; i < grid_.size(); ++i)
        sum += std::exp(-crowding[i]) * (theta[i] * gain[i] - loss[i]);
      return std::exp(mass) * sum * grid_.cell_volume();
    }
  }
  return 0.0;
}

double apply_operator(const DensityField& rho, const DensityField& theta, OperatorVariant variant,
                      const PairKernel& a, const PairKernel& phi, double epsilon) {
  return GfOperator(rho.grid(), a, phi).apply(rho, theta, variant, epsilon);
}

ConsistencyCheck gf_time_consistency(const Trajectory& trajectory, const DensityField& theta,
                                     double t, double dt_fd, const GfOperator& op) {
  if (!(dt_fd > 0.0)) throw InputError("dt_fd must be positive");
  if (trajectory.times.empty() || t - dt_fd < trajectory.times.front() - 1e-12 ||
      t + dt_fd > trajectory.times.back() + 1e-12)
    throw InputError("t is too close to the trajectory endpoints");
  const DensityField& before = trajectory.at(t - dt_fd);
  const DensityField& now = trajectory.at(t);
  const DensityField& after = trajectory.at(t + dt_fd);

  ConsistencyCheck out;
  const double b_after = std::exp(inner_product(after, theta));
  const double b_before = std::exp(inner_product(before, theta));
  out.time_derivative = (b_after - b_before) / (2.0 * dt_fd);
  out.operator_value = op.apply(now, theta, OperatorVariant::vlasov);
  out.residual = std::fabs(out.time_derivative - out.operator_value);
  out.relative = out.operator_value != 0.0 ? out.residual / std::fabs(out.operator_value) : out.residual;
  return out;
}

double correlation_from_exponential(const DensityField& rho, const Configuration& eta) {
  double prod = 1.0;
  for (const Point& x : eta.points()) prod *= rho.at(x);
  return prod;
}

}  // namespace kawasaki
