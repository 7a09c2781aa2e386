#include "kawasaki/vlasov.hpp"

#include <algorithm>
#include <cmath>

#include "kawasaki/errors.hpp"

namespace kawasaki {

namespace {

constexpr double kNegativityTolerance = 1e-12;
constexpr double kClipTolerance = 1e-13;
constexpr double kStabilityGuard = 0.1;

}  // namespace

DensityField convolve(const DensityField& f, const DensityField& g) {
  if (!(f.grid() == g.grid())) throw InputError("grid mismatch in convolution");
  return Convolver(f.grid()).convolve(f, g);
}

DensityField convolve(const DensityField& f, const PairKernel& g) {
  return convolve(f, DensityField::from_kernel(f.grid(), g));
}

const DensityField& Trajectory::at(double t) const {
  for (std::size_t i = 0; i < times.size(); ++i)
    if (std::fabs(times[i] - t) <= 1e-12 * std::max(1.0, std::fabs(t))) return fields[i];
  throw InputError("trajectory has no field at the requested time");
}

VlasovSolver::VlasovSolver(const Grid& grid, const PairKernel& a, const PairKernel& phi)
    : grid_(grid), a_(a), phi_(phi), convolver_(grid) {
  a_hat_ = convolver_.forward(DensityField::from_kernel(grid_, a_));
  phi_hat_ = convolver_.forward(DensityField::from_kernel(grid_, phi_));
}

DensityField VlasovSolver::rhs_unchecked(const DensityField& rho) const {
  const DensityField crowding = convolver_.convolve(rho, phi_hat_);
  const DensityField boltzmann = crowding.map([](double c) { return std::exp(-c); });
  DensityField gain = convolver_.convolve(rho, a_hat_);
  gain *= boltzmann;
  DensityField loss = convolver_.convolve(boltzmann, a_hat_);
  loss *= rho;
  return gain - loss;
}

DensityField VlasovSolver::rhs(const DensityField& rho) const {
  if (!(rho.grid() == grid_)) throw InputError("grid mismatch in Vlasov right-hand side");
  if (rho.min() < -kNegativityTolerance) throw StateError("density has negative entries");
  return rhs_unchecked(rho);
}

Trajectory VlasovSolver::integrate(const DensityField& rho0, double t_end, double dt,
                                   std::vector<double> output_times) const {
  if (!(rho0.grid() == grid_)) throw InputError("grid mismatch in Vlasov integration");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InputError("dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw InputError("t_end must be nonnegative");
  if (dt * a_.l1_norm() > kStabilityGuard * (1.0 + 1e-12))
    throw InputError("dt * ||a||_1 must not exceed 0.1");
  if (rho0.min() < -kNegativityTolerance) throw StateError("initial density has negative entries");
  if (output_times.empty()) output_times.push_back(t_end);
  for (std::size_t i = 0; i < output_times.size(); ++i) {
    const double t = output_times[i];
    if (!(t >= 0.0 && t <= t_end)) throw InputError("output times must lie in [0, t_end]");
    if (i > 0 && !(t > output_times[i - 1]))
      throw InputError("output times must be strictly increasing");
  }

  Trajectory traj;
  DensityField rho = rho0;
  double t = 0.0;
  traj.max_linf = rho.max();

  for (double target : output_times) {
    const double span = target - t;
    if (span > 0.0) {
      const auto steps = static_cast<long long>(std::ceil(span / dt - 1e-9));
      const double h = span / static_cast<double>(steps);
      for (long long s = 0; s < steps; ++s) {
        const DensityField k1 = rhs_unchecked(rho);
        const DensityField k2 = rhs_unchecked(rho + (0.5 * h) * k1);
        const DensityField k3 = rhs_unchecked(rho + (0.5 * h) * k2);
        const DensityField k4 = rhs_unchecked(rho + h * k3);
        auto values = rho.values();
        for (std::size_t i = 0; i < rho.size(); ++i) {
          double v = values[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
          if (!std::isfinite(v)) throw BlowUpError("Vlasov solution became non-finite");
          if (v < 0.0) {
            if (v < -kClipTolerance)
              throw StepSizeError("Vlasov solution lost positivity; reduce dt");
            v = 0.0;
          }
          values[i] = v;
        }
        traj.max_linf = std::max(traj.max_linf, rho.max());
      }
      t = target;
    }
    traj.times.push_back(target);
    traj.fields.push_back(rho);
  }
  return traj;
}

DensityField vlasov_rhs(const DensityField& rho, const PairKernel& a, const PairKernel& phi) {
  return VlasovSolver(rho.grid(), a, phi).rhs(rho);
}

Trajectory integrate(const DensityField& rho0, double t_end, double dt, const PairKernel& a,
                     const PairKernel& phi, std::vector<double> output_times) {
  return VlasovSolver(rho0.grid(), a, phi).integrate(rho0, t_end, dt, std::move(output_times));
}

double linear_mode_rate(const PairKernel& a, const Point& wave_vector) {
  return a.l1_norm() - a.fourier(wave_vector);
}

}  // namespace kawasaki
