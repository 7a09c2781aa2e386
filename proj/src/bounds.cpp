#include "kawasaki/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "kawasaki/errors.hpp"
#include "kawasaki/gf.hpp"
#include "kawasaki/parallel.hpp"
#include "kawasaki/test_function.hpp"

namespace kawasaki {

namespace {

constexpr double e = std::numbers::e;

void require_finite_nonnegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be finite and >= 0");
}

void check_ordering(const ScaleParameters& p) {
  for (double v : {p.alpha, p.alpha_prime, p.alpha_dprime, p.alpha0})
    if (!std::isfinite(v)) throw DomainError("scale parameters must be finite");
  if (!(p.alpha > 0.0 && p.alpha <= p.alpha_prime && p.alpha_prime < p.alpha_dprime &&
        p.alpha_dprime <= p.alpha0))
    throw DomainError("scale parameters must satisfy 0 < alpha <= alpha' < alpha'' <= alpha0");
}

// A random signed test function with unit-free shape; its amplitude is fixed later.
TestFunction random_shape(const Grid& grid, Rng& rng) {
  const Torus& torus = grid.torus();
  const double side = torus.side();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Point centre{0.0, 0.0, 0.0};
  for (int a = 0; a < torus.dim(); ++a) centre[a] = unit(rng) * side;
  const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
  const double min_width = std::max(0.05 * side, grid.spacing());
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: {
      const double w = min_width + unit(rng) * std::max(side / 15.0 - min_width, 0.0);
      return TestFunction::gaussian_bump(torus, centre, w, sign);
    }
    case 1: {
      std::array<int, kMaxDim> mode{0, 0, 0};
      std::uniform_int_distribution<int> pick(0, 3);
      do {
        for (int a = 0; a < torus.dim(); ++a) mode[a] = pick(rng);
      } while (mode[0] == 0 && mode[1] == 0 && mode[2] == 0);
      return TestFunction::cosine(torus, mode, sign, 2.0 * std::numbers::pi * unit(rng));
    }
    default: {
      const double w = min_width + unit(rng) * (0.3 * side - min_width);
      return TestFunction::indicator(torus, centre, w, sign);
    }
  }
}

}  // namespace

void ScaleParameters::validate() const {
  check_ordering(*this);
  if (epsilon && (!(*epsilon > 0.0) || !std::isfinite(*epsilon)))
    throw DomainError("epsilon must be positive");
}

std::optional<double> scale_norm_exponential(const DensityField& rho, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
  if (rho.min() < 0.0) throw DomainError("density must be nonnegative");
  if (rho.max() <= 1.0 / alpha) return 1.0;
  return std::nullopt;
}

double lemma2_bound(double c0, double c1, double alpha, double alpha_prime, double a_l1) {
  if (!(alpha > 0.0) || !(alpha_prime > 0.0) || !std::isfinite(alpha) || !std::isfinite(alpha_prime))
    throw DomainError("alpha and alpha' must be positive");
  if (!std::isfinite(c0) || !std::isfinite(c1)) throw DomainError("c0 and c1 must be finite");
  require_finite_nonnegative(a_l1, "||a||_1");
  if (!(c0 * alpha_prime < alpha)) throw DomainError("lemma 2 needs c0 alpha' < alpha");
  return 2.0 * std::exp(c1 / alpha) * a_l1 * alpha_prime / (alpha - c0 * alpha_prime);
}

double prop2_bound(const ScaleParameters& params, double a_l1, double phi_l1) {
  check_ordering(params);
  require_finite_nonnegative(a_l1, "||a||_1");
  require_finite_nonnegative(phi_l1, "||phi||_1");
  return 2.0 * std::exp(phi_l1 / params.alpha) * a_l1 * params.alpha0 /
         (params.alpha_dprime - params.alpha_prime);
}

double prop3_bound(const ScaleParameters& params, double a_l1, double phi_l1, double phi_linf,
                   double b_norm) {
  check_ordering(params);
  if (!params.epsilon) throw DomainError("prop3 bound needs epsilon");
  require_finite_nonnegative(*params.epsilon, "epsilon");
  require_finite_nonnegative(a_l1, "||a||_1");
  require_finite_nonnegative(phi_l1, "||phi||_1");
  require_finite_nonnegative(phi_linf, "||phi||_inf");
  require_finite_nonnegative(b_norm, "||B||");
  const double gap = params.alpha_dprime - params.alpha_prime;
  const double a0 = params.alpha0;
  const double bracket = (2.0 * e * phi_l1 + a0 / e) / gap + 8.0 * a0 * a0 / (gap * gap);
  return 2.0 * *params.epsilon * a_l1 * phi_linf * (e * a0 / params.alpha) * b_norm *
         std::exp(phi_l1 / params.alpha) * bracket;
}

double existence_time(double alpha, double alpha0, double a_l1, double phi_l1) {
  if (!(alpha > 0.0) || !std::isfinite(alpha0)) throw DomainError("alpha must be positive");
  if (!(alpha < alpha0)) throw DomainError("existence time needs alpha < alpha0");
  if (!(a_l1 > 0.0) || !std::isfinite(a_l1)) throw DomainError("||a||_1 must be positive");
  require_finite_nonnegative(phi_l1, "||phi||_1");
  const double m = 2.0 * std::exp(phi_l1 / alpha) * a_l1 * alpha0;
  return (alpha0 - alpha) / (e * m);
}

std::string to_string(BoundVariant variant) {
  switch (variant) {
    case BoundVariant::lemma2_as_prop2: return "lemma2-as-prop2";
    case BoundVariant::prop2: return "prop2";
    case BoundVariant::prop3: return "prop3";
  }
  return "unknown";
}

BoundVariant parse_bound_variant(const std::string& name) {
  if (name == "lemma2-as-prop2") return BoundVariant::lemma2_as_prop2;
  if (name == "prop2") return BoundVariant::prop2;
  if (name == "prop3") return BoundVariant::prop3;
  throw ConfigError("unknown bound variant '" + name + "'");
}

BoundCheck verify_bound_randomized(BoundVariant variant, const DensityField& rho,
                                   const PairKernel& a, const PairKernel& phi,
                                   const ScaleParameters& params, int n_theta,
                                   std::uint64_t seed) {
  params.validate();
  if (n_theta < 1) throw DomainError("n_theta must be positive");
  const auto norm = scale_norm_exponential(rho, params.alpha_dprime);
  if (!norm || *norm != 1.0) throw DomainError("verification needs max rho <= 1/alpha''");
  const bool needs_eps = variant != BoundVariant::lemma2_as_prop2;
  if (needs_eps && !params.epsilon) throw DomainError("variant " + to_string(variant) + " needs epsilon");

  const Grid& grid = rho.grid();
  const DensityField a_field = DensityField::from_kernel(grid, a);
  const DensityField phi_field = DensityField::from_kernel(grid, phi);
  const double a_l1 = a_field.l1_norm();
  const double phi_l1 = phi_field.l1_norm();
  const double phi_linf = std::max(phi_field.max(), -phi_field.min());

  BoundCheck out;
  out.variant = variant;
  out.n_samples = n_theta;
  out.seed = seed;
  out.bound = variant == BoundVariant::prop3 ? prop3_bound(params, a_l1, phi_l1, phi_linf, 1.0)
                                             : prop2_bound(params, a_l1, phi_l1);

  const GfOperator op(grid, a, phi);
  const double eps = params.epsilon.value_or(1.0);
  const double top = 20.0 * params.alpha0;

  const std::vector<double> ratios = parallel_map(static_cast<std::size_t>(n_theta), [&](std::size_t i) {
    Rng rng(seed + i);
    const TestFunction shape = random_shape(grid, rng);
    // magnitude uniform in (0, top]
    const double magnitude = top * (1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng));
    DensityField theta = shape.sample(grid);
    const double raw = theta.l1_norm();
    if (raw == 0.0) return 0.0;
    theta *= magnitude / raw;
    const double weight = std::exp(-theta.l1_norm() / params.alpha_prime);

    double value = 0.0;
    switch (variant) {
      case BoundVariant::lemma2_as_prop2:
        value = std::fabs(op.apply(rho, theta, OperatorVariant::kawasaki));
        break;
      case BoundVariant::prop2:
        value = std::max(std::fabs(op.apply(rho, theta, OperatorVariant::eps_ren, eps)),
                         std::fabs(op.apply(rho, theta, OperatorVariant::vlasov)));
        break;
      case BoundVariant::prop3:
        value = std::fabs(op.apply(rho, theta, OperatorVariant::eps_ren, eps) -
                          op.apply(rho, theta, OperatorVariant::vlasov));
        break;
    }
    if (!std::isfinite(value)) return std::numeric_limits<double>::infinity();
    if (out.bound == 0.0) return value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return value * weight / out.bound;
  });

  for (double r : ratios) out.max_ratio = std::max(out.max_ratio, r);
  return out;
}

}  // namespace kawasaki
