#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "kawasaki/errors.hpp"
#include "kawasaki/gf.hpp"
#include "support.hpp"

using namespace kawasaki;

namespace {

const double kL = 10.0;
const Torus line(1, kL);

DensityField bump_density(const Grid& g, double base = 0.5, double height = 1.5) {
  return DensityField::sample(g, [=](const Point& x) {
    const double r = min_image(x[0] - 4.0, kL);
    return base + height * std::exp(-0.5 * r * r);
  });
}

enum class Oracle { kawasaki, eps_ren, vlasov };

// Direct O(n^3) double-integral evaluation on the grid, no FFTs involved.
double brute_force(const DensityField& rho, const DensityField& theta, const PairKernel& a,
                   const PairKernel& phi, Oracle variant, double eps = 1.0) {
  const Grid& g = rho.grid();
  const Torus& t = g.torus();
  const double h = g.cell_volume();
  const std::size_t n = g.size();
  auto kernel = [&](const PairKernel& k, std::size_t i, std::size_t j) {
    return k.evaluate(t.displacement(g.coordinate(j), g.coordinate(i)));
  };
  double mass = 0.0;
  for (std::size_t z = 0; z < n; ++z) mass += h * rho[z] * theta[z];
  double total = 0.0;
  for (std::size_t y = 0; y < n; ++y) {
    double exponent = 0.0;
    if (variant == Oracle::vlasov) {
      for (std::size_t z = 0; z < n; ++z) exponent -= h * rho[z] * kernel(phi, y, z);
      exponent += mass;
    } else {
      const double s = variant == Oracle::eps_ren ? eps : 1.0;
      for (std::size_t z = 0; z < n; ++z) {
        const double w = std::exp(-s * kernel(phi, y, z));
        exponent += h * rho[z] * (theta[z] * w + (w - 1.0) / s);
      }
    }
    double bracket = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      double weight = kernel(a, x, y);
      if (variant == Oracle::kawasaki) weight *= std::exp(-kernel(phi, x, y));
      if (variant == Oracle::eps_ren) weight *= std::exp(-eps * kernel(phi, x, y));
      bracket += h * weight * (theta[y] - theta[x]) * rho[x];
    }
    total += h * std::exp(exponent) * bracket;
  }
  return total;
}

}  // namespace

TEST_CASE("evaluate: B(0) = 1 for both representations") {
  const Grid g(line, 64);
  const TestFunction zero = TestFunction::cosine(line, {1, 0, 0}, 0.0);
  CHECK(ExponentialGF(bump_density(g)).evaluate(zero) == 1.0);
  Rng rng(1);
  std::vector<Configuration> ensemble;
  for (int r = 0; r < 5; ++r) ensemble.push_back(poisson_sample(bump_density(g), rng));
  const EmpiricalGF emp(ensemble);
  CHECK(emp.evaluate(zero).mean == 1.0);
  CHECK(emp.evaluate_renormalized(zero, 0.1).mean == 1.0);
}

TEST_CASE("evaluate: exponential GF of a constant density") {
  const Grid g(line, 128);
  const double c = 0.7;
  const TestFunction theta = TestFunction::gaussian_bump(line, {5.0, 0, 0}, 0.6, 0.8);
  const double s = 0.8 * 0.6 * std::sqrt(2.0 * std::numbers::pi);
  CHECK(ExponentialGF(DensityField(g, c)).evaluate(theta) == doctest::Approx(std::exp(c * s)).epsilon(1e-12));
  const DensityField var = ExponentialGF(DensityField(g, c)).first_variation(theta.sample(g));
  CHECK(var.max() == doctest::Approx(c * std::exp(c * s)).epsilon(1e-12));
  CHECK_THROWS_AS(ExponentialGF(DensityField(g, -1.0)), InputError);
}

TEST_CASE("evaluate: empirical GF of Poisson samples matches the exponential form") {
  const Grid g(line, 256);
  const DensityField rho = bump_density(g);
  const TestFunction theta = TestFunction::gaussian_bump(line, {4.5, 0, 0}, 0.5, 0.5);
  Rng rng(12);
  std::vector<Configuration> ensemble;
  for (int r = 0; r < 10000; ++r) ensemble.push_back(poisson_sample(rho, rng));
  const auto emp = EmpiricalGF(ensemble).evaluate(theta);
  const double exact = ExponentialGF(rho).evaluate(theta);
  CHECK(test_support::within(emp.mean, exact, emp.std_error));
  CHECK(emp.mean > 0.0);
}

TEST_CASE("property: empirical GF error shrinks at the Monte-Carlo rate") {
  const Grid g(line, 128);
  const DensityField rho(g, 1.0);
  const TestFunction theta = TestFunction::cosine(line, {1, 0, 0}, 0.4);
  Rng rng(14);
  std::vector<Configuration> pool;
  for (int r = 0; r < 6400; ++r) pool.push_back(poisson_sample(rho, rng));
  // stderr scales as R^{-1/2}: quadrupling R halves it
  std::vector<double> se;
  for (std::size_t r : {400u, 1600u, 6400u}) {
    const std::vector<Configuration> part(pool.begin(), pool.begin() + static_cast<long>(r));
    se.push_back(EmpiricalGF(part).evaluate(theta).std_error);
  }
  const double slope = std::log(se[2] / se[0]) / std::log(16.0);
  CHECK(std::fabs(slope + 0.5) < 0.1);
}

TEST_CASE("evaluate_renormalized: eps-scaled Poisson ensemble approaches exp(int rho theta)") {
  const Grid g(line, 256);
  const DensityField rho(g, 1.0);
  const TestFunction theta = TestFunction::gaussian_bump(line, {5.0, 0, 0}, 0.5, 0.5);
  const double limit = ExponentialGF(rho).evaluate(theta);
  const double eps = 0.01;
  Rng rng(16);
  std::vector<Configuration> ensemble;
  for (int r = 0; r < 1000; ++r) ensemble.push_back(poisson_sample((1.0 / eps) * rho, rng));
  const auto ren = EmpiricalGF(ensemble).evaluate_renormalized(theta, eps);
  CHECK(test_support::within(ren.mean, limit, ren.std_error));
  // exact finite-eps value: exp(eps^-1 \int rho log(1 + eps theta))
  const DensityField th = theta.sample(g);
  const DensityField logs = th.map([&](double v) { return std::log1p(eps * v) / eps; });
  CHECK(test_support::within(ren.mean, std::exp(inner_product(rho, logs)), ren.std_error));
  // eps = 1 is plain evaluation
  CHECK(EmpiricalGF(ensemble).evaluate_renormalized(theta, 1.0).mean == EmpiricalGF(ensemble).evaluate(theta).mean);
}

TEST_CASE("empirical GF preconditions") {
  CHECK_THROWS_AS(EmpiricalGF({}), InputError);
  const EmpiricalGF emp({Configuration(line, {{1.0, 0, 0}})});
  CHECK_THROWS_AS(emp.evaluate(TestFunction::cosine(line, {1, 0, 0}, 1.5)), InputError);
  CHECK_THROWS_AS(emp.evaluate_renormalized(TestFunction::cosine(line, {1, 0, 0}, 0.5), 0.0), InputError);
  CHECK_NOTHROW(emp.evaluate_renormalized(TestFunction::cosine(line, {1, 0, 0}, 5.0), 0.1));
}

TEST_CASE("apply_operator: theta = 0 gives 0") {
  const Grid g(line, 128);
  const auto a = PairKernel::tophat(1.0, 1.0, 1, kL);
  const auto phi = PairKernel::gaussian(0.5, 0.6, 1, kL);
  const DensityField zero(g, 0.0);
  for (auto v : {OperatorVariant::kawasaki, OperatorVariant::eps_ren, OperatorVariant::vlasov})
    CHECK(apply_operator(bump_density(g), zero, v, a, phi, 0.1) == 0.0);
}

TEST_CASE("apply_operator: homogeneous density annihilates the vlasov variant") {
  const Grid g(line, 128);
  const auto a = PairKernel::tophat(1.0, 1.0, 1, kL);
  const auto phi = PairKernel::gaussian(0.5, 0.6, 1, kL);
  const DensityField theta = TestFunction::gaussian_bump(line, {3.0, 0, 0}, 0.7, 0.9).sample(g);
  const double scale = std::exp(2.0 * theta.integral()) * 2.0 * a.l1_norm() * theta.integral();
  CHECK(std::fabs(apply_operator(DensityField(g, 2.0), theta, OperatorVariant::vlasov, a, phi)) < 1e-12 * scale);
}

TEST_CASE("property: kawasaki and vlasov variants coincide exactly when phi = 0") {
  const Grid g(line, 128);
  const auto a = PairKernel::gaussian(1.0, 0.5, 1, kL);
  const auto phi = PairKernel::tophat(0.0, 1.0, 1, kL);
  const DensityField rho = bump_density(g);
  for (int m = 1; m <= 3; ++m) {
    const DensityField theta = TestFunction::cosine(line, {m, 0, 0}, 0.6, 0.3 * m).sample(g);
    CHECK(apply_operator(rho, theta, OperatorVariant::kawasaki, a, phi) ==
          apply_operator(rho, theta, OperatorVariant::vlasov, a, phi));
  }
}

TEST_CASE("property: FFT evaluation agrees with the direct double sum") {
  const Grid g(line, 64);
  const auto a = PairKernel::gaussian(0.8, 0.7, 1, kL);
  const auto phi = PairKernel::exponential(1.2, 6.0, 1, kL);
  const DensityField rho = bump_density(g);
  const DensityField theta = TestFunction::gaussian_bump(line, {5.5, 0, 0}, 0.6, 0.7).sample(g);
  const GfOperator op(g, a, phi);
  struct Case { OperatorVariant v; Oracle o; double eps; };
  for (const Case c : {Case{OperatorVariant::kawasaki, Oracle::kawasaki, 1.0},
                       Case{OperatorVariant::eps_ren, Oracle::eps_ren, 0.3},
                       Case{OperatorVariant::vlasov, Oracle::vlasov, 1.0}}) {
    const double fast = op.apply(rho, theta, c.v, c.eps);
    const double slow = brute_force(rho, theta, a, phi, c.o, c.eps);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-10));
    CHECK(std::fabs(slow) > 1e-3);
  }
}

TEST_CASE("property: eps_ren converges to vlasov at first order") {
  const Grid g(line, 128);
  const auto a = PairKernel::tophat(1.0, 1.0, 1, kL);
  const auto phi = PairKernel::gaussian(0.5, 0.6, 1, kL);
  const DensityField rho = bump_density(g);
  const DensityField theta = TestFunction::gaussian_bump(line, {4.5, 0, 0}, 0.6, -0.5).sample(g);
  const double v = apply_operator(rho, theta, OperatorVariant::vlasov, a, phi);
  const std::vector<double> eps{0.1, 0.05, 0.025, 0.0125};
  std::vector<double> lx, ly;
  double last = INFINITY;
  for (double e : eps) {
    const double gap = std::fabs(apply_operator(rho, theta, OperatorVariant::eps_ren, a, phi, e) - v);
    CHECK(gap < last);
    last = gap;
    lx.push_back(std::log(e));
    ly.push_back(std::log(gap));
  }
  const double mx = (lx[0] + lx[1] + lx[2] + lx[3]) / 4.0, my = (ly[0] + ly[1] + ly[2] + ly[3]) / 4.0;
  double sxy = 0.0, sxx = 0.0;
  for (int i = 0; i < 4; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  CHECK(std::fabs(sxy / sxx - 1.0) < 0.15);
}

TEST_CASE("apply_operator: preconditions") {
  const Grid g(line, 64), other(line, 128);
  const auto a = PairKernel::tophat(1.0, 1.0, 1, kL);
  const DensityField rho(g, 1.0);
  CHECK_THROWS_AS(apply_operator(rho, DensityField(other, 1.0), OperatorVariant::vlasov, a, a), InputError);
  CHECK_THROWS_AS(apply_operator(rho, DensityField(g, 0.1), OperatorVariant::eps_ren, a, a, 0.0), InputError);
  CHECK_THROWS_AS(apply_operator(DensityField(g, -1.0), rho, OperatorVariant::vlasov, a, a), InputError);
}

TEST_CASE("gf_time_consistency: homogeneous trajectories") {
  const Grid g(line, 128);
  const auto a = PairKernel::tophat(1.0, 1.0, 1, kL);
  const auto phi = PairKernel::gaussian(0.5, 0.6, 1, kL);
  const GfOperator op(g, a, phi);
  const auto traj = VlasovSolver(g, a, phi).integrate(DensityField(g, 1.5), 1.0, 0.01, {0.49, 0.5, 0.51});
  const DensityField theta = TestFunction::cosine(line, {1, 0, 0}, 0.5, 0.2).sample(g);
  CHECK(gf_time_consistency(traj, theta, 0.5, 0.01, op).residual < 1e-10);
  CHECK_THROWS_AS(gf_time_consistency(traj, theta, 0.5, 0.02, op), InputError);
}

TEST_CASE("gf_time_consistency: smooth bump, second-order residual") {
  const Grid g(line, 256);
  const auto a = PairKernel::tophat(1.0, 1.0, 1, kL);
  const auto phi = PairKernel::gaussian(0.5, 0.6, 1, kL);
  const VlasovSolver solver(g, a, phi);
  const GfOperator op(g, a, phi);
  const DensityField rho0 = bump_density(g);
  const DensityField theta = TestFunction::gaussian_bump(line, {4.5, 0, 0}, 0.6, 0.5).sample(g);
  const double t = 0.5;
  std::vector<double> residual;
  for (double dt_fd : {4e-2, 2e-2}) {
    const auto traj = solver.integrate(rho0, t + dt_fd, 1e-3, {t - dt_fd, t, t + dt_fd});
    residual.push_back(gf_time_consistency(traj, theta, t, dt_fd, op).residual);
  }
  CHECK(std::fabs(std::log2(residual[0] / residual[1]) - 2.0) < 0.2);
  const auto traj = solver.integrate(rho0, t + 1e-3, 1e-3, {t - 1e-3, t, t + 1e-3});
  CHECK(gf_time_consistency(traj, theta, t, 1e-3, op).relative < 1e-3);
}

TEST_CASE("correlation_from_exponential: examples") {
  const Grid g(line, 64);
  const DensityField rho = bump_density(g);
  CHECK(correlation_from_exponential(rho, Configuration(line)) == 1.0);
  CHECK(correlation_from_exponential(rho, Configuration(line, {{4.0, 0, 0}})) == rho.at({4.0, 0, 0}));
  const Configuration three(line, {{1.0, 0, 0}, {2.0, 0, 0}, {7.5, 0, 0}});
  CHECK(correlation_from_exponential(DensityField(g, 1.5), three) == doctest::Approx(3.375).epsilon(1e-15));
}
