#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "kawasaki/errors.hpp"
#include "kawasaki/kernels.hpp"
#include "kawasaki/stats.hpp"
#include "support.hpp"

using namespace kawasaki;

namespace {

Point pt(double x, double y = 0.0, double z = 0.0) { return {x, y, z}; }

std::vector<PairKernel> all_families(int dim) {
  return {PairKernel::tophat(1.3, 0.8, dim, 10.0), PairKernel::gaussian(0.7, 0.6, dim, 10.0),
          PairKernel::exponential(2.0, 8.0, dim, 10.0)};
}

double sphere_area(int dim, double r) {
  switch (dim) {
    case 1: return 2.0;
    case 2: return 2.0 * std::numbers::pi * r;
    default: return 4.0 * std::numbers::pi * r * r;
  }
}

}  // namespace

TEST_CASE("evaluate: examples") {
  const auto top = PairKernel::tophat(1.0, 0.5, 1, 10.0);
  CHECK(top.evaluate(pt(0.3)) == 1.0);
  CHECK(top.evaluate(pt(0.6)) == 0.0);
  CHECK(top.evaluate(pt(0.5)) == 1.0);  // closed support
  CHECK(PairKernel::gaussian(1.0, 1.0, 1, 20.0).evaluate(pt(0.0)) == 1.0);
}

TEST_CASE("evaluate: minimum-image reduction and errors") {
  const auto top = PairKernel::tophat(1.0, 0.5, 1, 10.0);
  CHECK(top.evaluate(pt(9.8)) == 1.0);
  CHECK(top.evaluate(pt(-9.8)) == 1.0);
  CHECK_THROWS_AS(top.evaluate(pt(std::nan(""))), InputError);
  CHECK_THROWS_AS(top.evaluate(pt(INFINITY)), InputError);
  const auto g = PairKernel::gaussian(2.0, 0.5, 2, 10.0);
  CHECK(g.evaluate(pt(0.3, 10.0 - 0.4)) == doctest::Approx(2.0 * std::exp(-0.5 * 0.25 / 0.25)).epsilon(1e-14));
}

TEST_CASE("l1_norm: examples") {
  CHECK(PairKernel::tophat(1.0, 0.5, 1, 10.0).l1_norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(PairKernel::tophat(2.0, 1.0, 1, 10.0).l1_norm() == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(PairKernel::gaussian(1.0, 1.0, 1, 20.0).l1_norm() ==
        doctest::Approx(std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-15));
  CHECK(PairKernel::gaussian(1.0, 1.0, 1, 20.0).l1_norm() == doctest::Approx(2.5066).epsilon(1e-4));
}

TEST_CASE("linf_norm is the peak value") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& k : all_families(d)) CHECK(k.linf_norm() == k.evaluate(pt(0.0)));
}

TEST_CASE("property: evenness on random displacements") {
  Rng rng(11);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int d = 1; d <= 3; ++d)
    for (const auto& k : all_families(d)) {
      for (int i = 0; i < 10000; ++i) {
        Point x = pt(u(rng), u(rng), u(rng));
        const Point minus_x = -1.0 * x;
        REQUIRE(k.evaluate(x) == k.evaluate(minus_x));
        REQUIRE(k.evaluate(x) >= 0.0);
      }
    }
}

TEST_CASE("property: midpoint quadrature reproduces l1_norm in d = 1") {
  const double side = 10.0;
  for (const auto& k : all_families(1)) {
    const int n = 20 * 1024;
    const double h = side / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += k.evaluate(pt(-0.5 * side + (i + 0.5) * h));
    sum *= h;
    // the top-hat edges cost at most one cell each
    const double tol = k.family() == KernelFamily::tophat ? 2.0 * h / 1.6 : 1e-6;
    CHECK(std::fabs(sum - k.l1_norm()) / k.l1_norm() < tol);
  }
}

TEST_CASE("property: radial quadrature reproduces l1_norm in d = 2, 3") {
  using boost::math::quadrature::gauss_kronrod;
  for (int d = 2; d <= 3; ++d)
    for (const auto& k : all_families(d)) {
      auto f = [&](double r) { return sphere_area(d, r) * k.evaluate_radius(r); };
      const double upper = k.compact() ? k.support_radius() : 5.0;
      const double q = gauss_kronrod<double, 61>::integrate(f, 0.0, upper, 15, 1e-14);
      CHECK(std::fabs(q - k.l1_norm()) / k.l1_norm() < 1e-6);
    }
}

TEST_CASE("sample_displacement: top-hat moments") {
  const auto top = PairKernel::tophat(1.0, 0.5, 1, 10.0);
  Rng rng(2024);
  std::vector<double> xs(100000);
  for (double& x : xs) x = top.sample_displacement(rng)[0];
  const auto s = test_support::describe(xs);
  CHECK(test_support::within(s.mean, 0.0, std::sqrt(0.25 / 3.0 / s.n)));
  // variance of the sample variance for a uniform law: (mu4 - sigma^4)/n, mu4 = R^4/5
  const double var = 0.25 / 3.0;
  const double var_se = std::sqrt((0.0625 / 5.0 - var * var) / s.n);
  CHECK(test_support::within(s.var, var, var_se));
  for (double x : xs) REQUIRE(std::fabs(x) <= 0.5);
}

TEST_CASE("sample_displacement: gaussian variance") {
  const auto g = PairKernel::gaussian(1.0, 0.7, 1, 20.0);
  Rng rng(7);
  std::vector<double> xs(100000);
  for (double& x : xs) x = g.sample_displacement(rng)[0];
  const auto s = test_support::describe(xs);
  CHECK(test_support::within(s.var, 0.49, 0.49 * std::sqrt(2.0 / s.n)));
}

TEST_CASE("property: Kolmogorov-Smirnov against analytic CDFs (d = 1)") {
  const int n = 20000;
  auto ks_p = [&](const PairKernel& k, const std::function<double(double)>& cdf, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> xs(n);
    for (double& x : xs) x = k.sample_displacement(rng)[0];
    const double d = stats::ks_statistic(xs, cdf);
    return stats::kolmogorov_survival(std::sqrt(static_cast<double>(n)) * d);
  };
  const double R = 0.8;
  CHECK(ks_p(PairKernel::tophat(1.0, R, 1, 10.0),
             [&](double x) { return std::clamp((x + R) / (2.0 * R), 0.0, 1.0); }, 1) > 0.001);
  const double sigma = 0.6;
  CHECK(ks_p(PairKernel::gaussian(1.0, sigma, 1, 10.0),
             [&](double x) { return 0.5 * std::erfc(-x / (sigma * std::numbers::sqrt2)); }, 2) > 0.001);
  const double kappa = 8.0;
  CHECK(ks_p(PairKernel::exponential(1.0, kappa, 1, 10.0),
             [&](double x) { return x < 0 ? 0.5 * std::exp(kappa * x) : 1.0 - 0.5 * std::exp(-kappa * x); },
             3) > 0.001);
}

TEST_CASE("sample_displacement: radial law in d = 2, 3 stays inside support") {
  Rng rng(5);
  for (int d = 2; d <= 3; ++d) {
    const auto top = PairKernel::tophat(1.0, 1.0, d, 10.0);
    std::vector<double> r2(20000);
    for (double& v : r2) {
      const Point x = top.sample_displacement(rng);
      v = norm_squared(x, d);
      REQUIRE(v <= 1.0);
    }
    // E|x|^2 = d R^2 / (d + 2) for the uniform ball
    const auto s = test_support::describe(r2);
    CHECK(test_support::within(s.mean, d / (d + 2.0), s.mean_se(), 4.0));
  }
}

TEST_CASE("sample_displacement: zero kernel is a configuration error") {
  Rng rng(1);
  CHECK_THROWS_AS(PairKernel::tophat(0.0, 1.0, 1, 10.0).sample_displacement(rng), ConfigError);
}

TEST_CASE("sampling is deterministic given the stream") {
  const auto e = PairKernel::exponential(1.0, 4.0, 3, 20.0);
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) REQUIRE(e.sample_displacement(a) == e.sample_displacement(b));
}

TEST_CASE("construction is validated") {
  CHECK_THROWS_AS(PairKernel::tophat(1.0, 5.0, 1, 10.0), ConfigError);   // R must stay below L/2
  CHECK_THROWS_AS(PairKernel::gaussian(1.0, 2.0, 1, 10.0), ConfigError);  // periodic tail too heavy
  CHECK_THROWS_AS(PairKernel::exponential(1.0, 1.0, 1, 10.0), ConfigError);
  CHECK_THROWS_AS(PairKernel::tophat(-1.0, 1.0, 1, 10.0), ConfigError);
  CHECK_THROWS_AS(PairKernel::tophat(1.0, 1.0, 4, 10.0), ConfigError);
  CHECK_THROWS_AS(PairKernel::tophat(1.0, 1.0, 1, -1.0), ConfigError);
  CHECK_NOTHROW(PairKernel::tophat(0.0, 1.0, 1, 10.0));
}

TEST_CASE("fourier transform: closed forms") {
  const auto top = PairKernel::tophat(1.0, 0.5, 1, 10.0);
  const double k = 2.0 * std::numbers::pi;
  CHECK(top.fourier(pt(0.0)) == doctest::Approx(top.l1_norm()));
  CHECK(top.fourier(pt(k)) == doctest::Approx(2.0 * std::sin(k * 0.5) / k).epsilon(1e-14));
  const auto g = PairKernel::gaussian(1.5, 0.4, 2, 10.0);
  CHECK(g.fourier(pt(1.0, 2.0)) == doctest::Approx(g.l1_norm() * std::exp(-0.5 * 0.16 * 5.0)).epsilon(1e-14));
}

TEST_CASE("fourier transform agrees with numerical quadrature in d = 1") {
  using boost::math::quadrature::gauss_kronrod;
  for (const auto& ker : all_families(1)) {
    for (double k : {0.7, 3.0, 11.0}) {
      auto f = [&](double x) { return 2.0 * ker.evaluate_radius(x) * std::cos(k * x); };
      const double upper = ker.compact() ? ker.support_radius() : 5.0;
      const double q = gauss_kronrod<double, 61>::integrate(f, 0.0, upper, 15, 1e-14);
      CHECK(ker.fourier(pt(k)) == doctest::Approx(q).epsilon(1e-8));
    }
  }
}

TEST_CASE("scaled multiplies amplitude") {
  const auto g = PairKernel::gaussian(1.0, 0.5, 1, 10.0).scaled(0.25);
  CHECK(g.amplitude() == 0.25);
  CHECK(g.evaluate(pt(0.0)) == 0.25);
}
