#include <doctest.h>

#include <cmath>
#include <vector>

#include "kawasaki/errors.hpp"
#include "kawasaki/harmonic.hpp"

using namespace kawasaki;

namespace {

Configuration random_config(int n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 5.0);
  Configuration c(Torus(2, 5.0));
  for (int i = 0; i < n; ++i) c.add({u(rng), u(rng), 0.0});
  return c;
}

// A generic functional: a symmetric function of the point positions, nonzero on the empty set.
FiniteFunctional random_functional(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double c0 = u(rng), c1 = u(rng), c2 = u(rng);
  return [=](const Configuration& g) {
    double s = c0;
    for (const Point& p : g.points()) s += c1 * std::sin(p[0] + c2 * p[1]);
    return s * (1.0 + 0.1 * static_cast<double>(g.size()));
  };
}

PointFunction random_point_function(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double a = u(rng), b = u(rng);
  return [=](const Point& p) { return 0.9 * std::cos(a * p[0] + b * p[1]); };
}

}  // namespace

TEST_CASE("k_transform: examples") {
  const Torus t(1, 5.0);
  const Configuration three(t, {{0.1, 0, 0}, {1.2, 0, 0}, {3.3, 0, 0}});
  CHECK(k_transform([](const Configuration&) { return 1.0; }, three) == 8.0);

  const Configuration pq(t, {{1.0, 0, 0}, {2.0, 0, 0}});
  const PointFunction f = [](const Point& x) { return x[0] == 1.0 ? 0.5 : -0.25; };
  const FiniteFunctional e = [&](const Configuration& g) { return coherent_state(f, g); };
  CHECK(k_transform(e, pq) == doctest::Approx(1.125).epsilon(1e-15));

  const FiniteFunctional g = [](const Configuration& c) { return c.empty() ? 4.25 : 100.0; };
  CHECK(k_transform(g, Configuration(t)) == 4.25);
}

TEST_CASE("k_inverse: examples") {
  const Torus t(1, 5.0);
  const FiniteFunctional one = [](const Configuration&) { return 1.0; };
  CHECK(k_inverse(one, Configuration(t)) == 1.0);
  for (int n = 1; n <= 6; ++n) {
    Configuration c(t);
    for (int i = 0; i < n; ++i) c.add({0.5 * i, 0, 0});
    CHECK(k_inverse(one, c) == 0.0);
  }
  const Configuration pq(t, {{1.0, 0, 0}, {2.0, 0, 0}});
  const PointFunction f = [](const Point& x) { return x[0] == 1.0 ? 0.5 : -0.25; };
  const FiniteFunctional kf = [&](const Configuration& g) {
    return k_transform([&](const Configuration& h) { return coherent_state(f, h); }, g);
  };
  CHECK(k_inverse(kf, pq) == doctest::Approx(0.5 * -0.25).epsilon(1e-14));
}

TEST_CASE("coherent_state: examples") {
  const Torus t(1, 5.0);
  CHECK(coherent_state([](const Point&) { return 7.0; }, Configuration(t)) == 1.0);
  Configuration five(t);
  for (int i = 0; i < 5; ++i) five.add({0.7 * i, 0, 0});
  CHECK(coherent_state([](const Point&) { return 2.0; }, five) == 32.0);
  CHECK(coherent_state([](const Point& x) { return x[0] == 1.4 ? 0.0 : 3.0; }, five) == 0.0);
}

TEST_CASE("property: K and its inverse round-trip on every subset") {
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Configuration gamma = random_config(1 + trial % 10, rng);
    const FiniteFunctional g = random_functional(rng);
    const FiniteFunctional kg = [&](const Configuration& c) { return k_transform(g, c); };
    const FiniteFunctional kig = [&](const Configuration& c) { return k_inverse(g, c); };
    const std::uint64_t subsets = std::uint64_t{1} << gamma.size();
    for (std::uint64_t m = 0; m < subsets; m += 1 + subsets / 64) {
      const Configuration eta = gamma.subset(m);
      REQUIRE(k_inverse(kg, eta) == doctest::Approx(g(eta)).epsilon(1e-12).scale(1.0));
      REQUIRE(k_transform(kig, eta) == doctest::Approx(g(eta)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("property: K and its inverse on the full tables at size 10") {
  Rng rng(103);
  for (int trial = 0; trial < 5; ++trial) {
    const Configuration gamma = random_config(10, rng);
    const FiniteFunctional g = random_functional(rng);
    const std::vector<double> table = tabulate(g, gamma);
    std::vector<double> t = table;
    subset_zeta(t);
    subset_moebius(t);
    for (std::size_t m = 0; m < table.size(); ++m) REQUIRE(std::fabs(t[m] - table[m]) < 1e-12);
    std::vector<double> z = table;
    subset_zeta(z);
    for (std::size_t m = 0; m < table.size(); m += 37)
      REQUIRE(z[m] == doctest::Approx(k_transform(g, gamma.subset(m))).epsilon(1e-13));
  }
}

TEST_CASE("property: K is linear") {
  Rng rng(107);
  const Configuration gamma = random_config(8, rng);
  const FiniteFunctional g1 = random_functional(rng), g2 = random_functional(rng);
  const double a = 0.75, b = -2.5;
  const FiniteFunctional mix = [&](const Configuration& c) { return a * g1(c) + b * g2(c); };
  for (std::uint64_t m = 0; m < 256; m += 5) {
    const Configuration eta = gamma.subset(m);
    REQUIRE(k_transform(mix, eta) ==
            doctest::Approx(a * k_transform(g1, eta) + b * k_transform(g2, eta)).epsilon(1e-13));
  }
}

TEST_CASE("property: K of a coherent state is the product of (1 + f)") {
  Rng rng(109);
  for (int trial = 0; trial < 50; ++trial) {
    const Configuration gamma = random_config(trial % 11, rng);
    const PointFunction f = random_point_function(rng);
    const FiniteFunctional e = [&](const Configuration& c) { return coherent_state(f, c); };
    double product = 1.0;
    for (const Point& x : gamma.points()) product *= 1.0 + f(x);
    REQUIRE(std::fabs(k_transform(e, gamma) - product) < 1e-12);
  }
}

TEST_CASE("subset enumeration is capped") {
  Rng rng(1);
  const Configuration big = random_config(26, rng);
  const FiniteFunctional one = [](const Configuration&) { return 1.0; };
  CHECK_THROWS_AS(k_transform(one, big), SizeError);
  CHECK_THROWS_AS(k_inverse(one, big), SizeError);
  std::vector<double> bad(6);
  CHECK_THROWS_AS(subset_zeta(bad), InputError);
  CHECK_THROWS_AS(subset_moebius(bad), InputError);
}

TEST_CASE("lp_exponential_integral: examples") {
  const Grid g(Torus(1, 4.0), 16);
  CHECK(lp_exponential_integral(DensityField(g, 0.0), 0) == 1.0);
  CHECK(lp_exponential_integral(DensityField(g, 0.0), 17) == 1.0);
  CHECK(std::fabs(lp_exponential_integral(DensityField(g, 0.25), 20) / std::exp(1.0) - 1.0) < 1e-15);
  CHECK(std::fabs(lp_exponential_integral(DensityField(g, -0.125), 30) / std::exp(-0.5) - 1.0) < 1e-12);
  CHECK(lp_exponential_integral(2.0, 1) == 3.0);
  CHECK_THROWS_AS(lp_exponential_integral(1.0, -1), InputError);
}
