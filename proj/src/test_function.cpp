#include "kawasaki/test_function.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kawasaki/errors.hpp"
#include "kawasaki/format.hpp"

namespace kawasaki {

std::string to_string(TestFamily family) {
  switch (family) {
    case TestFamily::gaussian_bump: return "gaussian_bump";
    case TestFamily::cosine: return "cosine";
    case TestFamily::indicator: return "indicator";
  }
  return "unknown";
}

TestFunction TestFunction::gaussian_bump(const Torus& torus, const Point& centre, double width,
                                         double amplitude) {
  if (!(width > 0.0) || !std::isfinite(amplitude)) throw ConfigError("invalid gaussian bump");
  const double tail = torus.dim() * std::erfc(0.5 * torus.side() / (std::numbers::sqrt2 * width));
  if (tail > 1e-12) throw ConfigError("gaussian bump is too wide for the torus");
  TestFunction f(TestFamily::gaussian_bump, torus);
  f.centre_ = torus.wrap(centre);
  f.width_ = width;
  f.amplitude_ = amplitude;
  return f;
}

TestFunction TestFunction::cosine(const Torus& torus, const std::array<int, kMaxDim>& mode,
                                  double amplitude, double phase) {
  if (!std::isfinite(amplitude) || !std::isfinite(phase)) throw ConfigError("invalid cosine");
  TestFunction f(TestFamily::cosine, torus);
  f.mode_ = mode;
  for (int a = torus.dim(); a < kMaxDim; ++a) f.mode_[a] = 0;
  f.amplitude_ = amplitude;
  f.phase_ = phase;
  return f;
}

TestFunction TestFunction::indicator(const Torus& torus, const Point& centre, double half_width,
                                     double amplitude) {
  if (!(half_width > 0.0) || half_width >= 0.5 * torus.side() || !std::isfinite(amplitude))
    throw ConfigError("indicator half width must lie in (0, L/2)");
  TestFunction f(TestFamily::indicator, torus);
  f.centre_ = torus.wrap(centre);
  f.width_ = half_width;
  f.amplitude_ = amplitude;
  return f;
}

double TestFunction::evaluate(const Point& x) const {
  const int dim = torus_.dim();
  switch (family_) {
    case TestFamily::gaussian_bump: {
      const double r2 = norm_squared(torus_.displacement(centre_, x), dim);
      return amplitude_ * std::exp(-0.5 * r2 / (width_ * width_));
    }
    case TestFamily::cosine: {
      double arg = phase_;
      for (int a = 0; a < dim; ++a) arg += 2.0 * std::numbers::pi * mode_[a] * x[a] / torus_.side();
      return amplitude_ * std::cos(arg);
    }
    case TestFamily::indicator: {
      const Point d = torus_.displacement(centre_, x);
      for (int a = 0; a < dim; ++a)
        if (std::fabs(d[a]) > width_) return 0.0;
      return amplitude_;
    }
  }
  return 0.0;
}

DensityField TestFunction::sample(const Grid& grid) const {
  if (!(grid.torus() == torus_)) throw InputError("test function torus does not match grid");
  return DensityField::sample(grid, [this](const Point& x) { return evaluate(x); });
}

double TestFunction::l1_norm() const {
  const int dim = torus_.dim();
  switch (family_) {
    case TestFamily::gaussian_bump:
      return std::fabs(amplitude_) * std::pow(2.0 * std::numbers::pi * width_ * width_, 0.5 * dim);
    case TestFamily::cosine: {
      bool zero_mode = true;
      for (int a = 0; a < dim; ++a) zero_mode = zero_mode && mode_[a] == 0;
      if (zero_mode) return std::fabs(amplitude_ * std::cos(phase_)) * torus_.volume();
      return std::fabs(amplitude_) * torus_.volume() * 2.0 / std::numbers::pi;
    }
    case TestFamily::indicator:
      return std::fabs(amplitude_) * std::pow(2.0 * width_, dim);
  }
  return 0.0;
}

double TestFunction::min_value() const {
  switch (family_) {
    case TestFamily::gaussian_bump:
    case TestFamily::indicator:
      return std::min(0.0, amplitude_);
    case TestFamily::cosine: {
      bool zero_mode = true;
      for (int a = 0; a < torus_.dim(); ++a) zero_mode = zero_mode && mode_[a] == 0;
      return zero_mode ? amplitude_ * std::cos(phase_) : -std::fabs(amplitude_);
    }
  }
  return 0.0;
}

TestFunction TestFunction::scaled(double factor) const {
  TestFunction f = *this;
  f.amplitude_ *= factor;
  return f;
}

std::string TestFunction::describe() const {
  std::ostringstream out;
  out << to_string(family_) << "(A=" << format_double(amplitude_);
  if (family_ == TestFamily::cosine) {
    out << ",m=";
    for (int a = 0; a < torus_.dim(); ++a) out << (a ? ":" : "") << mode_[a];
    out << ",phase=" << format_double(phase_);
  } else {
    out << ",c=";
    for (int a = 0; a < torus_.dim(); ++a) out << (a ? ":" : "") << format_double(centre_[a]);
    out << ",w=" << format_double(width_);
  }
  out << ")";
  return out.str();
}

}  // namespace kawasaki
