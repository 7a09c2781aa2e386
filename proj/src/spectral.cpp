#include "kawasaki/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "kawasaki/errors.hpp"

namespace kawasaki {

namespace {

// FFTW planning is not thread-safe; execution with the new-array API is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct RealBuffer {
  explicit RealBuffer(std::size_t n) : data(fftw_alloc_real(n)) {}
  ~RealBuffer() { fftw_free(data); }
  RealBuffer(const RealBuffer&) = delete;
  RealBuffer& operator=(const RealBuffer&) = delete;
  double* data;
};

struct ComplexBuffer {
  explicit ComplexBuffer(std::size_t n) : data(fftw_alloc_complex(n)) {}
  ~ComplexBuffer() { fftw_free(data); }
  ComplexBuffer(const ComplexBuffer&) = delete;
  ComplexBuffer& operator=(const ComplexBuffer&) = delete;
  fftw_complex* data;
};

std::size_t spectrum_size(const Grid& grid) {
  std::size_t s = static_cast<std::size_t>(grid.n() / 2 + 1);
  for (int a = 1; a < grid.dim(); ++a) s *= static_cast<std::size_t>(grid.n());
  return s;
}

}  // namespace

struct Convolver::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::size_t real_size = 0;
  std::size_t complex_size = 0;

  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

Convolver::Convolver(const Grid& grid) : grid_(grid), plans_(std::make_unique<Plans>()) {
  plans_->real_size = grid.size();
  plans_->complex_size = spectrum_size(grid);
  int dims[kMaxDim];
  for (int a = 0; a < grid.dim(); ++a) dims[a] = grid.n();

  RealBuffer real(plans_->real_size);
  ComplexBuffer spec(plans_->complex_size);
  std::lock_guard lock(planner_mutex());
  plans_->forward = fftw_plan_dft_r2c(grid.dim(), dims, real.data, spec.data, FFTW_ESTIMATE);
  plans_->backward = fftw_plan_dft_c2r(grid.dim(), dims, spec.data, real.data, FFTW_ESTIMATE);
  if (!plans_->forward || !plans_->backward) throw NumericalError("FFTW planning failed");
}

Convolver::~Convolver() = default;
Convolver::Convolver(Convolver&&) noexcept = default;
Convolver& Convolver::operator=(Convolver&&) noexcept = default;

Spectrum Convolver::forward(const DensityField& f) const {
  if (!(f.grid() == grid_)) throw InputError("grid mismatch in convolution");
  RealBuffer real(plans_->real_size);
  ComplexBuffer spec(plans_->complex_size);
  std::copy(f.values().begin(), f.values().end(), real.data);
  fftw_execute_dft_r2c(plans_->forward, real.data, spec.data);
  Spectrum out(plans_->complex_size);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = {spec.data[k][0], spec.data[k][1]};
  return out;
}

DensityField Convolver::convolve(const DensityField& f, const Spectrum& g_hat) const {
  if (g_hat.size() != plans_->complex_size) throw InputError("spectrum size mismatch");
  const Spectrum f_hat = forward(f);
  ComplexBuffer spec(plans_->complex_size);
  // h^d for the quadrature weight, 1/n^d for the unnormalized inverse transform
  const double scale = grid_.cell_volume() / static_cast<double>(grid_.size());
  for (std::size_t k = 0; k < f_hat.size(); ++k) {
    const std::complex<double> z = f_hat[k] * g_hat[k] * scale;
    spec.data[k][0] = z.real();
    spec.data[k][1] = z.imag();
  }
  RealBuffer real(plans_->real_size);
  fftw_execute_dft_c2r(plans_->backward, spec.data, real.data);
  return DensityField(grid_, std::vector<double>(real.data, real.data + plans_->real_size));
}

DensityField Convolver::convolve(const DensityField& f, const DensityField& g) const {
  if (!(g.grid() == grid_)) throw InputError("grid mismatch in convolution");
  return convolve(f, forward(g));
}

}  // namespace kawasaki
