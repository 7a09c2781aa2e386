#include "kawasaki/kmc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kawasaki/errors.hpp"
#include "kawasaki/stats.hpp"

namespace kawasaki {

namespace {

void require_kernel_geometry(const PairKernel& k, const Torus& torus, const char* name) {
  if (k.dim() != torus.dim() || k.side() != torus.side())
    throw ConfigError(std::string("kernel ") + name + " does not match the torus");
}

double shell_volume(int dim, double r0, double r1) {
  switch (dim) {
    case 1: return 2.0 * (r1 - r0);
    case 2: return std::numbers::pi * (r1 * r1 - r0 * r0);
    default: return 4.0 / 3.0 * std::numbers::pi * (r1 * r1 * r1 - r0 * r0 * r0);
  }
}

}  // namespace

KawasakiSystem::KawasakiSystem(Configuration config, PairKernel a, PairKernel phi,
                               double epsilon, std::uint64_t seed)
    : config_(std::move(config)), a_(a), phi_(phi), epsilon_(epsilon), rng_(seed) {
  require_kernel_geometry(a_, config_.torus(), "a");
  require_kernel_geometry(phi_, config_.torus(), "phi");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ConfigError("epsilon must be positive");
  if (a_.is_zero()) throw ConfigError("hopping kernel a must not vanish");
  if (phi_.compact() && !phi_.is_zero()) {
    CellList cells(config_, phi_.support_radius());
    if (cells.usable()) cells_ = std::move(cells);
  }
}

double KawasakiSystem::energy(const Point& y) const {
  if (cells_) return relative_energy(config_, *cells_, y, phi_);
  return relative_energy(config_, y, phi_);
}

double KawasakiSystem::hop_rate(std::size_t x_index, const Point& y) const {
  if (x_index >= config_.size()) throw InputError("particle index out of range");
  const Point target = config_.torus().wrap(y);
  const double jump = a_.evaluate(config_.torus().displacement(config_[x_index], target));
  if (jump == 0.0) return 0.0;
  return jump * std::exp(-epsilon_ * energy(target));
}

double KawasakiSystem::draw_waiting_time() {
  if (config_.empty()) throw StateError("cannot step an empty configuration");
  std::exponential_distribution<double> wait(static_cast<double>(config_.size()) * a_.l1_norm());
  return wait(rng_);
}

EventRecord KawasakiSystem::apply_proposal(double dt) {
  if (config_.empty()) throw StateError("cannot step an empty configuration");
  std::uniform_int_distribution<std::size_t> pick(0, config_.size() - 1);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  EventRecord ev;
  ev.dt = dt;
  ev.particle = pick(rng_);
  const Point jump = a_.sample_displacement(rng_);
  ev.proposal = config_.torus().wrap(config_[ev.particle] + jump);
  const double acceptance = phi_.is_zero() ? 1.0 : std::exp(-epsilon_ * energy(ev.proposal));
  ev.accepted = uniform(rng_) < acceptance;

  time_ += dt;
  ++proposed_;
  if (ev.accepted) {
    ++accepted_;
    config_.set(ev.particle, ev.proposal);
    if (cells_) cells_->move(ev.particle, ev.proposal);
  }
  return ev;
}

EventRecord KawasakiSystem::step() { return apply_proposal(draw_waiting_time()); }

void KawasakiSystem::advance_clock_to(double t) {
  if (t < time_) throw InputError("clock cannot run backwards");
  time_ = t;
}

Snapshot KawasakiSystem::snapshot() const { return Snapshot{time_, config_, proposed_, accepted_}; }

std::vector<Snapshot> simulate(KawasakiSystem& system, double t_end,
                               std::span<const double> snapshot_times) {
  if (!(t_end >= system.time()) || !std::isfinite(t_end))
    throw InputError("t_end must not precede the current time");
  for (std::size_t i = 0; i < snapshot_times.size(); ++i) {
    const double s = snapshot_times[i];
    if (!(s >= system.time() && s <= t_end))
      throw InputError("snapshot times must lie in [current time, t_end]");
    if (i > 0 && !(s > snapshot_times[i - 1]))
      throw InputError("snapshot times must be sorted and strictly increasing");
  }

  std::vector<Snapshot> out;
  out.reserve(snapshot_times.size());
  std::size_t next = 0;
  auto record = [&](double t) {
    Snapshot snap = system.snapshot();
    snap.time = t;
    out.push_back(std::move(snap));
  };

  if (system.size() == 0) {
    for (double s : snapshot_times) record(s);
    system.advance_clock_to(t_end);
    return out;
  }

  for (;;) {
    const double dt = system.draw_waiting_time();
    const double t_event = system.time() + dt;
    while (next < snapshot_times.size() && snapshot_times[next] < t_event) record(snapshot_times[next++]);
    if (t_event > t_end) break;
    system.apply_proposal(dt);
  }
  // the pending proposal falls after t_end; by memorylessness it is discarded
  while (next < snapshot_times.size()) record(snapshot_times[next++]);
  system.advance_clock_to(t_end);
  return out;
}

DensityEstimate estimate_density(std::span<const Configuration> ensemble, const Grid& grid,
                                 double renormalization) {
  if (ensemble.empty()) return DensityEstimate{DensityField(grid), DensityField(grid)};
  std::vector<std::vector<double>> per_replica;
  per_replica.reserve(ensemble.size());
  const double weight = renormalization / grid.cell_volume();
  for (const Configuration& c : ensemble) {
    if (!(c.torus() == grid.torus())) throw InputError("configuration torus does not match grid");
    std::vector<double> hist(grid.size(), 0.0);
    for (const Point& p : c.points()) hist[grid.nearest_cell(p)] += weight;
    per_replica.push_back(std::move(hist));
  }
  auto moments = stats::vector_moments(per_replica);
  return DensityEstimate{DensityField(grid, std::move(moments.mean)),
                         DensityField(grid, std::move(moments.std_error))};
}

RadialPairCorrelation estimate_pair_correlation(std::span<const Configuration> ensemble,
                                                std::span<const double> edges) {
  if (ensemble.empty()) throw InputError("pair correlation needs at least one configuration");
  if (edges.size() < 2) throw InputError("pair correlation needs at least one radial bin");
  const Torus& torus = ensemble.front().torus();
  if (edges.front() < 0.0 || edges.back() > 0.5 * torus.side() * (1.0 + 1e-12))
    throw InputError("radial bin edges must lie in [0, L/2]");
  for (std::size_t k = 1; k < edges.size(); ++k)
    if (!(edges[k] > edges[k - 1])) throw InputError("radial bin edges must increase");

  bool any_pair = false;
  for (const Configuration& c : ensemble) any_pair = any_pair || c.size() >= 2;
  if (!any_pair) throw InputError("pair correlation needs configurations with at least 2 particles");

  const std::size_t bins = edges.size() - 1;
  const int dim = torus.dim();
  std::vector<double> ideal(bins);
  for (std::size_t k = 0; k < bins; ++k)
    ideal[k] = torus.volume() * shell_volume(dim, edges[k], edges[k + 1]);

  std::vector<std::vector<double>> per_replica;
  for (const Configuration& c : ensemble) {
    if (!(c.torus() == torus)) throw InputError("configurations live on different tori");
    std::vector<double> counts(bins, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const double r = norm(torus.displacement(c[i], c[j]), dim);
        if (r < edges.front() || r >= edges.back()) continue;
        const auto it = std::upper_bound(edges.begin(), edges.end(), r);
        counts[static_cast<std::size_t>(it - edges.begin()) - 1] += 2.0;  // ordered pairs
      }
    for (std::size_t k = 0; k < bins; ++k) counts[k] /= ideal[k];
    per_replica.push_back(std::move(counts));
  }
  auto moments = stats::vector_moments(per_replica);
  RadialPairCorrelation out;
  out.edges.assign(edges.begin(), edges.end());
  for (std::size_t k = 0; k < bins; ++k) out.centers.push_back(0.5 * (edges[k] + edges[k + 1]));
  out.value = std::move(moments.mean);
  out.std_error = std::move(moments.std_error);
  return out;
}

PairDensity estimate_pair_density(std::span<const Configuration> ensemble, const Grid& bins,
                                  double renormalization) {
  if (ensemble.empty()) throw InputError("pair density needs at least one configuration");
  bool any_pair = false;
  for (const Configuration& c : ensemble) any_pair = any_pair || c.size() >= 2;
  if (!any_pair) throw InputError("pair density needs configurations with at least 2 particles");

  const std::size_t m = bins.size();
  const double weight = renormalization * renormalization / (bins.cell_volume() * bins.cell_volume());
  std::vector<std::vector<double>> per_replica;
  for (const Configuration& c : ensemble) {
    if (!(c.torus() == bins.torus())) throw InputError("configuration torus does not match bins");
    std::vector<double> occupancy(m, 0.0);
    for (const Point& p : c.points()) occupancy[bins.nearest_cell(p)] += 1.0;
    std::vector<double> pairs(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const double n_ab = occupancy[a] * (occupancy[b] - (a == b ? 1.0 : 0.0));
        pairs[a * m + b] = n_ab * weight;
      }
    per_replica.push_back(std::move(pairs));
  }
  auto moments = stats::vector_moments(per_replica);
  return PairDensity{bins, std::move(moments.mean), std::move(moments.std_error)};
}

}  // namespace kawasaki
