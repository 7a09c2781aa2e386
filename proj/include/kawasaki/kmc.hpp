#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kawasaki/geometry.hpp"
#include "kawasaki/grid.hpp"
#include "kawasaki/kernels.hpp"

namespace kawasaki {

struct EventRecord {
  double dt = 0.0;
  std::size_t particle = 0;
  Point proposal{0.0, 0.0, 0.0};
  bool accepted = false;
};

struct Snapshot {
  double time = 0.0;
  Configuration config;
  std::uint64_t proposed = 0;
  std::uint64_t accepted = 0;
};

/**
 * Continuum Kawasaki hopping with rate  a(x - y) exp(-epsilon E(y, gamma)),
 * E(y, gamma) = sum_{z in gamma} phi(z - y) including the hopping particle.
 *
 * Simulated exactly by thinning: proposals arrive at total rate N ||a||_1, the
 * hopping particle is uniform, the jump is drawn from a / ||a||_1, and the move
 * is accepted with probability exp(-epsilon E(y, gamma)) <= 1. The clock
 * advances on rejected proposals as well.
 */
class KawasakiSystem {
public:
  KawasakiSystem(Configuration config, PairKernel a, PairKernel phi, double epsilon,
                 std::uint64_t seed);

  const Configuration& config() const { return config_; }
  const PairKernel& hopping() const { return a_; }
  const PairKernel& potential() const { return phi_; }
  double epsilon() const { return epsilon_; }
  double time() const { return time_; }
  std::uint64_t proposed() const { return proposed_; }
  std::uint64_t accepted() const { return accepted_; }
  std::size_t size() const { return config_.size(); }

  // E(y, gamma) over the current configuration.
  double energy(const Point& y) const;
  double hop_rate(std::size_t x_index, const Point& y) const;

  EventRecord step();
  Snapshot snapshot() const;

  // Draws the waiting time to the next proposal without applying it.
  double draw_waiting_time();
  // Performs one proposal after the clock has advanced by dt.
  EventRecord apply_proposal(double dt);
  void advance_clock_to(double t);

private:
  Configuration config_;
  PairKernel a_;
  PairKernel phi_;
  double epsilon_;
  double time_ = 0.0;
  Rng rng_;
  std::uint64_t proposed_ = 0;
  std::uint64_t accepted_ = 0;
  std::optional<CellList> cells_;
};

// Runs the system to t_end and records the state at each snapshot time (the state
// holding just before the first event after that time). Times must be strictly
// increasing within [0, t_end].
std::vector<Snapshot> simulate(KawasakiSystem& system, double t_end,
                               std::span<const double> snapshot_times);

struct DensityEstimate {
  DensityField mean;
  DensityField std_error;
};

// Histogram of point positions on the grid's cells, divided by (replicas * cell volume)
// and multiplied by `renormalization` (epsilon for the scaled system).
DensityEstimate estimate_density(std::span<const Configuration> ensemble, const Grid& grid,
                                 double renormalization = 1.0);

struct RadialPairCorrelation {
  std::vector<double> edges;
  std::vector<double> centers;
  // Pair density k2(r): ordered pairs per unit volume squared; equals rho^2 for Poisson.
  std::vector<double> value;
  std::vector<double> std_error;
};

// Pair-distance histogram normalized by ideal-gas counts V * shell volume.
// Edges ascend from >= 0 up to at most L/2.
RadialPairCorrelation estimate_pair_correlation(std::span<const Configuration> ensemble,
                                                std::span<const double> edges);

struct PairDensity {
  Grid bins;
  // Row-major [cell_a * bins.size() + cell_b], ordered pairs of distinct points
  // per (|A| |B|), scaled by renormalization^2.
  std::vector<double> value;
  std::vector<double> std_error;
};

PairDensity estimate_pair_density(std::span<const Configuration> ensemble, const Grid& bins,
                                  double renormalization = 1.0);

}  // namespace kawasaki
