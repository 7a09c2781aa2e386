#include "kawasaki/harness.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include "kawasaki/bounds.hpp"
#include "kawasaki/errors.hpp"
#include "kawasaki/format.hpp"
#include "kawasaki/gf.hpp"
#include "kawasaki/kmc.hpp"
#include "kawasaki/parallel.hpp"
#include "kawasaki/vlasov.hpp"

namespace kawasaki {

namespace {

constexpr double kThreeSigmaTail = 0.0027;  // two-sided normal tail beyond 3 sigma

bool power_of_two_at_least_8(int n) { return n >= 8 && (n & (n - 1)) == 0; }

void check_kernel_geometry(const PairKernel& k, const Torus& torus, const char* key) {
  if (k.dim() != torus.dim() || k.side() != torus.side())
    throw ConfigError(std::string("key '") + key + "' does not match the torus");
}

// Per-replica histograms on `bins`, weighted so that their mean is the renormalized density.
std::vector<std::vector<double>> replica_histograms(std::span<const Configuration> ensemble,
                                                    const Grid& bins, double renormalization) {
  const double weight = renormalization / bins.cell_volume();
  std::vector<std::vector<double>> out;
  out.reserve(ensemble.size());
  for (const Configuration& c : ensemble) {
    std::vector<double> h(bins.size(), 0.0);
    for (const Point& p : c.points()) h[bins.nearest_cell(p)] += weight;
    out.push_back(std::move(h));
  }
  return out;
}

double l1_distance(std::span<const double> x, const DensityField& ref) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::fabs(x[i] - ref[i]);
  return s * ref.grid().cell_volume();
}

// Jackknife standard error of the L1 distance between the replica mean and ref.
double jackknife_l1_stderr(const std::vector<std::vector<double>>& hists,
                           std::span<const double> mean, const DensityField& ref) {
  const std::size_t r = hists.size();
  if (r < 2) return 0.0;
  std::vector<double> loo(mean.size());
  std::vector<double> values;
  values.reserve(r);
  const double rd = static_cast<double>(r);
  for (const auto& h : hists) {
    for (std::size_t i = 0; i < mean.size(); ++i) loo[i] = (rd * mean[i] - h[i]) / (rd - 1.0);
    values.push_back(l1_distance(loo, ref));
  }
  double avg = 0.0;
  for (double v : values) avg += v;
  avg /= rd;
  double ss = 0.0;
  for (double v : values) ss += (v - avg) * (v - avg);
  return std::sqrt((rd - 1.0) / rd * ss);
}

bool slack_ok(double later, double earlier, double se_later, double se_earlier) {
  return later <= earlier + std::sqrt(se_later * se_later + se_earlier * se_earlier);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!power_of_two_at_least_8(grid_n)) throw ConfigError("key 'grid': n must be a power of two >= 8");
  if (!power_of_two_at_least_8(bins) || bins > grid_n)
    throw ConfigError("key 'bins' must be a power of two in [8, grid n]");
  if (!power_of_two_at_least_8(pair_bins) || pair_bins > grid_n)
    throw ConfigError("key 'pair_bins' must be a power of two in [8, grid n]");
  check_kernel_geometry(a, torus, "a");
  check_kernel_geometry(phi, torus, "phi");
  if (epsilons.empty()) throw ConfigError("key 'epsilons' must not be empty");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw ConfigError("key 'epsilons' must hold positive values");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
      throw ConfigError("key 'epsilons' must be strictly decreasing");
  }
  if (replicas < 1) throw ConfigError("key 'replicas' must be at least 1");
  if (!(t_end > 0.0)) throw ConfigError("key 't_end' must be positive");
  if (!(dt > 0.0)) throw ConfigError("key 'dt' must be positive");
  for (std::size_t i = 0; i < observation_times.size(); ++i) {
    const double t = observation_times[i];
    if (!(t >= 0.0 && t <= t_end)) throw ConfigError("key 'observation_times' must lie in [0, t_end]");
    if (i > 0 && !(t > observation_times[i - 1]))
      throw ConfigError("key 'observation_times' must be strictly increasing");
  }
  for (const TestFunction& theta : thetas) {
    if (!(theta.torus() == torus)) throw ConfigError("key 'thetas' does not match the torus");
    if (!(epsilons.front() * theta.min_value() > -1.0))
      throw ConfigError("key 'thetas': eps * theta must stay above -1");
  }
  if (expected_particles(epsilons.back()) > 1e5)
    throw ConfigError("key 'epsilons': expected particle count exceeds 1e5");
  if (alpha && alpha0 && !(*alpha > 0.0 && *alpha < *alpha0))
    throw ConfigError("key 'alpha' must lie in (0, alpha0)");
}

double ExperimentConfig::expected_particles(double epsilon) const {
  const Grid grid(torus, grid_n);
  return rho0.sample(grid).integral() / epsilon;
}

ExperimentConfig parse_experiment_config(const Json& j) {
  ExperimentConfig c;
  c.source = j;
  c.torus = parse_torus(require_key(j, "torus"));
  if (j.contains("grid")) c.grid_n = require_int(require_key(j, "grid"), "n");
  c.bins = int_or(j, "bins", c.bins);
  c.pair_bins = int_or(j, "pair_bins", 8);
  c.a = parse_kernel(require_key(j, "a"), c.torus);
  c.phi = parse_kernel(require_key(j, "phi"), c.torus);
  c.rho0 = parse_rho0(require_key(j, "rho0"), c.torus);
  if (j.contains("epsilons")) c.epsilons = require_number_list(j, "epsilons");
  c.t_end = require_number(j, "t_end");
  c.observation_times = j.contains("observation_times") ? require_number_list(j, "observation_times")
                                                        : std::vector<double>{c.t_end};
  c.replicas = int_or(j, "replicas", c.replicas);
  c.seed = require_seed(j);
  if (j.contains("output_dir")) {
    const Json& o = j["output_dir"];
    if (!o.is_string()) throw ConfigError("key 'output_dir' must be a string");
    c.output_dir = o.get<std::string>();
  }
  c.dt = number_or(j, "dt", c.dt);
  if (j.contains("alpha")) c.alpha = require_number(j, "alpha");
  if (j.contains("alpha0")) c.alpha0 = require_number(j, "alpha0");
  if (j.contains("thetas")) {
    const Json& list = j["thetas"];
    if (!list.is_array()) throw ConfigError("key 'thetas' must be an array");
    for (const Json& t : list) c.thetas.push_back(parse_test_function(t, c.torus));
  } else {
    const double side = c.torus.side();
    std::array<int, kMaxDim> mode{1, 0, 0};
    c.thetas.push_back(TestFunction::gaussian_bump(c.torus, c.rho0.center, side / 20.0, 0.5));
    c.thetas.push_back(TestFunction::cosine(c.torus, mode, 0.5));
  }
  c.validate();
  return c;
}

Json ScalingReport::to_json() const {
  Json eps = Json::array();
  for (const EpsilonSummary& s : per_epsilon) {
    Json errs = Json::array();
    for (const TimeError& e : s.errors)
      errs.push_back({{"time", e.time}, {"l1_error", e.l1_error}, {"l1_stderr", e.l1_stderr},
                      {"linf_error", e.linf_error}});
    eps.push_back({{"epsilon", s.epsilon},
                   {"first_seed", s.first_seed},
                   {"mean_particles", s.mean_particles},
                   {"initial",
                    {{"chi_square", s.initial.chi_square},
                     {"dof", s.initial.dof},
                     {"p_value", s.initial.p_value},
                     {"max_abs_z", s.initial.max_abs_z}}},
                   {"errors", errs}});
  }
  Json gaps = Json::array();
  for (const GfGap& g : gf)
    gaps.push_back({{"epsilon", g.epsilon}, {"time", g.time}, {"theta_id", g.theta_id},
                    {"b_emp", g.b_emp}, {"b_pde", g.b_pde}, {"stderr", g.std_error}, {"gap", g.gap}});
  Json out = {{"times", times},
              {"existence_time", existence_time},
              {"within_existence_time", within_existence_time},
              {"pde_mass_drift", pde_mass_drift},
              {"per_epsilon", eps},
              {"gf", gaps},
              {"checks", {{"initial_ok", initial_ok}, {"l1_monotone", l1_monotone}, {"gf_monotone", gf_monotone}}}};
  if (pair) {
    out["pair"] = {{"epsilon", pair->epsilon}, {"time", pair->time}, {"tested", pair->tested},
                   {"within_3sigma", pair->within_3sigma}, {"max_abs_z", pair->max_abs_z}};
    out["checks"]["pair_ok"] = pair->within_3sigma == pair->tested;
  }
  return out;
}

std::string ScalingReport::density_csv(int dim) const {
  std::ostringstream out;
  out << "epsilon,time";
  if (dim == 1) {
    out << ",x";
  } else {
    for (int a = 0; a < dim; ++a) out << ",x" << a + 1;
  }
  out << ",rho_emp,rho_pde,abs_err\n";
  for (const DensityRow& r : density) {
    out << format_double(r.epsilon) << ',' << format_double(r.time);
    for (int a = 0; a < dim; ++a) out << ',' << format_double(r.x[a]);
    out << ',' << format_double(r.rho_emp) << ',' << format_double(r.rho_pde) << ','
        << format_double(r.abs_err) << '\n';
  }
  return out.str();
}

std::string ScalingReport::gf_csv() const {
  std::ostringstream out;
  out << "epsilon,time,theta_id,b_emp,b_pde,stderr\n";
  for (const GfGap& g : gf)
    out << format_double(g.epsilon) << ',' << format_double(g.time) << ',' << g.theta_id << ','
        << format_double(g.b_emp) << ',' << format_double(g.b_pde) << ',' << format_double(g.std_error)
        << '\n';
  return out.str();
}

ScalingReport run_scaling_experiment(const ExperimentConfig& config) {
  config.validate();
  const Grid fine(config.torus, config.grid_n);
  const Grid coarse(config.torus, config.bins);
  const Grid pair_grid(config.torus, config.pair_bins);
  const DensityField rho0 = config.rho0.sample(fine);

  // t = 0 always comes first; observation times follow
  std::vector<double> times = config.observation_times;
  const bool prepend_zero = times.empty() || times.front() != 0.0;
  if (prepend_zero) times.insert(times.begin(), 0.0);
  const std::size_t first_obs = prepend_zero ? 1 : 0;

  ScalingReport report;
  report.times = config.observation_times;

  const Trajectory traj = VlasovSolver(fine, config.a, config.phi).integrate(rho0, config.t_end, config.dt, times);
  const double mass0 = rho0.integral();
  for (const DensityField& f : traj.fields)
    report.pde_mass_drift = std::max(report.pde_mass_drift, std::fabs(f.integral() - mass0) / std::max(mass0, 1e-300));

  const double alpha0 = config.alpha0.value_or(1.0 / std::max(rho0.max(), 1e-300));
  const double alpha = config.alpha.value_or(0.5 * alpha0);
  report.existence_time = existence_time(alpha, alpha0, config.a.l1_norm(), config.phi.l1_norm());
  report.within_existence_time = config.t_end <= report.existence_time;
  if (!report.within_existence_time)
    std::cerr << "warning: t_end " << format_double(config.t_end)
              << " exceeds the conservative existence time " << format_double(report.existence_time) << "\n";

  std::vector<DensityField> pde_coarse;
  std::vector<DensityField> theta_fields;
  for (const DensityField& f : traj.fields) pde_coarse.push_back(f.restrict_to(coarse));
  for (const TestFunction& theta : config.thetas) theta_fields.push_back(theta.sample(fine));

  const std::size_t n_eps = config.epsilons.size();
  const auto replicas = static_cast<std::size_t>(config.replicas);
  std::vector<std::vector<stats::MeanStderr>> gf_table;  // [eps][time * thetas + theta]

  for (std::size_t e = 0; e < n_eps; ++e) {
    const double eps = config.epsilons[e];
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t base = config.seed + e * replicas;

    const DensityField intensity = (1.0 / eps) * rho0;
    const auto runs = parallel_map(replicas, [&](std::size_t r) {
      Rng rng(base + r);
      Configuration initial = poisson_sample(intensity, rng);
      KawasakiSystem system(std::move(initial), config.a, config.phi, eps, rng());
      return simulate(system, config.t_end, times);
    });

    EpsilonSummary summary;
    summary.epsilon = eps;
    summary.first_seed = base;
    double particles = 0.0;
    for (const auto& run : runs) particles += static_cast<double>(run.front().config.size());
    summary.mean_particles = particles / static_cast<double>(replicas);

    std::vector<stats::MeanStderr> gf_row;
    for (std::size_t k = 0; k < times.size(); ++k) {
      std::vector<Configuration> ensemble;
      ensemble.reserve(replicas);
      for (const auto& run : runs) ensemble.push_back(run[k].config);

      const auto hists = replica_histograms(ensemble, coarse, eps);
      const auto moments = stats::vector_moments(hists);
      const DensityField& ref = pde_coarse[k];

      if (k == 0) {
        // exact Poisson variance of the renormalized bin average
        InitialCheck check;
        const DensityField rho0_coarse = rho0.restrict_to(coarse);
        for (std::size_t i = 0; i < coarse.size(); ++i) {
          const double var = eps * rho0_coarse[i] / (coarse.cell_volume() * static_cast<double>(replicas));
          const double diff = moments.mean[i] - rho0_coarse[i];
          if (var == 0.0) {
            if (diff != 0.0) check.max_abs_z = std::numeric_limits<double>::infinity();
            continue;
          }
          const double z = diff / std::sqrt(var);
          check.chi_square += z * z;
          check.max_abs_z = std::max(check.max_abs_z, std::fabs(z));
          ++check.dof;
        }
        check.p_value = check.dof > 0 ? stats::chi_square_survival(check.chi_square, check.dof) : 1.0;
        if (std::isinf(check.max_abs_z)) check.p_value = 0.0;
        summary.initial = check;
        report.initial_ok = report.initial_ok && check.p_value >= kThreeSigmaTail;
      }

      if (k >= first_obs) {
        TimeError err;
        err.time = times[k];
        err.l1_error = l1_distance(moments.mean, ref);
        err.l1_stderr = jackknife_l1_stderr(hists, moments.mean, ref);
        for (std::size_t i = 0; i < coarse.size(); ++i) {
          const double d = std::fabs(moments.mean[i] - ref[i]);
          err.linf_error = std::max(err.linf_error, d);
          report.density.push_back(DensityRow{eps, times[k], coarse.coordinate(i), moments.mean[i], ref[i], d});
        }
        summary.errors.push_back(err);

        const EmpiricalGF empirical(ensemble);
        for (std::size_t q = 0; q < config.thetas.size(); ++q) {
          const stats::MeanStderr b = empirical.evaluate_renormalized(config.thetas[q], eps);
          const double b_pde = std::exp(inner_product(traj.fields[k], theta_fields[q]));
          report.gf.push_back(GfGap{eps, times[k], static_cast<int>(q), b.mean, b_pde, b.std_error,
                                    std::fabs(b.mean - b_pde)});
          gf_row.push_back(b);
        }
      }

      if (e + 1 == n_eps && k + 1 == times.size()) {
        PairCheck pc;
        pc.epsilon = eps;
        pc.time = times[k];
        const PairDensity pd = estimate_pair_density(ensemble, pair_grid, eps);
        const DensityField rho_p = traj.fields[k].restrict_to(pair_grid);
        const std::size_t m = pair_grid.size();
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t jdx = i; jdx < m; ++jdx) {
            const double diff = pd.value[i * m + jdx] - rho_p[i] * rho_p[jdx];
            const double se = pd.std_error[i * m + jdx];
            const double z = se > 0.0 ? std::fabs(diff) / se
                                      : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
            ++pc.tested;
            if (z <= 3.0) ++pc.within_3sigma;
            pc.max_abs_z = std::max(pc.max_abs_z, z);
          }
        report.pair = pc;
      }
    }
    gf_table.push_back(std::move(gf_row));

    summary.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "epsilon " << format_double(eps) << ": " << replicas << " replicas, mean "
              << format_double(summary.mean_particles) << " particles, "
              << format_double(summary.runtime_seconds) << " s\n";
    report.per_epsilon.push_back(std::move(summary));
  }

  for (std::size_t e = 1; e < n_eps; ++e) {
    const auto& prev = report.per_epsilon[e - 1];
    const auto& cur = report.per_epsilon[e];
    for (std::size_t k = 0; k < cur.errors.size(); ++k)
      if (!slack_ok(cur.errors[k].l1_error, prev.errors[k].l1_error, cur.errors[k].l1_stderr,
                    prev.errors[k].l1_stderr))
        report.l1_monotone = false;
    const std::size_t per_eps = gf_table[e].size();
    for (std::size_t q = 0; q < per_eps; ++q) {
      const GfGap& g_prev = report.gf[(e - 1) * per_eps + q];
      const GfGap& g_cur = report.gf[e * per_eps + q];
      if (!slack_ok(g_cur.gap, g_prev.gap, g_cur.std_error, g_prev.std_error)) report.gf_monotone = false;
    }
  }
  return report;
}

void write_scaling_outputs(const ScalingReport& report, const ExperimentConfig& config) {
  const auto& dir = config.output_dir;
  write_text_file(dir / "density.csv", report.density_csv(config.torus.dim()));
  write_text_file(dir / "gf.csv", report.gf_csv());
  write_json_file(dir / "report.json", report.to_json());
  write_json_file(dir / "manifest.json", make_manifest("scaling", config.source, config.seed));
}

std::vector<double> gibbs_distance_probabilities(const PairKernel& phi, std::span<const double> edges) {
  if (edges.size() < 2) throw InputError("need at least one distance bin");
  const int dim = phi.dim();
  const double half = 0.5 * phi.side();
  const std::size_t bins = edges.size() - 1;
  std::vector<double> mass(bins, 0.0);

  if (dim == 1) {
    // piecewise smooth in r; split at the top-hat radius and integrate each piece
    std::vector<double> cuts{0.0, half};
    if (phi.compact() && phi.support_radius() < half) cuts.push_back(phi.support_radius());
    for (double edge : edges)
      if (edge > 0.0 && edge < half) cuts.push_back(edge);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto density = [&phi](double r) { return std::exp(-phi.evaluate_radius(r)); };
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const double lo = cuts[c];
      const double hi = cuts[c + 1];
      const double mid = 0.5 * (lo + hi);
      const auto it = std::upper_bound(edges.begin(), edges.end(), mid);
      if (it == edges.begin() || it == edges.end()) continue;
      const std::size_t k = static_cast<std::size_t>(it - edges.begin()) - 1;
      // the top-hat value at the inclusive boundary has measure zero; integrate the interior
      constexpr int pieces = 8;
      const double w = (hi - lo) / pieces;
      for (int p = 0; p < pieces; ++p)
        mass[k] += boost::math::quadrature::gauss<double, 20>::integrate(density, lo + p * w, lo + (p + 1) * w);
    }
  } else {
    const int m = dim == 2 ? 1024 : 128;
    const double h = 2.0 * half / m;
    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(m);
    for (std::size_t idx = 0; idx < total; ++idx) {
      Point u{0.0, 0.0, 0.0};
      std::size_t rem = idx;
      for (int a = 0; a < dim; ++a) {
        u[a] = -half + (static_cast<double>(rem % m) + 0.5) * h;
        rem /= m;
      }
      const double r = norm(u, dim);
      const auto it = std::upper_bound(edges.begin(), edges.end(), r);
      if (it == edges.begin() || it == edges.end()) continue;
      mass[static_cast<std::size_t>(it - edges.begin()) - 1] += std::exp(-phi.evaluate(u));
    }
  }
  double sum = 0.0;
  for (double v : mass) sum += v;
  if (!(sum > 0.0)) throw InputError("distance bins carry no probability mass");
  for (double& v : mass) v /= sum;
  return mass;
}

EquilibriumResult run_equilibrium_check(const PairKernel& a, const PairKernel& phi, double t_burn,
                                        double t_sample, Rng& rng, int bins, double sample_interval) {
  if (a.dim() != phi.dim() || a.side() != phi.side()) throw ConfigError("kernels a and phi live on different tori");
  if (!(t_burn >= 0.0) || !(t_sample > 0.0)) throw InputError("need t_burn >= 0 and t_sample > 0");
  if (bins < 1) throw InputError("need at least one bin");
  const Torus torus(a.dim(), a.side());
  const double interval = sample_interval > 0.0 ? sample_interval : 5.0 / a.l1_norm();
  const auto n_samples = static_cast<long long>(std::floor(t_sample / interval));
  if (n_samples < 5LL * bins)
    throw StatisticsError("equilibrium check needs at least 5 samples per bin; increase t_sample");

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Configuration start(torus);
  for (int k = 0; k < 2; ++k) {
    Point p{0.0, 0.0, 0.0};
    for (int ax = 0; ax < torus.dim(); ++ax) p[ax] = unit(rng) * torus.side();
    start.add(p);
  }
  KawasakiSystem system(std::move(start), a, phi, 1.0, rng());

  std::vector<double> sample_times;
  sample_times.reserve(static_cast<std::size_t>(n_samples));
  for (long long k = 0; k < n_samples; ++k) sample_times.push_back(t_burn + static_cast<double>(k) * interval);
  const auto snaps = simulate(system, t_burn + t_sample, sample_times);

  EquilibriumResult out;
  const double r_max = 0.5 * torus.side() * std::sqrt(static_cast<double>(torus.dim()));
  for (int k = 0; k <= bins; ++k) out.edges.push_back(r_max * k / bins);
  out.edges.back() = r_max * (1.0 + 1e-12);
  out.observed.assign(static_cast<std::size_t>(bins), 0.0);
  for (const Snapshot& s : snaps) {
    const double r = norm(torus.displacement(s.config[0], s.config[1]), torus.dim());
    auto k = static_cast<std::size_t>(std::upper_bound(out.edges.begin(), out.edges.end(), r) - out.edges.begin()) - 1;
    k = std::min<std::size_t>(k, static_cast<std::size_t>(bins) - 1);
    out.observed[k] += 1.0;
  }
  out.samples = n_samples;
  out.probability = gibbs_distance_probabilities(phi, out.edges);
  out.ideal_probability = gibbs_distance_probabilities(phi.scaled(0.0), out.edges);
  out.chi_square = stats::chi_square_test(out.observed, out.probability);
  out.acceptance_rate = system.proposed() > 0
                            ? static_cast<double>(system.accepted()) / static_cast<double>(system.proposed())
                            : 0.0;
  return out;
}

}  // namespace kawasaki
