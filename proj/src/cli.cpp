#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "kawasaki/bounds.hpp"
#include "kawasaki/config.hpp"
#include "kawasaki/errors.hpp"
#include "kawasaki/format.hpp"
#include "kawasaki/gf.hpp"
#include "kawasaki/harness.hpp"
#include "kawasaki/kmc.hpp"
#include "kawasaki/parallel.hpp"
#include "kawasaki/vlasov.hpp"

namespace kawasaki {

namespace fs = std::filesystem;

namespace {

fs::path output_dir(const std::string& flag, const Json& cfg) {
  if (!flag.empty()) return flag;
  if (cfg.contains("output_dir")) {
    if (!cfg["output_dir"].is_string()) throw ConfigError("key 'output_dir' must be a string");
    return cfg["output_dir"].get<std::string>();
  }
  return ".";
}

std::vector<double> times_or(const Json& cfg, const std::string& key, double t_end) {
  return cfg.contains(key) ? require_number_list(cfg, key) : std::vector<double>{t_end};
}

std::string coordinate_header(const std::string& stem, int dim) {
  if (dim == 1) return stem;
  std::string out;
  for (int a = 0; a < dim; ++a) out += (a ? "," : "") + stem + "_" + std::to_string(a + 1);
  return out;
}

std::string coordinates(const Point& p, int dim) {
  std::string out;
  for (int a = 0; a < dim; ++a) out += (a ? "," : "") + format_double(p[a]);
  return out;
}

// ---- simulate ------------------------------------------------------------

int run_simulate(const std::string& config_path, const std::string& out_flag) {
  const Json cfg = read_json_file(config_path);
  const Torus torus = parse_torus(require_key(cfg, "torus"));
  const PairKernel a = parse_kernel(require_key(cfg, "a"), torus);
  const PairKernel phi = parse_kernel(require_key(cfg, "phi"), torus);
  const double eps = require_number(cfg, "epsilon");
  if (!(eps > 0.0)) throw ConfigError("key 'epsilon' must be positive");
  const std::uint64_t seed = require_seed(cfg);
  const double t_end = require_number(cfg, "t_end");
  if (!(t_end >= 0.0)) throw ConfigError("key 't_end' must be nonnegative");
  const std::vector<double> snapshot_times = times_or(cfg, "snapshot_times", t_end);
  const int replicas = int_or(cfg, "replicas", 1);
  if (replicas < 1) throw ConfigError("key 'replicas' must be at least 1");
  const Grid bins(torus, int_or(cfg, "bins", 16));

  std::optional<Configuration> fixed;
  std::optional<DensityField> intensity;
  if (cfg.contains("initial_points")) {
    const Json& pts = cfg["initial_points"];
    if (!pts.is_array()) throw ConfigError("key 'initial_points' must be an array");
    Configuration c(torus);
    for (const Json& p : pts) {
      if (!p.is_array() || static_cast<int>(p.size()) != torus.dim())
        throw ConfigError("key 'initial_points' rows need d coordinates");
      Point x{0.0, 0.0, 0.0};
      for (int k = 0; k < torus.dim(); ++k) x[k] = p[k].get<double>();
      c.add(x);
    }
    fixed = std::move(c);
  } else {
    const int n = cfg.contains("grid") ? require_int(require_key(cfg, "grid"), "n") : 256;
    const Grid grid(torus, n);
    intensity = (1.0 / eps) * parse_rho0(require_key(cfg, "rho0"), torus).sample(grid);
    if (intensity->integral() > 1e5) throw ConfigError("key 'epsilon': expected particle count exceeds 1e5");
  }

  const auto runs = parallel_map(static_cast<std::size_t>(replicas), [&](std::size_t r) {
    Rng rng(seed + r);
    Configuration start = fixed ? *fixed : poisson_sample(*intensity, rng);
    KawasakiSystem system(std::move(start), a, phi, eps, rng());
    return simulate(system, t_end, snapshot_times);
  });

  const int dim = torus.dim();
  std::ostringstream snaps;
  snaps << "replica,time";
  for (int k = 0; k < dim; ++k) snaps << ",x" << k + 1;
  snaps << '\n';
  for (std::size_t r = 0; r < runs.size(); ++r)
    for (const Snapshot& s : runs[r])
      for (const Point& p : s.config.points())
        snaps << r << ',' << format_double(s.time) << ',' << coordinates(p, dim) << '\n';

  std::ostringstream obs;
  obs << "time," << coordinate_header("bin_center", dim) << ",value,stderr\n";
  for (std::size_t k = 0; k < snapshot_times.size(); ++k) {
    std::vector<Configuration> ensemble;
    for (const auto& run : runs) ensemble.push_back(run[k].config);
    const DensityEstimate est = estimate_density(ensemble, bins, eps);
    for (std::size_t i = 0; i < bins.size(); ++i)
      obs << format_double(snapshot_times[k]) << ',' << coordinates(bins.coordinate(i), dim) << ','
          << format_double(est.mean[i]) << ',' << format_double(est.std_error[i]) << '\n';
  }

  const fs::path dir = output_dir(out_flag, cfg);
  write_text_file(dir / "snapshots.csv", snaps.str());
  write_text_file(dir / "observables.csv", obs.str());
  write_json_file(dir / "manifest.json", make_manifest("simulate", cfg, seed));
  std::cout << "simulate: " << replicas << " replicas written to " << dir.string() << "\n";
  return 0;
}

// ---- vlasov --------------------------------------------------------------

int run_vlasov(const std::string& config_path, const std::string& out_flag) {
  const Json cfg = read_json_file(config_path);
  const Torus torus = parse_torus(require_key(cfg, "torus"));
  const Grid grid(torus, require_int(require_key(cfg, "grid"), "n"));
  const PairKernel a = parse_kernel(require_key(cfg, "a"), torus);
  const PairKernel phi = parse_kernel(require_key(cfg, "phi"), torus);
  const DensityField rho0 = parse_rho0(require_key(cfg, "rho0"), torus).sample(grid);
  const double t_end = require_number(cfg, "t_end");
  const double dt = require_number(cfg, "dt");
  const std::vector<double> output_times = times_or(cfg, "output_times", t_end);

  const Trajectory traj = VlasovSolver(grid, a, phi).integrate(rho0, t_end, dt, output_times);

  const int dim = torus.dim();
  std::ostringstream csv;
  csv << "time,index," << coordinate_header("x", dim) << ",rho\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k)
    for (std::size_t i = 0; i < grid.size(); ++i)
      csv << format_double(traj.times[k]) << ',' << i << ',' << coordinates(grid.coordinate(i), dim) << ','
          << format_double(traj.fields[k][i]) << '\n';

  const fs::path dir = output_dir(out_flag, cfg);
  write_text_file(dir / "vlasov.csv", csv.str());
  write_json_file(dir / "manifest.json", make_manifest("vlasov", cfg, 0));
  const double mass0 = rho0.integral();
  const double drift = std::fabs(traj.fields.back().integral() - mass0);
  std::cout << "vlasov: mass " << format_double(mass0) << ", drift " << format_double(drift)
            << ", max sup-norm " << format_double(traj.max_linf) << "\n";
  return 0;
}

// ---- gf-check ------------------------------------------------------------

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2) return std::nan("");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

int run_gf_check(const std::string& config_path, const std::string& out_flag) {
  const Json cfg = read_json_file(config_path);
  const Torus torus = parse_torus(require_key(cfg, "torus"));
  const Grid grid(torus, require_int(require_key(cfg, "grid"), "n"));
  const PairKernel a = parse_kernel(require_key(cfg, "a"), torus);
  const PairKernel phi = parse_kernel(require_key(cfg, "phi"), torus);
  const DensityField rho0 = parse_rho0(require_key(cfg, "rho0"), torus).sample(grid);
  const TestFunction theta_fn = parse_test_function(require_key(cfg, "theta"), torus);
  const DensityField theta = theta_fn.sample(grid);
  const std::uint64_t seed = require_seed(cfg);
  const std::vector<double> epsilons =
      cfg.contains("epsilons") ? require_number_list(cfg, "epsilons") : std::vector<double>{0.1, 0.05, 0.025, 0.0125};
  const double t = number_or(cfg, "t", 0.5);
  const double dt_fd = number_or(cfg, "dt_fd", 1e-3);
  const double dt = number_or(cfg, "dt", 1e-3);
  const double eps_emp = number_or(cfg, "epsilon_empirical", 0.1);
  const int replicas = int_or(cfg, "replicas", 200);
  if (!(t > dt_fd) || !(dt_fd > 0.0)) throw ConfigError("key 't' must exceed dt_fd > 0");
  if (replicas < 2) throw ConfigError("key 'replicas' must be at least 2");

  Json entries = Json::array();
  const GfOperator op(grid, a, phi);

  // operator gap |L_eps,ren B - L_V B| at rho0
  const double vlasov_value = op.apply(rho0, theta, OperatorVariant::vlasov);
  std::vector<double> gaps;
  std::vector<double> values;
  for (double eps : epsilons) {
    values.push_back(op.apply(rho0, theta, OperatorVariant::eps_ren, eps));
    gaps.push_back(std::fabs(values.back() - vlasov_value));
  }
  const double slope = fitted_slope(epsilons, gaps);
  for (std::size_t i = 0; i < epsilons.size(); ++i)
    entries.push_back({{"variant", "eps_ren"}, {"epsilon", epsilons[i]}, {"value", values[i]},
                       {"residual", gaps[i]}, {"slope", number_or_null(slope)}});
  entries.push_back({{"variant", "vlasov"}, {"epsilon", nullptr}, {"value", vlasov_value},
                     {"residual", 0.0}, {"slope", nullptr}});
  entries.push_back({{"variant", "kawasaki"}, {"epsilon", 1.0},
                     {"value", op.apply(rho0, theta, OperatorVariant::kawasaki)},
                     {"residual", nullptr}, {"slope", nullptr}});

  // d/dt exp(\int rho_t theta) against the Vlasov operator, at dt_fd and dt_fd / 2
  const std::vector<double> fd_times{t - dt_fd, t - 0.5 * dt_fd, t, t + 0.5 * dt_fd, t + dt_fd};
  const Trajectory traj = VlasovSolver(grid, a, phi).integrate(rho0, t + dt_fd, dt, fd_times);
  const ConsistencyCheck coarse = gf_time_consistency(traj, theta, t, dt_fd, op);
  const ConsistencyCheck fine = gf_time_consistency(traj, theta, t, 0.5 * dt_fd, op);
  const double order = std::log2(coarse.residual / fine.residual);
  entries.push_back({{"variant", "time-consistency"}, {"epsilon", nullptr}, {"dt_fd", dt_fd},
                     {"value", coarse.time_derivative}, {"residual", coarse.relative},
                     {"slope", number_or_null(order)}});

  // empirical GF of Poisson(rho0 / eps) against exp(\int rho0 theta)
  const DensityField intensity = (1.0 / eps_emp) * rho0;
  const auto ensemble = parallel_map(static_cast<std::size_t>(replicas), [&](std::size_t r) {
    Rng rng(seed + r);
    return poisson_sample(intensity, rng);
  });
  const stats::MeanStderr b = EmpiricalGF(ensemble).evaluate_renormalized(theta_fn, eps_emp);
  const double b_exact = ExponentialGF(rho0).evaluate(theta);
  entries.push_back({{"variant", "empirical"}, {"epsilon", eps_emp}, {"value", b.mean},
                     {"residual", std::fabs(b.mean - b_exact)}, {"stderr", b.std_error}, {"slope", nullptr}});

  const fs::path dir = output_dir(out_flag, cfg);
  write_json_file(dir / "gf_check.json", entries);
  write_json_file(dir / "manifest.json", make_manifest("gf-check", cfg, seed));
  std::cout << "gf-check: operator gap slope " << format_double(slope) << ", consistency residual "
            << format_double(coarse.relative) << " (order " << format_double(order) << ")\n";
  return 0;
}

// ---- scaling -------------------------------------------------------------

int run_scaling(const std::string& config_path, const std::string& out_flag) {
  Json cfg = read_json_file(config_path);
  ExperimentConfig config = parse_experiment_config(cfg);
  config.output_dir = output_dir(out_flag, cfg);
  const ScalingReport report = run_scaling_experiment(config);
  write_scaling_outputs(report, config);
  std::cout << "scaling: existence time " << format_double(report.existence_time)
            << (report.within_existence_time ? "" : " (t_end exceeds it)") << "; initial "
            << (report.initial_ok ? "ok" : "FAIL") << ", L1 monotone " << (report.l1_monotone ? "ok" : "FAIL")
            << ", GF monotone " << (report.gf_monotone ? "ok" : "FAIL");
  if (report.pair)
    std::cout << ", pair " << report.pair->within_3sigma << "/" << report.pair->tested << " within 3 sigma";
  std::cout << "\n";
  return 0;
}

// ---- equilibrium ---------------------------------------------------------

int run_equilibrium(const std::string& config_path, const std::string& out_flag) {
  const Json cfg = read_json_file(config_path);
  const Torus torus = parse_torus(require_key(cfg, "torus"));
  const PairKernel a = parse_kernel(require_key(cfg, "a"), torus);
  const PairKernel phi = parse_kernel(require_key(cfg, "phi"), torus);
  const double t_burn = require_number(cfg, "t_burn");
  const double t_sample = require_number(cfg, "t_sample");
  const std::uint64_t seed = require_seed(cfg);
  const int bins = int_or(cfg, "bins", 20);
  const double interval = number_or(cfg, "sample_interval", 0.0);

  Rng rng(seed);
  const EquilibriumResult res = run_equilibrium_check(a, phi, t_burn, t_sample, rng, bins, interval);

  std::ostringstream csv;
  csv << "r_lo,r_hi,observed,expected,ideal\n";
  const double n = static_cast<double>(res.samples);
  for (std::size_t k = 0; k < res.observed.size(); ++k)
    csv << format_double(res.edges[k]) << ',' << format_double(res.edges[k + 1]) << ','
        << format_double(res.observed[k]) << ',' << format_double(n * res.probability[k]) << ','
        << format_double(n * res.ideal_probability[k]) << '\n';

  const fs::path dir = output_dir(out_flag, cfg);
  write_text_file(dir / "equilibrium.csv", csv.str());
  write_json_file(dir / "equilibrium.json",
                  {{"chi_square", res.chi_square.statistic}, {"dof", res.chi_square.dof},
                   {"p_value", res.chi_square.p_value}, {"samples", res.samples},
                   {"acceptance_rate", res.acceptance_rate}, {"seed", seed}});
  write_json_file(dir / "manifest.json", make_manifest("equilibrium", cfg, seed));
  std::cout << "equilibrium: chi-square " << format_double(res.chi_square.statistic) << " on "
            << res.chi_square.dof << " dof, p = " << format_double(res.chi_square.p_value) << "\n";
  return 0;
}

// ---- bounds --------------------------------------------------------------

struct BoundsOptions {
  double alpha = 0.0;
  double alpha0 = 0.0;
  double a_l1 = 0.0;
  double phi_l1 = 0.0;
  std::optional<double> alpha_prime;
  std::optional<double> alpha_dprime;
  std::optional<double> phi_linf;
  std::optional<double> c0;
  std::optional<double> c1;
  double epsilon = 0.1;
  int n_theta = 200;
  std::uint64_t seed = 1;
  std::string variant = "all";
  std::string config;
  std::string output;
};

void print_row(const std::string& name, const std::string& inputs, const std::string& value) {
  std::printf("%-16s %-24s %s\n", name.c_str(), value.c_str(), inputs.c_str());
}

int run_bounds(const BoundsOptions& o) {
  ScaleParameters p;
  p.alpha = o.alpha;
  p.alpha0 = o.alpha0;
  p.alpha_prime = o.alpha_prime.value_or(o.alpha);
  p.alpha_dprime = o.alpha_dprime.value_or(o.alpha0);
  p.epsilon = o.epsilon;
  p.validate();

  const std::string scale = "alpha=" + format_double(p.alpha) + " alpha'=" + format_double(p.alpha_prime) +
                            " alpha''=" + format_double(p.alpha_dprime) + " alpha0=" + format_double(p.alpha0);
  const std::string norms = "a_l1=" + format_double(o.a_l1) + " phi_l1=" + format_double(o.phi_l1);

  Json table = Json::array();
  std::printf("%-16s %-24s %s\n", "formula", "value", "inputs");
  const double c0 = o.c0.value_or(1.0);
  const double c1 = o.c1.value_or(o.phi_l1);
  const std::string l2_inputs = "c0=" + format_double(c0) + " c1=" + format_double(c1) + " alpha=" +
                                format_double(p.alpha) + " alpha'=" + format_double(p.alpha_prime) +
                                " a_l1=" + format_double(o.a_l1);
  if (c0 * p.alpha_prime < p.alpha) {
    const double v = lemma2_bound(c0, c1, p.alpha, p.alpha_prime, o.a_l1);
    print_row("lemma2", l2_inputs, format_double(v));
    table.push_back({{"formula", "lemma2"}, {"value", v}});
  } else {
    print_row("lemma2", l2_inputs, "undefined");
    table.push_back({{"formula", "lemma2"}, {"value", nullptr}});
  }
  const double p2 = prop2_bound(p, o.a_l1, o.phi_l1);
  print_row("prop2", scale + " " + norms, format_double(p2));
  table.push_back({{"formula", "prop2"}, {"value", p2}});
  if (o.phi_linf) {
    const double p3 = prop3_bound(p, o.a_l1, o.phi_l1, *o.phi_linf, 1.0);
    print_row("prop3", scale + " " + norms + " phi_linf=" + format_double(*o.phi_linf) +
                           " epsilon=" + format_double(o.epsilon) + " B=1",
              format_double(p3));
    table.push_back({{"formula", "prop3"}, {"value", p3}});
  } else {
    print_row("prop3", "needs --phi-linf", "undefined");
    table.push_back({{"formula", "prop3"}, {"value", nullptr}});
  }
  const double t = existence_time(p.alpha, p.alpha0, o.a_l1, o.phi_l1);
  print_row("existence_time", "alpha=" + format_double(p.alpha) + " alpha0=" + format_double(p.alpha0) + " " + norms,
            format_double(t));
  table.push_back({{"formula", "existence_time"}, {"value", t}});
  std::printf("existence time T = %.4f (conservative estimate)\n", t);
  std::printf("prop2 constant = %.4f\n", p2);

  // randomized verification on an exponential functional
  DensityField rho(Grid(Torus(1, 10.0), 128));
  PairKernel a = PairKernel::tophat(0.5 * o.a_l1, 1.0, 1, 10.0);
  PairKernel phi = PairKernel::tophat(0.5 * o.phi_l1, 1.0, 1, 10.0);
  if (!o.config.empty()) {
    const Json cfg = read_json_file(o.config);
    const Torus torus = parse_torus(require_key(cfg, "torus"));
    const Grid grid(torus, require_int(require_key(cfg, "grid"), "n"));
    a = parse_kernel(require_key(cfg, "a"), torus);
    phi = parse_kernel(require_key(cfg, "phi"), torus);
    rho = parse_rho0(require_key(cfg, "rho0"), torus).sample(grid);
  } else {
    Rho0Spec spec;
    spec.type = "gaussian-bump";
    spec.center = {5.0, 0.0, 0.0};
    spec.width = 1.0;
    spec.baseline = 0.25 / p.alpha_dprime;
    spec.height = 0.5 / p.alpha_dprime;
    rho = spec.sample(rho.grid());
  }
  if (a.is_zero()) throw DomainError("verification needs ||a||_1 > 0");

  std::vector<BoundVariant> variants;
  if (o.variant == "all")
    variants = {BoundVariant::lemma2_as_prop2, BoundVariant::prop2, BoundVariant::prop3};
  else
    variants = {parse_bound_variant(o.variant)};

  Json checks = Json::array();
  bool ok = true;
  for (BoundVariant v : variants) {
    const BoundCheck c = verify_bound_randomized(v, rho, a, phi, p, o.n_theta, o.seed);
    const Json j = {{"variant", to_string(v)}, {"max_ratio", c.max_ratio}, {"n_samples", c.n_samples}, {"seed", c.seed}};
    std::cout << j.dump() << "\n";
    checks.push_back(j);
    ok = ok && c.max_ratio <= 1.0;
  }
  if (!o.output.empty()) {
    const Json report = {{"table", table}, {"checks", checks}};
    write_json_file(fs::path(o.output) / "bounds.json", report);
  }
  if (!ok) {
    std::cerr << "error: a bound was exceeded\n";
    return 2;
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Continuum Kawasaki dynamics, Vlasov limit and generating-functional checks"};
  app.require_subcommand(1);

  std::string config;
  std::string output;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", config, "JSON configuration file")->required();
    sub->add_option("-o,--output", output, "output directory (overrides output_dir)");
  };
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "run the particle system");
  CLI::App* vlasov_cmd = app.add_subcommand("vlasov", "solve the mean-field equation");
  CLI::App* gf_cmd = app.add_subcommand("gf-check", "operator convergence and GF consistency checks");
  CLI::App* scaling_cmd = app.add_subcommand("scaling", "particles versus mean-field scaling experiment");
  CLI::App* equilibrium_cmd = app.add_subcommand("equilibrium", "two-particle Gibbs equilibrium check");
  for (CLI::App* sub : {simulate_cmd, vlasov_cmd, gf_cmd, scaling_cmd, equilibrium_cmd}) add_common(sub);

  BoundsOptions bo;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "bound formulas and randomized verification");
  bounds_cmd->add_option("--alpha", bo.alpha)->required();
  bounds_cmd->add_option("--alpha0", bo.alpha0)->required();
  bounds_cmd->add_option("--a-l1", bo.a_l1)->required();
  bounds_cmd->add_option("--phi-l1", bo.phi_l1)->required();
  bounds_cmd->add_option("--alpha-prime", bo.alpha_prime, "defaults to alpha");
  bounds_cmd->add_option("--alpha-dprime", bo.alpha_dprime, "defaults to alpha0");
  bounds_cmd->add_option("--phi-linf", bo.phi_linf);
  bounds_cmd->add_option("--c0", bo.c0, "lemma 2 constant, default 1");
  bounds_cmd->add_option("--c1", bo.c1, "lemma 2 constant, default phi-l1");
  bounds_cmd->add_option("--epsilon", bo.epsilon, "default 0.1");
  bounds_cmd->add_option("--n-theta", bo.n_theta, "default 200");
  bounds_cmd->add_option("--seed", bo.seed, "default 1");
  bounds_cmd->add_option("--variant", bo.variant, "all | lemma2-as-prop2 | prop2 | prop3");
  bounds_cmd->add_option("--config", bo.config, "JSON with torus, grid, a, phi, rho0 for the verifier");
  bounds_cmd->add_option("-o,--output", bo.output, "directory for bounds.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*simulate_cmd) return run_simulate(config, output);
    if (*vlasov_cmd) return run_vlasov(config, output);
    if (*gf_cmd) return run_gf_check(config, output);
    if (*scaling_cmd) return run_scaling(config, output);
    if (*equilibrium_cmd) return run_equilibrium(config, output);
    if (*bounds_cmd) return run_bounds(bo);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed configuration: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace kawasaki
