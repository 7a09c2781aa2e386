#include "kawasaki/config.hpp"

#include <boost/version.hpp>
#include <cmath>
#include <cstdio>
#include <fftw3.h>
#include <fstream>
#include <sstream>

#include "kawasaki/errors.hpp"

namespace kawasaki {

namespace {

Point parse_point(const Json& j, const std::string& key, const Torus& torus) {
  const Json& v = require_key(j, key);
  Point p{0.0, 0.0, 0.0};
  if (v.is_number()) {
    if (torus.dim() != 1) throw ConfigError("key '" + key + "' needs " + std::to_string(torus.dim()) + " coordinates");
    p[0] = v.get<double>();
    return p;
  }
  if (!v.is_array() || static_cast<int>(v.size()) != torus.dim())
    throw ConfigError("key '" + key + "' needs " + std::to_string(torus.dim()) + " coordinates");
  for (int a = 0; a < torus.dim(); ++a) {
    if (!v[a].is_number()) throw ConfigError("key '" + key + "' must hold numbers");
    p[a] = v[a].get<double>();
  }
  return p;
}

}  // namespace

const Json& require_key(const Json& object, const std::string& key) {
  if (!object.is_object()) throw ConfigError("expected a JSON object holding key '" + key + "'");
  auto it = object.find(key);
  if (it == object.end()) throw ConfigError("missing required key '" + key + "'");
  return *it;
}

double require_number(const Json& object, const std::string& key) {
  const Json& v = require_key(object, key);
  if (!v.is_number()) throw ConfigError("key '" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError("key '" + key + "' must be finite");
  return x;
}

int require_int(const Json& object, const std::string& key) {
  const Json& v = require_key(object, key);
  if (!v.is_number_integer()) throw ConfigError("key '" + key + "' must be an integer");
  return v.get<int>();
}

std::uint64_t require_seed(const Json& object, const std::string& key) {
  const Json& v = require_key(object, key);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0))
    throw ConfigError("key '" + key + "' must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::vector<double> require_number_list(const Json& object, const std::string& key) {
  const Json& v = require_key(object, key);
  if (!v.is_array()) throw ConfigError("key '" + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const Json& x : v) {
    if (!x.is_number()) throw ConfigError("key '" + key + "' must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

double number_or(const Json& object, const std::string& key, double fallback) {
  return object.contains(key) ? require_number(object, key) : fallback;
}

int int_or(const Json& object, const std::string& key, int fallback) {
  return object.contains(key) ? require_int(object, key) : fallback;
}

Torus parse_torus(const Json& j) {
  return Torus(require_int(j, "d"), require_number(j, "L"));
}

PairKernel parse_kernel(const Json& j, const Torus& torus) {
  const Json& fam = require_key(j, "family");
  if (!fam.is_string()) throw ConfigError("key 'family' must be a string");
  const std::string family = fam.get<std::string>();
  if (family == "tophat")
    return PairKernel::tophat(require_number(j, "h"), require_number(j, "R"), torus.dim(), torus.side());
  if (family == "gaussian")
    return PairKernel::gaussian(require_number(j, "A"), require_number(j, "sigma"), torus.dim(),
                                torus.side());
  if (family == "exponential")
    return PairKernel::exponential(require_number(j, "A"), require_number(j, "kappa"), torus.dim(),
                                   torus.side());
  throw ConfigError("key 'family': unknown kernel family '" + family + "'");
}

Json kernel_to_json(const PairKernel& k) {
  switch (k.family()) {
    case KernelFamily::tophat: return {{"family", "tophat"}, {"h", k.amplitude()}, {"R", k.shape()}};
    case KernelFamily::gaussian: return {{"family", "gaussian"}, {"A", k.amplitude()}, {"sigma", k.shape()}};
    case KernelFamily::exponential:
      return {{"family", "exponential"}, {"A", k.amplitude()}, {"kappa", k.shape()}};
  }
  return {};
}

DensityField Rho0Spec::sample(const Grid& grid) const {
  if (type == "constant") return DensityField(grid, value);
  const Torus& torus = grid.torus();
  return DensityField::sample(grid, [&](const Point& x) {
    const double r2 = norm_squared(torus.displacement(center, x), torus.dim());
    return baseline + height * std::exp(-0.5 * r2 / (width * width));
  });
}

double Rho0Spec::peak() const { return type == "constant" ? value : baseline + height; }

Rho0Spec parse_rho0(const Json& j, const Torus& torus) {
  const Json& t = require_key(j, "type");
  if (!t.is_string()) throw ConfigError("key 'type' must be a string");
  Rho0Spec spec;
  spec.type = t.get<std::string>();
  if (spec.type == "constant") {
    spec.value = require_number(j, "value");
    if (spec.value < 0.0) throw ConfigError("key 'value' must be nonnegative");
  } else if (spec.type == "gaussian-bump") {
    spec.center = torus.wrap(parse_point(j, "center", torus));
    spec.width = require_number(j, "width");
    spec.height = require_number(j, "height");
    spec.baseline = number_or(j, "baseline", 0.0);
    if (!(spec.width > 0.0)) throw ConfigError("key 'width' must be positive");
    if (spec.height < 0.0) throw ConfigError("key 'height' must be nonnegative");
    if (spec.baseline < 0.0) throw ConfigError("key 'baseline' must be nonnegative");
  } else {
    throw ConfigError("key 'type': unknown rho0 type '" + spec.type + "'");
  }
  return spec;
}

TestFunction parse_test_function(const Json& j, const Torus& torus) {
  const Json& fam = require_key(j, "family");
  if (!fam.is_string()) throw ConfigError("key 'family' must be a string");
  const std::string family = fam.get<std::string>();
  if (family == "gaussian_bump")
    return TestFunction::gaussian_bump(torus, parse_point(j, "center", torus), require_number(j, "width"),
                                       require_number(j, "amplitude"));
  if (family == "indicator")
    return TestFunction::indicator(torus, parse_point(j, "center", torus),
                                   require_number(j, "half_width"), require_number(j, "amplitude"));
  if (family == "cosine") {
    const Json& m = require_key(j, "mode");
    std::array<int, kMaxDim> mode{0, 0, 0};
    if (m.is_number_integer() && torus.dim() == 1) {
      mode[0] = m.get<int>();
    } else {
      if (!m.is_array() || static_cast<int>(m.size()) != torus.dim())
        throw ConfigError("key 'mode' needs " + std::to_string(torus.dim()) + " integers");
      for (int a = 0; a < torus.dim(); ++a) {
        if (!m[a].is_number_integer()) throw ConfigError("key 'mode' must hold integers");
        mode[a] = m[a].get<int>();
      }
    }
    return TestFunction::cosine(torus, mode, require_number(j, "amplitude"), number_or(j, "phase", 0.0));
  }
  throw ConfigError("key 'family': unknown test function family '" + family + "'");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

std::string config_hash(const Json& config) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json make_manifest(const std::string& command, const Json& config, std::uint64_t seed) {
  Json versions = {
      {"kawasaki", "1.0.0"},
      {"fftw", std::string(fftw_version)},
      {"boost", std::to_string(BOOST_VERSION / 100000) + "." + std::to_string(BOOST_VERSION / 100 % 1000) +
                    "." + std::to_string(BOOST_VERSION % 100)},
      {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                            std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                            std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
      {"compiler", std::string(__VERSION__)},
  };
  return {{"command", command}, {"config_hash", config_hash(config)}, {"seed", seed},
          {"config", config},   {"versions", versions}};
}

}  // namespace kawasaki
