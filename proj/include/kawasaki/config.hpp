#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kawasaki/grid.hpp"
#include "kawasaki/kernels.hpp"
#include "kawasaki/test_function.hpp"
#include "kawasaki/torus.hpp"

namespace kawasaki {

using Json = nlohmann::json;

// Missing or mistyped keys raise ConfigError with the key name in the message.
const Json& require_key(const Json& object, const std::string& key);
double require_number(const Json& object, const std::string& key);
int require_int(const Json& object, const std::string& key);
std::uint64_t require_seed(const Json& object, const std::string& key = "seed");
std::vector<double> require_number_list(const Json& object, const std::string& key);

double number_or(const Json& object, const std::string& key, double fallback);
int int_or(const Json& object, const std::string& key, int fallback);

// {"d": 1, "L": 10}
Torus parse_torus(const Json& j);
// {"family": "tophat", "h": .., "R": ..} | {"family": "gaussian", "A": .., "sigma": ..}
// | {"family": "exponential", "A": .., "kappa": ..}
PairKernel parse_kernel(const Json& j, const Torus& torus);
Json kernel_to_json(const PairKernel& k);

// Initial density: {"type": "constant", "value": c} or
// {"type": "gaussian-bump", "center": [..], "width": w, "height": h, "baseline": b}.
struct Rho0Spec {
  std::string type = "constant";
  double value = 0.0;
  Point center{0.0, 0.0, 0.0};
  double width = 1.0;
  double height = 0.0;
  double baseline = 0.0;

  DensityField sample(const Grid& grid) const;
  double peak() const;
};
Rho0Spec parse_rho0(const Json& j, const Torus& torus);

// {"family": "gaussian_bump", "center": [..], "width": w, "amplitude": A}
// {"family": "cosine", "mode": [..], "amplitude": A, "phase": p}
// {"family": "indicator", "center": [..], "half_width": w, "amplitude": A}
TestFunction parse_test_function(const Json& j, const Torus& torus);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
std::string config_hash(const Json& config);

// Run manifest: command, config hash, seed and library versions (no timestamps).
Json make_manifest(const std::string& command, const Json& config, std::uint64_t seed);

}  // namespace kawasaki
