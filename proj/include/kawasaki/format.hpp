#pragma once

#include <string>

namespace kawasaki {

// Round-trip decimal rendering with 17 significant digits.
std::string format_double(double value);

}  // namespace kawasaki
