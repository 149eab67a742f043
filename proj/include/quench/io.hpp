#pragma once

#include <string>

namespace quench {

// Scientific notation with 17 significant digits: lossless double round-trip,
// '.' decimal separator regardless of locale.
std::string format_double(double v);

}  // namespace quench
