#include "quench/io.hpp"

#include <cstdio>

namespace quench {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

}  // namespace quench
