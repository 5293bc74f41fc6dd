#include "tlfrac/numfmt.hpp"

#include <charconv>
#include <cstdio>

namespace tlfrac {

std::string format_shortest(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string format_sig17(double v) {
  char buf[48];
  const int n = std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace tlfrac
