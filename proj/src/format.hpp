#pragma once

#include <charconv>
#include <string>

namespace tlap::detail {

// Shortest round-trip decimal form; used in catalog names and reports.
inline std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace tlap::detail
