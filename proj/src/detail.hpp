#pragma once

#include <charconv>
#include <string>

namespace prx::detail {

// Compensated accumulation; discrepancies on 1000-vertex ladders sum many
// entries of wildly different magnitude.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Locale-independent, round-trip safe at 17 significant digits.
inline std::string format_g17(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace prx::detail
