// Copyright (c) the qce authors. All rights reserved.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <system_error>

#include "qce/errors.hpp"

namespace qce {

/// Shortest decimal string that round-trips to the same double. Locale-free.
inline std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

/// Fixed significant-digit formatting (general form), locale-free.
inline std::string format_double(double x, int significant_digits) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general,
                                 significant_digits);
  return std::string(buf, ptr);
}

inline double parse_double(const std::string& s) {
  double v = 0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e)
    throw SyntaxError("not a number: '" + s + "'");
  return v;
}

/// Relative agreement to roughly `digits` significant digits.
inline bool close_to_digits(double a, double b, int digits) {
  const double scale = std::max(std::abs(a), std::abs(b));
  const double tol = (scale > 0 ? scale : 1.0) * std::pow(10.0, -digits);
  return std::abs(a - b) <= tol;
}

}  // namespace qce
