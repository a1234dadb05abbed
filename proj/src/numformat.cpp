#include "numformat.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace fuzzytopo {

double round_half_away(double x, int digits) {
  double scale = std::pow(10.0, digits);
  double magnitude = std::floor(std::abs(x) * scale + 0.5) / scale;
  return x < 0 ? -magnitude : magnitude;
}

std::string format_fixed(double x, int digits) {
  double rounded = round_half_away(x, digits);
  if (rounded == 0.0) rounded = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, rounded);
  return buf;
}

std::string format_shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

std::string csv_escape(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace fuzzytopo
