#pragma once

#include <string>

namespace fuzzytopo {

// Rounds half away from zero at the given number of decimal digits.
double round_half_away(double x, int digits);

// Fixed-point formatting after half-away-from-zero rounding, e.g. "1.0062".
std::string format_fixed(double x, int digits);

// Shortest decimal string that round-trips to the same double.
std::string format_shortest(double x);

// Quotes a CSV field if it contains a separator, quote or newline.
std::string csv_escape(const std::string& field);

}  // namespace fuzzytopo
