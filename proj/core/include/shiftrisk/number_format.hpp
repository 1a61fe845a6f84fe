#pragma once

#include <string>
#include <string_view>

namespace shiftrisk {

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

// Strict parse of a whole field; throws std::invalid_argument on trailing junk.
double parse_double(std::string_view text);
long long parse_integer(std::string_view text);

}  // namespace shiftrisk
