#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace franel {

// Shortest decimal representation that round-trips to the same double
// (std::to_chars). All CSV output goes through this so that files are
// byte-stable and floating-point fields survive write/read bit-exactly.
std::string format_double(double value);

// Strict parse of a full token; throws std::invalid_argument on trailing
// garbage or empty input.
double parse_double(std::string_view token);
std::uint64_t parse_uint(std::string_view token);

// Plain comma split; none of the formats here quote fields.
std::vector<std::string_view> split_csv(std::string_view line);

// FNV-1a 64-bit, used to guard cache files against corruption.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace franel
