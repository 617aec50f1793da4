// Deterministic number formatting: shortest round-trip decimal strings,
// used by every file format we emit so identical inputs give identical bytes.
#pragma once

#include <string>
#include <string_view>

namespace tspn {

std::string format_double(double v);

// Strict parse of a full decimal string; throws std::invalid_argument.
double parse_double(std::string_view s);

// FNV-1a 64-bit, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace tspn
