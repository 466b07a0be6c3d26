#pragma once

#include <string>

// Locale-independent, shortest-round-trip number formatting shared by all
// CSV/JSON writers, so seeded runs are byte-reproducible.

namespace vapormem {

std::string format_double(double v);
double parse_double(const std::string& s);
std::string trim(const std::string& s);

}  // namespace vapormem
