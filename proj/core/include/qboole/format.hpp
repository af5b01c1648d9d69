#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qboole/ratfunc.hpp"

namespace qboole {

/* Human-readable forms, ascending powers, deterministic. */
std::string to_string(const BigRational& r);
std::string to_string(const QPoly& p, std::string_view var = "q");
std::string to_string(const QRatFunc& v);
std::string to_string(const XPoly& p);

/* Exact serialization: one base-10 "p" or "p/q" string per coefficient,
 * ascending degree; empty for the zero polynomial. */
std::vector<std::string> coefficient_strings(const QPoly& p);
QPoly qpoly_from_strings(const std::vector<std::string>& coeffs);

}  // namespace qboole
