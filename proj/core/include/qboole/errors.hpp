#pragma once

#include <stdexcept>
#include <string>

namespace qboole {

/* Division by an exact zero (scalar, polynomial or rational function). */
struct division_by_zero : std::domain_error {
  division_by_zero() : std::domain_error("division by zero") {}
  explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

/* Evaluation of a rational function at a root of its denominator. Distinct
 * from division_by_zero: a pole is a statement about the evaluation point,
 * not about the arithmetic request. */
struct pole_error : std::domain_error {
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qboole
