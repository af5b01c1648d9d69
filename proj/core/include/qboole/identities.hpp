#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qboole/families.hpp"

namespace qboole {

/* One verifier per stated identity. The ids double as the CLI selector
 * strings (thm2.1 ... thm2.9, cor2.3, eq2.13, eq2.35, reflection). */
enum class IdentityId {
  Thm2_1,
  Thm2_2,
  Cor2_3,
  Thm2_4,
  Thm2_5,
  Thm2_6,
  Thm2_7,
  Thm2_8,
  Thm2_9,
  Eq2_13,
  Eq2_35,
  Reflection,
};

const std::vector<IdentityId>& all_identities();
std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);
/* One-line human statement of what the verifier checks. */
std::string_view identity_statement(IdentityId id);

std::vector<BigRational> default_lambdas();  // {1, 2, 3, -1, -2, 1/2}

/**
 * Parameter grid for a verifier run. Symbolic x (the default) checks the
 * identities as polynomial identities in x; sampled mode evaluates them at
 * sample_count rational points drawn deterministically from seed, a cheaper
 * smoke-test variant.
 */
struct VerifyRanges {
  unsigned n_max = 8;
  unsigned k_max = 2;
  std::vector<BigRational> lambdas = default_lambdas();
  bool symbolic_x = true;
  unsigned sample_count = 4;
  std::uint64_t seed = 0;
};

struct Counterexample {
  std::string params;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  IdentityId id = IdentityId::Thm2_1;
  bool pass = true;
  unsigned long cases = 0;
  std::optional<Counterexample> first_counterexample;
};

/* Runs one verifier over the grid. A failed identity is data (a report with
 * the first counterexample), not an error; scanning stops at the first
 * counterexample. Comparisons are structural equality of canonical values,
 * never numerical closeness. */
IdentityReport verify(const FamilyContext& ctx, IdentityId id, const VerifyRanges& ranges);

}  // namespace qboole
