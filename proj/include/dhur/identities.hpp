#pragma once

// Two exact routes to (-1)^{r1-1} that appear in the genus-0 wall-crossing argument:
// an alternating binomial sum and a beta integral expanded term by term.

#include <functional>
#include <string>
#include <vector>

#include "dhur/exact.hpp"

namespace dhur {

// sum_{k=r2}^{r-1} C(r-1,k) C(k-1,r2-1) (-1)^{r-1-k}, for r >= 2 and 1 <= r2 <= r-1.
BigInt alternating_sum(int r, int r2);

// r2 * C(r-1, r2) * int_0^1 t^{r2-1} (t-1)^{r1-1} dt with r = r1 + r2, integrated
// exactly after expanding (t-1)^{r1-1}.
ExactRational beta_integral_exact(int r1, int r2);

struct IdentityFailure {
  std::string identity;
  int r = 0;
  int r2 = 0;
  std::string got;
  std::string expected;
};

struct IdentityReport {
  std::string name;
  int r_min = 2;
  int r_max = 2;
  std::size_t checked = 0;
  std::vector<IdentityFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

// Hook for mutation testing: replaces C(n, k) inside both routes.
using BinomialFn = std::function<BigInt(long, long)>;

IdentityReport verify_identities(int r_max);
IdentityReport verify_identities(int r_max, const BinomialFn& binom);

nlohmann::json to_json(const IdentityReport& report);

}  // namespace dhur
