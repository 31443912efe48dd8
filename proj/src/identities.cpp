#include "dhur/identities.hpp"

#include "dhur/error.hpp"

namespace dhur {

namespace {

void check_range(int r, int r2) {
  if (r < 2 || r2 < 1 || r2 > r - 1) {
    throw Error(ErrorCode::ParameterRange, "need r >= 2 and 1 <= r2 <= r-1, got r=" + std::to_string(r) +
                                               " r2=" + std::to_string(r2));
  }
}

BigInt alternating_sum_with(int r, int r2, const BinomialFn& binom) {
  check_range(r, r2);
  BigInt total = 0;
  for (int k = r2; k <= r - 1; ++k) {
    BigInt term = binom(r - 1, k) * binom(k - 1, r2 - 1);
    if ((r - 1 - k) % 2) total -= term;
    else total += term;
  }
  return total;
}

// (t-1)^{r1-1} = sum_j C(r1-1, j) t^j (-1)^{r1-1-j}, and int_0^1 t^{r2-1+j} = 1/(r2+j).
ExactRational beta_integral_with(int r1, int r2, const BinomialFn& binom) {
  if (r1 < 1 || r2 < 1) throw Error(ErrorCode::ParameterRange, "r1 and r2 must be positive");
  const int r = r1 + r2;
  ExactRational integral = 0;
  for (int j = 0; j <= r1 - 1; ++j) {
    const ExactRational term = make_rational(binom(r1 - 1, j), BigInt(r2 + j));
    if ((r1 - 1 - j) % 2) integral -= term;
    else integral += term;
  }
  return ExactRational(r2) * ExactRational(binom(r - 1, r2)) * integral;
}

}  // namespace

BigInt alternating_sum(int r, int r2) { return alternating_sum_with(r, r2, binomial); }

ExactRational beta_integral_exact(int r1, int r2) { return beta_integral_with(r1, r2, binomial); }

IdentityReport verify_identities(int r_max) { return verify_identities(r_max, binomial); }

IdentityReport verify_identities(int r_max, const BinomialFn& binom) {
  if (r_max < 2) throw Error(ErrorCode::ParameterRange, "r_max must be at least 2");
  IdentityReport report;
  report.name = "alternating sum and beta integral equal (-1)^(r1-1)";
  report.r_max = r_max;
  for (int r = 2; r <= r_max; ++r) {
    for (int r2 = 1; r2 <= r - 1; ++r2) {
      const int r1 = r - r2;
      const ExactRational expected = (r1 - 1) % 2 ? -1 : 1;
      const ExactRational alt(alternating_sum_with(r, r2, binom));
      const ExactRational beta = beta_integral_with(r1, r2, binom);
      report.checked += 2;
      if (alt != expected) report.failures.push_back({"alternating_sum", r, r2, to_string(alt), to_string(expected)});
      if (beta != expected) report.failures.push_back({"beta_integral", r, r2, to_string(beta), to_string(expected)});
    }
  }
  return report;
}

nlohmann::json to_json(const IdentityReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"identity", f.identity}, {"r", f.r}, {"r2", f.r2}, {"got", f.got}, {"expected", f.expected}});
  }
  return {{"identity", report.name},
          {"r_min", report.r_min},
          {"r_max", report.r_max},
          {"checked", report.checked},
          {"failures", failures}};
}

}  // namespace dhur
