#pragma once

// Double Hurwitz numbers H_g(x) for a labeled zero-sum profile x.
//
// Two independent evaluators:
//   oracle_count        - depth-first enumeration of transposition factorizations
//                         with a transitivity check (the ground truth);
//   frobenius_connected - the character-sum count of possibly disconnected covers
//                         followed by inclusion-exclusion over balanced blocks.
//
// Both use the labeled normalization: preimages of 0 and of infinity carry the
// labels of x, so H_g(x) = prod_k m_k(beta)! * N_fixed / prod_k k^{m_k(alpha)}.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dhur/exact.hpp"
#include "dhur/symgroup.hpp"

namespace dhur {

class RamificationProfile {
 public:
  // Throws InvalidProfile unless n >= 2, all entries nonzero, both signs present
  // and the entries sum to zero.
  explicit RamificationProfile(Point x);

  const Point& x() const noexcept { return x_; }
  int n() const noexcept { return static_cast<int>(x_.size()); }
  int degree() const noexcept { return degree_; }
  // Cycle type over 0 (positive entries) and over infinity (negated negative entries).
  Partition zero_type() const;
  Partition infinity_type() const;
  std::string to_string() const;

  friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;

 private:
  Point x_;
  int degree_ = 0;
};

enum class Method { Oracle, Frobenius };
std::string_view method_name(Method m);

// Unlabeled drops the prod m_k! relabeling factors. Kept as a fallback convention;
// the labeled one is what reproduces the chamber polynomials.
enum class Normalization { Labeled, Unlabeled };

struct EnumerationStats {
  std::uint64_t examined = 0;
  std::uint64_t accepted = 0;
  double elapsed_seconds = 0.0;
};

struct HurwitzResult {
  ExactRational value;
  int genus = 0;
  int r = 0;
  Method method = Method::Frobenius;
  EnumerationStats stats;
};

inline constexpr std::uint64_t kDefaultLeafBudget = 1'000'000'000ULL;

struct OracleOptions {
  std::uint64_t budget = kDefaultLeafBudget;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  Normalization normalization = Normalization::Labeled;
};

// r = 2g - 2 + n. Throws NegativeR when that is negative.
int simple_branch_count(int g, int n);

// C(d,2)^r, the unpruned leaf count of the oracle enumeration.
BigInt oracle_leaf_bound(int d, int r);

HurwitzResult oracle_count(const RamificationProfile& profile, int g, const OracleOptions& options = {});

// Number of tuples (s0, t_1..t_r, s_inf) with s0 in C_alpha, s_inf in C_beta, t_i
// transpositions and s0 t_1 ... t_r s_inf = 1. No transitivity requirement.
ExactRational frobenius_disconnected(const Partition& alpha, const Partition& beta, int r);

HurwitzResult frobenius_connected(const RamificationProfile& profile, int g,
                                  Normalization normalization = Normalization::Labeled);

// prod_k m_k(alpha)! * prod_k m_k(beta)!.
BigInt labeling_factor(const RamificationProfile& profile);

// Every valid labeled profile with 2 <= n <= max_n and degree <= max_degree, in a
// fixed order.
std::vector<RamificationProfile> enumerate_profiles(int max_degree, int max_n);

}  // namespace dhur
