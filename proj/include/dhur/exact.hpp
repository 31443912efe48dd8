#pragma once

// Exact rationals and multivariate polynomials on the zero-sum hyperplane.
//
// A MultiPoly in n ambient variables is stored over the free variables
// x_1..x_{n-1}; x_n is always eliminated through x_n = -(x_1 + ... + x_{n-1}).
// Two polynomials that agree as functions on the zero-sum hyperplane therefore
// compare equal.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace dhur {

using BigInt = mpz_class;
using ExactRational = mpq_class;

// Integer vector of length n. Profiles, sample points and interpolation nodes all use it.
using Point = std::vector<std::int64_t>;

/// "p/q" in lowest terms, or just "p" for integers.
std::string to_string(const ExactRational& q);
std::string to_string(const BigInt& z);
ExactRational parse_rational(std::string_view text);
// num/den reduced to lowest terms; den must be nonzero.
ExactRational make_rational(const BigInt& num, const BigInt& den);

BigInt binomial(long n, long k);
BigInt factorial(unsigned long n);

// Exponent vector over the free variables x_1..x_{n-1}.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic order with x_1 > x_2 > ...; "greater" sorts first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, ExactRational, GradedLexGreater>;

  explicit MultiPoly(int ambient);

  static MultiPoly constant(int ambient, const ExactRational& c);
  // x_i for 1 <= i <= ambient; x_n comes back as -(x_1 + ... + x_{n-1}).
  static MultiPoly variable(int ambient, int index);
  // Linear form sum_{i in indices} x_i.
  static MultiPoly linear_sum(int ambient, std::span<const int> indices);
  // Terms over the free variables; zero coefficients are dropped.
  static MultiPoly from_terms(int ambient, const TermMap& terms);
  // Terms whose exponent vectors cover all n ambient variables; canonicalized.
  static MultiPoly from_raw_terms(int ambient,
                                  const std::vector<std::pair<std::vector<int>, ExactRational>>& raw);

  int ambient() const noexcept { return ambient_; }
  int free_vars() const noexcept { return ambient_ - 1; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const ExactRational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const ExactRational& c) { return a *= c; }
  friend MultiPoly operator*(const ExactRational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly pow(unsigned k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

  // Canonical text, e.g. "6*x1^2 - 6*x1*x3".
  std::string to_string() const;
  // Re-expresses the polynomial with whichever single variable eliminated gives
  // the fewest terms (ties keep the canonical form). Display only.
  std::string display() const;

 private:
  void add_term(const Exponents& e, const ExactRational& c);
  void check_same_ambient(const MultiPoly& other) const;

  int ambient_;
  TermMap terms_;
};

ExactRational poly_eval(const MultiPoly& p, std::span<const std::int64_t> x);
MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q);

// All exponent vectors in `vars` variables of total degree <= degree, in
// graded-lex order (highest first).
std::vector<Exponents> monomials_up_to(int vars, int degree);

// Exact least-degree fit through (points, values). Throws Underdetermined when the
// evaluation matrix has deficient column rank and Inconsistent when no polynomial
// of total degree <= degree_bound matches every pair.
MultiPoly interpolate(std::span<const Point> points, std::span<const ExactRational> values,
                      int degree_bound);

std::map<int, MultiPoly> homogeneous_components(const MultiPoly& p);

// Quotient p / divisor when divisor is a nonzero linear form dividing p exactly.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& divisor);

nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

}  // namespace dhur
