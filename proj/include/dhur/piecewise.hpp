#pragma once

// Chamber polynomials of H_g, wall-crossing differences and the genus-0 product
// formula for a wall crossing.

#include <cstdint>
#include <string>
#include <vector>

#include "dhur/chambers.hpp"
#include "dhur/exact.hpp"
#include "dhur/hurwitz.hpp"

namespace dhur {

struct ValidationEntry {
  Point point;
  ExactRational value;   // H_g(point)
  ExactRational fitted;  // polynomial at point
  bool held_out = false;
};

struct SpotCheck {
  Point point;
  ExactRational frobenius;
  ExactRational oracle;
};

struct ChamberPolynomial {
  ChamberWitness witness;
  int genus = 0;
  MultiPoly polynomial;
  int degree_bound = 0;
  std::vector<ValidationEntry> validation;
  std::vector<SpotCheck> spot_checks;
};

struct FitOptions {
  // Extra interpolation nodes beyond the monomial count, and the number of held-out
  // validation points.
  std::size_t oversample = 5;
  // Drop this many points from the front of the sample sequence. Changing it gives an
  // independent node set for the same chamber.
  std::size_t sample_offset = 0;
  std::uint64_t sample_budget = kDefaultSearchBudget;
  std::size_t spot_checks = 2;
  std::uint64_t oracle_budget = 2'000'000;
  // Worker threads for H evaluations; 0 picks hardware_concurrency().
  unsigned threads = 0;
  Normalization normalization = Normalization::Labeled;
};

// 4g - 3 + n.
int chamber_degree_bound(int g, int n);

ChamberPolynomial fit_chamber(const ChamberWitness& witness, int g, const FitOptions& options = {});

struct WallCrossing {
  Wall wall;
  MultiPoly polynomial;  // c2 - c1
  ChamberWitness from;
  ChamberWitness to;
};

WallCrossing wall_crossing(const ChamberPolynomial& c1, const ChamberPolynomial& c2, const Wall& wall);

enum class BinomialChoice { RMinus1ChooseR1, RChooseR1, RMinus1ChooseR2 };

struct ProductConvention {
  BinomialChoice binomial = BinomialChoice::RChooseR1;
  int sign = 1;

  std::string name() const;
  friend bool operator==(const ProductConvention&, const ProductConvention&) = default;
};

// Every candidate: three binomials times two overall signs.
std::vector<ProductConvention> product_conventions();

// The convention that matches the fitted wall crossing at (9,4,-5,-5,-3) across [2,5];
// asserted by the acceptance suite.
inline constexpr ProductConvention kRecordedConvention{BinomialChoice::RChooseR1, 1};

struct ProductFormulaTerms {
  Wall wall;
  ExactRational delta;
  int r = 0;
  int r1 = 0;  // simple branch points on the I side
  int r2 = 0;
  Point block_i;   // x_I followed by the balancing part
  Point block_ic;  // x_{I^c} followed by the balancing part
  ExactRational h_i;
  ExactRational h_ic;
};

// Splits a genus-0 profile along `wall` into its two balanced blocks and evaluates
// H_0 on each.
ProductFormulaTerms product_formula_terms(const Wall& wall, const RamificationProfile& x);

ExactRational product_formula_value(const ProductFormulaTerms& terms, const ProductConvention& convention);
ExactRational product_formula_wc(const Wall& wall, const RamificationProfile& x,
                                 const ProductConvention& convention);

nlohmann::json to_json(const ChamberPolynomial& c);
nlohmann::json to_json(const WallCrossing& wc);
nlohmann::json to_json(const ProductFormulaTerms& t);

}  // namespace dhur
