#include "doctest.h"
#include "dhur/error.hpp"
#include "dhur/piecewise.hpp"

using namespace dhur;

namespace {

const Point kP{7, 1, -2, -3, -3};
const Point kQ{9, 4, -5, -5, -3};

MultiPoly x_(int i) { return MultiPoly::variable(5, i); }
MultiPoly six() { return MultiPoly::constant(5, 6); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("piecewise") {

TEST_CASE("example chamber polynomials and their wall crossing") {
  const auto c1 = fit_chamber(ChamberWitness(RamificationProfile{kP}), 0);
  const auto c2 = fit_chamber(ChamberWitness(RamificationProfile{kQ}), 0);
  CHECK(c1.polynomial == six() * x_(1) * x_(1));
  CHECK(c2.polynomial == six() * x_(1) * (x_(1) + x_(2) + x_(5)));
  CHECK(c1.polynomial.to_string() == "6*x1^2");

  // fitted values are checked against H at every node and every held-out point
  std::size_t held_out = 0;
  for (const auto& v : c1.validation) {
    CHECK(v.value == v.fitted);
    held_out += v.held_out ? 1 : 0;
  }
  CHECK(held_out >= 5);
  for (const auto& s : c2.spot_checks) CHECK(s.frobenius == s.oracle);

  const Wall wall(5, {2, 5});
  const auto wc = wall_crossing(c1, c2, wall);
  CHECK(wc.polynomial == six() * x_(1) * (x_(2) + x_(5)));
  CHECK(wc.polynomial.display() == "6*x1*x2 + 6*x1*x5");
  CHECK(wall_crossing(c2, c1, wall).polynomial == -wc.polynomial);
  CHECK(divide_exact(wc.polynomial, wall.form()).has_value());
  CHECK(code_of([&] { wall_crossing(c1, c1, wall); }) == ErrorCode::NotAdjacent);
  CHECK(code_of([&] { wall_crossing(c1, c2, Wall(5, {2})); }) == ErrorCode::NotAdjacent);
}

TEST_CASE("fit is independent of the node set") {
  const ChamberWitness w(RamificationProfile{kQ});
  FitOptions shifted;
  shifted.sample_offset = 7;
  shifted.oversample = 8;
  CHECK(fit_chamber(w, 0).polynomial == fit_chamber(w, 0, shifted).polynomial);
}

TEST_CASE("genus one, n = 2 is a cubic") {
  const auto c = fit_chamber(ChamberWitness(RamificationProfile(Point{1, -1})), 1);
  CHECK(c.degree_bound == 3);
  CHECK(c.polynomial.degree() == 3);
  CHECK(c.polynomial.to_string() == "1/12*x1^3 - 1/12*x1");
}

TEST_CASE("genus zero chambers for n = 4 are homogeneous of degree 1") {
  for (const Point& x : {Point{3, 1, -2, -2}, Point{5, -1, -1, -3}, Point{2, 3, -1, -4}}) {
    const auto c = fit_chamber(ChamberWitness(RamificationProfile{x}), 0);
    CHECK(c.polynomial.is_homogeneous());
    CHECK(c.polynomial.degree() == 1);
  }
}

TEST_CASE("two-point genus zero is unstable") {
  CHECK(code_of([] { fit_chamber(ChamberWitness(RamificationProfile(Point{1, -1})), 0); }) ==
        ErrorCode::UnstableCase);
  CHECK(chamber_degree_bound(0, 5) == 2);
  CHECK(chamber_degree_bound(1, 2) == 3);
}

TEST_CASE("product formula at the example point") {
  const Wall wall(5, {2, 5});
  const RamificationProfile q(kQ);
  const auto terms = product_formula_terms(wall, q);
  CHECK(terms.delta == 1);
  CHECK(terms.r == 3);
  CHECK(terms.h_i == 1);
  std::size_t matches = 0;
  for (const auto& conv : product_conventions()) matches += product_formula_value(terms, conv) == 54 ? 1 : 0;
  CHECK(matches == 1);
  CHECK(product_formula_wc(wall, q, kRecordedConvention) == 54);
  CHECK(kRecordedConvention.name() == "+C(r,r1)");
}

TEST_CASE("wall crossing vanishes on the wall") {
  const MultiPoly wc = six() * x_(1) * (x_(2) + x_(5));
  for (const Point& p : {Point{5, 2, 1, -6, -2}, Point{3, -4, 1, -4, 4}}) CHECK(poly_eval(wc, p) == 0);
}

}
