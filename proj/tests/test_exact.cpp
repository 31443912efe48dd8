#include <random>

#include "doctest.h"
#include "dhur/error.hpp"
#include "dhur/exact.hpp"

using namespace dhur;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }

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

TEST_SUITE("exact") {

TEST_CASE("rationals print reduced") {
  CHECK(to_string(make_rational(-2, 2)) == "-1");
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_rational(1, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int i = 0; i < 200; ++i) {
    const auto a = make_rational(num(rng), den(rng));
    const auto b = make_rational(num(rng), den(rng));
    const auto c = make_rational(num(rng), den(rng));
    CHECK(ExactRational((a + b) + c) == ExactRational(a + (b + c)));
    CHECK(ExactRational((a * b) * c) == ExactRational(a * (b * c)));
    CHECK(ExactRational(a * (b + c)) == ExactRational(a * b + a * c));
    const ExactRational s = a * b + c;
    CHECK(gcd(s.get_num(), s.get_den()) == 1);
    CHECK(s.get_den() > 0);
  }
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(x(3, 1) + x(3, 2), Point{2, 1, -3}) == 3);
  CHECK(poly_eval(MultiPoly(4), Point{1, 2, -1, -2}) == 0);
  const MultiPoly six = MultiPoly::constant(5, 6);
  const MultiPoly c2 = six * x(5, 1) * (x(5, 1) + x(5, 2) + x(5, 5));
  CHECK(poly_eval(c2, Point{9, 4, -5, -5, -3}) == 540);
  CHECK(code_of([&] { poly_eval(c2, Point{1, -1}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { poly_eval(c2, Point{1, 1, 1, 1, 1}); }) == ErrorCode::NonzeroSum);
}

TEST_CASE("poly_sub") {
  const int n = 5;
  const MultiPoly six = MultiPoly::constant(n, 6);
  const MultiPoly c1 = six * x(n, 1) * x(n, 1);
  const MultiPoly c2 = six * x(n, 1) * (x(n, 1) + x(n, 2) + x(n, 5));
  CHECK(poly_sub(c2, c2).is_zero());
  CHECK(poly_sub(c2, c1) == six * x(n, 1) * (x(n, 2) + x(n, 5)));
  CHECK(poly_sub(x(3, 1) + x(3, 2), x(3, 2)) == x(3, 1));
  CHECK(poly_sub(c2, c1).to_string() == "-6*x1^2 - 6*x1*x3 - 6*x1*x4");
  CHECK(poly_sub(c2, c1).display() == "6*x1*x2 + 6*x1*x5");
}

TEST_CASE("canonical form is a congruence modulo the zero-sum relation") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    std::vector<std::pair<std::vector<int>, ExactRational>> p_raw, q_raw;
    for (int t = 0; t < 4; ++t) {
      std::vector<int> e(static_cast<std::size_t>(n));
      for (auto& v : e) v = expo(rng);
      p_raw.emplace_back(e, coeff(rng));
      for (auto& v : e) v = expo(rng);
      q_raw.emplace_back(e, coeff(rng));
    }
    // p + (x_1 + ... + x_n) q, expanded in all n variables before canonicalization.
    auto shifted = p_raw;
    for (const auto& [e, c] : q_raw) {
      for (int i = 0; i < n; ++i) {
        auto f = e;
        ++f[static_cast<std::size_t>(i)];
        shifted.emplace_back(f, c);
      }
    }
    CHECK(MultiPoly::from_raw_terms(n, shifted) == MultiPoly::from_raw_terms(n, p_raw));
  }
}

TEST_CASE("eval of a difference is the difference of evals") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-6, 6), coord(-7, 7);
  const int n = 4;
  MultiPoly::TermMap tp, tq;
  for (const auto& e : monomials_up_to(n - 1, 3)) {
    tp.emplace(e, make_rational(coeff(rng), 3));
    tq.emplace(e, coeff(rng));
  }
  const auto p = MultiPoly::from_terms(n, tp);
  const auto q = MultiPoly::from_terms(n, tq);
  for (int i = 0; i < 50; ++i) {
    Point pt{coord(rng), coord(rng), coord(rng), 0};
    pt[3] = -(pt[0] + pt[1] + pt[2]);
    CHECK(poly_eval(poly_sub(p, q), pt) == ExactRational(poly_eval(p, pt) - poly_eval(q, pt)));
  }
}

TEST_CASE("interpolate") {
  SUBCASE("linear recovery") {
    const std::vector<Point> pts{{1, 0, -1}, {2, 1, -3}, {0, 3, -3}, {-2, 5, -3}, {4, -1, -3}};
    const MultiPoly f = x(3, 1) + x(3, 2);
    std::vector<ExactRational> vals;
    for (const auto& p : pts) vals.push_back(poly_eval(f, p));
    CHECK(interpolate(pts, vals, 1) == f);
  }
  SUBCASE("univariate square") {
    const std::vector<Point> pts{{1, -1}, {2, -2}, {3, -3}};
    const std::vector<ExactRational> vals{1, 4, 9};
    CHECK(interpolate(pts, vals, 2) == x(2, 1) * x(2, 1));
  }
  SUBCASE("constant fit impossible") {
    const std::vector<Point> pts{{1, -1}, {2, -2}, {3, -3}};
    const std::vector<ExactRational> vals{0, 0, 1};
    CHECK(code_of([&] { interpolate(pts, vals, 0); }) == ErrorCode::Inconsistent);
  }
  SUBCASE("too few points") {
    const std::vector<Point> pts{{1, 0, -1}, {2, 0, -2}};
    const std::vector<ExactRational> vals{1, 2};
    CHECK(code_of([&] { interpolate(pts, vals, 1); }) == ErrorCode::Underdetermined);
  }
  SUBCASE("size mismatch") {
    const std::vector<Point> pts{{1, -1}};
    const std::vector<ExactRational> vals{1, 2};
    CHECK(code_of([&] { interpolate(pts, vals, 1); }) == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("interpolation round trip on random polynomials") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-9, 9), coord(-12, 12);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 4;
    const int degree = trial % 4;
    MultiPoly::TermMap terms;
    for (const auto& e : monomials_up_to(n - 1, degree)) terms.emplace(e, make_rational(coeff(rng), 1 + trial % 3));
    const auto p = MultiPoly::from_terms(n, terms);
    std::vector<Point> pts;
    std::vector<ExactRational> vals;
    while (pts.size() < terms.size() + 5) {
      Point pt(static_cast<std::size_t>(n));
      std::int64_t s = 0;
      for (int i = 0; i + 1 < n; ++i) s += (pt[static_cast<std::size_t>(i)] = coord(rng));
      pt.back() = -s;
      if (std::find(pts.begin(), pts.end(), pt) != pts.end()) continue;
      pts.push_back(pt);
      vals.push_back(poly_eval(p, pt));
    }
    CHECK(interpolate(pts, vals, degree) == p);
  }
}

TEST_CASE("homogeneous_components") {
  const MultiPoly p = x(2, 1) * x(2, 1) + x(2, 1);
  const auto parts = homogeneous_components(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(2) == x(2, 1) * x(2, 1));
  CHECK(parts.at(1) == x(2, 1));
  CHECK(homogeneous_components(MultiPoly(3)).empty());
  const MultiPoly c2 = MultiPoly::constant(5, 6) * x(5, 1) * (x(5, 1) + x(5, 2) + x(5, 5));
  const auto c2_parts = homogeneous_components(c2);
  REQUIRE(c2_parts.size() == 1);
  CHECK(c2_parts.begin()->first == 2);
  CHECK(c2.is_homogeneous());
}

TEST_CASE("divide_exact by a linear form") {
  const int n = 5;
  const MultiPoly form = x(n, 2) + x(n, 5);
  const MultiPoly wc = MultiPoly::constant(n, 6) * x(n, 1) * form;
  const auto q = divide_exact(wc, form);
  REQUIRE(q.has_value());
  CHECK(*q == MultiPoly::constant(n, 6) * x(n, 1));
  CHECK_FALSE(divide_exact(wc + MultiPoly::constant(n, 1), form).has_value());
  CHECK_FALSE(divide_exact(x(n, 1) * x(n, 1), form).has_value());
}

TEST_CASE("json round trip") {
  const MultiPoly p = make_rational(1, 12) * x(2, 1).pow(3) - make_rational(1, 12) * x(2, 1);
  CHECK(p.to_string() == "1/12*x1^3 - 1/12*x1");
  CHECK(poly_from_json(to_json(p)) == p);
}

}
