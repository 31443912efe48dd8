#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "dhur/error.hpp"
#include "dhur/hurwitz.hpp"

using namespace dhur;

namespace {

// Independent count: every sigma_0 in S_d of type alpha (not a fixed representative),
// every tuple of transpositions, sigma_inf forced. Labeled H = prod m! prod m! / d! * N.
ExactRational brute_force(const RamificationProfile& p, int g) {
  const int d = p.degree();
  const int r = 2 * g - 2 + p.n();
  std::vector<Permutation> transpositions;
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b) transpositions.push_back(Permutation::transposition(d, a, b));
  if (r > 0 && transpositions.empty()) return 0;
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 1);
  BigInt count = 0;
  do {
    const auto s0 = Permutation::from_images(images);
    if (cycle_type(s0) != p.zero_type()) continue;
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    while (true) {
      std::vector<Permutation> gens{s0};
      Permutation prod = s0;
      for (auto i : idx) {
        prod = prod * transpositions[i];
        gens.push_back(transpositions[i]);
      }
      if (cycle_type(prod.inverse()) == p.infinity_type() && is_transitive(d, gens)) ++count;
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == transpositions.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return make_rational(count * labeling_factor(p), factorial(static_cast<unsigned long>(d)));
}

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

TEST_SUITE("hurwitz") {

TEST_CASE("both evaluators agree with a brute-force count") {
  std::size_t cases = 0;
  for (const auto& p : enumerate_profiles(4, 4)) {
    for (int g = 0; g <= 1; ++g) {
      const auto truth = brute_force(p, g);
      CAPTURE(p.to_string());
      CAPTURE(g);
      CHECK(oracle_count(p, g).value == truth);
      CHECK(frobenius_connected(p, g).value == truth);
      ++cases;
    }
  }
  CHECK(cases > 100);
}

TEST_CASE("simple_branch_count") {
  CHECK(simple_branch_count(0, 5) == 3);
  CHECK(simple_branch_count(1, 2) == 2);
  CHECK(simple_branch_count(0, 2) == 0);
  CHECK(code_of([] { simple_branch_count(0, 1); }) == ErrorCode::NegativeR);
}

TEST_CASE("profile validation") {
  CHECK(code_of([] { RamificationProfile(Point{1, 1, -1}); }) == ErrorCode::InvalidProfile);
  CHECK(code_of([] { RamificationProfile(Point{2, 0, -2}); }) == ErrorCode::InvalidProfile);
  CHECK(code_of([] { RamificationProfile(Point{0}); }) == ErrorCode::InvalidProfile);
  const RamificationProfile p(Point{7, 1, -2, -3, -3});
  CHECK(p.degree() == 8);
  CHECK(p.zero_type() == Partition({7, 1}));
  CHECK(p.infinity_type() == Partition({3, 3, 2}));
}

TEST_CASE("oracle_count examples") {
  CHECK(oracle_count(RamificationProfile(Point{1, -1}), 0).value == 1);
  CHECK(oracle_count(RamificationProfile(Point{1, 1, -2}), 0).value == 1);
  CHECK(oracle_count(RamificationProfile(Point{7, 1, -2, -3, -3}), 0).value == 294);
}

TEST_CASE("frobenius_disconnected examples") {
  CHECK(frobenius_disconnected(Partition({2}), Partition({2}), 0) == 1);
  CHECK(frobenius_disconnected(Partition({1, 1}), Partition({2}), 1) == 1);
  for (int d = 1; d <= 7; ++d) {
    CHECK(frobenius_disconnected(Partition({d}), Partition({d}), 0) == factorial(static_cast<unsigned long>(d - 1)));
  }
}

TEST_CASE("frobenius_connected examples") {
  CHECK(frobenius_connected(RamificationProfile(Point{1, -1}), 0).value == 1);
  CHECK(frobenius_connected(RamificationProfile(Point{2, -2}), 0).value == make_rational(1, 2));
  CHECK(frobenius_connected(RamificationProfile(Point{9, 4, -5, -5, -3}), 0).value == 540);
  CHECK(frobenius_connected(RamificationProfile(Point{4, -3, -1}), 0).value == 1);
}

TEST_CASE("degenerate r gives zero") {
  CHECK(frobenius_disconnected(Partition({1}), Partition({1}), 2) == 0);
  CHECK(frobenius_connected(RamificationProfile(Point{1, -1}), 1).value == 0);
  CHECK(oracle_count(RamificationProfile(Point{1, -1}), 1).value == 0);
}

TEST_CASE("genus one, two points") {
  for (int d = 1; d <= 8; ++d) {
    const RamificationProfile p(Point{d, -d});
    CHECK(frobenius_connected(p, 1).value == make_rational(d * (d * d - 1), 12));
  }
}

TEST_CASE("relabeling symmetry") {
  for (Point x : {Point{3, 1, -2, -2}, Point{5, -1, -1, -3}, Point{2, 1, 1, -4}}) {
    std::sort(x.begin(), x.end());
    const auto h0 = frobenius_connected(RamificationProfile(x), 0).value;
    const auto h1 = frobenius_connected(RamificationProfile(x), 1).value;
    do {
      CHECK(frobenius_connected(RamificationProfile(x), 0).value == h0);
      CHECK(frobenius_connected(RamificationProfile(x), 1).value == h1);
    } while (std::next_permutation(x.begin(), x.end()));
  }
}

TEST_CASE("integrality and nonnegativity") {
  for (const auto& p : enumerate_profiles(6, 4)) {
    for (int g = 0; g <= 1; ++g) {
      const auto h = frobenius_connected(p, g).value;
      CHECK(h >= 0);
      BigInt scale = 1;
      const Partition alpha = p.zero_type();
      for (int k : alpha.parts()) scale *= k;
      CHECK(ExactRational(h * scale).get_den() == 1);
    }
  }
}

TEST_CASE("oracle stats do not depend on the thread split") {
  const RamificationProfile p(Point{4, 2, -3, -3});
  OracleOptions one;
  one.threads = 1;
  const auto ref = oracle_count(p, 1, one);
  for (unsigned t : {2U, 3U, 7U}) {
    OracleOptions opt;
    opt.threads = t;
    const auto res = oracle_count(p, 1, opt);
    CHECK(res.value == ref.value);
    CHECK(res.stats.accepted == ref.stats.accepted);
    CHECK(res.stats.examined == ref.stats.examined);
  }
}

TEST_CASE("oracle budget") {
  OracleOptions opt;
  opt.budget = 10;
  CHECK(code_of([&] { oracle_count(RamificationProfile(Point{7, 1, -2, -3, -3}), 0, opt); }) ==
        ErrorCode::BudgetExceeded);
  CHECK(oracle_leaf_bound(13, 3) == 78 * 78 * 78);
}

TEST_CASE("unlabeled normalization divides by the labeling factor") {
  const RamificationProfile p(Point{7, 1, -2, -3, -3});
  CHECK(labeling_factor(p) == 2);
  CHECK(frobenius_connected(p, 0, Normalization::Unlabeled).value == 147);
  OracleOptions opt;
  opt.normalization = Normalization::Unlabeled;
  CHECK(oracle_count(p, 0, opt).value == 147);
}

}
