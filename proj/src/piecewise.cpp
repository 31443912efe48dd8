#include "dhur/piecewise.hpp"

#include <algorithm>
#include <thread>

#include "dhur/error.hpp"

namespace dhur {

int chamber_degree_bound(int g, int n) { return 4 * g - 3 + n; }

namespace {

std::vector<ExactRational> evaluate_all(const std::vector<RamificationProfile>& points, int g,
                                        const FitOptions& options) {
  std::vector<ExactRational> values(points.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(points.size()));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < points.size(); i += threads) {
      values[i] = frobenius_connected(points[i], g, options.normalization).value;
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  return values;
}

}  // namespace

ChamberPolynomial fit_chamber(const ChamberWitness& witness, int g, const FitOptions& options) {
  const int n = witness.ambient();
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be nonnegative");
  if (n == 2 && g == 0) {
    throw Error(ErrorCode::UnstableCase, "H_0(d,-d) = 1/d is not polynomial; n = 2 needs g >= 1");
  }
  const int bound = chamber_degree_bound(g, n);
  const std::size_t monomials = monomials_up_to(n - 1, bound).size();
  const std::size_t holdout = options.oversample;

  // Rank-deficient node sets get more nodes; the sample sequence is prefix-stable.
  std::size_t node_count = monomials + options.oversample;
  for (int attempt = 0;; ++attempt) {
    const std::size_t total = options.sample_offset + node_count + holdout;
    auto sampled = sample_chamber(witness, total, options.sample_budget);
    std::vector<RamificationProfile> points(sampled.begin() + static_cast<std::ptrdiff_t>(options.sample_offset),
                                            sampled.end());
    const auto values = evaluate_all(points, g, options);

    std::vector<Point> nodes;
    for (std::size_t i = 0; i < node_count; ++i) nodes.push_back(points[i].x());
    MultiPoly poly(n);
    try {
      poly = interpolate(nodes, std::span<const ExactRational>(values.data(), node_count), bound);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Underdetermined && attempt < 4) {
        node_count += monomials;
        continue;
      }
      if (e.code() == ErrorCode::Inconsistent) {
        throw Error(ErrorCode::NotPolynomial, "chamber " + witness.point().to_string() + ": " + e.what());
      }
      throw;
    }

    ChamberPolynomial result{witness, g, poly, bound, {}, {}};
    for (std::size_t i = 0; i < points.size(); ++i) {
      const ExactRational fitted = poly_eval(poly, points[i].x());
      result.validation.push_back({points[i].x(), values[i], fitted, i >= node_count});
      if (fitted != values[i]) {
        throw Error(ErrorCode::NotPolynomial, "fitted polynomial misses H at " + points[i].to_string());
      }
    }

    // Cross-check the character evaluator against the enumeration on the cheapest nodes.
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const int r = simple_branch_count(g, n);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return points[a].degree() < points[b].degree();
    });
    OracleOptions oracle_options;
    oracle_options.budget = options.oracle_budget;
    oracle_options.normalization = options.normalization;
    for (std::size_t k = 0; k < order.size() && result.spot_checks.size() < options.spot_checks; ++k) {
      const auto& pt = points[order[k]];
      if (oracle_leaf_bound(pt.degree(), r) > BigInt(std::to_string(options.oracle_budget))) break;
      const ExactRational oracle = oracle_count(pt, g, oracle_options).value;
      result.spot_checks.push_back({pt.x(), values[order[k]], oracle});
      if (oracle != values[order[k]]) {
        throw Error(ErrorCode::NotPolynomial, "evaluators disagree at " + pt.to_string());
      }
    }
    return result;
  }
}

WallCrossing wall_crossing(const ChamberPolynomial& c1, const ChamberPolynomial& c2, const Wall& wall) {
  if (c1.witness.ambient() != c2.witness.ambient() || c1.genus != c2.genus) {
    throw Error(ErrorCode::NotAdjacent, "chamber polynomials differ in n or genus");
  }
  const auto diff = c1.witness.signature().differing_walls(c2.witness.signature());
  if (diff.size() != 1 || !(diff.front() == wall)) {
    throw Error(ErrorCode::NotAdjacent, "chambers of " + c1.witness.point().to_string() + " and " +
                                            c2.witness.point().to_string() + " are not separated by exactly " +
                                            wall.to_string());
  }
  return {wall, c2.polynomial - c1.polynomial, c1.witness, c2.witness};
}

std::string ProductConvention::name() const {
  std::string s = sign > 0 ? "+" : "-";
  switch (binomial) {
    case BinomialChoice::RMinus1ChooseR1: return s + "C(r-1,r1)";
    case BinomialChoice::RChooseR1: return s + "C(r,r1)";
    case BinomialChoice::RMinus1ChooseR2: return s + "C(r-1,r2)";
  }
  return s;
}

std::vector<ProductConvention> product_conventions() {
  std::vector<ProductConvention> out;
  for (int sign : {1, -1}) {
    for (auto b : {BinomialChoice::RMinus1ChooseR1, BinomialChoice::RChooseR1, BinomialChoice::RMinus1ChooseR2}) {
      out.push_back({b, sign});
    }
  }
  return out;
}

ProductFormulaTerms product_formula_terms(const Wall& wall, const RamificationProfile& x) {
  const int n = x.n();
  if (wall.ambient() != n) throw Error(ErrorCode::DimensionMismatch, "wall of different n");
  const std::int64_t s = wall.evaluate(x.x());
  if (s == 0) throw Error(ErrorCode::OnWall, "point lies on wall " + wall.to_string(), wall.indices());

  ProductFormulaTerms t{wall, {}, 0, 0, 0, {}, {}, {}, {}};
  for (int i = 1; i <= n; ++i) {
    const auto v = x.x()[static_cast<std::size_t>(i - 1)];
    if (std::binary_search(wall.indices().begin(), wall.indices().end(), i)) t.block_i.push_back(v);
    else t.block_ic.push_back(v);
  }
  t.block_i.push_back(-s);
  t.block_ic.push_back(s);
  for (const auto* block : {&t.block_i, &t.block_ic}) {
    std::int64_t sum = 0;
    for (auto v : *block) sum += v;
    if (sum != 0) throw Error(ErrorCode::BlockUnbalanced, "block does not sum to zero");
  }
  t.delta = s > 0 ? s : -s;
  t.r = simple_branch_count(0, n);
  t.r1 = simple_branch_count(0, static_cast<int>(t.block_i.size()));
  t.r2 = t.r - t.r1;
  t.h_i = frobenius_connected(RamificationProfile(t.block_i), 0).value;
  t.h_ic = frobenius_connected(RamificationProfile(t.block_ic), 0).value;
  return t;
}

ExactRational product_formula_value(const ProductFormulaTerms& t, const ProductConvention& convention) {
  BigInt b;
  switch (convention.binomial) {
    case BinomialChoice::RMinus1ChooseR1: b = binomial(t.r - 1, t.r1); break;
    case BinomialChoice::RChooseR1: b = binomial(t.r, t.r1); break;
    case BinomialChoice::RMinus1ChooseR2: b = binomial(t.r - 1, t.r2); break;
  }
  return ExactRational(convention.sign) * t.delta * ExactRational(b) * t.h_i * t.h_ic;
}

ExactRational product_formula_wc(const Wall& wall, const RamificationProfile& x, const ProductConvention& convention) {
  return product_formula_value(product_formula_terms(wall, x), convention);
}

nlohmann::json to_json(const ChamberPolynomial& c) {
  nlohmann::json validation = nlohmann::json::array();
  for (const auto& v : c.validation) {
    validation.push_back({{"point", v.point},
                          {"value", to_string(v.value)},
                          {"fitted", to_string(v.fitted)},
                          {"held_out", v.held_out}});
  }
  nlohmann::json spots = nlohmann::json::array();
  for (const auto& s : c.spot_checks) {
    spots.push_back({{"point", s.point}, {"frobenius", to_string(s.frobenius)}, {"oracle", to_string(s.oracle)}});
  }
  return {{"witness", c.witness.point().x()},
          {"signature", c.witness.signature().to_string()},
          {"g", c.genus},
          {"degree_bound", c.degree_bound},
          {"degree", c.polynomial.degree()},
          {"polynomial", to_json(c.polynomial)},
          {"canonical", c.polynomial.to_string()},
          {"display", c.polynomial.display()},
          {"validation", validation},
          {"spot_checks", spots}};
}

nlohmann::json to_json(const WallCrossing& wc) {
  return {{"wall", wc.wall.indices()},
          {"from", wc.from.point().x()},
          {"to", wc.to.point().x()},
          {"from_signature", wc.from.signature().to_string()},
          {"to_signature", wc.to.signature().to_string()},
          {"polynomial", to_json(wc.polynomial)},
          {"canonical", wc.polynomial.to_string()},
          {"display", wc.polynomial.display()}};
}

nlohmann::json to_json(const ProductFormulaTerms& t) {
  return {{"wall", t.wall.indices()}, {"delta", to_string(t.delta)}, {"r", t.r},
          {"r1", t.r1},               {"r2", t.r2},                   {"block_I", t.block_i},
          {"block_Ic", t.block_ic},   {"H_I", to_string(t.h_i)},      {"H_Ic", to_string(t.h_ic)}};
}

}  // namespace dhur
