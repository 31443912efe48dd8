#include "dhur/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dhur/error.hpp"

namespace dhur {

std::string to_string(const ExactRational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

ExactRational parse_rational(std::string_view text) {
  ExactRational q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::InvalidArgument, "not a rational: " + std::string(text));
  }
  q.canonicalize();
  return q;
}

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

// Polynomial in all n ambient variables, used only for display re-expression.
using RawTerms = std::map<std::vector<int>, ExactRational, GradedLexGreater>;

void raw_add(RawTerms& acc, const std::vector<int>& e, const ExactRational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

RawTerms raw_mul(const RawTerms& a, const RawTerms& b) {
  RawTerms out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      raw_add(out, e, ca * cb);
    }
  }
  return out;
}

std::string format_terms(const RawTerms& terms, std::span<const int> names) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    ExactRational mag = abs(c);
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = total_degree(e) == 0;
    bool need_star = false;
    if (constant || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::vector<int> iota_names(int count) {
  std::vector<int> names(static_cast<std::size_t>(count));
  std::iota(names.begin(), names.end(), 1);
  return names;
}

}  // namespace

MultiPoly::MultiPoly(int ambient) : ambient_(ambient) {
  if (ambient < 1) throw Error(ErrorCode::InvalidArgument, "MultiPoly needs at least one variable");
}

MultiPoly MultiPoly::constant(int ambient, const ExactRational& c) {
  MultiPoly p(ambient);
  p.add_term(Exponents(static_cast<std::size_t>(ambient - 1), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int ambient, int index) {
  if (index < 1 || index > ambient) {
    throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  }
  MultiPoly p(ambient);
  const auto m = static_cast<std::size_t>(ambient - 1);
  if (index < ambient) {
    Exponents e(m, 0);
    e[static_cast<std::size_t>(index - 1)] = 1;
    p.add_term(e, 1);
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      Exponents e(m, 0);
      e[i] = 1;
      p.add_term(e, -1);
    }
  }
  return p;
}

MultiPoly MultiPoly::linear_sum(int ambient, std::span<const int> indices) {
  MultiPoly p(ambient);
  for (int i : indices) p += variable(ambient, i);
  return p;
}

MultiPoly MultiPoly::from_terms(int ambient, const TermMap& terms) {
  MultiPoly p(ambient);
  for (const auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != ambient - 1) {
      throw Error(ErrorCode::DimensionMismatch, "exponent vector length must be n-1");
    }
    p.add_term(e, c);
  }
  return p;
}

MultiPoly MultiPoly::from_raw_terms(
    int ambient, const std::vector<std::pair<std::vector<int>, ExactRational>>& raw) {
  MultiPoly out(ambient);
  for (const auto& [e, c] : raw) {
    if (static_cast<int>(e.size()) != ambient) {
      throw Error(ErrorCode::DimensionMismatch, "raw exponent vector length must be n");
    }
    MultiPoly term = constant(ambient, c);
    for (int i = 0; i < ambient; ++i) {
      if (e[static_cast<std::size_t>(i)] > 0) {
        term = term * variable(ambient, i + 1).pow(static_cast<unsigned>(e[static_cast<std::size_t>(i)]));
      }
    }
    out += term;
  }
  return out;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

void MultiPoly::add_term(const Exponents& e, const ExactRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same_ambient(const MultiPoly& other) const {
  if (ambient_ != other.ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "polynomials live in different ambient spaces");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_ambient(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_ambient(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const ExactRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ambient(b);
  MultiPoly out(a.ambient_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out = constant(ambient_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string MultiPoly::to_string() const {
  RawTerms raw(terms_.begin(), terms_.end());
  const auto names = iota_names(free_vars());
  return format_terms(raw, names);
}

std::string MultiPoly::display() const {
  const int n = ambient_;
  std::string best = to_string();
  std::size_t best_terms = terms_.size();
  // Eliminate x_j for j = n-1 down to 1: x_j = -(sum of the other n-1 variables).
  for (int j = n - 1; j >= 1; --j) {
    const auto nu = static_cast<std::size_t>(n);
    RawTerms minus_others;
    for (int k = 1; k <= n; ++k) {
      if (k == j) continue;
      std::vector<int> e(nu, 0);
      e[static_cast<std::size_t>(k - 1)] = 1;
      raw_add(minus_others, e, -1);
    }
    RawTerms result;
    for (const auto& [e, c] : terms_) {
      RawTerms term;
      std::vector<int> base(nu, 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (static_cast<int>(i) + 1 != j) base[i] = e[i];
      }
      raw_add(term, base, c);
      for (int p = 0; p < e[static_cast<std::size_t>(j - 1)]; ++p) term = raw_mul(term, minus_others);
      for (const auto& [te, tc] : term) raw_add(result, te, tc);
    }
    if (result.size() < best_terms) {
      best_terms = result.size();
      best = format_terms(result, iota_names(n));
    }
  }
  return best;
}

ExactRational poly_eval(const MultiPoly& p, std::span<const std::int64_t> x) {
  if (static_cast<int>(x.size()) != p.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "point length does not match polynomial");
  }
  if (std::accumulate(x.begin(), x.end(), std::int64_t{0}) != 0) {
    throw Error(ErrorCode::NonzeroSum, "point does not lie on the zero-sum hyperplane");
  }
  ExactRational total = 0;
  for (const auto& [e, c] : p.terms()) {
    BigInt mono = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      BigInt base(static_cast<long>(x[i]));
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e[i]));
      mono *= power;
    }
    total += c * ExactRational(mono);
  }
  return total;
}

MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q) { return p - q; }

std::vector<Exponents> monomials_up_to(int vars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(static_cast<std::size_t>(vars), 0);
  // Fill positions left to right with every split of the remaining degree budget.
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur[pos] = k;
      self(self, pos + 1, remaining - k);
    }
    cur[pos] = 0;
  };
  if (degree >= 0) rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GradedLexGreater{});
  return out;
}

MultiPoly interpolate(std::span<const Point> points, std::span<const ExactRational> values,
                      int degree_bound) {
  if (points.empty()) throw Error(ErrorCode::Underdetermined, "no interpolation nodes");
  if (points.size() != values.size()) {
    throw Error(ErrorCode::SizeMismatch, "points and values differ in length");
  }
  if (degree_bound < 0) throw Error(ErrorCode::InvalidArgument, "negative degree bound");
  const std::size_t n = points.front().size();
  for (const auto& pt : points) {
    if (pt.size() != n) throw Error(ErrorCode::DimensionMismatch, "points differ in length");
    if (std::accumulate(pt.begin(), pt.end(), std::int64_t{0}) != 0) {
      throw Error(ErrorCode::NonzeroSum, "interpolation node off the zero-sum hyperplane");
    }
  }
  const int ambient = static_cast<int>(n);
  const auto monos = monomials_up_to(ambient - 1, degree_bound);
  const std::size_t rows = points.size();
  const std::size_t cols = monos.size();

  std::vector<std::vector<ExactRational>> a(rows, std::vector<ExactRational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      BigInt mono = 1;
      for (std::size_t i = 0; i < monos[c].size(); ++i) {
        for (int k = 0; k < monos[c][i]; ++k) mono *= BigInt(static_cast<long>(points[r][i]));
      }
      a[r][c] = mono;
    }
    a[r][cols] = values[r];
  }

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[row], a[piv]);
    const ExactRational inv = 1 / a[row][c];
    for (std::size_t k = c; k <= cols; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const ExactRational f = a[r][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (a[r][cols] != 0) {
      throw Error(ErrorCode::Inconsistent,
                  "values are not a polynomial of degree <= " + std::to_string(degree_bound) +
                      " on these nodes");
    }
  }
  if (pivot_col.size() < cols) {
    throw Error(ErrorCode::Underdetermined,
                "evaluation matrix has rank " + std::to_string(pivot_col.size()) + " < " +
                    std::to_string(cols) + " monomials");
  }
  MultiPoly::TermMap terms;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    if (a[r][cols] != 0) terms.emplace(monos[pivot_col[r]], a[r][cols]);
  }
  return MultiPoly::from_terms(ambient, terms);
}

std::map<int, MultiPoly> homogeneous_components(const MultiPoly& p) {
  std::map<int, MultiPoly::TermMap> split;
  for (const auto& [e, c] : p.terms()) split[total_degree(e)].emplace(e, c);
  std::map<int, MultiPoly> out;
  for (const auto& [d, terms] : split) out.emplace(d, MultiPoly::from_terms(p.ambient(), terms));
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& divisor) {
  if (p.ambient() != divisor.ambient()) {
    throw Error(ErrorCode::DimensionMismatch, "polynomials live in different ambient spaces");
  }
  if (divisor.degree() != 1) throw Error(ErrorCode::InvalidArgument, "divisor must be linear");
  // Pick the lowest-index free variable v in the divisor; reduce p against a*v + rest.
  std::size_t v = 0;
  ExactRational lead;
  bool found = false;
  for (std::size_t i = 0; i < static_cast<std::size_t>(divisor.free_vars()) && !found; ++i) {
    for (const auto& [e, c] : divisor.terms()) {
      if (e[i] == 1) {
        v = i;
        lead = c;
        found = true;
        break;
      }
    }
  }
  MultiPoly rem = p;
  MultiPoly quotient(p.ambient());
  while (true) {
    auto it = std::find_if(rem.terms().begin(), rem.terms().end(),
                           [v](const auto& t) { return t.first[v] > 0; });
    if (it == rem.terms().end()) break;
    Exponents e = it->first;
    e[v] -= 1;
    MultiPoly::TermMap qt{{e, it->second / lead}};
    const MultiPoly step = MultiPoly::from_terms(p.ambient(), qt);
    quotient += step;
    rem -= step * divisor;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quotient;
}

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", to_string(c)}});
  return {{"n", p.ambient()}, {"terms", terms}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  MultiPoly::TermMap terms;
  for (const auto& t : j.at("terms")) {
    terms.emplace(t.at("exponents").get<Exponents>(), parse_rational(t.at("coeff").get<std::string>()));
  }
  return MultiPoly::from_terms(n, terms);
}

}  // namespace dhur
