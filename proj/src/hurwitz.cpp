#include "dhur/hurwitz.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <utility>

#include "dhur/error.hpp"

namespace dhur {

RamificationProfile::RamificationProfile(Point x) : x_(std::move(x)) {
  if (x_.size() < 2) throw Error(ErrorCode::InvalidProfile, "profile needs at least two entries");
  std::int64_t sum = 0;
  bool pos = false;
  bool neg = false;
  for (auto v : x_) {
    if (v == 0) throw Error(ErrorCode::InvalidProfile, "profile entries must be nonzero");
    sum += v;
    pos = pos || v > 0;
    neg = neg || v < 0;
    if (v > 0) degree_ += static_cast<int>(v);
  }
  if (sum != 0) throw Error(ErrorCode::InvalidProfile, "profile entries must sum to zero");
  if (!pos || !neg) throw Error(ErrorCode::InvalidProfile, "profile needs positive and negative entries");
}

Partition RamificationProfile::zero_type() const {
  std::vector<int> parts;
  for (auto v : x_) {
    if (v > 0) parts.push_back(static_cast<int>(v));
  }
  return Partition(std::move(parts));
}

Partition RamificationProfile::infinity_type() const {
  std::vector<int> parts;
  for (auto v : x_) {
    if (v < 0) parts.push_back(static_cast<int>(-v));
  }
  return Partition(std::move(parts));
}

std::string RamificationProfile::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x_.size(); ++i) os << (i ? "," : "") << x_[i];
  os << ")";
  return os.str();
}

std::string_view method_name(Method m) {
  return m == Method::Oracle ? "oracle" : "frobenius";
}

int simple_branch_count(int g, int n) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be nonnegative");
  const int r = 2 * g - 2 + n;
  if (r < 0) throw Error(ErrorCode::NegativeR, "2g-2+n is negative; no such cover");
  return r;
}

BigInt oracle_leaf_bound(int d, int r) {
  BigInt t = binomial(d, 2);
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(r));
  return out;
}

BigInt labeling_factor(const RamificationProfile& profile) {
  BigInt f = 1;
  for (const auto& part : {profile.zero_type(), profile.infinity_type()}) {
    for (int m : part.multiplicities()) f *= factorial(static_cast<unsigned long>(m));
  }
  return f;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Depth-first search over t_1..t_r. The product is kept as an image table with its
// inverse so that right-multiplying by (a b) is a swap and undoes itself.
class FactorizationSearch {
 public:
  FactorizationSearch(const Permutation& start, const Partition& target, int r,
                      const std::vector<std::pair<int, int>>& transpositions)
      : image_(start.image()),
        inverse_(start.inverse().image()),
        cycles_(start.cycle_count()),
        target_(target),
        target_cycles_(target.length()),
        r_(r),
        transpositions_(transpositions),
        start_sets_(start.degree()),
        chosen_(static_cast<std::size_t>(r)) {
    for (int i = 0; i < start.degree(); ++i) start_sets_.unite(i, image_[static_cast<std::size_t>(i)]);
  }

  // Runs the subtree below t_1 = transpositions[first].
  void run_from(std::size_t first) {
    apply(first, 0);
    descend(1);
    apply(first, 0);
  }

  void run_all() { descend(0); }

  std::uint64_t examined = 0;
  std::uint64_t accepted = 0;

 private:
  bool same_cycle(int a, int b) const {
    for (int j = image_[static_cast<std::size_t>(a)];; j = image_[static_cast<std::size_t>(j)]) {
      if (j == b) return true;
      if (j == a) return false;
    }
  }

  // Right multiplication by (a b): values a and b swap places in the image table.
  void apply(std::size_t t, int depth) {
    const auto [a, b] = transpositions_[t];
    cycles_ += same_cycle(a, b) ? 1 : -1;
    const int ia = inverse_[static_cast<std::size_t>(a)];
    const int ib = inverse_[static_cast<std::size_t>(b)];
    image_[static_cast<std::size_t>(ia)] = b;
    image_[static_cast<std::size_t>(ib)] = a;
    std::swap(inverse_[static_cast<std::size_t>(a)], inverse_[static_cast<std::size_t>(b)]);
    chosen_[static_cast<std::size_t>(depth)] = t;
  }

  bool admissible(int depth) const {
    const int remaining = r_ - depth;
    const int gap = std::abs(cycles_ - target_cycles_);
    return gap <= remaining && (remaining - gap) % 2 == 0;
  }

  void descend(int depth) {
    if (!admissible(depth)) return;
    if (depth == r_) {
      ++examined;
      if (cycles_ == target_cycles_ && leaf_matches()) ++accepted;
      return;
    }
    for (std::size_t t = 0; t < transpositions_.size(); ++t) {
      apply(t, depth);
      descend(depth + 1);
      apply(t, depth);
    }
  }

  bool leaf_matches() const {
    if (cycle_type(Permutation::from_images(one_based())) != target_) return false;
    DisjointSets sets = start_sets_;
    for (int i = 0; i < r_; ++i) {
      const auto [a, b] = transpositions_[chosen_[static_cast<std::size_t>(i)]];
      sets.unite(a, b);
    }
    return sets.components() <= 1;
  }

  std::vector<int> one_based() const {
    std::vector<int> img(image_.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = image_[i] + 1;
    return img;
  }

  std::vector<int> image_;
  std::vector<int> inverse_;
  int cycles_;
  const Partition& target_;
  int target_cycles_;
  int r_;
  const std::vector<std::pair<int, int>>& transpositions_;
  DisjointSets start_sets_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

HurwitzResult oracle_count(const RamificationProfile& profile, int g, const OracleOptions& options) {
  const auto start_time = std::chrono::steady_clock::now();
  const int r = simple_branch_count(g, profile.n());
  const int d = profile.degree();
  if (oracle_leaf_bound(d, r) > BigInt(std::to_string(options.budget))) {
    throw Error(ErrorCode::BudgetExceeded, "oracle enumeration of C(" + std::to_string(d) + ",2)^" +
                                               std::to_string(r) + " leaves exceeds the budget of " +
                                               std::to_string(options.budget));
  }
  const Partition alpha = profile.zero_type();
  const Partition beta = profile.infinity_type();
  const Permutation sigma0 = Permutation::of_cycle_type(alpha);

  std::vector<std::pair<int, int>> transpositions;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) transpositions.emplace_back(a, b);
  }

  std::uint64_t examined = 0;
  std::uint64_t accepted = 0;
  if (r == 0 || transpositions.empty()) {
    FactorizationSearch search(sigma0, beta, r, transpositions);
    search.run_all();
    examined = search.examined;
    accepted = search.accepted;
  } else {
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(transpositions.size()));
    std::vector<std::uint64_t> part_examined(threads, 0);
    std::vector<std::uint64_t> part_accepted(threads, 0);
    auto worker = [&](unsigned w) {
      FactorizationSearch search(sigma0, beta, r, transpositions);
      for (std::size_t t = w; t < transpositions.size(); t += threads) search.run_from(t);
      part_examined[w] = search.examined;
      part_accepted[w] = search.accepted;
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    }
    examined = std::accumulate(part_examined.begin(), part_examined.end(), std::uint64_t{0});
    accepted = std::accumulate(part_accepted.begin(), part_accepted.end(), std::uint64_t{0});
  }

  // H = (prod m(alpha)! prod m(beta)! / d!) * (d! / z_alpha) * N_fixed.
  ExactRational value(BigInt(std::to_string(accepted)));
  value *= make_rational(class_size(alpha), factorial(static_cast<unsigned long>(d)));
  if (options.normalization == Normalization::Labeled) value *= ExactRational(labeling_factor(profile));

  HurwitzResult result;
  result.value = value;
  result.genus = g;
  result.r = r;
  result.method = Method::Oracle;
  result.stats = {examined, accepted, seconds_since(start_time)};
  return result;
}

ExactRational frobenius_disconnected(const Partition& alpha, const Partition& beta, int r) {
  if (alpha.size() != beta.size()) throw Error(ErrorCode::SizeMismatch, "alpha and beta have different sizes");
  if (r < 0) throw Error(ErrorCode::NegativeR, "negative number of transpositions");
  const int d = alpha.size();
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  if (d == 1) return r == 0 ? 1 : 0;

  std::vector<int> tparts(static_cast<std::size_t>(d - 1), 1);
  tparts[0] = 2;
  const Partition transposition_type(std::move(tparts));
  const Partition identity_type(std::vector<int>(static_cast<std::size_t>(d), 1));

  ExactRational sum = 0;
  for (const auto& lambda : partitions_of(d)) {
    const BigInt ca = mn_character(lambda, alpha);
    if (ca == 0) continue;
    const BigInt cb = mn_character(lambda, beta);
    if (cb == 0) continue;
    const BigInt ct = mn_character(lambda, transposition_type);
    if (r > 0 && ct == 0) continue;
    const BigInt dim = mn_character(lambda, identity_type);
    const ExactRational ratio = make_rational(ct, dim);
    ExactRational term(ca * cb);
    for (int i = 0; i < r; ++i) term *= ratio;
    sum += term;
  }
  BigInt ct_size = class_size(transposition_type);
  BigInt ct_pow;
  mpz_pow_ui(ct_pow.get_mpz_t(), ct_size.get_mpz_t(), static_cast<unsigned long>(r));
  const ExactRational prefactor =
      make_rational(class_size(alpha) * class_size(beta) * ct_pow, factorial(static_cast<unsigned long>(d)));
  return prefactor * sum;
}

namespace {

// Connected extraction over labeled blocks. Within a block only the multisets of
// positive and negative parts matter, so memo keys use sorted parts.
class ConnectedExtractor {
 public:
  ExactRational disconnected(const Point& entries, int r) {
    const std::string key = make_key(entries, r);
    if (auto it = disconnected_memo_.find(key); it != disconnected_memo_.end()) return it->second;
    RamificationProfile block(entries);
    const Partition alpha = block.zero_type();
    const Partition beta = block.infinity_type();
    ExactRational value = frobenius_disconnected(alpha, beta, r);
    value *= make_rational(labeling_factor(block), factorial(static_cast<unsigned long>(block.degree())));
    ++character_sums;
    disconnected_memo_.emplace(key, value);
    return value;
  }

  // H_conn(S, r) = H.(S, r) - sum over balanced B containing the first entry, B != S,
  // of C(r, r_B) H_conn(B, r_B) H.(S \ B, r - r_B).
  ExactRational connected(const Point& entries, int r) {
    const std::string key = make_key(entries, r);
    if (auto it = connected_memo_.find(key); it != connected_memo_.end()) return it->second;
    ExactRational total = disconnected(entries, r);
    const std::size_t m = entries.size();
    const std::uint64_t others = std::uint64_t{1} << (m - 1);
    for (std::uint64_t mask = 0; mask + 1 < others; ++mask) {
      Point block{entries[0]};
      Point rest;
      for (std::size_t i = 1; i < m; ++i) {
        if (mask >> (i - 1) & 1U) block.push_back(entries[i]);
        else rest.push_back(entries[i]);
      }
      if (!balanced(block)) continue;
      ++balanced_blocks;
      const int nb = static_cast<int>(block.size());
      for (int rb = std::max(0, nb - 2); rb <= r; rb += 2) {
        const ExactRational conn = connected(block, rb);
        if (conn == 0) continue;
        const ExactRational disc = disconnected(rest, r - rb);
        if (disc == 0) continue;
        total -= ExactRational(binomial(r, rb)) * conn * disc;
      }
    }
    connected_memo_.emplace(key, total);
    return total;
  }

  std::uint64_t character_sums = 0;
  std::uint64_t balanced_blocks = 0;

 private:
  static bool balanced(const Point& block) {
    std::int64_t sum = 0;
    bool pos = false;
    bool neg = false;
    for (auto v : block) {
      sum += v;
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    return sum == 0 && pos && neg;
  }

  static std::string make_key(const Point& entries, int r) {
    Point pos;
    Point neg;
    for (auto v : entries) (v > 0 ? pos : neg).push_back(v);
    std::sort(pos.begin(), pos.end(), std::greater<>{});
    std::sort(neg.begin(), neg.end());
    std::ostringstream os;
    for (auto v : pos) os << v << ',';
    os << '|';
    for (auto v : neg) os << v << ',';
    os << '|' << r;
    return os.str();
  }

  std::unordered_map<std::string, ExactRational> disconnected_memo_;
  std::unordered_map<std::string, ExactRational> connected_memo_;
};

}  // namespace

HurwitzResult frobenius_connected(const RamificationProfile& profile, int g, Normalization normalization) {
  const auto start_time = std::chrono::steady_clock::now();
  const int r = simple_branch_count(g, profile.n());
  ConnectedExtractor extractor;
  ExactRational value = extractor.connected(profile.x(), r);
  if (normalization == Normalization::Unlabeled) {
    value /= ExactRational(labeling_factor(profile));
    value.canonicalize();
  }
  HurwitzResult result;
  result.value = value;
  result.genus = g;
  result.r = r;
  result.method = Method::Frobenius;
  result.stats = {extractor.character_sums, extractor.balanced_blocks, seconds_since(start_time)};
  return result;
}

std::vector<RamificationProfile> enumerate_profiles(int max_degree, int max_n) {
  std::vector<RamificationProfile> out;
  for (int n = 2; n <= max_n; ++n) {
    Point x(static_cast<std::size_t>(n));
    // Entries range over [-max_degree, max_degree] \ {0}; the positive total bounds d.
    auto rec = [&](auto&& self, std::size_t pos, int pos_sum, int neg_sum) -> void {
      if (pos == x.size()) {
        if (pos_sum == neg_sum && pos_sum > 0) out.emplace_back(x);
        return;
      }
      for (int v = -max_degree; v <= max_degree; ++v) {
        if (v == 0) continue;
        const int ps = pos_sum + (v > 0 ? v : 0);
        const int ns = neg_sum + (v < 0 ? -v : 0);
        if (ps > max_degree || ns > max_degree) continue;
        x[pos] = v;
        self(self, pos + 1, ps, ns);
      }
    };
    rec(rec, 0, 0, 0);
  }
  return out;
}

}  // namespace dhur
