#include "dhur/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "dhur/error.hpp"

namespace dhur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>{});
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(size_) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (d >= 0) rec(rec, d, d);
  return out;
}

Permutation Permutation::identity(int d) {
  std::vector<int> img(static_cast<std::size_t>(d));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  const auto d = images.size();
  std::vector<int> img(d);
  std::vector<bool> seen(d, false);
  for (std::size_t i = 0; i < d; ++i) {
    const int v = images[i] - 1;
    if (v < 0 || static_cast<std::size_t>(v) >= d || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidArgument, "image word is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
    img[i] = v;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(d));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int a = c[k] - 1;
      const int b = c[(k + 1) % c.size()] - 1;
      if (a < 0 || a >= d || b < 0 || b >= d || used[static_cast<std::size_t>(a)]) {
        throw Error(ErrorCode::InvalidArgument, "cycles are not disjoint on {1..d}");
      }
      used[static_cast<std::size_t>(a)] = true;
      img[static_cast<std::size_t>(a)] = b;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int d, int a, int b) {
  if (a == b) throw Error(ErrorCode::InvalidArgument, "transposition needs two distinct points");
  return from_cycles(d, {{a, b}});
}

Permutation Permutation::of_cycle_type(const Partition& lambda) {
  std::vector<int> img(static_cast<std::size_t>(lambda.size()));
  int start = 0;
  for (int len : lambda.parts()) {
    for (int k = 0; k < len; ++k) {
      img[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
    }
    start += len;
  }
  return Permutation(std::move(img));
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(image_.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) seen[j] = true;
  }
  return cycles;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree()) throw Error(ErrorCode::SizeMismatch, "permutation degrees differ");
  std::vector<int> img(s.image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = t.image_[static_cast<std::size_t>(s.image_[i])];
  return Permutation(std::move(img));
}

Partition cycle_type(const Permutation& sigma) {
  const auto& img = sigma.image();
  std::vector<bool> seen(img.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(img[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

BigInt z_lambda(const Partition& lambda) {
  BigInt z = 1;
  const auto m = lambda.multiplicities();
  for (std::size_t k = 1; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    BigInt kk(static_cast<unsigned long>(k));
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), kk.get_mpz_t(), static_cast<unsigned long>(m[k]));
    z *= power * factorial(static_cast<unsigned long>(m[k]));
  }
  return z;
}

BigInt class_size(const Partition& lambda) {
  return factorial(static_cast<unsigned long>(lambda.size())) / z_lambda(lambda);
}

namespace {

struct CharacterMemo {
  std::shared_mutex mutex;
  std::unordered_map<std::string, BigInt> table;
};

CharacterMemo& memo() {
  static CharacterMemo instance;
  return instance;
}

std::string memo_key(const std::vector<int>& lambda, std::span<const int> mu) {
  std::string key;
  key.reserve(lambda.size() + mu.size() + 1);
  for (int p : lambda) key.push_back(static_cast<char>(p));
  key.push_back('\0');
  for (int p : mu) key.push_back(static_cast<char>(p));
  return key;
}

// Border strips are removed through beta-numbers: a strip of length k corresponds to
// moving one bead b -> b-k onto an empty position; the strip height is the number of
// beads strictly between.
BigInt mn_recursive(const std::vector<int>& lambda, std::span<const int> mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  const std::string key = memo_key(lambda, mu);
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) return it->second;
  }

  const int k = mu.front();
  const auto rest = mu.subspan(1);
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  BigInt total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int target = b - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int c : beta) {
      if (c > target && c < b) ++height;
    }
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>{});
    std::vector<int> smaller;
    for (int j = 0; j < len; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) smaller.push_back(part);
    }
    BigInt sub = mn_recursive(smaller, rest);
    if (height % 2) total -= sub;
    else total += sub;
  }

  std::unique_lock lock(memo().mutex);
  memo().table.emplace(key, total);
  return total;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw Error(ErrorCode::SizeMismatch, "character argument sizes differ: " + lambda.to_string() +
                                             " vs " + mu.to_string());
  }
  if (lambda.size() > 127) throw Error(ErrorCode::InvalidArgument, "partition size too large");
  return mn_recursive(lambda.parts(), mu.parts());
}

std::size_t mn_memo_size() {
  std::shared_lock lock(memo().mutex);
  return memo().table.size();
}

DisjointSets::DisjointSets(int n)
    : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  auto ux = static_cast<std::size_t>(x);
  while (parent_[ux] != static_cast<int>(ux)) {
    parent_[ux] = parent_[static_cast<std::size_t>(parent_[ux])];
    ux = static_cast<std::size_t>(parent_[ux]);
  }
  return static_cast<int>(ux);
}

bool DisjointSets::unite(int a, int b) {
  int ra = find(a);
  int rb = find(b);
  if (ra == rb) return false;
  if (rank_[static_cast<std::size_t>(ra)] < rank_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
  parent_[static_cast<std::size_t>(rb)] = ra;
  if (rank_[static_cast<std::size_t>(ra)] == rank_[static_cast<std::size_t>(rb)]) ++rank_[static_cast<std::size_t>(ra)];
  --components_;
  return true;
}

bool is_transitive(int d, std::span<const Permutation> gens) {
  DisjointSets sets(d);
  for (const auto& g : gens) {
    if (g.degree() != d) throw Error(ErrorCode::SizeMismatch, "generator acts on the wrong set");
    for (int i = 0; i < d; ++i) sets.unite(i, g.image()[static_cast<std::size_t>(i)]);
  }
  return sets.components() <= 1;
}

}  // namespace dhur
