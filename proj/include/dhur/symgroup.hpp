#pragma once

// Partitions, permutations of {1..d} and class functions of S_d.
//
// Permutations compose left to right: (s * t)(i) = t(s(i)). The monodromy
// product in hurwitz.cpp relies on this convention.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dhur/exact.hpp"

namespace dhur {

class Partition {
 public:
  Partition() = default;
  // Parts may arrive in any order; they are sorted weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  // m_k for k = 1..size(); index 0 unused.
  std::vector<int> multiplicities() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of d in reverse lexicographic order, starting with (d).
std::vector<Partition> partitions_of(int d);

class Permutation {
 public:
  static Permutation identity(int d);
  // 1-based image word: images[i-1] = sigma(i).
  static Permutation from_images(const std::vector<int>& images);
  // Product of disjoint cycles on {1..d}, 1-based.
  static Permutation from_cycles(int d, const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int d, int a, int b);
  // A fixed representative of the class lambda: consecutive blocks 1..l1, l1+1.., ...
  static Permutation of_cycle_type(const Partition& lambda);

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  // 0-based image table.
  const std::vector<int>& image() const noexcept { return image_; }
  int cycle_count() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& s, const Permutation& t);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

Partition cycle_type(const Permutation& sigma);

// Centralizer order prod_k k^{m_k} m_k!.
BigInt z_lambda(const Partition& lambda);
// d! / z_lambda.
BigInt class_size(const Partition& lambda);

// chi_lambda(mu) by the Murnaghan-Nakayama rule. Sub-results are memoized in a
// process-wide table that is safe to share between threads.
BigInt mn_character(const Partition& lambda, const Partition& mu);
std::size_t mn_memo_size();

class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  bool unite(int a, int b);
  int components() const noexcept { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  int components_;
};

bool is_transitive(int d, std::span<const Permutation> gens);

}  // namespace dhur
