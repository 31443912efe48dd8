#pragma once

// The resonance arrangement on the zero-sum lattice: walls W_I = {sum_{i in I} x_i = 0},
// sign vectors identifying chambers, lattice sampling inside a chamber and a search
// for the neighbouring chamber across one wall.
//
// Since sum_I x = -sum_{I^c} x on the zero-sum hyperplane, a wall is stored by the
// representative of {I, I^c} that does not contain index 1. Canonical walls are
// ordered by the bitmask with bit (i-2) set for index i, so n = 3 gives [2],[3],[2,3].

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dhur/exact.hpp"
#include "dhur/hurwitz.hpp"

namespace dhur {

class Wall {
 public:
  // Accepts either representative; a set containing 1 is replaced by its complement.
  Wall(int ambient, std::vector<int> indices);

  int ambient() const noexcept { return ambient_; }
  // Sorted 1-based indices, never containing 1.
  const std::vector<int>& indices() const noexcept { return indices_; }
  std::uint32_t mask() const noexcept { return mask_; }
  // True when the constructor replaced the input by its complement.
  bool complemented() const noexcept { return complemented_; }

  std::int64_t evaluate(std::span<const std::int64_t> x) const;
  MultiPoly form() const;
  std::string to_string() const;

  friend bool operator==(const Wall& a, const Wall& b) {
    return a.ambient_ == b.ambient_ && a.mask_ == b.mask_;
  }

 private:
  int ambient_;
  std::vector<int> indices_;
  std::uint32_t mask_ = 0;
  bool complemented_ = false;
};

std::vector<Wall> walls(int n);

class ChamberSignature {
 public:
  ChamberSignature(int ambient, std::vector<bool> positive);

  int ambient() const noexcept { return ambient_; }
  // One entry per wall of walls(n), in that order.
  const std::vector<bool>& positive() const noexcept { return positive_; }
  std::vector<Wall> differing_walls(const ChamberSignature& other) const;
  ChamberSignature flipped(const Wall& wall) const;
  std::string to_string() const;

  friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;

 private:
  int ambient_;
  std::vector<bool> positive_;
};

// First canonical wall through x, if any.
std::optional<Wall> first_vanishing_wall(std::span<const std::int64_t> x);

// Throws OnWall (with the wall's indices) when some subset sum vanishes.
ChamberSignature signature(std::span<const std::int64_t> x);
ChamberSignature signature(const RamificationProfile& x);

class ChamberWitness {
 public:
  explicit ChamberWitness(RamificationProfile point);

  const RamificationProfile& point() const noexcept { return point_; }
  const ChamberSignature& signature() const noexcept { return signature_; }
  int ambient() const noexcept { return point_.n(); }

 private:
  RamificationProfile point_;
  ChamberSignature signature_;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 200'000;

// The first `count` points of a fixed candidate sequence that share the witness's
// signature: scalings k*x, then k*x + c*(e_i - e_l) for 1 <= c <= k, then
// k*x + (e_i - e_l) + (e_j - e_m). The sequence is prefix-stable in `count`.
std::vector<RamificationProfile> sample_chamber(const ChamberWitness& witness, std::size_t count,
                                                std::uint64_t budget = kDefaultSearchBudget);

// A witness whose signature differs from the input exactly at `wall`. Walks from the
// witness along lattice directions (e_a - e_b and sums of two such) and stops just past
// the crossing with `wall` when that crossing comes strictly before every other one.
ChamberWitness adjacent_chamber(const ChamberWitness& witness, const Wall& wall,
                                std::uint64_t budget = kDefaultSearchBudget);

}  // namespace dhur
