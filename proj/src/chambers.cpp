#include "dhur/chambers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "dhur/error.hpp"

namespace dhur {

namespace {

constexpr int kMaxAmbient = 25;

void check_ambient(int n) {
  if (n < 2 || n > kMaxAmbient) {
    throw Error(ErrorCode::InvalidArgument, "walls need 2 <= n <= " + std::to_string(kMaxAmbient));
  }
}

// Subset sums over the canonical masks; sums[mask] for mask in [0, 2^{n-1}).
std::vector<std::int64_t> subset_sums(std::span<const std::int64_t> x) {
  const std::size_t free = x.size() - 1;
  std::vector<std::int64_t> sums(std::size_t{1} << free, 0);
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    sums[mask] = sums[mask & (mask - 1)] + x[low + 1];
  }
  return sums;
}

std::vector<int> indices_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int b = 0; b < 32; ++b) {
    if (mask >> b & 1U) out.push_back(b + 2);
  }
  return out;
}

}  // namespace

Wall::Wall(int ambient, std::vector<int> indices) : ambient_(ambient) {
  check_ambient(ambient);
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int i : indices) {
    if (i < 1 || i > ambient) throw Error(ErrorCode::InvalidArgument, "wall index out of range");
  }
  if (indices.empty() || static_cast<int>(indices.size()) == ambient) {
    throw Error(ErrorCode::InvalidArgument, "a wall needs a nonempty proper subset");
  }
  if (indices.front() == 1) {
    std::vector<int> complement;
    for (int i = 2; i <= ambient; ++i) {
      if (!std::binary_search(indices.begin(), indices.end(), i)) complement.push_back(i);
    }
    indices = std::move(complement);
    complemented_ = true;
  }
  indices_ = std::move(indices);
  for (int i : indices_) mask_ |= std::uint32_t{1} << (i - 2);
}

std::int64_t Wall::evaluate(std::span<const std::int64_t> x) const {
  if (static_cast<int>(x.size()) != ambient_) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  std::int64_t s = 0;
  for (int i : indices_) s += x[static_cast<std::size_t>(i - 1)];
  return s;
}

MultiPoly Wall::form() const { return MultiPoly::linear_sum(ambient_, indices_); }

std::string Wall::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < indices_.size(); ++i) os << (i ? "," : "") << indices_[i];
  os << "]";
  return os.str();
}

std::vector<Wall> walls(int n) {
  check_ambient(n);
  std::vector<Wall> out;
  const std::uint32_t count = std::uint32_t{1} << (n - 1);
  out.reserve(count - 1);
  for (std::uint32_t mask = 1; mask < count; ++mask) out.emplace_back(n, indices_of(mask));
  return out;
}

ChamberSignature::ChamberSignature(int ambient, std::vector<bool> positive)
    : ambient_(ambient), positive_(std::move(positive)) {
  check_ambient(ambient);
  if (positive_.size() != (std::size_t{1} << (ambient - 1)) - 1) {
    throw Error(ErrorCode::DimensionMismatch, "signature needs one sign per canonical wall");
  }
}

std::vector<Wall> ChamberSignature::differing_walls(const ChamberSignature& other) const {
  if (ambient_ != other.ambient_) throw Error(ErrorCode::DimensionMismatch, "signatures of different n");
  std::vector<Wall> out;
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (positive_[k] != other.positive_[k]) out.emplace_back(ambient_, indices_of(static_cast<std::uint32_t>(k + 1)));
  }
  return out;
}

ChamberSignature ChamberSignature::flipped(const Wall& wall) const {
  if (wall.ambient() != ambient_) throw Error(ErrorCode::DimensionMismatch, "wall of different n");
  auto signs = positive_;
  signs[wall.mask() - 1] = !signs[wall.mask() - 1];
  return ChamberSignature(ambient_, std::move(signs));
}

std::string ChamberSignature::to_string() const {
  std::string s;
  s.reserve(positive_.size());
  for (bool p : positive_) s.push_back(p ? '+' : '-');
  return s;
}

std::optional<Wall> first_vanishing_wall(std::span<const std::int64_t> x) {
  check_ambient(static_cast<int>(x.size()));
  const auto sums = subset_sums(x);
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    if (sums[mask] == 0) return Wall(static_cast<int>(x.size()), indices_of(static_cast<std::uint32_t>(mask)));
  }
  return std::nullopt;
}

ChamberSignature signature(std::span<const std::int64_t> x) {
  check_ambient(static_cast<int>(x.size()));
  if (std::accumulate(x.begin(), x.end(), std::int64_t{0}) != 0) {
    throw Error(ErrorCode::NonzeroSum, "point does not lie on the zero-sum hyperplane");
  }
  const auto sums = subset_sums(x);
  std::vector<bool> positive(sums.size() - 1);
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    if (sums[mask] == 0) {
      const Wall w(static_cast<int>(x.size()), indices_of(static_cast<std::uint32_t>(mask)));
      throw Error(ErrorCode::OnWall, "point lies on wall " + w.to_string(), w.indices());
    }
    positive[mask - 1] = sums[mask] > 0;
  }
  return ChamberSignature(static_cast<int>(x.size()), std::move(positive));
}

ChamberSignature signature(const RamificationProfile& x) { return signature(std::span<const std::int64_t>(x.x())); }

ChamberWitness::ChamberWitness(RamificationProfile point)
    : point_(std::move(point)), signature_(dhur::signature(point_)) {}

namespace {

// Off-wall points with the target signature; returns false for anything else.
bool in_chamber(const Point& p, const ChamberSignature& target) {
  if (std::any_of(p.begin(), p.end(), [](std::int64_t v) { return v == 0; })) return false;
  const auto sums = subset_sums(p);
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    if (sums[mask] == 0 || (sums[mask] > 0) != target.positive()[mask - 1]) return false;
  }
  return true;
}

std::vector<Point> unit_moves(std::size_t n) {
  std::vector<Point> moves;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (i == l) continue;
      Point v(n, 0);
      v[i] = 1;
      v[l] = -1;
      moves.push_back(std::move(v));
    }
  }
  return moves;
}

}  // namespace

std::vector<RamificationProfile> sample_chamber(const ChamberWitness& witness, std::size_t count,
                                                std::uint64_t budget) {
  const Point& x = witness.point().x();
  const std::size_t n = x.size();
  const auto moves = unit_moves(n);
  std::vector<RamificationProfile> out;
  std::set<Point> seen;
  std::uint64_t spent = 0;

  auto offer = [&](const Point& candidate) {
    ++spent;
    if (!seen.insert(candidate).second) return;
    if (in_chamber(candidate, witness.signature())) out.emplace_back(candidate);
  };

  for (std::int64_t k = 1; out.size() < count && spent < budget; ++k) {
    Point base(n);
    for (std::size_t i = 0; i < n; ++i) base[i] = k * x[i];
    offer(base);
    for (std::int64_t c = 1; c <= k && out.size() < count && spent < budget; ++c) {
      for (const auto& v : moves) {
        if (out.size() >= count || spent >= budget) break;
        Point p = base;
        for (std::size_t i = 0; i < n; ++i) p[i] += c * v[i];
        offer(p);
      }
    }
    for (std::size_t a = 0; a < moves.size() && out.size() < count && spent < budget; ++a) {
      for (std::size_t b = a + 1; b < moves.size() && out.size() < count && spent < budget; ++b) {
        Point p = base;
        for (std::size_t i = 0; i < n; ++i) p[i] += moves[a][i] + moves[b][i];
        offer(p);
      }
    }
  }
  if (out.size() < count) {
    throw Error(ErrorCode::SamplingBudgetExceeded,
                "found " + std::to_string(out.size()) + " of " + std::to_string(count) +
                    " chamber points within " + std::to_string(budget) + " candidates");
  }
  return out;
}

ChamberWitness adjacent_chamber(const ChamberWitness& witness, const Wall& wall, std::uint64_t budget) {
  const Point& x = witness.point().x();
  const std::size_t n = x.size();
  if (wall.ambient() != static_cast<int>(n)) throw Error(ErrorCode::DimensionMismatch, "wall of different n");
  const ChamberSignature target = witness.signature().flipped(wall);
  const auto sums = subset_sums(x);
  const std::size_t wall_mask = wall.mask();

  std::vector<Point> directions = unit_moves(n);
  const std::size_t singles = directions.size();
  for (std::size_t a = 0; a < singles; ++a) {
    for (std::size_t b = a + 1; b < singles; ++b) {
      Point v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = directions[a][i] + directions[b][i];
      if (std::any_of(v.begin(), v.end(), [](std::int64_t c) { return c != 0; })) directions.push_back(std::move(v));
    }
  }

  std::uint64_t spent = 0;
  for (const auto& v : directions) {
    if (spent++ >= budget) break;
    const auto rates = subset_sums(v);
    // Along x + t v the wall sum is sums + t * rates; it vanishes at t = -sums / rates.
    if (rates[wall_mask] == 0) continue;
    const ExactRational cross = make_rational(-sums[wall_mask], rates[wall_mask]);
    if (cross <= 0) continue;
    bool first = true;
    std::optional<ExactRational> next;
    for (std::size_t mask = 1; mask < sums.size() && first; ++mask) {
      if (mask == wall_mask || rates[mask] == 0) continue;
      const ExactRational t = make_rational(-sums[mask], rates[mask]);
      if (t <= 0) continue;
      if (t <= cross) first = false;
      else if (!next || t < *next) next = t;
    }
    if (!first) continue;
    ExactRational gap = next ? ExactRational((*next - cross) / 2) : ExactRational(1);
    if (gap > 1) gap = 1;
    ExactRational t = cross + gap;
    t.canonicalize();
    // x + t v scaled by den(t), then divided by the content.
    const std::int64_t den = t.get_den().get_si();
    const std::int64_t num = t.get_num().get_si();
    Point p(n);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = den * x[i] + num * v[i];
      g = std::gcd(g, p[i]);
    }
    if (g > 1) {
      for (auto& c : p) c /= g;
    }
    if (in_chamber(p, target)) return ChamberWitness(RamificationProfile(p));
  }
  throw Error(ErrorCode::AdjacencyNotFound,
              "no point across wall " + wall.to_string() + " found from " + witness.point().to_string());
}

}  // namespace dhur
