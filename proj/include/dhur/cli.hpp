#pragma once

// Command-line front end: compute, fit, wallcross and selftest, plus the JSON-lines
// result cache. Commands write JSON to `out`, structured errors to `err`, and return
// the process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dhur/error.hpp"
#include "dhur/hurwitz.hpp"

namespace dhur {

inline constexpr const char* kVersion = "1.0.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitNotPolynomial = 4;
inline constexpr int kExitNoAdjacency = 5;

int exit_code_for(ErrorCode code);

struct CacheRecord {
  std::string key;
  int g = 0;
  std::string value;
  std::string method;
  std::string version;
  std::string timestamp;
};

// "g;positive parts descending;negative parts ascending", e.g. "0;7,1;-3,-3,-2".
std::string cache_key(const RamificationProfile& profile, int g);

// Append-only JSON-lines file; the last record for a key wins.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  const std::string& path() const noexcept { return path_; }
  std::optional<CacheRecord> lookup(const std::string& key) const;
  void append(const CacheRecord& record);

 private:
  std::string path_;
  std::unordered_map<std::string, CacheRecord> records_;
};

// --cache, else $HURWITZ_CACHE, else ./hurwitz-cache.jsonl.
std::string resolve_cache_path(const std::string& flag);

enum class MethodChoice { Oracle, Frobenius, Both };

struct CommandOptions {
  int g = 0;
  std::string x;
  MethodChoice method = MethodChoice::Frobenius;
  std::string wall;
  std::size_t oversample = 5;
  std::optional<std::uint64_t> budget;
  std::string cache;
  bool no_cache = false;
  bool verify = false;
  int r_max = 30;
  bool compact = false;
};

int cmd_compute(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_fit(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_wallcross(const CommandOptions& opts, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  int r_max = 30;
  // Harness hook: run every check under a deliberately wrong normalization.
  Normalization normalization = Normalization::Labeled;
};

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<SelftestCheck> run_selftest(const SelftestOptions& options);
int cmd_selftest(const SelftestOptions& options, bool compact, std::ostream& out, std::ostream& err);

// Parses "7,1,-2,-3,-3".
std::vector<std::int64_t> parse_int_list(const std::string& text);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dhur
