#include "dhur/cli.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dhur/chambers.hpp"
#include "dhur/error.hpp"
#include "dhur/piecewise.hpp"
#include "json.hpp"

namespace dhur {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidProfile:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NonzeroSum:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::OnWall:
    case ErrorCode::UnstableCase:
    case ErrorCode::NegativeR:
    case ErrorCode::ParameterRange:
      return kExitInvalid;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::SamplingBudgetExceeded:
      return kExitBudget;
    case ErrorCode::NotPolynomial:
      return kExitNotPolynomial;
    case ErrorCode::AdjacencyNotFound:
      return kExitNoAdjacency;
    default:
      return kExitFailure;
  }
}

std::string cache_key(const RamificationProfile& profile, int g) {
  std::vector<std::int64_t> pos;
  std::vector<std::int64_t> neg;
  for (auto v : profile.x()) (v > 0 ? pos : neg).push_back(v);
  std::sort(pos.begin(), pos.end(), std::greater<>{});
  std::sort(neg.begin(), neg.end());
  std::ostringstream os;
  os << g << ";";
  for (std::size_t i = 0; i < pos.size(); ++i) os << (i ? "," : "") << pos[i];
  os << ";";
  for (std::size_t i = 0; i < neg.size(); ++i) os << (i ? "," : "") << neg[i];
  return os.str();
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A torn final line from an interrupted write is skipped.
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key")) continue;
    CacheRecord rec;
    rec.key = j.at("key").get<std::string>();
    rec.g = j.value("g", 0);
    rec.value = j.value("value", "");
    rec.method = j.value("method", "");
    rec.version = j.value("version", "");
    rec.timestamp = j.value("timestamp", "");
    records_[rec.key] = rec;
  }
}

std::optional<CacheRecord> ResultCache::lookup(const std::string& key) const {
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::append(const CacheRecord& record) {
  std::ofstream out(path_, std::ios::app);
  out << json{{"key", record.key},
              {"g", record.g},
              {"value", record.value},
              {"method", record.method},
              {"version", record.version},
              {"timestamp", record.timestamp}}
             .dump()
      << "\n";
  out.flush();
  records_[record.key] = record;
}

std::string resolve_cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("HURWITZ_CACHE"); env && *env) return env;
  return "hurwitz-cache.jsonl";
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "not an integer: '" + item + "'");
    }
    if (used != item.size()) throw Error(ErrorCode::InvalidArgument, "not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer list");
  return out;
}

namespace {

std::string timestamp_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(std::ostream& out, const json& j, bool compact) { out << (compact ? j.dump() : j.dump(2)) << "\n"; }

int report_error(std::ostream& err, const Error& e) {
  json j{{"error", std::string(error_name(e.code()))}, {"message", e.what()}};
  if (e.code() == ErrorCode::OnWall) j["wall"] = e.indices();
  err << j.dump() << "\n";
  return exit_code_for(e.code());
}

json stats_json(const EnumerationStats& s) {
  return {{"examined", s.examined}, {"accepted", s.accepted}, {"elapsed_seconds", s.elapsed_seconds}};
}

RamificationProfile parse_profile(const std::string& text) { return RamificationProfile(parse_int_list(text)); }

FitOptions fit_options(const CommandOptions& opts) {
  FitOptions fo;
  fo.oversample = opts.oversample;
  if (opts.budget) fo.oracle_budget = *opts.budget;
  return fo;
}

}  // namespace

int cmd_compute(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const RamificationProfile profile = parse_profile(opts.x);
    const int r = simple_branch_count(opts.g, profile.n());
    const std::string key = cache_key(profile, opts.g);
    std::optional<ResultCache> cache;
    if (!opts.no_cache) cache.emplace(resolve_cache_path(opts.cache));

    const auto cached = cache ? cache->lookup(key) : std::nullopt;
    if (cached && !opts.verify) {
      emit(out,
           {{"value", cached->value},
            {"g", opts.g},
            {"r", r},
            {"method", cached->method},
            {"profile", profile.x()},
            {"stats", {{"cached", true}}}},
           opts.compact);
      return kExitOk;
    }

    OracleOptions oracle_options;
    if (opts.budget) oracle_options.budget = *opts.budget;
    json stats;
    ExactRational value;
    std::string method;
    if (opts.method == MethodChoice::Oracle) {
      const auto res = oracle_count(profile, opts.g, oracle_options);
      value = res.value;
      stats = stats_json(res.stats);
      method = "oracle";
    } else if (opts.method == MethodChoice::Frobenius) {
      const auto res = frobenius_connected(profile, opts.g);
      value = res.value;
      stats = stats_json(res.stats);
      method = "frobenius";
    } else {
      const auto fro = frobenius_connected(profile, opts.g);
      const auto ora = oracle_count(profile, opts.g, oracle_options);
      if (fro.value != ora.value) {
        err << json{{"error", "EVALUATOR_MISMATCH"},
                    {"frobenius", to_string(fro.value)},
                    {"oracle", to_string(ora.value)}}
                   .dump()
            << "\n";
        return kExitFailure;
      }
      value = fro.value;
      stats = {{"frobenius", stats_json(fro.stats)}, {"oracle", stats_json(ora.stats)}};
      method = "both";
    }
    stats["cached"] = false;

    if (cached && cached->value != to_string(value)) {
      throw Error(ErrorCode::CacheMismatch,
                  "cache holds " + cached->value + " for " + key + " but recomputation gives " + to_string(value));
    }
    if (cache && !cached) {
      cache->append({key, opts.g, to_string(value), method, kVersion, timestamp_now()});
    }
    json j{{"value", to_string(value)}, {"g", opts.g}, {"r", r}, {"method", method}, {"profile", profile.x()}};
    if (cached) j["verified"] = true;
    j["stats"] = stats;
    emit(out, j, opts.compact);
    return kExitOk;
  } catch (const Error& e) {
    return report_error(err, e);
  }
}

int cmd_fit(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const ChamberWitness witness(parse_profile(opts.x));
    const auto fitted = fit_chamber(witness, opts.g, fit_options(opts));
    emit(out, to_json(fitted), opts.compact);
    return kExitOk;
  } catch (const Error& e) {
    return report_error(err, e);
  }
}

int cmd_wallcross(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const ChamberWitness witness(parse_profile(opts.x));
    std::vector<int> indices;
    for (auto v : parse_int_list(opts.wall)) indices.push_back(static_cast<int>(v));
    const Wall wall(witness.ambient(), indices);
    json result;
    if (wall.complemented()) {
      std::ostringstream os;
      os << "wall " << opts.wall << " normalized to its complement " << wall.to_string();
      err << json{{"notice", os.str()}}.dump() << "\n";
      result["notice"] = os.str();
    }
    const ChamberWitness adjacent = adjacent_chamber(witness, wall);
    const FitOptions fo = fit_options(opts);
    const auto c1 = fit_chamber(witness, opts.g, fo);
    const auto c2 = fit_chamber(adjacent, opts.g, fo);
    const auto wc = wall_crossing(c1, c2, wall);
    result["wall"] = wall.indices();
    result["witness"] = witness.point().x();
    result["adjacent_witness"] = adjacent.point().x();
    result["chamber_from"] = to_json(c1);
    result["chamber_to"] = to_json(c2);
    result["wall_crossing"] = to_json(wc);
    result["wall_crossing"]["divisible_by_wall_form"] = divide_exact(wc.polynomial, wall.form()).has_value();

    if (opts.g == 0) {
      const auto terms = product_formula_terms(wall, adjacent.point());
      const ExactRational target = poly_eval(wc.polynomial, adjacent.point().x());
      json pf = to_json(terms);
      pf["point"] = adjacent.point().x();
      pf["wc_value"] = to_string(target);
      json candidates = json::array();
      json matching = json::array();
      for (const auto& conv : product_conventions()) {
        const ExactRational v = product_formula_value(terms, conv);
        candidates.push_back({{"convention", conv.name()}, {"value", to_string(v)}, {"matches", v == target}});
        if (v == target) matching.push_back(conv.name());
      }
      pf["candidates"] = candidates;
      pf["matching"] = matching;
      pf["recorded_convention"] = kRecordedConvention.name();
      result["product_formula"] = pf;
    }
    emit(out, result, opts.compact);
    return kExitOk;
  } catch (const Error& e) {
    return report_error(err, e);
  }
}

int cmd_selftest(const SelftestOptions& options, bool compact, std::ostream& out, std::ostream& err) {
  const auto checks = run_selftest(options);
  json list = json::array();
  bool all = true;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
    all = all && c.passed;
  }
  const json report{{"passed", all}, {"r_max", options.r_max}, {"checks", list}};
  if (all) {
    emit(out, report, compact);
    return kExitOk;
  }
  err << report.dump() << "\n";
  return kExitFailure;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact double Hurwitz numbers, chamber polynomials and wall crossings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommandOptions opts;
  std::string method = "frobenius";
  std::uint64_t budget = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-g", opts.g, "genus")->check(CLI::NonNegativeNumber);
    sub->add_option("-x", opts.x, "comma separated profile, e.g. 7,1,-2,-3,-3")->required();
    sub->add_option("--budget", budget, "oracle leaf budget");
    sub->add_flag("--json", opts.compact, "single-line JSON output");
  };

  auto* compute = app.add_subcommand("compute", "evaluate H_g(x)");
  add_common(compute);
  compute->add_option("--method", method, "oracle|frobenius|both")
      ->check(CLI::IsMember({"oracle", "frobenius", "both"}));
  compute->add_option("--cache", opts.cache, "cache file (JSON lines)");
  compute->add_flag("--no-cache", opts.no_cache, "neither read nor write the cache");
  compute->add_flag("--verify", opts.verify, "recompute and compare against the cache");

  auto* fit = app.add_subcommand("fit", "fit the chamber polynomial around a witness");
  add_common(fit);
  fit->add_option("--oversample", opts.oversample, "extra nodes and held-out points")->check(CLI::PositiveNumber);

  auto* wallcross = app.add_subcommand("wallcross", "wall-crossing polynomial and product-formula report");
  add_common(wallcross);
  wallcross->add_option("--wall", opts.wall, "wall index list, either representative")->required();
  wallcross->add_option("--oversample", opts.oversample, "extra nodes and held-out points")->check(CLI::PositiveNumber);

  SelftestOptions st;
  bool st_compact = false;
  auto* selftest = app.add_subcommand("selftest", "run the built-in verification suite");
  selftest->add_option("--r-max", st.r_max, "largest r for the identity checks")->check(CLI::Range(2, 200));
  selftest->add_flag("--json", st_compact, "single-line JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitInvalid;
  }
  if (budget > 0) opts.budget = budget;
  opts.method = method == "oracle" ? MethodChoice::Oracle : method == "both" ? MethodChoice::Both : MethodChoice::Frobenius;

  if (compute->parsed()) return cmd_compute(opts, out, err);
  if (fit->parsed()) return cmd_fit(opts, out, err);
  if (wallcross->parsed()) return cmd_wallcross(opts, out, err);
  return cmd_selftest(st, st_compact, out, err);
}

}  // namespace dhur
