#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ptc/homology.hpp"

namespace ptc {

// Bumping this invalidates every cache entry.
inline constexpr const char* kCodeVersion = "1.0.0";
inline constexpr const char* kReportSchema = "1";

enum class CheckState { Pass, Fail, Skipped };
std::string check_state_str(CheckState s);

// The machine-readable result of one CLI invocation.
struct RunReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::pair<std::string, CheckState>> checks;
  std::vector<std::string> notes;
  long long elapsed_ms = 0;
  bool cache_hit = false;

  void check(const std::string& name, CheckState s) { checks.emplace_back(name, s); }
  bool all_passed() const;  // no Fail entries (Skipped is not a failure)

  nlohmann::json to_json() const;
  static RunReport from_json(const nlohmann::json& j);
};

nlohmann::json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);
std::string betti_to_csv(const BettiTable& t);

// Degree-by-degree table comparison; fields must agree.
struct CompareResult {
  CheckState state = CheckState::Fail;
  std::string diff;
};
CompareResult compare_tables(const BettiTable& computed, const BettiTable& predicted);

// On-disk Betti cache, one JSON file per (fingerprint, field); entries with
// a stale code version or a damaged payload are ignored, never trusted.
struct BettiCache {
  std::string dir;  // empty: caching disabled

  bool load(const std::string& fingerprint, const FieldDescriptor& field, BettiTable& out) const;
  void store(const BettiTable& t) const;
};

}  // namespace ptc
