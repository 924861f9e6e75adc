#include "ptc/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace ptc {

std::string check_state_str(CheckState s) {
  switch (s) {
    case CheckState::Pass: return "pass";
    case CheckState::Fail: return "fail";
    case CheckState::Skipped: return "skipped";
  }
  return "?";
}

bool RunReport::all_passed() const {
  for (const auto& [name, s] : checks)
    if (s == CheckState::Fail) return false;
  return true;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["version"] = kCodeVersion;
  j["command"] = command;
  j["parameters"] = parameters;
  j["payload"] = payload;
  nlohmann::json cs = nlohmann::json::object();
  for (const auto& [name, s] : checks) cs[name] = check_state_str(s);
  j["checks"] = cs;
  j["notes"] = notes;
  j["elapsed_ms"] = elapsed_ms;
  j["cache_hit"] = cache_hit;
  return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  r.payload = j.at("payload");
  for (const auto& [name, v] : j.at("checks").items()) {
    std::string s = v.get<std::string>();
    CheckState st = s == "pass" ? CheckState::Pass
                                : (s == "fail" ? CheckState::Fail : CheckState::Skipped);
    r.checks.emplace_back(name, st);
  }
  for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
  r.elapsed_ms = j.at("elapsed_ms").get<long long>();
  r.cache_hit = j.at("cache_hit").get<bool>();
  return r;
}

nlohmann::json betti_to_json(const BettiTable& t) {
  nlohmann::json j;
  j["field"] = t.field.str();
  j["fingerprint"] = t.fingerprint;
  nlohmann::json b = nlohmann::json::object();
  for (const auto& [deg, r] : t.betti) b[std::to_string(deg)] = r;
  j["betti"] = b;
  return j;
}

BettiTable betti_from_json(const nlohmann::json& j) {
  BettiTable t;
  t.field = FieldDescriptor::parse(j.at("field").get<std::string>());
  t.fingerprint = j.at("fingerprint").get<std::string>();
  for (const auto& [deg, r] : j.at("betti").items())
    t.betti[std::stoi(deg)] = r.get<long long>();
  return t;
}

std::string betti_to_csv(const BettiTable& t) {
  std::ostringstream os;
  os << "degree,rank\n";
  for (const auto& [deg, r] : t.betti) os << deg << "," << r << "\n";
  return os.str();
}

CompareResult compare_tables(const BettiTable& computed, const BettiTable& predicted) {
  CompareResult res;
  if (!(computed.field == predicted.field))
    throw std::invalid_argument("compared tables use different fields");
  if (computed.betti == predicted.betti) {
    res.state = CheckState::Pass;
    return res;
  }
  res.state = CheckState::Fail;
  std::ostringstream os;
  std::map<int, long long> all;
  for (const auto& [d, r] : computed.betti) all[d] = 0;
  for (const auto& [d, r] : predicted.betti) all[d] = 0;
  for (const auto& [d, unused] : all) {
    auto ci = computed.betti.find(d), pi = predicted.betti.find(d);
    long long c = ci == computed.betti.end() ? 0 : ci->second;
    long long p = pi == predicted.betti.end() ? 0 : pi->second;
    if (c != p) os << "degree " << d << ": computed " << c << " vs predicted " << p << "; ";
  }
  res.diff = os.str();
  return res;
}

namespace {

std::string cache_file(const std::string& dir, const std::string& fingerprint,
                       const FieldDescriptor& field) {
  // filename-safe hash of the key; the key itself is stored in the entry
  std::hash<std::string> h;
  std::string key = fingerprint + "|" + field.str() + "|" + kCodeVersion;
  std::ostringstream os;
  os << dir << "/" << std::hex << h(key) << "_" << h(key + "#2") << ".json";
  return os.str();
}

}  // namespace

bool BettiCache::load(const std::string& fingerprint, const FieldDescriptor& field,
                      BettiTable& out) const {
  if (dir.empty()) return false;
  std::ifstream in(cache_file(dir, fingerprint, field));
  if (!in) return false;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<std::string>() != kCodeVersion) return false;
    BettiTable t = betti_from_json(j.at("table"));
    if (t.fingerprint != fingerprint || !(t.field == field)) return false;
    out = std::move(t);
    return true;
  } catch (const std::exception&) {
    return false;  // damaged entry: recompute
  }
}

void BettiCache::store(const BettiTable& t) const {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  nlohmann::json j;
  j["version"] = kCodeVersion;
  j["table"] = betti_to_json(t);
  std::ofstream out(cache_file(dir, t.fingerprint, t.field));
  out << j.dump(2) << "\n";
}

}  // namespace ptc
