#include "ptc/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptc {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor FieldDescriptor::rationals() { return FieldDescriptor{}; }

FieldDescriptor FieldDescriptor::prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  FieldDescriptor f;
  f.kind = Kind::Prime;
  f.p = p;
  return f;
}

FieldDescriptor FieldDescriptor::parse(const std::string& flag) {
  std::string s = flag;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "q" || s == "rational" || s == "rationals") return rationals();
  if (s.rfind("fp:", 0) == 0) return prime(std::stoi(s.substr(3)));
  if (s.size() >= 2 && s[0] == 'f') return prime(std::stoi(s.substr(1)));
  throw std::invalid_argument("bad field flag: " + flag + " (use q or fp:P)");
}

std::string FieldDescriptor::str() const {
  return is_rational() ? "Q" : "F" + std::to_string(p);
}

}  // namespace ptc
