#pragma once

#include <string>

namespace ptc {

// Coefficient field: the rationals or a prime field F_p.
struct FieldDescriptor {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  int p = 0;

  static FieldDescriptor rationals();
  static FieldDescriptor prime(int p);  // throws unless p is prime
  // Accepts "q" / "Q" or "fp:P" (also "f2", "f3" shorthands).
  static FieldDescriptor parse(const std::string& flag);

  bool is_rational() const { return kind == Kind::Rationals; }
  std::string str() const;  // "Q" or "F2"

  bool operator==(const FieldDescriptor& o) const { return kind == o.kind && p == o.p; }
};

bool is_prime(int n);

}  // namespace ptc
