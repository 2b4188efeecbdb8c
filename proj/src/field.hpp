#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace higgslab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Error kinds surfaced through the C API / CLI. "verification" errors mean the
// input data failed a mathematical identity; "input" errors mean the request
// itself was malformed or out of scope.
enum class Errc {
  bad_input,
  shape_mismatch,
  nonsquare,
  zero_polynomial,
  division_by_zero,
  not_split,
  not_split_scalar,
  rank_error,
  degenerate_form,
  determinant_mismatch,
  kernel_violation,
  isometry_violation,
  parity_error,
  type_mismatch,
  first_class_mismatch,
  unsupported,
  indecomposable,
  nonunimodular,
  holomorphy_failure,
  internal,
};

const char* errc_name(Errc c);

// True when the condition describes a mathematical verification failure (CLI
// exit 1) rather than a malformed or unsupported request (CLI exit 2).
bool errc_is_verification(Errc c);

struct HlError : std::runtime_error {
  Errc code;
  HlError(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

// Coefficient field: a prime field F_l (odd prime l < 2^31) or the exact
// rationals (modulus == 0).
struct Field {
  std::uint64_t modulus = 0;

  static Field prime(std::uint64_t m);
  static Field rationals() { return Field{0}; }
  static Field default_prime() { return prime(1000003); }

  bool is_prime_field() const { return modulus != 0; }
  bool operator==(const Field&) const = default;
  std::string describe() const;
};

// Exact field element. Prime-field values are canonical residues in [0, l);
// rational values are reduced fractions.
class Scalar {
 public:
  Scalar() : fld_{0}, v_(0), r_(0) {}
  Scalar(Field f, long long n);
  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  static Scalar from_rational(const BigRat& q);
  static Scalar from_residue(Field f, std::uint64_t v);
  // Parses "123", "-4" or "3/7" in the given field.
  static Scalar parse(Field f, const std::string& s);

  Field field() const { return fld_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical decimal rendering, inverse of parse().
  std::string str() const;

  // Canonical square root if one exists in the field: the residue in
  // [0, l/2] for prime fields, the nonnegative root for rationals.
  bool has_sqrt() const;
  Scalar sqrt() const;  // throws not_split_scalar when absent

  std::uint64_t residue() const;  // prime mode only
  const BigRat& rational() const;  // rational mode only

  // Total order used only for canonical serialization choices.
  static bool canon_less(const Scalar& a, const Scalar& b);

 private:
  Field fld_;
  std::uint64_t v_;
  BigRat r_;
  void check_same(const Scalar& o) const;
};

}  // namespace higgslab
