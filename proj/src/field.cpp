#include "field.hpp"

namespace higgslab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_input: return "BadInput";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::nonsquare: return "NonSquare";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_split: return "NotSplit";
    case Errc::not_split_scalar: return "NotSplitScalar";
    case Errc::rank_error: return "RankError";
    case Errc::degenerate_form: return "DegenerateForm";
    case Errc::determinant_mismatch: return "DeterminantMismatch";
    case Errc::kernel_violation: return "KernelViolation";
    case Errc::isometry_violation: return "IsometryViolation";
    case Errc::parity_error: return "ParityError";
    case Errc::type_mismatch: return "TypeMismatch";
    case Errc::first_class_mismatch: return "FirstClassMismatch";
    case Errc::unsupported: return "Unsupported";
    case Errc::indecomposable: return "Indecomposable";
    case Errc::nonunimodular: return "NonUnimodular";
    case Errc::holomorphy_failure: return "HolomorphyFailure";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

bool errc_is_verification(Errc c) {
  switch (c) {
    case Errc::determinant_mismatch:
    case Errc::kernel_violation:
    case Errc::isometry_violation:
    case Errc::degenerate_form:
    case Errc::nonunimodular:
    case Errc::holomorphy_failure:
      return true;
    default:
      return false;
  }
}

namespace {

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (a * b) % m;  // m < 2^31 keeps the product below 2^62
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mod_mul(r, a, m);
    a = mod_mul(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m) {
  if (a == 0) throw HlError(Errc::division_by_zero, "inverse of zero");
  long long t = 0, nt = 1;
  long long r = (long long)m, nr = (long long)a;
  while (nr != 0) {
    long long qu = r / nr;
    long long tmp = t - qu * nt; t = nt; nt = tmp;
    tmp = r - qu * nr; r = nr; nr = tmp;
  }
  if (r != 1) throw HlError(Errc::internal, "modulus not prime in inverse");
  if (t < 0) t += (long long)m;
  return (std::uint64_t)t;
}

// Tonelli-Shanks with a deterministic non-residue search.
bool mod_sqrt(std::uint64_t a, std::uint64_t p, std::uint64_t& out) {
  if (a == 0) { out = 0; return true; }
  if (mod_pow(a, (p - 1) / 2, p) != 1) return false;
  if (p % 4 == 3) { out = mod_pow(a, (p + 1) / 4, p); return true; }
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  std::uint64_t nr = 2;
  while (mod_pow(nr, (p - 1) / 2, p) != p - 1) ++nr;
  std::uint64_t c = mod_pow(nr, q, p);
  std::uint64_t x = mod_pow(a, (q + 1) / 2, p);
  std::uint64_t t = mod_pow(a, q, p);
  std::uint64_t m = s;
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) { tt = mod_mul(tt, tt, p); ++i; }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mod_mul(b, b, p);
    x = mod_mul(x, b, p);
    c = mod_mul(b, b, p);
    t = mod_mul(t, c, p);
    m = i;
  }
  out = x;
  return true;
}

bool is_perfect_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

}  // namespace

Field Field::prime(std::uint64_t m) {
  if (m < 3 || m >= (1ull << 31) || !is_small_prime(m))
    throw HlError(Errc::bad_input, "field modulus must be an odd prime below 2^31");
  return Field{m};
}

std::string Field::describe() const {
  return is_prime_field() ? "F_" + std::to_string(modulus) : "Q";
}

Scalar::Scalar(Field f, long long n) : fld_(f), v_(0), r_(0) {
  if (f.is_prime_field()) {
    long long m = (long long)f.modulus;
    long long v = n % m;
    if (v < 0) v += m;
    v_ = (std::uint64_t)v;
  } else {
    r_ = n;
  }
}

Scalar Scalar::from_rational(const BigRat& q) {
  Scalar s;
  s.fld_ = Field::rationals();
  s.r_ = q;
  return s;
}

Scalar Scalar::from_residue(Field f, std::uint64_t v) {
  if (!f.is_prime_field())
    throw HlError(Errc::internal, "from_residue needs a prime field");
  Scalar s;
  s.fld_ = f;
  s.v_ = v % f.modulus;
  return s;
}

Scalar Scalar::parse(Field f, const std::string& s) {
  if (s.empty()) throw HlError(Errc::bad_input, "empty scalar literal");
  auto slash = s.find('/');
  try {
    if (f.is_prime_field()) {
      auto part = [&](const std::string& t) {
        bool neg = !t.empty() && t[0] == '-';
        BigInt n(neg ? t.substr(1) : t);
        BigInt m((std::uint64_t)f.modulus);
        BigInt v = n % m;
        if (neg && v != 0) v = m - v;
        return Scalar::from_residue(f, v.convert_to<std::uint64_t>());
      };
      if (slash == std::string::npos) return part(s);
      return part(s.substr(0, slash)) / part(s.substr(slash + 1));
    }
    BigRat q(s);
    return Scalar::from_rational(q);
  } catch (const HlError&) {
    throw;
  } catch (const std::exception&) {
    throw HlError(Errc::bad_input, "bad scalar literal '" + s + "'");
  }
}

void Scalar::check_same(const Scalar& o) const {
  if (!(fld_ == o.fld_))
    throw HlError(Errc::internal, "mixed-field scalar arithmetic");
}

bool Scalar::is_zero() const {
  return fld_.is_prime_field() ? v_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return fld_.is_prime_field() ? v_ == 1 : r_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (fld_.is_prime_field()) {
    s.v_ = v_ + o.v_;
    if (s.v_ >= fld_.modulus) s.v_ -= fld_.modulus;
  } else {
    s.r_ = r_ + o.r_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (fld_.is_prime_field()) {
    s.v_ = v_ + fld_.modulus - o.v_;
    if (s.v_ >= fld_.modulus) s.v_ -= fld_.modulus;
  } else {
    s.r_ = r_ - o.r_;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (fld_.is_prime_field()) s.v_ = mod_mul(v_, o.v_, fld_.modulus);
  else s.r_ = r_ * o.r_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (fld_.is_prime_field()) s.v_ = v_ == 0 ? 0 : fld_.modulus - v_;
  else s.r_ = -r_;
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s = *this;
  if (fld_.is_prime_field()) {
    s.v_ = mod_inv(v_, fld_.modulus);
  } else {
    if (r_ == 0) throw HlError(Errc::division_by_zero, "inverse of zero");
    s.r_ = 1 / r_;
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(fld_ == o.fld_)) return false;
  return fld_.is_prime_field() ? v_ == o.v_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (fld_.is_prime_field()) return std::to_string(v_);
  std::string n = numerator(r_).str();
  if (denominator(r_) == 1) return n;
  return n + "/" + denominator(r_).str();
}

bool Scalar::has_sqrt() const {
  if (fld_.is_prime_field()) {
    std::uint64_t out;
    return mod_sqrt(v_, fld_.modulus, out);
  }
  BigInt rn, rd;
  return is_perfect_square(numerator(r_), rn) &&
         is_perfect_square(denominator(r_), rd);
}

Scalar Scalar::sqrt() const {
  Scalar s = *this;
  if (fld_.is_prime_field()) {
    std::uint64_t out;
    if (!mod_sqrt(v_, fld_.modulus, out))
      throw HlError(Errc::not_split_scalar,
                    "no square root of " + str() + " in " + fld_.describe());
    s.v_ = std::min(out, out == 0 ? out : fld_.modulus - out);
  } else {
    BigInt rn, rd;
    if (!is_perfect_square(numerator(r_), rn) ||
        !is_perfect_square(denominator(r_), rd))
      throw HlError(Errc::not_split_scalar,
                    "no square root of " + str() + " in Q");
    s.r_ = BigRat(rn, rd);
  }
  return s;
}

std::uint64_t Scalar::residue() const {
  if (!fld_.is_prime_field())
    throw HlError(Errc::internal, "residue() on rational scalar");
  return v_;
}

const BigRat& Scalar::rational() const {
  if (fld_.is_prime_field())
    throw HlError(Errc::internal, "rational() on prime-field scalar");
  return r_;
}

bool Scalar::canon_less(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.fld_.is_prime_field()) return a.v_ < b.v_;
  return a.r_ < b.r_;
}

}  // namespace higgslab
