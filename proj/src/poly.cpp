#include "poly.hpp"

#include <algorithm>

#include "bareiss.hpp"

namespace higgslab {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : fld_(f), c_(std::move(coeffs)) {
  for (const auto& s : c_)
    if (!(s.field() == f)) throw HlError(Errc::internal, "coefficient field mismatch");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) {
  Poly p(c.field());
  if (!c.is_zero()) p.c_ = {c};
  return p;
}

Poly Poly::X(Field f) {
  Poly p(f);
  p.c_ = {Scalar::zero(f), Scalar::one(f)};
  return p;
}

Poly Poly::from_ints(Field f, std::initializer_list<long long> cs) {
  Poly p(f);
  for (long long v : cs) p.c_.push_back(Scalar(f, v));
  p.trim();
  return p;
}

Poly Poly::linear_root(const Scalar& r) {
  Poly p(r.field());
  p.c_ = {-r, Scalar::one(r.field())};
  return p;
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= (int)c_.size()) return Scalar::zero(fld_);
  return c_[i];
}

const Scalar& Poly::lc() const {
  if (c_.empty()) throw HlError(Errc::zero_polynomial, "leading coefficient of zero");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(fld_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar::zero(fld_));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff((int)i) + o.coeff((int)i);
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(fld_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(fld_));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  r.trim();
  return r;
}

Poly Poly::operator*(const Scalar& s) const {
  Poly r = *this;
  for (auto& x : r.c_) x = x * s;
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw HlError(Errc::division_by_zero, "polynomial division by zero");
  Poly q(fld_), r = *this;
  if (r.deg() < d.deg()) return {q, r};
  q.c_.assign(r.deg() - d.deg() + 1, Scalar::zero(fld_));
  Scalar inv = d.lc().inverse();
  for (int k = r.deg() - d.deg(); k >= 0; --k) {
    Scalar t = r.coeff(k + d.deg()) * inv;
    if (t.is_zero()) continue;
    q.c_[k] = t;
    for (int j = 0; j <= d.deg(); ++j)
      r.c_[k + j] = r.c_[k + j] - t * d.coeff(j);
  }
  q.trim();
  r.trim();
  return {q, r};
}

Poly Poly::exact_div(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw HlError(Errc::internal, "inexact polynomial division");
  return q;
}

bool Poly::divisible_by(const Poly& d) const {
  if (d.is_zero()) return is_zero();
  return divmod(d).second.is_zero();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inverse();
}

Poly Poly::derivative() const {
  Poly r(fld_);
  if (deg() < 1) return r;
  r.c_.resize(c_.size() - 1, Scalar::zero(fld_));
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Scalar(fld_, (long long)i);
  r.trim();
  return r;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(fld_);
  for (int i = deg(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::shift_up(int k) const {
  if (is_zero()) return *this;
  Poly r(fld_);
  r.c_.assign(c_.size() + k, Scalar::zero(fld_));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = c_[i].str();
    if (i == 0) { out += coeff; continue; }
    std::string mono = i == 1 ? var : var + "^" + std::to_string(i);
    out += coeff == "1" ? mono : coeff + "*" + mono;
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r.monic();
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
  return (a * b).exact_div(gcd(a, b)).monic();
}

bool poly_squarefree(const Poly& f) {
  if (f.is_zero()) throw HlError(Errc::zero_polynomial, "squarefree test of zero");
  if (f.is_constant()) return true;
  return gcd(f, f.derivative()).is_unit();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::one(base.field()) % m;
  Poly b = base % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

namespace {

// deterministic factor search for rational root candidates
void factor_int(BigInt n, std::vector<BigInt>& primes);

bool miller_rabin(const BigInt& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  BigInt d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) { d /= 2; ++s; }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool ok = false;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) { ok = true; break; }
    }
    if (!ok) return false;
  }
  return true;
}

BigInt rho_brent(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (BigInt c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    BigInt saved_y = y;
    int power = 1, lam = 0;
    auto step = [&](BigInt v) { return (v * v + c) % n; };
    while (d == 1) {
      if (lam == power) { x = y; power *= 2; lam = 0; saved_y = y; }
      y = step(y);
      ++lam;
      BigInt diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d = boost::multiprecision::gcd(diff, n);
    }
    (void)saved_y;
    if (d != 1 && d != n) return d;
  }
}

void factor_int(BigInt n, std::vector<BigInt>& primes) {
  if (n < 0) n = -n;
  for (BigInt p = 2; p < 65536 && p * p <= n; p = (p == 2 ? BigInt(3) : BigInt(p + 2)))
    while (n % p == 0) { primes.push_back(p); n /= p; }
  if (n == 1) return;
  if (miller_rabin(n)) { primes.push_back(n); return; }
  BigInt d = rho_brent(n);
  factor_int(d, primes);
  factor_int(n / d, primes);
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> primes;
  factor_int(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<BigInt> divs = {1};
  size_t i = 0;
  while (i < primes.size()) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    size_t count = divs.size();
    BigInt pk = 1;
    for (size_t e = i; e < j; ++e) {
      pk *= primes[i];
      for (size_t k = 0; k < count; ++k) divs.push_back(divs[k] * pk);
    }
    i = j;
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

std::vector<Scalar> rational_roots(const Poly& f) {
  // integer-primitive representative of f
  BigInt den_lcm = 1;
  for (int i = 0; i <= f.deg(); ++i)
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(f.coeff(i).rational()));
  std::vector<BigInt> ic(f.deg() + 1);
  BigInt content = 0;
  for (int i = 0; i <= f.deg(); ++i) {
    BigRat v = f.coeff(i).rational() * BigRat(den_lcm);
    ic[i] = numerator(v);
    content = boost::multiprecision::gcd(content, ic[i]);
  }
  if (content > 1)
    for (auto& v : ic) v /= content;
  int low = 0;
  while (ic[low] == 0) ++low;  // factor out z^low; roots at 0 handled below
  std::vector<Scalar> roots;
  Poly rem = f;
  if (low > 0) {
    roots.push_back(Scalar::zero(f.field()));
    for (int k = 0; k < low; ++k) rem = rem.exact_div(Poly::X(f.field()));
  }
  auto nums = divisors(ic.back() == 0 ? BigInt(1) : ic[low]);
  auto dens = divisors(ic[f.deg()]);
  for (const auto& nu : nums)
    for (const auto& de : dens)
      for (int sign : {1, -1}) {
        Scalar cand = Scalar::from_rational(BigRat(sign * nu, de));
        while (!rem.is_constant() && rem.eval(cand).is_zero()) {
          roots.push_back(cand);
          rem = rem.exact_div(Poly::linear_root(cand));
        }
      }
  if (!rem.is_constant())
    throw HlError(Errc::not_split, "polynomial does not split over Q: " + f.str());
  std::sort(roots.begin(), roots.end(), Scalar::canon_less);
  return roots;
}

// deterministic equal-degree splitting of a squarefree product of monic
// linear factors over a prime field
void split_linear(const Poly& g, std::vector<Scalar>& out) {
  Field f = g.field();
  if (g.deg() <= 0) return;
  if (g.deg() == 1) {
    out.push_back(-g.coeff(0));
    return;
  }
  std::uint64_t l = f.modulus;
  for (std::uint64_t r = 0; r < l; ++r) {
    Poly shifted = Poly::from_ints(f, {(long long)r, 1});
    Poly h = pow_mod(shifted, (l - 1) / 2, g) - Poly::one(f);
    Poly d = gcd(g, h);
    if (d.deg() > 0 && d.deg() < g.deg()) {
      split_linear(d, out);
      split_linear(g.exact_div(d), out);
      return;
    }
  }
  throw HlError(Errc::internal, "root splitting failed");
}

}  // namespace

std::vector<Scalar> field_roots(const Poly& f) {
  if (f.is_zero()) throw HlError(Errc::zero_polynomial, "roots of the zero polynomial");
  if (f.is_constant()) return {};
  if (!f.field().is_prime_field()) return rational_roots(f);
  Poly m = f.monic();
  Poly frob = pow_mod(Poly::X(f.field()), f.field().modulus, m) - (Poly::X(f.field()) % m);
  Poly lin = gcd(m, frob);
  if (lin.deg() != m.deg())
    throw HlError(Errc::not_split,
                  "polynomial does not split with simple roots over " +
                      f.field().describe() + ": " + f.str());
  std::vector<Scalar> roots;
  split_linear(lin, roots);
  std::sort(roots.begin(), roots.end(), Scalar::canon_less);
  return roots;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw HlError(Errc::division_by_zero, "zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_unit()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  Scalar inv = den_.lc().inverse();
  num_ = num_ * inv;
  den_ = den_ * inv;
}

Poly RatFunc::as_poly() const {
  if (!is_polynomial())
    throw HlError(Errc::holomorphy_failure, "rational function has poles: " + str());
  return num_;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw HlError(Errc::division_by_zero, "inverse of zero");
  return RatFunc(den_, num_);
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

BiPoly::BiPoly(Field f, std::vector<Poly> coeffs) : fld_(f), c_(std::move(coeffs)) {
  trim();
}

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::of_poly(const Poly& p) {
  BiPoly b(p.field());
  if (!p.is_zero()) b.c_ = {p};
  return b;
}

BiPoly BiPoly::aux(Field f) {
  BiPoly b(f);
  b.c_ = {Poly::zero(f), Poly::one(f)};
  return b;
}

Poly BiPoly::coeff(int i) const {
  if (i < 0 || i >= (int)c_.size()) return Poly::zero(fld_);
  return c_[i];
}

const Poly& BiPoly::lc() const {
  if (c_.empty()) throw HlError(Errc::zero_polynomial, "leading coefficient of zero");
  return c_.back();
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r(fld_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Poly::zero(fld_));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff((int)i) + o.coeff((int)i);
  r.trim();
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r(fld_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Poly::zero(fld_));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  r.trim();
  return r;
}

BiPoly BiPoly::operator*(const Poly& p) const {
  BiPoly r = *this;
  for (auto& q : r.c_) q = q * p;
  r.trim();
  return r;
}

BiPoly BiPoly::exact_div(const BiPoly& d) const {
  if (d.is_zero()) throw HlError(Errc::division_by_zero, "bivariate division by zero");
  BiPoly r = *this, q(fld_);
  if (r.deg() < d.deg()) {
    if (!r.is_zero()) throw HlError(Errc::internal, "inexact bivariate division");
    return q;
  }
  q.c_.assign(r.deg() - d.deg() + 1, Poly::zero(fld_));
  while (!r.is_zero() && r.deg() >= d.deg()) {
    Poly t = r.lc().exact_div(d.lc());
    int k = r.deg() - d.deg();
    q.c_[k] = t;
    BiPoly sub(fld_);
    sub.c_.assign(k + d.c_.size(), Poly::zero(fld_));
    for (size_t j = 0; j < d.c_.size(); ++j) sub.c_[k + j] = d.c_[j] * t;
    sub.trim();
    r = r - sub;
  }
  if (!r.is_zero()) throw HlError(Errc::internal, "inexact bivariate division");
  q.trim();
  return q;
}

BiPoly BiPoly::derivative_aux() const {
  BiPoly r(fld_);
  if (deg() < 1) return r;
  r.c_.resize(c_.size() - 1, Poly::zero(fld_));
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = c_[i] * Scalar(fld_, (long long)i);
  r.trim();
  return r;
}

Poly BiPoly::eval_aux(const Poly& g) const {
  Poly acc = Poly::zero(fld_);
  for (int i = deg(); i >= 0; --i) acc = acc * g + c_[i];
  return acc;
}

BiPoly BiPoly::stretch2() const {
  BiPoly r(fld_);
  if (is_zero()) return r;
  r.c_.assign(2 * c_.size() - 1, Poly::zero(fld_));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i];
  r.trim();
  return r;
}

std::string BiPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = deg(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = "(" + c_[i].str() + ")";
    if (i == 0) { out += coeff; continue; }
    std::string mono = i == 1 ? var : var + "^" + std::to_string(i);
    out += coeff == "(1)" ? mono : coeff + "*" + mono;
  }
  return out;
}

Poly resultant_aux(const BiPoly& f, const BiPoly& g) {
  Field fl = f.field();
  if (f.is_zero() || g.is_zero())
    throw HlError(Errc::zero_polynomial, "resultant with zero argument");
  int n = f.deg(), m = g.deg();
  if (n == 0 && m == 0) return Poly::one(fl);
  int size = n + m;
  std::vector<Poly> syl(size * size, Poly::zero(fl));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) syl[r * size + r + j] = f.coeff(n - j);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) syl[(m + r) * size + r + j] = g.coeff(m - j);
  return bareiss_det<Poly>(std::move(syl), size, fl);
}

}  // namespace higgslab
