#pragma once

#include <utility>
#include <vector>

#include "field.hpp"

namespace higgslab {

// Univariate polynomial over the coefficient field, dense ascending
// coefficients with no trailing zeros. The variable is the chart coordinate z.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : fld_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);

  static Poly zero(Field f) { return Poly(f); }
  static Poly one(Field f) { return constant(Scalar::one(f)); }
  static Poly constant(const Scalar& c);
  static Poly X(Field f);  // the coordinate z
  // c0 + c1 z + ... from small integers
  static Poly from_ints(Field f, std::initializer_list<long long> cs);
  // monic linear factor z - r
  static Poly linear_root(const Scalar& r);

  Field field() const { return fld_; }
  int deg() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_unit() const { return c_.size() == 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Scalar coeff(int i) const;
  const Scalar& lc() const;
  Scalar constant_term() const { return coeff(0); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& s) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const { return fld_ == o.fld_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  // Division known to be exact; throws internal error on nonzero remainder.
  Poly exact_div(const Poly& d) const;
  bool divisible_by(const Poly& d) const;

  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;
  Poly shift_up(int k) const;  // multiply by z^k
  std::string str(const std::string& var = "z") const;

 private:
  Field fld_;
  std::vector<Scalar> c_;
  void trim();
};

Poly gcd(const Poly& a, const Poly& b);  // monic or zero
Poly lcm(const Poly& a, const Poly& b);
bool poly_squarefree(const Poly& f);  // true iff gcd(f, f') is constant
// base^e mod m in F[z], e >= 0
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m);

// All roots of f in the coefficient field. Throws not_split unless
// deg f = #roots (with multiplicity 1 each; call sites require squarefree f).
// Roots are returned sorted canonically.
std::vector<Scalar> field_roots(const Poly& f);

// Reduced rational function; denominator monic, zero is 0/1.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Field f) : num_(Poly::zero(f)), den_(Poly::one(f)) {}
  RatFunc(Poly num, Poly den);
  static RatFunc of(const Poly& p) { return RatFunc(p, Poly::one(p.field())); }
  static RatFunc zero(Field f) { return RatFunc(f); }
  static RatFunc one(Field f) { return of(Poly::one(f)); }

  Field field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_unit(); }
  Poly as_poly() const;  // throws if not polynomial

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Poly num_, den_;
  void normalize();
};

// Polynomial in an auxiliary spectral variable (eta, xi or zeta) with Poly
// coefficients, i.e. an element of F[z][aux]. Dense ascending in aux.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Field f) : fld_(f) {}
  BiPoly(Field f, std::vector<Poly> coeffs);

  static BiPoly zero(Field f) { return BiPoly(f); }
  static BiPoly one(Field f) { return of_poly(Poly::one(f)); }
  static BiPoly of_poly(const Poly& p);
  static BiPoly aux(Field f);  // the auxiliary variable

  Field field() const { return fld_; }
  int deg() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  Poly coeff(int i) const;
  const Poly& lc() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Poly& p) const;
  BiPoly operator-() const;
  bool operator==(const BiPoly& o) const { return fld_ == o.fld_ && c_ == o.c_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly exact_div(const BiPoly& d) const;  // division known to be exact
  BiPoly derivative_aux() const;
  // substitute aux = g(z)
  Poly eval_aux(const Poly& g) const;
  // substitute aux^2 for aux: sum c_i(z) aux^(2i)
  BiPoly stretch2() const;
  std::string str(const std::string& var = "eta") const;

 private:
  Field fld_;
  std::vector<Poly> c_;
  void trim();
};

// Resultant in the auxiliary variable: determinant of the Sylvester matrix
// whose first deg(g) rows carry the coefficients of f (descending) and whose
// last deg(f) rows carry those of g. Res(f, g) = lc(f)^deg(g) prod g(roots f)
// under this sign convention.
Poly resultant_aux(const BiPoly& f, const BiPoly& g);

}  // namespace higgslab
