#pragma once

#include <functional>
#include <vector>

#include "poly.hpp"

namespace higgslab {

// Dense matrix over an exact coefficient ring T (Scalar, Poly, RatFunc, BiPoly).
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(Field f, int rows, int cols)
      : fld_(f), rows_(rows), cols_(cols), e_((size_t)rows * cols, T::zero(f)) {}

  static Mat identity(Field f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T::one(f);
    return m;
  }

  Field field() const { return fld_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& at(int i, int j) { return e_[(size_t)i * cols_ + j]; }
  const T& at(int i, int j) const { return e_[(size_t)i * cols_ + j]; }

  Mat operator+(const Mat& o) const {
    require_shape(o.rows_, o.cols_);
    Mat r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    require_shape(o.rows_, o.cols_);
    Mat r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw HlError(Errc::shape_mismatch, "matrix product shape");
    Mat r(fld_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat r(fld_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat submatrix(int r0, int r1, int c0, int c1) const {
    Mat r(fld_, r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
      for (int j = c0; j < c1; ++j) r.at(i - r0, j - c0) = at(i, j);
    return r;
  }

  static Mat hcat(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) throw HlError(Errc::shape_mismatch, "hcat rows");
    Mat r(a.fld_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
  }

  static Mat vcat(const Mat& a, const Mat& b) {
    if (a.cols_ != b.cols_) throw HlError(Errc::shape_mismatch, "vcat cols");
    Mat r(a.fld_, a.rows_ + b.rows_, a.cols_);
    for (int j = 0; j < a.cols_; ++j) {
      for (int i = 0; i < a.rows_; ++i) r.at(i, j) = a.at(i, j);
      for (int i = 0; i < b.rows_; ++i) r.at(a.rows_ + i, j) = b.at(i, j);
    }
    return r;
  }

  static Mat block_diag(const Mat& a, const Mat& b) {
    Mat r(a.fld_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
  }

  template <class F>
  auto map(F fn) const -> Mat<decltype(fn(std::declval<T>()))> {
    using U = decltype(fn(std::declval<T>()));
    Mat<U> r(fld_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = fn(at(i, j));
    return r;
  }

 private:
  Field fld_;
  int rows_ = 0, cols_ = 0;
  std::vector<T> e_;
  void require_shape(int r, int c) const {
    if (rows_ != r || cols_ != c) throw HlError(Errc::shape_mismatch, "matrix shape");
  }
};

using MatScalar = Mat<Scalar>;
using MatPoly = Mat<Poly>;
using MatRat = Mat<RatFunc>;

MatRat to_rat(const MatPoly& a);
MatPoly to_poly(const MatRat& a);  // throws holomorphy_failure on poles
MatScalar eval_mat(const MatPoly& a, const Scalar& x);
MatPoly scalar_to_poly(const MatScalar& a);
MatPoly mat_scale(const MatPoly& a, const Poly& s);

Poly det(const MatPoly& a);            // fraction-free
RatFunc det(const MatRat& a);          // Gaussian elimination
Scalar det(const MatScalar& a);
bool is_unimodular(const MatPoly& a);  // square with constant nonzero determinant

// det(aux * I - a) as a polynomial in the auxiliary variable
BiPoly char_poly(const MatPoly& a);

// Canonical column Hermite form of the column span of a: unimodular column
// operations only, pivot rows strictly increasing, pivots monic, entries in a
// pivot row left of the pivot reduced below its degree. Zero columns dropped.
MatPoly hermite_basis(const MatPoly& a);

struct HermiteTransform {
  MatPoly echelon;  // a * u with trailing zero columns kept
  MatPoly u;        // unimodular cols(a) x cols(a)
  int rank;
};
HermiteTransform hermite_with_transform(const MatPoly& a);

// Free basis of ker(a) as an F[z]-module, in canonical Hermite form. Kernels
// of polynomial matrices are saturated, so the gcd of the maximal minors of
// the returned basis is a unit.
MatPoly saturated_kernel(const MatPoly& a);

struct SmithResult {
  MatPoly u, uinv, s, v, vinv;  // u * a * v = s, s diagonal with monic pivots
};
SmithResult smith(const MatPoly& a);
std::vector<Poly> smith_invariants(const MatPoly& a);

// For a saturated n x q basis k: returns [k | c] unimodular (Smith-form
// completion of the direct summand).
MatPoly unimodular_completion(const MatPoly& k);

// Free basis of the F[z]-submodule of F(z)^n generated by the given columns:
// clears the common denominator, takes the Hermite basis, restores the
// denominator. Entries share the single monic denominator d.
struct ModuleBasis {
  MatRat basis;  // n x rank
  Poly den;      // common denominator actually used
};
ModuleBasis smith_hermite_basis(const MatRat& generators);

// Solve a x = b over rational functions; a square invertible.
MatRat solve(const MatRat& a, const MatRat& b);
MatPoly inverse_unimodular(const MatPoly& a);

// Canonical basis of the right null space of a constant matrix.
std::vector<std::vector<Scalar>> null_space(const MatScalar& a);
int rank(const MatScalar& a);

// Congruence diagonalization of a symmetric constant matrix: returns s with
// s^t a s diagonal (entries may be zero when a is degenerate).
struct Congruence {
  MatScalar transform;
  std::vector<Scalar> diagonal;
};
Congruence congruent_diagonalize(const MatScalar& a);

}  // namespace higgslab
