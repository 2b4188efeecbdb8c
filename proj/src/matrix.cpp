#include "matrix.hpp"

#include <algorithm>

#include "bareiss.hpp"

namespace higgslab {

MatRat to_rat(const MatPoly& a) {
  return a.map([](const Poly& p) { return RatFunc::of(p); });
}

MatPoly to_poly(const MatRat& a) {
  return a.map([](const RatFunc& r) { return r.as_poly(); });
}

MatScalar eval_mat(const MatPoly& a, const Scalar& x) {
  return a.map([&](const Poly& p) { return p.eval(x); });
}

MatPoly scalar_to_poly(const MatScalar& a) {
  return a.map([](const Scalar& s) { return Poly::constant(s); });
}

MatPoly mat_scale(const MatPoly& a, const Poly& s) {
  return a.map([&](const Poly& p) { return p * s; });
}

Poly det(const MatPoly& a) {
  if (!a.is_square()) throw HlError(Errc::nonsquare, "determinant of nonsquare matrix");
  int n = a.rows();
  std::vector<Poly> flat;
  flat.reserve((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat.push_back(a.at(i, j));
  return bareiss_det<Poly>(std::move(flat), n, a.field());
}

RatFunc det(const MatRat& a) {
  if (!a.is_square()) throw HlError(Errc::nonsquare, "determinant of nonsquare matrix");
  MatRat m = a;
  int n = m.rows();
  RatFunc d = RatFunc::one(a.field());
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!m.at(i, k).is_zero()) { piv = i; break; }
    if (piv < 0) return RatFunc::zero(a.field());
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      d = -d;
    }
    d = d * m.at(k, k);
    RatFunc inv = m.at(k, k).inverse();
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      RatFunc f = m.at(i, k) * inv;
      for (int j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
    }
  }
  return d;
}

Scalar det(const MatScalar& a) {
  if (!a.is_square()) throw HlError(Errc::nonsquare, "determinant of nonsquare matrix");
  MatScalar m = a;
  int n = m.rows();
  Scalar d = Scalar::one(a.field());
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!m.at(i, k).is_zero()) { piv = i; break; }
    if (piv < 0) return Scalar::zero(a.field());
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      d = -d;
    }
    d = d * m.at(k, k);
    Scalar inv = m.at(k, k).inverse();
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      Scalar f = m.at(i, k) * inv;
      for (int j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
    }
  }
  return d;
}

bool is_unimodular(const MatPoly& a) {
  if (!a.is_square()) return false;
  Poly d = det(a);
  return d.is_unit();
}

BiPoly char_poly(const MatPoly& a) {
  if (!a.is_square()) throw HlError(Errc::nonsquare, "characteristic polynomial");
  Field f = a.field();
  int n = a.rows();
  std::vector<BiPoly> flat;
  flat.reserve((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BiPoly e = -BiPoly::of_poly(a.at(i, j));
      if (i == j) e = e + BiPoly::aux(f);
      flat.push_back(e);
    }
  BiPoly cp = bareiss_det<BiPoly>(std::move(flat), n, f);
  if (cp.deg() != n || !cp.lc().is_unit() || !cp.lc().coeff(0).is_one())
    throw HlError(Errc::internal, "characteristic polynomial not monic");
  return cp;
}

namespace {

// column operation driver shared by the Hermite routines
struct ColWorker {
  MatPoly& h;
  MatPoly* u;  // optional transform accumulator
  void swap(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < h.rows(); ++i) std::swap(h.at(i, a), h.at(i, b));
    if (u)
      for (int i = 0; i < u->rows(); ++i) std::swap(u->at(i, a), u->at(i, b));
  }
  void scale(int j, const Scalar& s) {
    for (int i = 0; i < h.rows(); ++i) h.at(i, j) = h.at(i, j) * s;
    if (u)
      for (int i = 0; i < u->rows(); ++i) u->at(i, j) = u->at(i, j) * s;
  }
  // col_dst -= q * col_src
  void axpy(int dst, int src, const Poly& q) {
    if (q.is_zero()) return;
    for (int i = 0; i < h.rows(); ++i)
      h.at(i, dst) = h.at(i, dst) - q * h.at(i, src);
    if (u)
      for (int i = 0; i < u->rows(); ++i)
        u->at(i, dst) = u->at(i, dst) - q * u->at(i, src);
  }
};

int hermite_inplace(MatPoly& h, MatPoly* u) {
  ColWorker w{h, u};
  int n = h.rows(), m = h.cols();
  int c = 0;
  for (int row = 0; row < n && c < m; ++row) {
    for (;;) {
      int best = -1;
      int count = 0;
      for (int j = c; j < m; ++j) {
        if (h.at(row, j).is_zero()) continue;
        ++count;
        if (best < 0 || h.at(row, j).deg() < h.at(row, best).deg()) best = j;
      }
      if (count == 0) { best = -1; break; }
      if (count == 1) {
        w.swap(c, best);
        break;
      }
      for (int j = c; j < m; ++j) {
        if (j == best || h.at(row, j).is_zero()) continue;
        w.axpy(j, best, h.at(row, j) / h.at(row, best));
      }
    }
    if (h.at(row, c).is_zero()) continue;
    w.scale(c, h.at(row, c).lc().inverse());
    for (int t = 0; t < c; ++t)
      if (h.at(row, t).deg() >= h.at(row, c).deg())
        w.axpy(t, c, h.at(row, t) / h.at(row, c));
    ++c;
  }
  return c;
}

}  // namespace

MatPoly hermite_basis(const MatPoly& a) {
  MatPoly h = a;
  int rank = hermite_inplace(h, nullptr);
  return h.submatrix(0, h.rows(), 0, rank);
}

HermiteTransform hermite_with_transform(const MatPoly& a) {
  HermiteTransform t;
  t.echelon = a;
  t.u = MatPoly::identity(a.field(), a.cols());
  t.rank = hermite_inplace(t.echelon, &t.u);
  return t;
}

MatPoly saturated_kernel(const MatPoly& a) {
  HermiteTransform t = hermite_with_transform(a);
  MatPoly raw = t.u.submatrix(0, a.cols(), t.rank, a.cols());
  MatPoly k = hermite_basis(raw);
  if (!(a * k).is_zero())
    throw HlError(Errc::internal, "kernel basis does not annihilate");
  return k;
}

namespace {

struct SmithWorker {
  MatPoly& s;
  MatPoly& u;
  MatPoly& uinv;
  MatPoly& v;
  MatPoly& vinv;

  void row_swap(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    for (int i = 0; i < uinv.rows(); ++i) std::swap(uinv.at(i, a), uinv.at(i, b));
  }
  // row_a -= q * row_b
  void row_axpy(int a, int b, const Poly& q) {
    if (q.is_zero()) return;
    for (int j = 0; j < s.cols(); ++j) s.at(a, j) = s.at(a, j) - q * s.at(b, j);
    for (int j = 0; j < u.cols(); ++j) u.at(a, j) = u.at(a, j) - q * u.at(b, j);
    for (int i = 0; i < uinv.rows(); ++i)
      uinv.at(i, b) = uinv.at(i, b) + q * uinv.at(i, a);
  }
  void row_scale(int a, const Scalar& c) {
    for (int j = 0; j < s.cols(); ++j) s.at(a, j) = s.at(a, j) * c;
    for (int j = 0; j < u.cols(); ++j) u.at(a, j) = u.at(a, j) * c;
    Scalar ci = c.inverse();
    for (int i = 0; i < uinv.rows(); ++i) uinv.at(i, a) = uinv.at(i, a) * ci;
  }
  void col_swap(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    for (int j = 0; j < vinv.cols(); ++j) std::swap(vinv.at(a, j), vinv.at(b, j));
  }
  // col_a -= q * col_b
  void col_axpy(int a, int b, const Poly& q) {
    if (q.is_zero()) return;
    for (int i = 0; i < s.rows(); ++i) s.at(i, a) = s.at(i, a) - q * s.at(i, b);
    for (int i = 0; i < v.rows(); ++i) v.at(i, a) = v.at(i, a) - q * v.at(i, b);
    for (int j = 0; j < vinv.cols(); ++j)
      vinv.at(b, j) = vinv.at(b, j) + q * vinv.at(a, j);
  }
};

}  // namespace

SmithResult smith(const MatPoly& a) {
  Field f = a.field();
  int n = a.rows(), m = a.cols();
  SmithResult r;
  r.s = a;
  r.u = MatPoly::identity(f, n);
  r.uinv = MatPoly::identity(f, n);
  r.v = MatPoly::identity(f, m);
  r.vinv = MatPoly::identity(f, m);
  SmithWorker w{r.s, r.u, r.uinv, r.v, r.vinv};

  int t = 0;
  while (t < std::min(n, m)) {
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (!r.s.at(i, j).is_zero() &&
            (pi < 0 || r.s.at(i, j).deg() < r.s.at(pi, pj).deg())) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < n; ++i)
        while (!r.s.at(i, t).is_zero()) {
          w.row_axpy(i, t, r.s.at(i, t) / r.s.at(t, t));
          if (!r.s.at(i, t).is_zero()) { w.row_swap(i, t); dirty = true; }
        }
      for (int j = t + 1; j < m; ++j)
        while (!r.s.at(t, j).is_zero()) {
          w.col_axpy(j, t, r.s.at(t, j) / r.s.at(t, t));
          if (!r.s.at(t, j).is_zero()) { w.col_swap(j, t); dirty = true; }
        }
      if (dirty) continue;
      bool cleared = true;
      for (int i = t + 1; i < n && cleared; ++i)
        if (!r.s.at(i, t).is_zero()) cleared = false;
      for (int j = t + 1; j < m && cleared; ++j)
        if (!r.s.at(t, j).is_zero()) cleared = false;
      if (!cleared) continue;
      // enforce divisibility of the remaining block by the pivot
      int bi = -1, bj = -1;
      for (int i = t + 1; i < n && bi < 0; ++i)
        for (int j = t + 1; j < m && bi < 0; ++j)
          if (!r.s.at(i, j).divisible_by(r.s.at(t, t))) { bi = i; bj = j; }
      if (bi < 0) break;
      (void)bj;
      w.row_axpy(t, bi, -Poly::one(f));  // add offending row into pivot row
    }
    w.row_scale(t, r.s.at(t, t).lc().inverse());
    ++t;
  }
  if (!(r.u * a * r.v == r.s) ||
      !(r.uinv * r.u == MatPoly::identity(f, n)) ||
      !(r.v * r.vinv == MatPoly::identity(f, m)))
    throw HlError(Errc::internal, "Smith form transform bookkeeping failed");
  return r;
}

std::vector<Poly> smith_invariants(const MatPoly& a) {
  SmithResult r = smith(a);
  std::vector<Poly> d;
  for (int t = 0; t < std::min(a.rows(), a.cols()); ++t) {
    if (r.s.at(t, t).is_zero()) break;
    d.push_back(r.s.at(t, t));
  }
  return d;
}

MatPoly unimodular_completion(const MatPoly& k) {
  int n = k.rows(), q = k.cols();
  if (q > n) throw HlError(Errc::shape_mismatch, "completion of wide matrix");
  SmithResult sm = smith(k);
  for (int t = 0; t < q; ++t)
    if (!sm.s.at(t, t).is_unit())
      throw HlError(Errc::rank_error, "basis is not a saturated direct summand");
  MatPoly full = MatPoly::hcat(k, sm.uinv.submatrix(0, n, q, n));
  if (!is_unimodular(full))
    throw HlError(Errc::internal, "completion is not unimodular");
  return full;
}

ModuleBasis smith_hermite_basis(const MatRat& generators) {
  Field f = generators.field();
  Poly den = Poly::one(f);
  for (int i = 0; i < generators.rows(); ++i)
    for (int j = 0; j < generators.cols(); ++j)
      den = lcm(den, generators.at(i, j).den());
  MatPoly cleared = generators.map(
      [&](const RatFunc& r) { return r.num() * den.exact_div(r.den()); });
  MatPoly basis = hermite_basis(cleared);
  ModuleBasis out;
  out.den = den;
  out.basis = basis.map([&](const Poly& p) { return RatFunc(p, den); });
  return out;
}

MatRat solve(const MatRat& a, const MatRat& b) {
  if (!a.is_square() || a.rows() != b.rows())
    throw HlError(Errc::shape_mismatch, "solve shape");
  Field f = a.field();
  int n = a.rows(), m = b.cols();
  MatRat w = MatRat::hcat(a, b);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!w.at(i, k).is_zero()) { piv = i; break; }
    if (piv < 0) throw HlError(Errc::degenerate_form, "singular system");
    if (piv != k)
      for (int j = 0; j < n + m; ++j) std::swap(w.at(k, j), w.at(piv, j));
    RatFunc inv = w.at(k, k).inverse();
    for (int j = k; j < n + m; ++j) w.at(k, j) = w.at(k, j) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == k || w.at(i, k).is_zero()) continue;
      RatFunc fkt = w.at(i, k);
      for (int j = k; j < n + m; ++j)
        w.at(i, j) = w.at(i, j) - fkt * w.at(k, j);
    }
  }
  (void)f;
  return w.submatrix(0, n, n, n + m);
}

MatPoly inverse_unimodular(const MatPoly& a) {
  if (!is_unimodular(a))
    throw HlError(Errc::nonunimodular, "matrix is not unimodular");
  MatRat inv = solve(to_rat(a), to_rat(MatPoly::identity(a.field(), a.rows())));
  return to_poly(inv);
}

std::vector<std::vector<Scalar>> null_space(const MatScalar& a) {
  Field f = a.field();
  MatScalar m = a;
  int n = m.rows(), c = m.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < c && r < n; ++j) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (!m.at(i, j).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int jj = 0; jj < c; ++jj) std::swap(m.at(r, jj), m.at(piv, jj));
    Scalar inv = m.at(r, j).inverse();
    for (int jj = 0; jj < c; ++jj) m.at(r, jj) = m.at(r, jj) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || m.at(i, j).is_zero()) continue;
      Scalar fkt = m.at(i, j);
      for (int jj = 0; jj < c; ++jj)
        m.at(i, jj) = m.at(i, jj) - fkt * m.at(r, jj);
    }
    pivot_col.push_back(j);
    ++r;
  }
  std::vector<std::vector<Scalar>> basis;
  for (int j = 0; j < c; ++j) {
    if (std::find(pivot_col.begin(), pivot_col.end(), j) != pivot_col.end())
      continue;
    std::vector<Scalar> v(c, Scalar::zero(f));
    v[j] = Scalar::one(f);
    for (int i = 0; i < (int)pivot_col.size(); ++i)
      v[pivot_col[i]] = -m.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const MatScalar& a) {
  return a.cols() - (int)null_space(a).size();
}

Congruence congruent_diagonalize(const MatScalar& a) {
  if (a.rows() != a.cols()) throw HlError(Errc::nonsquare, "congruence input");
  if (a.transpose() != a)
    throw HlError(Errc::bad_input, "congruence input must be symmetric");
  Field f = a.field();
  int n = a.rows();
  MatScalar m = a;
  MatScalar s = MatScalar::identity(f, n);
  auto col_axpy = [&](MatScalar& w, int dst, int src, const Scalar& c) {
    for (int i = 0; i < w.rows(); ++i)
      w.at(i, dst) = w.at(i, dst) + w.at(i, src) * c;
  };
  auto row_axpy = [&](MatScalar& w, int dst, int src, const Scalar& c) {
    for (int j = 0; j < w.cols(); ++j)
      w.at(dst, j) = w.at(dst, j) + w.at(src, j) * c;
  };
  auto col_swap = [&](MatScalar& w, int x, int y) {
    for (int i = 0; i < w.rows(); ++i) std::swap(w.at(i, x), w.at(i, y));
  };
  auto row_swap = [&](MatScalar& w, int x, int y) {
    for (int j = 0; j < w.cols(); ++j) std::swap(w.at(x, j), w.at(y, j));
  };
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m.at(i, i).is_zero()) { piv = i; break; }
      if (piv >= 0) {
        col_swap(m, k, piv); row_swap(m, k, piv); col_swap(s, k, piv);
      } else {
        // all remaining diagonal entries vanish: fold in an off-diagonal one
        int bi = -1, bj = -1;
        for (int i = k; i < n && bi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!m.at(i, j).is_zero()) { bi = i; bj = j; break; }
        if (bi < 0) break;  // zero block, degenerate tail
        Scalar one = Scalar::one(f);
        col_axpy(m, bi, bj, one); row_axpy(m, bi, bj, one); col_axpy(s, bi, bj, one);
        if (bi != k) {
          col_swap(m, k, bi); row_swap(m, k, bi); col_swap(s, k, bi);
        }
      }
    }
    if (m.at(k, k).is_zero()) continue;
    Scalar inv = m.at(k, k).inverse();
    for (int j = k + 1; j < n; ++j) {
      if (m.at(k, j).is_zero()) continue;
      Scalar c = -(m.at(k, j) * inv);
      col_axpy(m, j, k, c); row_axpy(m, j, k, c); col_axpy(s, j, k, c);
    }
  }
  Congruence out;
  out.transform = s;
  for (int i = 0; i < n; ++i) out.diagonal.push_back(m.at(i, i));
  return out;
}

}  // namespace higgslab
