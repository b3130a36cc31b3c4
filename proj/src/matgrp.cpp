#include "slicelab/matgrp.hpp"

#include <sstream>

#include "slicelab/errors.hpp"

namespace slicelab {

MatQt::MatQt(std::initializer_list<std::initializer_list<RatFunc>> rows) : n_(rows.size()), a_() {
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidArgument("matrix literal is not square");
    for (const auto& v : row) a_.push_back(v);
  }
}

MatQt MatQt::identity(std::size_t n) {
  MatQt m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(1);
  return m;
}

MatQt MatQt::diagonal(const std::vector<RatFunc>& d) {
  MatQt m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool MatQt::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const RatFunc& v = (*this)(i, j);
      if (i == j ? !v.is_one() : !v.is_zero()) return false;
    }
  }
  return true;
}

bool MatQt::is_polynomial() const {
  for (const auto& v : a_) {
    if (!v.is_polynomial()) return false;
  }
  return true;
}

MatQt mat_mul(const MatQt& a, const MatQt& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("matrix size mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  MatQt c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const RatFunc& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += aik.is_one() ? b(k, j) : aik * b(k, j);
      }
    }
  }
  return c;
}

MatQt scale(const MatQt& a, const RatFunc& c) {
  MatQt r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) *= c;
  }
  return r;
}

MatQt mat_inv(const MatQt& a) {
  const std::size_t n = a.size();
  MatQt m = a;
  MatQt inv = MatQt::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular (no pivot in column " + std::to_string(col + 1) + ")");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const RatFunc p = m(col, col);
    if (!p.is_one()) {
      for (std::size_t j = 0; j < n; ++j) {
        m(col, j) /= p;
        inv(col, j) /= p;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      const RatFunc f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RatFunc det(const MatQt& a) {
  const std::size_t n = a.size();
  MatQt m = a;
  RatFunc result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return RatFunc();
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(piv, j), m(col, j));
      result = -result;
    }
    const RatFunc p = m(col, col);
    result *= p;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const RatFunc f = m(i, col) / p;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
      }
    }
  }
  return result;
}

RatFunc lower_right_minor(const MatQt& a, std::size_t m) {
  const std::size_t n = a.size();
  if (m > n) throw InvalidArgument("minor larger than matrix");
  MatQt block(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) block(i, j) = a(n - m + i, n - m + j);
  }
  return det(block);
}

std::string to_string(const MatQt& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Coweights

bool Coweight::is_zero() const {
  for (int v : c_) {
    if (v != 0) return false;
  }
  return true;
}

Coweight operator+(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw InvalidArgument("coweight length mismatch");
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return Coweight(std::move(c));
}

Coweight operator-(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw InvalidArgument("coweight length mismatch");
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a.c_[i] - b.c_[i];
  return Coweight(std::move(c));
}

bool pgl_equal(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) return false;
  if (a.size() == 0) return true;
  const int shift = a[0] - b[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] - b[i] != shift) return false;
  }
  return true;
}

std::string to_string(const Coweight& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s + ")";
}

MatQt shift_matrix(const Coweight& mu) {
  std::vector<RatFunc> d;
  d.reserve(mu.size());
  for (int v : mu.components()) d.push_back(RatFunc::t_pow(v));
  return MatQt::diagonal(d);
}

// ---------------------------------------------------------------------------
// Gauss decomposition

namespace {

struct Pivots {
  MatQt U;
  std::vector<RatFunc> d;
  MatQt L;
};

// x = U * diag(d) * L, eliminating from the bottom-right corner upwards so
// that the pivots are ratios of consecutive lower-right principal minors.
Pivots eliminate(const MatQt& x) {
  const std::size_t n = x.size();
  MatQt a = x;
  Pivots out{MatQt::identity(n), std::vector<RatFunc>(n), MatQt::identity(n)};
  for (std::size_t kk = n; kk-- > 0;) {
    const RatFunc piv = a(kk, kk);
    if (piv.is_zero()) {
      throw DecompositionFails("lower-right " + std::to_string(n - kk) + "x" + std::to_string(n - kk) +
                               " principal minor vanishes");
    }
    for (std::size_t i = 0; i < kk; ++i) {
      if (!a(i, kk).is_zero()) out.U(i, kk) = a(i, kk) / piv;
    }
    for (std::size_t j = 0; j < kk; ++j) {
      if (!a(kk, j).is_zero()) out.L(kk, j) = a(kk, j) / piv;
    }
    for (std::size_t i = 0; i < kk; ++i) {
      if (out.U(i, kk).is_zero()) continue;
      for (std::size_t j = 0; j < kk; ++j) {
        if (!a(kk, j).is_zero()) a(i, j) -= out.U(i, kk) * a(kk, j);
      }
    }
    out.d[kk] = piv;
  }
  return out;
}

}  // namespace

MatQt recompose(const GaussForm& g) {
  const std::size_t n = g.U.size();
  MatQt d(n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = RatFunc::t_pow(g.mu[i]) * g.H(i, i);
  return g.U * d * g.L;
}

GaussForm gauss_decompose(const MatQt& x) {
  Pivots p = eliminate(x);
  const std::size_t n = x.size();
  std::vector<int> mu(n);
  MatQt h(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatFunc& d = p.d[i];
    if (d.leading() != 1) {
      throw NotInSlice("Gauss diagonal entry " + std::to_string(i + 1) + " = " + to_string(d) +
                       " has leading coefficient " + to_string(d.leading()) + " at infinity, expected 1");
    }
    mu[i] = d.num().degree() - d.den().degree();
    h(i, i) = d * RatFunc::t_pow(-mu[i]);
  }
  return GaussForm{std::move(p.U), std::move(h), Coweight(std::move(mu)), std::move(p.L)};
}

MatQt canonical_lift(const MatQt& x) {
  const Pivots p = eliminate(x);
  const Rational c = p.d.front().leading();
  for (const auto& d : p.d) {
    if (d.leading() != c) {
      throw NotInSlice("Gauss diagonal leading coefficients differ; no scalar multiple lies in a slice");
    }
  }
  if (c == 1) return x;
  return scale(x, RatFunc(Rational(1 / c)));
}

namespace {

MembershipReport check_factors(const GaussForm& g, const Coweight& mu) {
  const std::size_t n = g.U.size();
  MembershipReport r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int ord = ord_inf(g.U(i, j));
      if (ord < 1) {
        r.factor = MembershipFactor::Upper;
        r.row = i + 1;
        r.col = j + 1;
        r.ord = ord;
        r.reason = "U(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has ord_inf " + std::to_string(ord);
        return r;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const int ord = ord_inf(g.L(i, j));
      if (ord < 1) {
        r.factor = MembershipFactor::Lower;
        r.row = i + 1;
        r.col = j + 1;
        r.ord = ord;
        r.reason = "L(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has ord_inf " + std::to_string(ord);
        return r;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int ord = ord_inf(g.H(i, i) - RatFunc(1));
    if (ord < 1) {
      r.factor = MembershipFactor::Diagonal;
      r.row = r.col = i + 1;
      r.ord = ord;
      r.reason = "H(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") is not 1 + O(1/t)";
      return r;
    }
  }
  if (!pgl_equal(g.mu, mu)) {
    r.factor = MembershipFactor::Coweight;
    r.reason = "extracted coweight " + to_string(g.mu) + " is not PGL-equal to " + to_string(mu);
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace

MembershipReport slice_membership(const MatQt& x, const Coweight& mu) {
  MembershipReport r;
  if (mu.size() != x.size()) {
    r.factor = MembershipFactor::Coweight;
    r.reason = "coweight length does not match matrix size";
    return r;
  }
  GaussForm g;
  try {
    g = gauss_decompose(x);
  } catch (const DecompositionFails& e) {
    r.factor = MembershipFactor::BigCell;
    r.reason = e.what();
    return r;
  } catch (const NotInSlice& e) {
    r.factor = MembershipFactor::Diagonal;
    r.reason = e.what();
    return r;
  }
  return check_factors(g, mu);
}

SlicePoint SlicePoint::from_matrix(MatQt x) {
  GaussForm g = gauss_decompose(x);
  const MembershipReport r = check_factors(g, g.mu);
  if (!r.ok) throw NotInSlice(r.reason);
  return SlicePoint(std::move(x), std::move(g));
}

SlicePoint SlicePoint::from_matrix(MatQt x, const Coweight& mu) {
  if (mu.size() != x.size()) throw InvalidArgument("coweight length does not match matrix size");
  GaussForm g = gauss_decompose(x);
  const MembershipReport r = check_factors(g, mu);
  if (!r.ok) throw NotInSlice(r.reason);
  return SlicePoint(std::move(x), std::move(g));
}

SlicePoint SlicePoint::from_parts(MatQt x, GaussForm gauss) { return SlicePoint(std::move(x), std::move(gauss)); }

// ---------------------------------------------------------------------------
// Projection pi

Projection project_pi(const MatQt& x, const Coweight& mu) {
  GaussForm g = gauss_decompose(x);
  if (!pgl_equal(g.mu, mu)) {
    throw NotInSlice("extracted coweight " + to_string(g.mu) + " is not PGL-equal to " + to_string(mu));
  }
  const std::size_t n = x.size();

  // n * U in N_1[[1/t]]: row i absorbs the polynomial parts of its entries,
  // left to right, using the already-normalized rows below it.
  MatQt left = MatQt::identity(n);
  MatQt& u = g.U;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Poly q = poly_part(u(i, j));
      if (q.is_zero()) continue;
      const RatFunc qf(q);
      for (std::size_t c = j; c < n; ++c) {
        if (!u(j, c).is_zero()) u(i, c) -= qf * u(j, c);
        if (!left(j, c).is_zero()) left(i, c) -= qf * left(j, c);
      }
    }
  }

  // L * n_minus in N_{-,1}[[1/t]]: the transpose of the above.
  MatQt right = MatQt::identity(n);
  MatQt& l = g.L;
  for (std::size_t j = n; j-- > 0;) {
    for (std::size_t i = j + 1; i < n; ++i) {
      const Poly q = poly_part(l(i, j));
      if (q.is_zero()) continue;
      const RatFunc qf(q);
      for (std::size_t r = i; r < n; ++r) {
        if (!l(r, i).is_zero()) l(r, j) -= qf * l(r, i);
        if (!right(r, i).is_zero()) right(r, j) -= qf * right(r, i);
      }
    }
  }

  const MembershipReport check = check_factors(g, mu);
  if (!check.ok) throw InternalError("projection left a non-congruent factor: " + check.reason);

  MatQt y = left * x * right;
  return Projection{SlicePoint::from_parts(std::move(y), std::move(g)), std::move(left), std::move(right)};
}

bool pgl_equal(const SlicePoint& a, const SlicePoint& b) {
  const MatQt& x = a.matrix();
  const MatQt& y = b.matrix();
  if (x.size() != y.size()) return false;
  const std::size_t n = x.size();
  RatFunc c;
  bool have_c = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x(i, j).is_zero() != y(i, j).is_zero()) return false;
      if (y(i, j).is_zero()) continue;
      if (!have_c) {
        c = x(i, j) / y(i, j);
        have_c = true;
      } else if (!(x(i, j) == c * y(i, j))) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Minor degrees

MinorDegrees minor_degrees(const MatQt& x) {
  const std::size_t n = x.size();
  Poly lcm = Poly::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& d = x(i, j).den();
      if (d.degree() == 0) continue;
      lcm = exact_quotient(lcm * d, gcd(lcm, d));
    }
  }
  const MatQt cleared = lcm.is_one() ? x : scale(x, RatFunc(lcm));
  MinorDegrees out{std::vector<int>(n), lcm};
  for (std::size_t m = 1; m <= n; ++m) {
    const RatFunc minor = lower_right_minor(cleared, m);
    out.degrees[m - 1] = minor.is_zero() ? kDegreeOfZero : minor.num().degree();
  }
  return out;
}

bool dominance_ok(const MatQt& x, const std::vector<int>& lambda) {
  if (lambda.size() != x.size()) throw InvalidArgument("dominance bound length does not match matrix size");
  const MinorDegrees md = minor_degrees(x);
  int bound = 0;
  for (std::size_t m = 0; m < md.degrees.size(); ++m) {
    bound += lambda[m];
    if (md.degrees[m] > bound) return false;
  }
  return true;
}

bool in_polynomial_group(const MatQt& x) {
  if (!x.is_polynomial()) return false;
  const RatFunc d = det(x);
  return !d.is_zero() && d.num().degree() == 0;
}

}  // namespace slicelab
