#pragma once

// Generators and independent reference computations shared by the tests.

#include <map>
#include <vector>

#include "slicelab/field.hpp"
#include "slicelab/ihr.hpp"
#include "slicelab/matgrp.hpp"
#include "slicelab/rng.hpp"
#include "slicelab/weyl.hpp"
#include "slicelab/zastava.hpp"

namespace testing {

using namespace slicelab;

inline Rational Q(long a, long b = 1) { return make_rational(a, b); }
inline RatFunc T() { return RatFunc::t(); }
inline RatFunc F(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  return RatFunc(Poly(num), Poly(den));
}

// ---------------------------------------------------------------------------
// generators

inline Poly gen_poly(SplitMix64& rng, int max_degree, int bound = 9) {
  std::vector<Rational> c(static_cast<std::size_t>(rng.uniform_int(0, max_degree)) + 1);
  for (auto& x : c) x = rng.uniform_int(-bound, bound);
  return Poly(std::move(c));
}

inline RatFunc gen_ratfunc(SplitMix64& rng, int max_degree = 3) {
  Poly den;
  while (den.is_zero()) den = gen_poly(rng, max_degree);
  return RatFunc(gen_poly(rng, max_degree), den);
}

/// Rational functions with ord_inf >= 0.
inline RatFunc gen_bounded(SplitMix64& rng) {
  Poly den;
  while (den.is_zero()) den = gen_poly(rng, 3);
  Poly num = gen_poly(rng, den.degree());
  return RatFunc(num, den);
}

inline ZastavaPoint gen_zastava(const CorootInterval& a, SplitMix64& rng, int bound = 9) {
  ZastavaPoint z;
  z.alpha = a;
  z.p = rng.uniform_int(-bound, bound);
  do {
    z.e = rng.uniform_int(-bound, bound);
  } while (z.e == 0);
  for (int i = 1; i < a.height(); ++i) {
    z.b.push_back(rng.uniform_int(-bound, bound));
    z.g.push_back(rng.uniform_int(-bound, bound));
  }
  return z;
}

// ---------------------------------------------------------------------------
// oracles

/// Determinant by cofactor expansion along the first row.
inline RatFunc cofactor_det(const MatQt& a) {
  const std::size_t n = a.size();
  if (n == 1) return a(0, 0);
  RatFunc acc(0L);
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    MatQt minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    const RatFunc term = a(0, j) * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline RatFunc block_minor(const MatQt& a, std::size_t m) {
  const std::size_t n = a.size();
  MatQt b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) b(i, j) = a(n - m + i, n - m + j);
  }
  return cofactor_det(b);
}

/// Coefficients of t^{-j} for j = first..last, by power-series division in
/// u = 1/t of the reversed numerator by the reversed denominator.
inline std::map<int, Rational> expansion_at_infinity(const RatFunc& f, int last) {
  std::map<int, Rational> out;
  if (f.is_zero()) return out;
  const auto& nc = f.num().coeffs();
  const auto& dc = f.den().coeffs();
  const int a = f.num().degree();
  const int b = f.den().degree();
  // f = t^{a-b} N(u) / D(u), N(u) = sum nc[a-i] u^i, D(u) = sum dc[b-i] u^i.
  const int lead = b - a;
  const int count = last - lead + 1;
  std::vector<Rational> q(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    Rational s = (i <= a) ? nc[static_cast<std::size_t>(a - i)] : Rational(0);
    for (int k = 1; k <= std::min(i, b); ++k) s -= dc[static_cast<std::size_t>(b - k)] * q[static_cast<std::size_t>(i - k)];
    q[static_cast<std::size_t>(i)] = s / dc[static_cast<std::size_t>(b)];
    out[lead + i] = q[static_cast<std::size_t>(i)];
  }
  return out;
}

inline Rational oracle_coeff(const RatFunc& f, int j) {
  const auto m = expansion_at_infinity(f, j);
  const auto it = m.find(j);
  return it == m.end() ? Rational(0) : it->second;
}

/// Poisson bracket of two monomials by the Leibniz rule on generators.
inline CoordPoly leibniz_bracket(const CoordPoly::Monomial& f, const CoordPoly::Monomial& g, int pairs) {
  // The generator list of a monomial: e^{+-1} repeated, p, b_i, g_i.
  auto generators = [pairs](const CoordPoly::Monomial& m) {
    std::vector<CoordPoly::Monomial> out;
    for (std::size_t s = 0; s < m.size(); ++s) {
      const int count = s == 0 ? std::abs(m[s]) : m[s];
      for (int i = 0; i < count; ++i) {
        CoordPoly::Monomial unit(m.size(), 0);
        unit[s] = (s == 0 && m[s] < 0) ? -1 : 1;
        out.push_back(unit);
      }
    }
    (void)pairs;
    return out;
  };
  // {x, y} for single generators.
  auto basic = [pairs](const CoordPoly::Monomial& x, const CoordPoly::Monomial& y) {
    CoordPoly r(pairs);
    const std::size_t w = x.size();
    if (x[1] == 1 && y[0] != 0) r.add_term(y, y[0]);
    if (y[1] == 1 && x[0] != 0) r.add_term(x, -x[0]);
    for (int i = 0; i < pairs; ++i) {
      const std::size_t bs = 2 + static_cast<std::size_t>(i);
      const std::size_t gs = 2 + static_cast<std::size_t>(pairs + i);
      if (x[bs] == 1 && y[gs] == 1) r.add_term(CoordPoly::Monomial(w, 0), 1);
      if (x[gs] == 1 && y[bs] == 1) r.add_term(CoordPoly::Monomial(w, 0), -1);
    }
    return r;
  };
  const auto fx = generators(f);
  const auto gy = generators(g);
  CoordPoly total(pairs);
  for (std::size_t i = 0; i < fx.size(); ++i) {
    for (std::size_t j = 0; j < gy.size(); ++j) {
      CoordPoly rest = basic(fx[i], gy[j]);
      for (std::size_t k = 0; k < fx.size(); ++k) {
        if (k != i) rest = rest * CoordPoly::monomial(pairs, fx[k]);
      }
      for (std::size_t k = 0; k < gy.size(); ++k) {
        if (k != j) rest = rest * CoordPoly::monomial(pairs, gy[k]);
      }
      total += rest;
    }
  }
  return total;
}

/// Faithful action of the Weyl algebra on Laurent polynomials in y and
/// polynomials in x_1..x_m, with hbar specialized to a rational number:
/// e -> y, p -> hbar y d/dy, b_i -> x_i, g_i -> -hbar d/dx_i.
class WeylOperators {
 public:
  using Key = std::vector<int>;  // [y, x_1..x_m]
  using Fn = std::map<Key, Rational>;

  WeylOperators(int pairs, Rational hbar) : pairs_(pairs), hbar_(std::move(hbar)) {}

  Fn apply(const NCPoly& a, const Fn& f) const {
    Fn out;
    for (const auto& [k, c] : a.terms()) {
      Fn g = f;
      for (int i = 0; i < pairs_; ++i) {
        for (int r = 0; r < k[3 + static_cast<std::size_t>(pairs_ + i)]; ++r) g = d_x(g, i);
      }
      for (int i = 0; i < pairs_; ++i) {
        for (int r = 0; r < k[3 + static_cast<std::size_t>(i)]; ++r) g = mul_x(g, i);
      }
      for (int r = 0; r < k[2]; ++r) g = euler(g);
      g = shift_y(g, k[1]);
      Rational scale = c;
      for (int r = 0; r < k[0]; ++r) scale *= hbar_;
      for (const auto& [m, v] : g) add(out, m, v * scale);
    }
    return out;
  }

 private:
  static void add(Fn& f, const Key& k, const Rational& c) {
    if (c == 0) return;
    Rational& slot = f[k];
    slot += c;
    if (slot == 0) f.erase(k);
  }
  Fn d_x(const Fn& f, int i) const {
    Fn out;
    const auto s = static_cast<std::size_t>(1 + i);
    for (const auto& [k, c] : f) {
      if (k[s] == 0) continue;
      Key m = k;
      m[s] -= 1;
      add(out, m, -hbar_ * c * k[s]);
    }
    return out;
  }
  Fn mul_x(const Fn& f, int i) const {
    Fn out;
    const auto s = static_cast<std::size_t>(1 + i);
    for (const auto& [k, c] : f) {
      Key m = k;
      m[s] += 1;
      add(out, m, c);
    }
    return out;
  }
  Fn euler(const Fn& f) const {
    Fn out;
    for (const auto& [k, c] : f) add(out, k, hbar_ * c * k[0]);
    return out;
  }
  Fn shift_y(const Fn& f, int a) const {
    Fn out;
    for (const auto& [k, c] : f) {
      Key m = k;
      m[0] += a;
      add(out, m, c);
    }
    return out;
  }

  int pairs_;
  Rational hbar_;
};

}  // namespace testing
