#pragma once

// Darboux chart (p, e, b_1..b_{k-1}, g_1..g_{k-1}) on the open Zastava slice
// Gr^0_{-alpha} for a positive coroot alpha = alpha_{r1} + ... + alpha_{r2},
// its translation action, and the Poisson bracket on coordinate functions.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "slicelab/field.hpp"
#include "slicelab/matgrp.hpp"

namespace slicelab {

/// Positive coroot alpha_{(r1,r2)} of PGL_n; 1 <= r1 <= r2 <= n-1 (1-based).
struct CorootInterval {
  int r1 = 1;
  int r2 = 1;
  int n = 2;

  /// Validates the bounds; throws InvalidArgument.
  static CorootInterval make(int r1, int r2, int n);

  int height() const { return r2 - r1 + 1; }
  /// 0-based index of the first row/column of the (k+1) x (k+1) block.
  std::size_t block_start() const { return static_cast<std::size_t>(r1 - 1); }
  /// +1 at position r1, -1 at position r2+1.
  Coweight coweight() const;

  friend bool operator==(const CorootInterval&, const CorootInterval&) = default;
};

std::string to_string(const CorootInterval& a);

/// All positive coroots of PGL_n, ordered by (r1, r2).
std::vector<CorootInterval> positive_coroots(int n);

struct ZastavaPoint {
  CorootInterval alpha;
  Rational p;
  Rational e = 1;
  std::vector<Rational> b;  ///< b[i-1] = b_i, length k-1
  std::vector<Rational> g;  ///< g[i-1] = g_i, length k-1

  friend bool operator==(const ZastavaPoint&, const ZastavaPoint&) = default;
};

/// Checks vector lengths and e != 0; throws InvalidCoordinate.
void validate(const ZastavaPoint& z);

/// The block-diagonal matrix representative, as a point of Gr_{-alpha}.
SlicePoint zastava_to_matrix(const ZastavaPoint& z);
/// Only the matrix, without the slice bookkeeping.
MatQt zastava_matrix(const ZastavaPoint& z);

/// Inverse of the chart; throws NotInChart when y is not of the chart shape.
ZastavaPoint matrix_to_zastava(const SlicePoint& y, const CorootInterval& alpha);

/// g_i -> g_i + v_i, p -> p + v_k e; v has length k.
ZastavaPoint translate(const ZastavaPoint& z, std::span<const Rational> v);

/// Polynomial in the commuting symbols p, e^{+-1}, b_i, g_i.
class CoordPoly {
 public:
  /// Exponent vector [e, p, b_1..b_m, g_1..g_m]; the e exponent may be negative.
  using Monomial = std::vector<int>;

  CoordPoly() = default;
  explicit CoordPoly(int pairs) : pairs_(pairs) {}

  static CoordPoly constant(int pairs, const Rational& c);
  static CoordPoly p(int pairs);
  static CoordPoly e(int pairs, int power = 1);
  static CoordPoly b(int pairs, int i);  ///< 1-based
  static CoordPoly g(int pairs, int i);  ///< 1-based
  static CoordPoly monomial(int pairs, Monomial exps, const Rational& c = 1);

  /// Number of (b, g) pairs, i.e. k - 1.
  int pairs() const { return pairs_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  int degree() const;

  /// Evaluation at a chart point (needs e != 0 for negative powers).
  Rational eval(const ZastavaPoint& z) const;

  CoordPoly operator-() const;
  CoordPoly& operator+=(const CoordPoly& o);
  CoordPoly& operator-=(const CoordPoly& o);
  friend CoordPoly operator+(CoordPoly a, const CoordPoly& b) { return a += b; }
  friend CoordPoly operator-(CoordPoly a, const CoordPoly& b) { return a -= b; }
  friend CoordPoly operator*(const CoordPoly& a, const CoordPoly& b);
  friend CoordPoly operator*(CoordPoly a, const Rational& c);
  friend bool operator==(const CoordPoly& a, const CoordPoly& b) {
    return a.pairs_ == b.pairs_ && a.terms_ == b.terms_;
  }

  void add_term(const Monomial& m, const Rational& c);

 private:
  int pairs_ = 0;
  std::map<Monomial, Rational> terms_;
};

std::string to_string(const CoordPoly& f);

/// The biderivation with {p, e^a} = a e^a and {b_i, g_j} = delta_ij.
CoordPoly poisson_bracket(const CoordPoly& f, const CoordPoly& g);

/// Every monomial in the chart symbols with |e-exponent| + other exponents
/// at most max_degree.
std::vector<CoordPoly::Monomial> coord_monomials(int pairs, int max_degree);

}  // namespace slicelab
