#pragma once

// The localized Weyl algebra on p, e^{+-1}, b_i, g_i over Q[hbar] with
// [p, e^{+-1}] = +-hbar e^{+-1} and [b_i, g_i] = hbar, in PBW normal form
// hbar^h e^a p^m b^c g^d.

#include <map>
#include <string>
#include <vector>

#include "slicelab/field.hpp"
#include "slicelab/zastava.hpp"

namespace slicelab {

class NCPoly {
 public:
  /// Exponents [hbar, e, p, b_1..b_m, g_1..g_m]; only the e exponent may be
  /// negative.
  using Key = std::vector<int>;

  NCPoly() = default;
  explicit NCPoly(int pairs) : pairs_(pairs) {}

  static NCPoly constant(int pairs, const Rational& c);
  static NCPoly hbar(int pairs);
  static NCPoly p(int pairs);
  static NCPoly e(int pairs, int power = 1);
  static NCPoly b(int pairs, int i);  ///< 1-based
  static NCPoly g(int pairs, int i);  ///< 1-based
  static NCPoly term(int pairs, Key key, const Rational& c = 1);

  int pairs() const { return pairs_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  void add_term(const Key& k, const Rational& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rational& c);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.pairs_ == b.pairs_ && a.terms_ == b.terms_; }

 private:
  int pairs_ = 0;
  std::map<Key, Rational> terms_;
};

std::string to_string(const NCPoly& a);

NCPoly nc_mul(const NCPoly& a, const NCPoly& b);
NCPoly nc_comm(const NCPoly& a, const NCPoly& b);

/// The hbar^0 part, read as a commutative coordinate polynomial.
CoordPoly symbol(const NCPoly& a);
/// The hbar^1 coefficient of [a, b].
CoordPoly semiclassical(const NCPoly& a, const NCPoly& b);

/// Weight with p, b_i, e and hbar of weight 1 and g_i of weight 0.
int grading_weight(const NCPoly::Key& k, int pairs);
/// True when every term has the same weight (the zero element counts).
bool is_homogeneous(const NCPoly& a);

}  // namespace slicelab
