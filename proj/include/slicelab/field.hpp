#pragma once

// Exact arithmetic in Q, Q[t] and Q(t), plus expansion of rational
// functions at t = infinity. Formal series in 1/t are never stored; every
// series that occurs is the expansion of some RatFunc.

#include <gmpxx.h>

#include <climits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace slicelab {

/// Arbitrary-precision rational, always kept canonical (den > 0, coprime).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
/// "a/b", or "a" when b = 1.
std::string to_string(const Rational& q);
/// Accepts "a", "-a", "a/b"; throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

/// Dense univariate polynomial over Q, ascending coefficients, no trailing
/// zeros. The zero polynomial has an empty coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  /// The indeterminate t.
  static Poly t();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i; zero outside the stored range.
  Rational coeff(int i) const;
  /// Leading coefficient; the zero polynomial reports 0.
  Rational leading() const;
  Rational eval(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws DivisionByZero when b = 0.
PolyDivMod divmod(const Poly& a, const Poly& b);
/// Division that is known to be exact (remainder discarded).
Poly exact_quotient(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

std::string to_string(const Poly& p, char var = 't');
std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Element of Q(t): coprime numerator and monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  RatFunc(const Rational& c);  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(Poly p);  // NOLINT(google-explicit-constructor)
  /// Normalizes; throws DivisionByZero on a zero denominator.
  RatFunc(Poly num, Poly den);

  static RatFunc t() { return RatFunc(Poly::t()); }
  /// t^k for any integer k.
  static RatFunc t_pow(int k);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Leading coefficient of the expansion at infinity (0 for f = 0).
  Rational leading() const { return num_.leading(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& g);
  RatFunc& operator-=(const RatFunc& g);
  RatFunc& operator*=(const RatFunc& g);
  RatFunc& operator/=(const RatFunc& g);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

RatFunc rf_arith(ArithOp op, const RatFunc& f, const RatFunc& g);

/// Order of vanishing at t = infinity, deg(den) - deg(num).
inline constexpr int kOrdInfinity = INT_MAX;
int ord_inf(const RatFunc& f);

/// The polynomial q with ord_inf(f - q) >= 1.
Poly poly_part(const RatFunc& f);

/// Coefficient of t^{-j} in the Laurent expansion of f at infinity.
Rational series_coeff(const RatFunc& f, int j);

/// Coefficients of t^{-1}, ..., t^{-count} of the proper part of f.
std::vector<Rational> proper_series(const RatFunc& f, int count);

std::string to_string(const RatFunc& f);
std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace slicelab
