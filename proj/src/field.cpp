#include "slicelab/field.hpp"

#include <algorithm>
#include <sstream>

#include "slicelab/errors.hpp"

namespace slicelab {

// ---------------------------------------------------------------------------
// Rational

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return std::string(s);
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(strip_plus(num));
  mpz_class d(strip_plus(den));
  if (d == 0) throw DivisionByZero("rational '" + std::string(text) + "' has zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  strip();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::t() { return monomial(1, 1); }

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void Poly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  strip();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  strip();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return Poly(std::move(out));
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Rational inv_lead = 1 / bc.back();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  Rational tmp;
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational q = top * inv_lead;
    for (int j = 0; j <= db; ++j) {
      mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), bc[static_cast<std::size_t>(j)].get_mpq_t());
      rem[static_cast<std::size_t>(i - db + j)] -= tmp;
    }
    quot[static_cast<std::size_t>(i - db)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  if (b.degree() == 0) return a * (1 / b.leading());
  return divmod(a, b).quotient;
}

Poly monic(const Poly& p) {
  if (p.is_zero() || p.leading() == 1) return p;
  return p * (1 / p.leading());
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = monic(a);
  Poly y = monic(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return Poly::constant(1);
    Poly r = monic(divmod(x, y).remainder);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = c == 1;
    if (i == 0 || !unit) {
      const bool paren = c.get_den() != 1 && i > 0;
      os << (paren ? "(" : "") << to_string(c) << (paren ? ")" : "");
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}

RatFunc::RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den.degree() > 0) {
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  const Rational lead = den.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::t_pow(int k) {
  if (k >= 0) return RatFunc(Poly::monomial(1, k));
  return RatFunc(Poly::constant(1), Poly::monomial(1, -k));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

// Henrici-style sums and products keep intermediate degrees small.
RatFunc& RatFunc::operator+=(const RatFunc& g) {
  if (g.is_zero()) return *this;
  if (is_zero()) return *this = g;
  if (den_.degree() == 0 && g.den_.degree() == 0) {
    num_ += g.num_;
    return *this;
  }
  Poly d = gcd(den_, g.den_);
  if (d.degree() == 0) {
    Poly n = num_ * g.den_ + g.num_ * den_;
    den_ = den_ * g.den_;
    num_ = std::move(n);
    if (num_.is_zero()) den_ = Poly::constant(1);
    return *this;
  }
  Poly a = exact_quotient(den_, d);
  Poly b = exact_quotient(g.den_, d);
  Poly n = num_ * b + g.num_ * a;
  if (n.is_zero()) return *this = RatFunc();
  Poly den = den_ * b;
  Poly h = gcd(n, d);
  if (h.degree() > 0) {
    n = exact_quotient(n, h);
    den = exact_quotient(den, h);
  }
  num_ = std::move(n);
  den_ = std::move(den);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& g) { return *this += -g; }

RatFunc& RatFunc::operator*=(const RatFunc& g) {
  if (is_zero() || g.is_zero()) return *this = RatFunc();
  if (den_.degree() == 0 && g.den_.degree() == 0) {
    num_ = num_ * g.num_;
    return *this;
  }
  Poly g1 = gcd(num_, g.den_);
  Poly g2 = gcd(g.num_, den_);
  Poly n1 = g1.degree() > 0 ? exact_quotient(num_, g1) : num_;
  Poly d2 = g1.degree() > 0 ? exact_quotient(g.den_, g1) : g.den_;
  Poly n2 = g2.degree() > 0 ? exact_quotient(g.num_, g2) : g.num_;
  Poly d1 = g2.degree() > 0 ? exact_quotient(den_, g2) : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& g) {
  if (g.is_zero()) throw DivisionByZero("division by the zero rational function");
  return *this *= RatFunc(g.den_, g.num_);
}

RatFunc rf_arith(ArithOp op, const RatFunc& f, const RatFunc& g) {
  switch (op) {
    case ArithOp::Add: return f + g;
    case ArithOp::Sub: return f - g;
    case ArithOp::Mul: return f * g;
    case ArithOp::Div: return f / g;
  }
  throw InvalidArgument("unknown arithmetic operation");
}

int ord_inf(const RatFunc& f) {
  if (f.is_zero()) return kOrdInfinity;
  return f.den().degree() - f.num().degree();
}

Poly poly_part(const RatFunc& f) {
  if (f.den().degree() == 0) return f.num();
  return divmod(f.num(), f.den()).quotient;
}

std::vector<Rational> proper_series(const RatFunc& f, int count) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(count, 0)) + 1);  // c[s] = coeff of t^{-s}
  const Poly& den = f.den();
  const int m = den.degree();
  if (m == 0 || count <= 0) return std::vector<Rational>(static_cast<std::size_t>(std::max(count, 0)));
  const Poly rem = divmod(f.num(), den).remainder;
  // rem = den * sum_{s>=1} c_s t^{-s}; compare coefficients of t^{m-s}.
  for (int s = 1; s <= count; ++s) {
    Rational v = rem.coeff(m - s);
    for (int i = std::max(0, m - s + 1); i < m; ++i) v -= den.coeff(i) * c[static_cast<std::size_t>(i - m + s)];
    c[static_cast<std::size_t>(s)] = v;  // den is monic
  }
  return std::vector<Rational>(c.begin() + 1, c.end());
}

Rational series_coeff(const RatFunc& f, int j) {
  if (j <= 0) return poly_part(f).coeff(-j);
  return proper_series(f, j).back();
}

std::string to_string(const RatFunc& f) {
  if (f.den().is_one()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_string(f); }

}  // namespace slicelab
