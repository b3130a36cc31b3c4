#include "slicelab/weyl.hpp"

#include <sstream>

#include "slicelab/errors.hpp"

namespace slicelab {

namespace {

std::size_t width(int pairs) { return 3 + 2 * static_cast<std::size_t>(pairs); }

void check_pairs(const NCPoly& a, const NCPoly& b) {
  if (a.pairs() != b.pairs()) throw InvalidArgument("Weyl algebra elements over different charts");
}

// C(n, j) for small n.
Rational binom(int n, int j) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  return Rational(r);
}

Rational factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational power(const Rational& x, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// A partial product: coefficient together with the exponent key built so far.
using Partial = std::map<NCPoly::Key, Rational>;

void accumulate(Partial& out, const NCPoly::Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = out.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

// (hbar^h1 e^a1 p^m1 B1 G1)(hbar^h2 e^a2 p^m2 B2 G2) in normal form.
void multiply_terms(const NCPoly::Key& x, const NCPoly::Key& y, const Rational& c, int pairs, Partial& out) {
  // p^m1 e^a2 = e^a2 (p + a2 hbar)^m1
  Partial cur;
  {
    NCPoly::Key k(width(pairs), 0);
    k[1] = x[1] + y[1];
    const int m1 = x[2];
    const Rational shift = y[1];
    for (int j = 0; j <= m1; ++j) {
      k[0] = x[0] + y[0] + j;
      k[2] = m1 - j + y[2];
      accumulate(cur, k, c * binom(m1, j) * power(shift, j));
    }
  }
  // g_i^d1 b_i^c2 = sum_j (-hbar)^j j! C(d1, j) C(c2, j) b_i^{c2-j} g_i^{d1-j}
  for (int i = 0; i < pairs; ++i) {
    const std::size_t bs = 3 + static_cast<std::size_t>(i);
    const std::size_t gs = 3 + static_cast<std::size_t>(pairs + i);
    const int c1 = x[bs], d1 = x[gs], c2 = y[bs], d2 = y[gs];
    Partial next;
    const int top = std::min(d1, c2);
    for (const auto& [k, v] : cur) {
      NCPoly::Key nk = k;
      for (int j = 0; j <= top; ++j) {
        nk[0] = k[0] + j;
        nk[bs] = c1 + c2 - j;
        nk[gs] = d1 + d2 - j;
        const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
        accumulate(next, nk, v * sign * factorial(j) * binom(d1, j) * binom(c2, j));
      }
    }
    cur = std::move(next);
  }
  for (const auto& [k, v] : cur) accumulate(out, k, v);
}

}  // namespace

NCPoly NCPoly::term(int pairs, Key key, const Rational& c) {
  if (key.size() != width(pairs)) throw InvalidArgument("Weyl algebra exponent vector has wrong length");
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i != 1 && key[i] < 0) throw InvalidArgument("only the e exponent may be negative");
  }
  NCPoly a(pairs);
  a.add_term(key, c);
  return a;
}

NCPoly NCPoly::constant(int pairs, const Rational& c) { return term(pairs, Key(width(pairs), 0), c); }

NCPoly NCPoly::hbar(int pairs) {
  Key k(width(pairs), 0);
  k[0] = 1;
  return term(pairs, std::move(k));
}

NCPoly NCPoly::e(int pairs, int power) {
  Key k(width(pairs), 0);
  k[1] = power;
  return term(pairs, std::move(k));
}

NCPoly NCPoly::p(int pairs) {
  Key k(width(pairs), 0);
  k[2] = 1;
  return term(pairs, std::move(k));
}

NCPoly NCPoly::b(int pairs, int i) {
  if (i < 1 || i > pairs) throw InvalidArgument("b index out of range");
  Key k(width(pairs), 0);
  k[2 + static_cast<std::size_t>(i)] = 1;
  return term(pairs, std::move(k));
}

NCPoly NCPoly::g(int pairs, int i) {
  if (i < 1 || i > pairs) throw InvalidArgument("g index out of range");
  Key k(width(pairs), 0);
  k[2 + static_cast<std::size_t>(pairs + i)] = 1;
  return term(pairs, std::move(k));
}

void NCPoly::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check_pairs(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check_pairs(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

NCPoly operator*(NCPoly a, const Rational& c) {
  if (c == 0) return NCPoly(a.pairs_);
  for (auto& [k, v] : a.terms_) v *= c;
  return a;
}

std::string to_string(const NCPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto pairs = static_cast<std::size_t>(a.pairs());
  for (const auto& [k, c] : a.terms()) {
    os << (first ? "" : " + ");
    first = false;
    os << to_string(c);
    if (k[0] != 0) os << "*hbar^" << k[0];
    if (k[1] != 0) os << "*e^" << k[1];
    if (k[2] != 0) os << "*p^" << k[2];
    for (std::size_t j = 0; j < pairs; ++j) {
      if (k[3 + j] != 0) os << "*b" << j + 1 << "^" << k[3 + j];
    }
    for (std::size_t j = 0; j < pairs; ++j) {
      if (k[3 + pairs + j] != 0) os << "*g" << j + 1 << "^" << k[3 + pairs + j];
    }
  }
  return os.str();
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
  check_pairs(a, b);
  Partial out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) multiply_terms(x, y, cx * cy, a.pairs(), out);
  }
  NCPoly r(a.pairs());
  for (const auto& [k, c] : out) r.add_term(k, c);
  return r;
}

NCPoly nc_comm(const NCPoly& a, const NCPoly& b) { return nc_mul(a, b) - nc_mul(b, a); }

namespace {

CoordPoly hbar_slice(const NCPoly& a, int h) {
  CoordPoly r(a.pairs());
  for (const auto& [k, c] : a.terms()) {
    if (k[0] != h) continue;
    r.add_term(CoordPoly::Monomial(k.begin() + 1, k.end()), c);
  }
  return r;
}

}  // namespace

CoordPoly symbol(const NCPoly& a) { return hbar_slice(a, 0); }

CoordPoly semiclassical(const NCPoly& a, const NCPoly& b) { return hbar_slice(nc_comm(a, b), 1); }

int grading_weight(const NCPoly::Key& k, int pairs) {
  int w = k[0] + k[1] + k[2];
  for (int i = 0; i < pairs; ++i) w += k[3 + static_cast<std::size_t>(i)];
  return w;
}

bool is_homogeneous(const NCPoly& a) {
  bool seen = false;
  int w = 0;
  for (const auto& [k, c] : a.terms()) {
    const int x = grading_weight(k, a.pairs());
    if (seen && x != w) return false;
    seen = true;
    w = x;
  }
  return true;
}

}  // namespace slicelab
