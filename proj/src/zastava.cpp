#include "slicelab/zastava.hpp"

#include <cstdlib>
#include <sstream>

#include "slicelab/errors.hpp"

namespace slicelab {

CorootInterval CorootInterval::make(int r1, int r2, int n) {
  if (n < 2 || r1 < 1 || r1 > r2 || r2 > n - 1) {
    throw InvalidArgument("invalid coroot interval (r1=" + std::to_string(r1) + ", r2=" + std::to_string(r2) +
                          ", n=" + std::to_string(n) + "); need 1 <= r1 <= r2 <= n-1");
  }
  return CorootInterval{r1, r2, n};
}

Coweight CorootInterval::coweight() const {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c[static_cast<std::size_t>(r1 - 1)] = 1;
  c[static_cast<std::size_t>(r2)] = -1;
  return Coweight(std::move(c));
}

std::string to_string(const CorootInterval& a) {
  return "alpha(" + std::to_string(a.r1) + "," + std::to_string(a.r2) + ";n=" + std::to_string(a.n) + ")";
}

std::vector<CorootInterval> positive_coroots(int n) {
  std::vector<CorootInterval> out;
  for (int r1 = 1; r1 <= n - 1; ++r1) {
    for (int r2 = r1; r2 <= n - 1; ++r2) out.push_back(CorootInterval{r1, r2, n});
  }
  return out;
}

void validate(const ZastavaPoint& z) {
  const auto m = static_cast<std::size_t>(z.alpha.height() - 1);
  if (z.b.size() != m || z.g.size() != m) {
    throw InvalidCoordinate("expected " + std::to_string(m) + " b and g coordinates for " + to_string(z.alpha));
  }
  if (z.e == 0) throw InvalidCoordinate("coordinate e must be nonzero");
}

MatQt zastava_matrix(const ZastavaPoint& z) {
  validate(z);
  const auto n = static_cast<std::size_t>(z.alpha.n);
  const auto k = static_cast<std::size_t>(z.alpha.height());
  const std::size_t s = z.alpha.block_start();
  MatQt x = MatQt::identity(n);
  // Block rows/cols s..s+k; the middle rows keep their identity diagonal.
  x(s, s) = RatFunc();
  x(s, s + k) = RatFunc(z.e);
  for (std::size_t i = 1; i < k; ++i) x(s + i, s + k) = RatFunc(z.b[k - 1 - i]);
  x(s + k, s) = RatFunc(Rational(-1 / z.e));
  for (std::size_t j = 1; j < k; ++j) x(s + k, s + j) = RatFunc(Rational(-z.g[k - 1 - j]));
  Rational c = -z.p;
  for (std::size_t i = 0; i + 1 < k; ++i) c -= z.b[i] * z.g[i];
  x(s + k, s + k) = RatFunc(Poly(std::vector<Rational>{c, Rational(1)}));
  return x;
}

SlicePoint zastava_to_matrix(const ZastavaPoint& z) {
  return SlicePoint::from_matrix(zastava_matrix(z), Coweight::zero(static_cast<std::size_t>(z.alpha.n)) -
                                                        z.alpha.coweight());
}

ZastavaPoint matrix_to_zastava(const SlicePoint& y, const CorootInterval& alpha) {
  if (y.size() != static_cast<std::size_t>(alpha.n)) throw NotInChart("matrix size does not match the coroot");
  const Coweight minus_alpha = Coweight::zero(y.size()) - alpha.coweight();
  if (!pgl_equal(y.mu(), minus_alpha)) {
    throw NotInChart("coweight " + to_string(y.mu()) + " is not -" + to_string(alpha));
  }
  const MatQt& x = y.matrix();
  const auto k = static_cast<std::size_t>(alpha.height());
  const std::size_t s = alpha.block_start();
  auto constant_at = [&](std::size_t i, std::size_t j) -> Rational {
    const RatFunc& v = x(i, j);
    if (!v.is_polynomial() || v.num().degree() > 0) {
      throw NotInChart("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not constant");
    }
    return v.num().coeff(0);
  };
  ZastavaPoint z;
  z.alpha = alpha;
  z.e = constant_at(s, s + k);
  if (z.e == 0) throw NotInChart("coordinate e vanishes");
  z.b.resize(k - 1);
  z.g.resize(k - 1);
  for (std::size_t i = 1; i < k; ++i) z.b[k - 1 - i] = constant_at(s + i, s + k);
  for (std::size_t j = 1; j < k; ++j) z.g[k - 1 - j] = -constant_at(s + k, s + j);
  const RatFunc& corner = x(s + k, s + k);
  if (!corner.is_polynomial() || corner.num().degree() != 1 || corner.num().coeff(1) != 1) {
    throw NotInChart("corner entry is not t - const");
  }
  Rational p = -corner.num().coeff(0);
  for (std::size_t i = 0; i + 1 < k; ++i) p -= z.b[i] * z.g[i];
  z.p = p;
  // Every other entry must match the chart exactly.
  if (!(zastava_matrix(z) == x)) throw NotInChart("matrix is not of the chart shape for " + to_string(alpha));
  return z;
}

ZastavaPoint translate(const ZastavaPoint& z, std::span<const Rational> v) {
  const auto k = static_cast<std::size_t>(z.alpha.height());
  if (v.size() != k) throw InvalidArgument("translation vector must have length " + std::to_string(k));
  ZastavaPoint out = z;
  for (std::size_t i = 0; i + 1 < k; ++i) out.g[i] += v[i];
  out.p += v[k - 1] * z.e;
  return out;
}

// ---------------------------------------------------------------------------
// CoordPoly

namespace {

std::size_t width(int pairs) { return 2 + 2 * static_cast<std::size_t>(pairs); }

}  // namespace

CoordPoly CoordPoly::constant(int pairs, const Rational& c) {
  CoordPoly f(pairs);
  f.add_term(Monomial(width(pairs), 0), c);
  return f;
}

CoordPoly CoordPoly::monomial(int pairs, Monomial exps, const Rational& c) {
  if (exps.size() != width(pairs)) throw InvalidArgument("monomial exponent vector has wrong length");
  CoordPoly f(pairs);
  f.add_term(exps, c);
  return f;
}

CoordPoly CoordPoly::p(int pairs) {
  Monomial m(width(pairs), 0);
  m[1] = 1;
  return monomial(pairs, std::move(m));
}

CoordPoly CoordPoly::e(int pairs, int power) {
  Monomial m(width(pairs), 0);
  m[0] = power;
  return monomial(pairs, std::move(m));
}

CoordPoly CoordPoly::b(int pairs, int i) {
  if (i < 1 || i > pairs) throw InvalidArgument("b index out of range");
  Monomial m(width(pairs), 0);
  m[1 + static_cast<std::size_t>(i)] = 1;
  return monomial(pairs, std::move(m));
}

CoordPoly CoordPoly::g(int pairs, int i) {
  if (i < 1 || i > pairs) throw InvalidArgument("g index out of range");
  Monomial m(width(pairs), 0);
  m[1 + static_cast<std::size_t>(pairs + i)] = 1;
  return monomial(pairs, std::move(m));
}

void CoordPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int CoordPoly::degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = std::abs(m[0]);
    for (std::size_t i = 1; i < m.size(); ++i) d += m[i];
    best = std::max(best, d);
  }
  return best;
}

Rational CoordPoly::eval(const ZastavaPoint& z) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    Rational base = m[0] >= 0 ? z.e : Rational(1 / z.e);
    for (int i = 0; i < std::abs(m[0]); ++i) v *= base;
    for (int i = 0; i < m[1]; ++i) v *= z.p;
    for (int j = 0; j < pairs_; ++j) {
      for (int i = 0; i < m[2 + static_cast<std::size_t>(j)]; ++i) v *= z.b[static_cast<std::size_t>(j)];
      for (int i = 0; i < m[2 + static_cast<std::size_t>(pairs_ + j)]; ++i) v *= z.g[static_cast<std::size_t>(j)];
    }
    acc += v;
  }
  return acc;
}

CoordPoly CoordPoly::operator-() const {
  CoordPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

CoordPoly& CoordPoly::operator+=(const CoordPoly& o) {
  if (o.pairs_ != pairs_ && !o.is_zero()) throw InvalidArgument("coordinate polynomials over different charts");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CoordPoly& CoordPoly::operator-=(const CoordPoly& o) {
  if (o.pairs_ != pairs_ && !o.is_zero()) throw InvalidArgument("coordinate polynomials over different charts");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CoordPoly operator*(const CoordPoly& a, const CoordPoly& b) {
  if (a.pairs_ != b.pairs_) throw InvalidArgument("coordinate polynomials over different charts");
  CoordPoly r(a.pairs_);
  CoordPoly::Monomial m(width(a.pairs_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

CoordPoly operator*(CoordPoly a, const Rational& c) {
  if (c == 0) return CoordPoly(a.pairs_);
  for (auto& [m, v] : a.terms_) v *= c;
  return a;
}

std::string to_string(const CoordPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const int pairs = f.pairs();
  for (const auto& [m, c] : f.terms()) {
    os << (first ? "" : " + ");
    first = false;
    os << to_string(c);
    if (m[0] != 0) os << "*e^" << m[0];
    if (m[1] != 0) os << "*p^" << m[1];
    for (int j = 0; j < pairs; ++j) {
      if (int x = m[2 + static_cast<std::size_t>(j)]; x != 0) os << "*b" << j + 1 << "^" << x;
      if (int x = m[2 + static_cast<std::size_t>(pairs + j)]; x != 0) os << "*g" << j + 1 << "^" << x;
    }
  }
  return os.str();
}

namespace {

// Partial derivative of f by the symbol at exponent slot `slot`; for the e
// slot this is the Euler operator e * d/de.
CoordPoly derive(const CoordPoly& f, std::size_t slot) {
  CoordPoly r(f.pairs());
  for (const auto& [m, c] : f.terms()) {
    const int x = m[slot];
    if (x == 0) continue;
    CoordPoly::Monomial dm = m;
    if (slot != 0) dm[slot] -= 1;
    r.add_term(dm, c * x);
  }
  return r;
}

}  // namespace

CoordPoly poisson_bracket(const CoordPoly& f, const CoordPoly& g) {
  if (f.pairs() != g.pairs()) throw InvalidArgument("coordinate polynomials over different charts");
  const int pairs = f.pairs();
  // {f, g} = f_p (e g_e) - (e f_e) g_p + sum_i (f_{b_i} g_{g_i} - f_{g_i} g_{b_i})
  CoordPoly r = derive(f, 1) * derive(g, 0) - derive(f, 0) * derive(g, 1);
  for (int i = 0; i < pairs; ++i) {
    const std::size_t bs = 2 + static_cast<std::size_t>(i);
    const std::size_t gs = 2 + static_cast<std::size_t>(pairs + i);
    r += derive(f, bs) * derive(g, gs);
    r -= derive(f, gs) * derive(g, bs);
  }
  return r;
}

std::vector<CoordPoly::Monomial> coord_monomials(int pairs, int max_degree) {
  std::vector<CoordPoly::Monomial> out;
  const std::size_t w = width(pairs);
  CoordPoly::Monomial m(w, 0);
  // Distribute the remaining degree over slots 1..w-1 recursively.
  auto fill = [&](auto&& self, std::size_t slot, int budget) -> void {
    if (slot == w) {
      out.push_back(m);
      return;
    }
    for (int x = 0; x <= budget; ++x) {
      m[slot] = x;
      self(self, slot + 1, budget - x);
    }
    m[slot] = 0;
  };
  for (int a = -max_degree; a <= max_degree; ++a) {
    m[0] = a;
    fill(fill, 1, max_degree - std::abs(a));
  }
  return out;
}

}  // namespace slicelab
