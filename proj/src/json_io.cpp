#include "slicelab/json_io.hpp"

#include "slicelab/errors.hpp"

namespace slicelab::json_io {

namespace {

[[noreturn]] void bad(const std::string& what, const json& j) {
  throw InvalidArgument("expected " + what + ", got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("object with key \"") + key + "\"", j);
  return j.at(key);
}

int as_int(const json& j) {
  if (!j.is_number_integer()) bad("integer", j);
  return j.get<int>();
}

std::vector<int> as_int_vector(const json& j) {
  if (!j.is_array()) bad("integer array", j);
  std::vector<int> v;
  for (const auto& x : j) v.push_back(as_int(x));
  return v;
}

std::vector<Rational> as_rational_vector(const json& j) {
  if (!j.is_array()) bad("array of rationals", j);
  std::vector<Rational> v;
  for (const auto& x : j) v.push_back(decode_rational(x));
  return v;
}

json encode_vector(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

}  // namespace

json encode(const Rational& q) { return to_string(q); }

Rational decode_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  bad("rational string", j);
}

json encode(const Poly& p) { return encode_vector(p.coeffs()); }

Poly decode_poly(const json& j) { return Poly(as_rational_vector(j)); }

json encode(const RatFunc& f) { return json{{"num", encode(f.num())}, {"den", encode(f.den())}}; }

RatFunc decode_ratfunc(const json& j) {
  if (j.is_string() || j.is_number_integer()) return RatFunc(decode_rational(j));
  const Poly den = decode_poly(field(j, "den"));
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  return RatFunc(decode_poly(field(j, "num")), den);
}

json encode(const MatQt& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(encode(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatQt decode_matrix(const json& j) {
  if (!j.is_array() || j.empty()) bad("non-empty square matrix", j);
  const std::size_t n = j.size();
  MatQt m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) bad("square matrix", j);
    for (std::size_t k = 0; k < n; ++k) m(i, k) = decode_ratfunc(j[i][k]);
  }
  return m;
}

json encode(const Coweight& mu) { return mu.components(); }

Coweight decode_coweight(const json& j) { return Coweight(as_int_vector(j)); }

json encode(const GaussForm& g) {
  return json{{"U", encode(g.U)}, {"H", encode(g.H)}, {"mu", encode(g.mu)}, {"L", encode(g.L)}};
}

json encode(const SlicePoint& y) {
  return json{{"n", y.size()}, {"mu", encode(y.mu())}, {"matrix", encode(y.matrix())}};
}

SlicePoint decode_slice_point(const json& j) {
  MatQt x = decode_matrix(field(j, "matrix"));
  const Coweight mu = decode_coweight(field(j, "mu"));
  if (j.contains("n") && as_int(j.at("n")) != static_cast<int>(x.size())) bad("\"n\" equal to the matrix size", j);
  return SlicePoint::from_matrix(std::move(x), mu);
}

json encode(const CorootInterval& a) { return json{{"r1", a.r1}, {"r2", a.r2}, {"n", a.n}}; }

CorootInterval decode_coroot(const json& j) {
  return CorootInterval::make(as_int(field(j, "r1")), as_int(field(j, "r2")), as_int(field(j, "n")));
}

json encode(const ZastavaPoint& z) {
  return json{{"alpha", encode(z.alpha)},
              {"p", encode(z.p)},
              {"e", encode(z.e)},
              {"b", encode_vector(z.b)},
              {"g", encode_vector(z.g)}};
}

ZastavaPoint decode_zastava(const json& j) {
  ZastavaPoint z;
  z.alpha = decode_coroot(field(j, "alpha"));
  z.p = decode_rational(field(j, "p"));
  z.e = decode_rational(field(j, "e"));
  z.b = j.contains("b") ? as_rational_vector(j.at("b")) : std::vector<Rational>{};
  z.g = j.contains("g") ? as_rational_vector(j.at("g")) : std::vector<Rational>{};
  validate(z);
  return z;
}

json encode(const MomentVector& m) { return json{{"alpha", encode(m.alpha)}, {"values", encode_vector(m.values)}}; }

json encode(const SplitPair& s) { return json{{"zastava", encode(s.zast)}, {"rest", encode(s.rest)}}; }

json encode(const Partition& mu) { return mu.parts(); }

Partition decode_partition(const json& j) { return Partition(as_int_vector(j)); }

json encode(const QuiverData& q) { return json{{"dimV", q.dimV}, {"dimW", q.dimW}}; }

json encode(const NCPoly& a) {
  json terms = json::array();
  const auto m = static_cast<std::size_t>(a.pairs());
  for (const auto& [k, c] : a.terms()) {
    terms.push_back(json{{"hbar", k[0]},
                         {"e", k[1]},
                         {"p", k[2]},
                         {"b", std::vector<int>(k.begin() + 3, k.begin() + 3 + static_cast<long>(m))},
                         {"g", std::vector<int>(k.begin() + 3 + static_cast<long>(m), k.end())},
                         {"coeff", encode(c)}});
  }
  return terms;
}

NCPoly decode_ncpoly(const json& j, int pairs) {
  if (!j.is_array()) bad("term list", j);
  if (pairs < 0) {
    if (j.empty()) throw InvalidArgument("empty term list needs an explicit number of pairs");
    pairs = static_cast<int>(field(j[0], "b").size());
  }
  NCPoly a(pairs);
  for (const auto& t : j) {
    NCPoly::Key k{as_int(field(t, "hbar")), as_int(field(t, "e")), as_int(field(t, "p"))};
    const std::vector<int> b = as_int_vector(field(t, "b"));
    const std::vector<int> g = as_int_vector(field(t, "g"));
    if (b.size() != static_cast<std::size_t>(pairs) || g.size() != static_cast<std::size_t>(pairs)) {
      bad("b and g arrays of length " + std::to_string(pairs), t);
    }
    k.insert(k.end(), b.begin(), b.end());
    k.insert(k.end(), g.begin(), g.end());
    a += NCPoly::term(pairs, std::move(k), decode_rational(field(t, "coeff")));
  }
  return a;
}

json encode(const CoordPoly& f) {
  json terms = json::array();
  const auto m = static_cast<std::size_t>(f.pairs());
  for (const auto& [k, c] : f.terms()) {
    terms.push_back(json{{"e", k[0]},
                         {"p", k[1]},
                         {"b", std::vector<int>(k.begin() + 2, k.begin() + 2 + static_cast<long>(m))},
                         {"g", std::vector<int>(k.begin() + 2 + static_cast<long>(m), k.end())},
                         {"coeff", encode(c)}});
  }
  return terms;
}

json encode(const MembershipReport& r) {
  static const char* const names[] = {"none", "big-cell", "diagonal", "upper", "lower", "coweight"};
  json out{{"ok", r.ok}};
  if (!r.ok) {
    out["factor"] = names[static_cast<int>(r.factor)];
    if (r.row != 0) {
      out["row"] = r.row;
      out["col"] = r.col;
      out["ord"] = r.ord;
    }
    out["reason"] = r.reason;
  }
  return out;
}

}  // namespace slicelab::json_io
