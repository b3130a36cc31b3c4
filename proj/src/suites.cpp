#include "slicelab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include "slicelab/errors.hpp"
#include "slicelab/ihr.hpp"
#include "slicelab/json_io.hpp"
#include "slicelab/sampling.hpp"
#include "slicelab/weyl.hpp"

namespace slicelab {

namespace {

using nlohmann::json;
using json_io::encode;

constexpr int kBound = 5;
constexpr int kActBound = 5;
constexpr int kEnumerationHeight = 3;
constexpr int kBracketDegree = 3;

std::string clip(std::string s) {
  if (s.size() > 4000) s = s.substr(0, 4000) + "...";
  return s;
}

class Trial {
 public:
  Trial(SuiteReport& report, std::optional<CorootInterval> alpha, std::size_t alpha_index, long trial,
        std::uint64_t seed)
      : report(report), alpha(alpha), trial(trial), seed_(derive_seed(seed, alpha_index, static_cast<std::uint64_t>(trial))) {}

  SplitMix64 sampling_rng(int attempt) const { return SplitMix64(derive_seed(seed_, 1, static_cast<std::uint64_t>(attempt))); }
  SplitMix64 check_rng() const { return SplitMix64(derive_seed(seed_, 2, 0)); }

  void fail(const std::string& stage, const std::string& detail, const json& extra = json()) {
    json in = inputs;
    if (!extra.is_null()) in["extra"] = extra;
    report.failures.push_back(FailureRecord{trial, alpha ? to_string(*alpha) : "-", stage, std::move(in), clip(detail)});
  }

  bool expect(bool ok, const std::string& stage, const std::function<std::string()>& detail = {},
              const json& extra = json()) {
    if (!ok) fail(stage, detail ? detail() : std::string("identity does not hold"), extra);
    return ok;
  }

  /// Redraws until draw() succeeds; DecompositionFails and NotInOpenLocus
  /// count as resampling events.
  template <class F>
  auto sample(F&& draw) {
    for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
      SplitMix64 rng = sampling_rng(attempt);
      try {
        return draw(rng);
      } catch (const DecompositionFails&) {
        ++report.resamples["decomposition-fails"];
      } catch (const NotInOpenLocus&) {
        ++report.resamples["not-in-open-locus"];
      }
    }
    throw SamplingExhausted("no admissible sample after " + std::to_string(kSampleRetries) + " attempts");
  }

  SuiteReport& report;
  std::optional<CorootInterval> alpha;
  long trial;
  json inputs = json::object();

 private:
  std::uint64_t seed_;
};

struct Context {
  int n;
  std::vector<CorootInterval> intervals;
};

std::string show(const SlicePoint& y) { return encode(y).dump(); }
std::string show(const ZastavaPoint& z) { return encode(z).dump(); }
std::string show(const MomentVector& m) { return encode(m).dump(); }

// ---------------------------------------------------------------------------
// Sampling of pairs (z, r) with z on the chart of alpha and r from the palette.

Coweight random_shift(int n, SplitMix64& rng) {
  std::vector<int> nu(static_cast<std::size_t>(n));
  for (auto& x : nu) x = static_cast<int>(rng.uniform_int(-2, 2));
  return Coweight(std::move(nu));
}

/// A point of Gr_nu with nu from {-a', 0, shift - a'} where a' cycles through
/// the positive coroots.
SlicePoint palette_point(const Context& ctx, long trial, SplitMix64& rng) {
  const auto m = static_cast<long>(ctx.intervals.size());
  const CorootInterval& other = ctx.intervals[static_cast<std::size_t>(trial % m)];
  const SlicePoint z = zastava_to_matrix(sample_zastava(other, rng, kBound));
  switch ((trial / m) % 3) {
    case 0:
      return z;
    case 1:
      return multiply(z, shift_point(other.coweight()));
    default:
      return multiply(z, shift_point(random_shift(ctx.n, rng)));
  }
}

struct Pair {
  ZastavaPoint z;
  SlicePoint zm;
  SlicePoint r;
  SlicePoint y;
};

Pair draw_pair(const Context& ctx, const CorootInterval& alpha, long trial, SplitMix64& rng,
               std::optional<ZastavaPoint> fixed = std::nullopt) {
  ZastavaPoint z = fixed ? *fixed : sample_zastava(alpha, rng, kBound);
  SlicePoint zm = zastava_to_matrix(z);
  SlicePoint r = palette_point(ctx, trial, rng);
  SlicePoint y = multiply(zm, r);
  return Pair{std::move(z), std::move(zm), std::move(r), std::move(y)};
}

json pair_inputs(const Pair& p) { return json{{"zastava", encode(p.z)}, {"rest", encode(p.r)}}; }

// ---------------------------------------------------------------------------
// Suites over slices

void suite_inverse(Trial& tr, const Context& ctx) {
  const CorootInterval& alpha = *tr.alpha;
  const Pair p = tr.sample([&](SplitMix64& rng) { return draw_pair(ctx, alpha, tr.trial, rng); });
  tr.inputs = pair_inputs(p);
  const SplitPair f = split_F(p.y, alpha);
  tr.expect(f.zast == p.z, "split_F(multiply(z, r)).zastava == z", [&] { return show(f.zast); });
  tr.expect(f.rest == p.r, "split_F(multiply(z, r)).rest == r", [&] { return show(f.rest); });

  // m o F on a point built from a different chart.
  const auto m = ctx.intervals.size();
  const CorootInterval& beta = ctx.intervals[static_cast<std::size_t>(tr.trial + 1) % m];
  const auto q = tr.sample([&](SplitMix64& rng) {
    const ZastavaPoint zb = sample_zastava(beta, rng, kBound);
    const ZastavaPoint za = sample_zastava(alpha, rng, kBound);
    SlicePoint r = palette_point(ctx, tr.trial, rng);
    SlicePoint y = multiply(zastava_to_matrix(zb), multiply(zastava_to_matrix(za), r));
    if (phi_alpha(y, alpha).values.back() == 0) throw NotInOpenLocus("sampled point off the open locus");
    return std::pair{zb, std::move(y)};
  });
  tr.inputs["other"] = json{{"zastava", encode(q.first)}, {"point", encode(q.second)}};
  const SplitPair g = split_F(q.second, alpha);
  const SlicePoint back = multiply(zastava_to_matrix(g.zast), g.rest);
  tr.expect(back == q.second, "multiply(split_F(y)) == y", [&] { return show(back); });
}

void suite_moment(Trial& tr, const Context& ctx) {
  const CorootInterval& alpha = *tr.alpha;
  const Pair p = tr.sample([&](SplitMix64& rng) { return draw_pair(ctx, alpha, tr.trial, rng); });
  tr.inputs = pair_inputs(p);
  const MomentVector phi = phi_alpha(p.y, alpha);
  const MomentVector zeta = zeta_alpha(p.y, alpha);
  tr.expect(phi == phi_alpha(p.zm, alpha), "phi_alpha(multiply(z, r)) == phi_alpha(z)", [&] { return show(phi); });
  tr.expect(zeta == zeta_alpha(p.zm, alpha), "zeta_alpha(multiply(z, r)) == zeta_alpha(z)", [&] { return show(zeta); });
  const Projection w = multiply_with_witness(p.zm, p.r);
  tr.expect(in_n_alpha(w.n_witness, alpha), "multiply(z, r) witness n lies in N^alpha[t]",
            [&] { return to_string(w.n_witness); });
}

void suite_xi_projection(Trial& tr, const Context& ctx) {
  const CorootInterval& alpha = *tr.alpha;
  const Pair p = tr.sample([&](SplitMix64& rng) { return draw_pair(ctx, alpha, tr.trial, rng); });
  tr.inputs = pair_inputs(p);
  const ZastavaPoint xi = xi_alpha(p.y, alpha);
  tr.expect(xi == p.z, "xi_alpha(multiply(z, r)) == z", [&] { return show(xi); });
}

void suite_equivariance(Trial& tr, const Context& ctx) {
  const CorootInterval& alpha = *tr.alpha;
  const Pair p = tr.sample([&](SplitMix64& rng) { return draw_pair(ctx, alpha, tr.trial, rng); });
  SplitMix64 rng = tr.check_rng();
  const std::vector<Rational> v = random_vector(rng, static_cast<std::size_t>(alpha.height()), kActBound);
  tr.inputs = pair_inputs(p);
  tr.inputs["v"] = json::array();
  for (const auto& c : v) tr.inputs["v"].push_back(encode(c));

  const SlicePoint moved_z = act(v, p.zm, alpha);
  tr.expect(moved_z == zastava_to_matrix(translate(p.z, v)), "act(v, z) == translate(z, v)",
            [&] { return show(moved_z); });
  const SlicePoint lhs = act(v, p.y, alpha);
  const SlicePoint rhs = multiply(moved_z, p.r);
  tr.expect(lhs == rhs, "act(v, multiply(z, r)) == multiply(act(v, z), r)",
            [&] { return show(lhs) + " vs " + show(rhs); });
}

MatQt random_n_alpha(std::size_t n, const CorootInterval& alpha, SplitMix64& rng) {
  MatQt u = random_polynomial_unipotent(n, true, rng);
  const std::size_t s = alpha.block_start();
  const auto k = static_cast<std::size_t>(alpha.height());
  for (std::size_t i = s; i <= s + k; ++i) {
    for (std::size_t j = i + 1; j <= s + k; ++j) u(i, j) = RatFunc(0L);
  }
  return u;
}

void suite_action(Trial& tr, const Context& ctx) {
  const CorootInterval& alpha = *tr.alpha;
  const Pair p = tr.sample([&](SplitMix64& rng) { return draw_pair(ctx, alpha, tr.trial, rng); });
  SplitMix64 rng = tr.check_rng();
  const auto k = static_cast<std::size_t>(alpha.height());
  const std::vector<Rational> v = random_vector(rng, k, kActBound);
  const std::vector<Rational> w = random_vector(rng, k, kActBound);
  std::vector<Rational> vw(k);
  for (std::size_t i = 0; i < k; ++i) vw[i] = v[i] + w[i];
  tr.inputs = json{{"point", encode(p.y)}};
  tr.inputs["v"] = json::array();
  tr.inputs["w"] = json::array();
  for (std::size_t i = 0; i < k; ++i) {
    tr.inputs["v"].push_back(encode(v[i]));
    tr.inputs["w"].push_back(encode(w[i]));
  }

  const SlicePoint once = act(w, p.y, alpha);
  const SlicePoint twice = act(v, once, alpha);
  tr.expect(twice == act(vw, p.y, alpha), "act(v, act(w, y)) == act(v + w, y)", [&] { return show(twice); });
  const std::vector<Rational> zero(k);
  tr.expect(act(zero, p.y, alpha) == p.y, "act(0, y) == y");
  tr.expect(phi_alpha(once, alpha) == phi_alpha(p.y, alpha), "phi_alpha(act(w, y)) == phi_alpha(y)",
            [&] { return show(phi_alpha(once, alpha)); });

  const auto n = static_cast<std::size_t>(ctx.n);
  const MatQt u = random_n_alpha(n, alpha, rng);
  const MatQt x = x_minus_alpha(v, alpha);
  std::vector<Rational> minus_v(v);
  for (auto& c : minus_v) c = -c;
  const MatQt conj = x * u * x_minus_alpha(minus_v, alpha);
  tr.expect(in_n_alpha(conj, alpha), "x_{-alpha}(v) u x_{-alpha}(v)^{-1} in N^alpha[t]",
            [&] { return to_string(conj); }, json{{"u", encode(u)}});
}

void suite_stages(Trial& tr, const Context& ctx) {
  const CorootInterval& alpha = *tr.alpha;
  const auto k = static_cast<std::size_t>(alpha.height());
  const Pair p = tr.sample([&](SplitMix64& rng) {
    ZastavaPoint z = sample_zastava(alpha, rng, kBound);
    z.e = 1;
    std::fill(z.b.begin(), z.b.end(), Rational(0));
    return draw_pair(ctx, alpha, tr.trial, rng, z);
  });
  SplitMix64 rng = tr.check_rng();
  const std::vector<Rational> v = random_vector(rng, k, kActBound);
  tr.inputs = json{{"point", encode(p.y)}, {"v", json::array()}};
  for (const auto& c : v) tr.inputs["v"].push_back(encode(c));

  const MomentVector chi = chi_alpha(alpha);
  tr.expect(phi_alpha(p.y, alpha) == chi, "phi_alpha(y) == chi_alpha", [&] { return show(phi_alpha(p.y, alpha)); });
  const SplitPair f = split_F(p.y, alpha);
  tr.expect(f.zast.e == 1 && std::all_of(f.zast.b.begin(), f.zast.b.end(), [](const Rational& b) { return b == 0; }),
            "split_F(y).zastava has e = 1 and b = 0", [&] { return show(f.zast); });
  tr.expect(f.rest.mu() == p.y.mu() + alpha.coweight(), "split_F(y).rest lies in Gr_{mu+alpha}",
            [&] { return to_string(f.rest.mu()); });
  const MembershipReport member = slice_membership(f.rest.matrix(), f.rest.mu());
  tr.expect(member.ok, "slice_membership(split_F(y).rest)", [&] { return member.reason; });

  const SlicePoint moved = act(v, p.y, alpha);
  tr.expect(phi_alpha(moved, alpha) == chi, "phi_alpha(act(v, y)) == chi_alpha",
            [&] { return show(phi_alpha(moved, alpha)); });
  const SplitPair g = split_F(moved, alpha);
  tr.expect(g.rest == f.rest, "split_F(act(v, y)).rest == split_F(y).rest", [&] { return show(g.rest); });
  tr.expect(g.zast == translate(f.zast, v), "split_F(act(v, y)).zastava == translate(split_F(y).zastava, v)",
            [&] { return show(g.zast); });
}

void suite_zastava_roundtrip(Trial& tr, const Context&) {
  const CorootInterval& alpha = *tr.alpha;
  SplitMix64 rng = tr.sampling_rng(0);
  const ZastavaPoint z = sample_zastava(alpha, rng, kBound);
  const auto k = static_cast<std::size_t>(alpha.height());
  const std::vector<Rational> v = random_vector(rng, k, kActBound);
  const std::vector<Rational> w = random_vector(rng, k, kActBound);
  tr.inputs = json{{"zastava", encode(z)}, {"v", json::array()}, {"w", json::array()}};
  for (std::size_t i = 0; i < k; ++i) {
    tr.inputs["v"].push_back(encode(v[i]));
    tr.inputs["w"].push_back(encode(w[i]));
  }

  const SlicePoint y = zastava_to_matrix(z);
  tr.expect(matrix_to_zastava(y, alpha) == z, "matrix_to_zastava(zastava_to_matrix(z)) == z");
  const MembershipReport member = slice_membership(y.matrix(), Coweight::zero(static_cast<std::size_t>(alpha.n)) - alpha.coweight());
  tr.expect(member.ok, "slice_membership(zastava_to_matrix(z), -alpha)", [&] { return member.reason; });

  MomentVector phi{alpha, z.b};
  phi.values.push_back(z.e);
  MomentVector zeta{alpha, {}};
  Rational bg = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) bg += z.b[i] * z.g[i];
  for (std::size_t i = k - 1; i >= 1; --i) zeta.values.push_back(z.g[i - 1] * z.e);
  zeta.values.push_back(z.p * z.e + z.e * bg);
  tr.expect(phi_alpha(y, alpha) == phi, "phi_alpha(zastava_to_matrix(z)) == (b, e)",
            [&] { return show(phi_alpha(y, alpha)); });
  tr.expect(zeta_alpha(y, alpha) == zeta, "zeta_alpha(zastava_to_matrix(z)) == (g e, p e + e sum b g)",
            [&] { return show(zeta_alpha(y, alpha)); });
  tr.expect(xi_alpha(y, alpha) == z, "xi_alpha(zastava_to_matrix(z)) == z");

  std::vector<Rational> vw(k);
  for (std::size_t i = 0; i < k; ++i) vw[i] = v[i] + w[i];
  tr.expect(translate(translate(z, v), w) == translate(z, vw), "translate(translate(z, v), w) == translate(z, v + w)");
  tr.expect(phi_alpha(zastava_to_matrix(translate(z, v)), alpha) == phi, "phi_alpha(translate(z, v)) == phi_alpha(z)");
}

void suite_lower_block(Trial& tr, const Context& ctx) {
  const CorootInterval& alpha = *tr.alpha;
  const Pair p = tr.sample([&](SplitMix64& rng) { return draw_pair(ctx, alpha, tr.trial, rng); });
  const MatQt& uy = p.y.gauss().U;
  const MatQt& ur = p.r.gauss().U;
  const std::size_t s = alpha.block_start();
  const auto k = static_cast<std::size_t>(alpha.height());
  long diffs = 0;
  json where = json::array();
  for (std::size_t i = 0; i < uy.size(); ++i) {
    if (i >= s && i <= s + k) continue;
    for (std::size_t j = i + 1; j < uy.size(); ++j) {
      if (!(uy(i, j) == ur(i, j))) {
        ++diffs;
        where.push_back(json::array({i + 1, j + 1}));
      }
    }
  }
  json& notes = tr.report.notes;
  notes["trials_with_differences"] = notes.value("trials_with_differences", 0L) + (diffs > 0 ? 1 : 0);
  notes["differing_entries"] = notes.value("differing_entries", 0L) + diffs;
  if (diffs > 0 && notes.value("examples", json::array()).size() < 5) {
    notes["examples"].push_back(json{{"alpha", encode(alpha)}, {"trial", tr.trial}, {"entries", where}, {"inputs", pair_inputs(p)}});
  }
}

// ---------------------------------------------------------------------------
// Symbolic suites

void enumerate_poisson(Trial& tr, int pairs) {
  std::vector<CoordPoly> mons;
  for (auto& m : coord_monomials(pairs, kBracketDegree)) mons.push_back(CoordPoly::monomial(pairs, std::move(m)));
  const std::size_t count = mons.size();
  std::vector<CoordPoly> table(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) table[i * count + j] = poisson_bracket(mons[i], mons[j]);
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) {
      if (!(table[i * count + j] == -table[j * count + i])) {
        tr.fail("poisson_bracket antisymmetry", to_string(table[i * count + j]),
                json{{"f", encode(mons[i])}, {"g", encode(mons[j])}});
      }
    }
  }
  long triples = 0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) {
      for (std::size_t l = j; l < count; ++l) {
        ++triples;
        const CoordPoly jac = poisson_bracket(mons[i], table[j * count + l]) +
                              poisson_bracket(mons[j], table[l * count + i]) +
                              poisson_bracket(mons[l], table[i * count + j]);
        if (!jac.is_zero()) {
          tr.fail("poisson_bracket Jacobi identity", to_string(jac),
                  json{{"f", encode(mons[i])}, {"g", encode(mons[j])}, {"h", encode(mons[l])}});
        }
      }
    }
  }
  tr.report.notes["jacobi_triples"] = tr.report.notes.value("jacobi_triples", 0L) + triples;
}

void suite_poisson(Trial& tr, const Context&) {
  const int pairs = tr.alpha->height() - 1;
  if (tr.trial == 0 && tr.alpha->height() <= kEnumerationHeight) enumerate_poisson(tr, pairs);
  SplitMix64 rng = tr.check_rng();
  const CoordPoly f = symbol(random_ncpoly(pairs, kBracketDegree, rng));
  const CoordPoly g = symbol(random_ncpoly(pairs, kBracketDegree, rng));
  const CoordPoly h = symbol(random_ncpoly(pairs, kBracketDegree, rng));
  tr.inputs = json{{"f", encode(f)}, {"g", encode(g)}, {"h", encode(h)}};
  tr.expect(poisson_bracket(f, g) == -poisson_bracket(g, f), "poisson_bracket antisymmetry");
  const CoordPoly jac = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                        poisson_bracket(h, poisson_bracket(f, g));
  tr.expect(jac.is_zero(), "poisson_bracket Jacobi identity", [&] { return to_string(jac); });
  const CoordPoly fg = f * g;
  tr.expect(poisson_bracket(fg, h) == f * poisson_bracket(g, h) + poisson_bracket(f, h) * g,
            "poisson_bracket Leibniz rule");
}

void enumerate_semiclassical(Trial& tr, int pairs) {
  const std::vector<NCPoly> mons = nc_monomials(pairs, kBracketDegree);
  long checked = 0;
  for (const auto& a : mons) {
    for (const auto& b : mons) {
      ++checked;
      const CoordPoly lhs = semiclassical(a, b);
      const CoordPoly rhs = poisson_bracket(symbol(a), symbol(b));
      if (!(lhs == rhs)) {
        tr.fail("semiclassical(a, b) == poisson_bracket(symbol(a), symbol(b))",
                to_string(lhs) + " vs " + to_string(rhs), json{{"a", encode(a)}, {"b", encode(b)}});
      }
    }
  }
  tr.report.notes["semiclassical_pairs"] = tr.report.notes.value("semiclassical_pairs", 0L) + checked;
}

void suite_weyl(Trial& tr, const Context&) {
  const int pairs = tr.alpha->height() - 1;
  if (tr.trial == 0 && tr.alpha->height() <= kEnumerationHeight) enumerate_semiclassical(tr, pairs);
  SplitMix64 rng = tr.check_rng();
  const NCPoly a = random_ncpoly(pairs, kBracketDegree, rng);
  const NCPoly b = random_ncpoly(pairs, kBracketDegree, rng);
  const NCPoly c = random_ncpoly(pairs, kBracketDegree, rng);
  tr.inputs = json{{"a", encode(a)}, {"b", encode(b)}, {"c", encode(c)}};
  const NCPoly left = nc_mul(nc_mul(a, b), c);
  const NCPoly right = nc_mul(a, nc_mul(b, c));
  tr.expect(left == right, "nc_mul associativity", [&] { return to_string(left - right); });
  const NCPoly der = nc_comm(a, nc_mul(b, c)) - nc_mul(nc_comm(a, b), c) - nc_mul(b, nc_comm(a, c));
  tr.expect(der.is_zero(), "nc_comm derivation rule", [&] { return to_string(der); });
  tr.expect(nc_comm(NCPoly::hbar(pairs), a).is_zero(), "hbar is central");
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const NCPoly prod = nc_mul(NCPoly::term(pairs, ka), NCPoly::term(pairs, kb));
      const int w = grading_weight(ka, pairs) + grading_weight(kb, pairs);
      const bool ok = std::all_of(prod.terms().begin(), prod.terms().end(),
                                  [&](const auto& t) { return grading_weight(t.first, pairs) == w; });
      tr.expect(ok, "nc_mul respects the grading", [&] { return to_string(prod); });
    }
  }
}

// ---------------------------------------------------------------------------

void suite_gauss_roundtrip(Trial& tr, const Context& ctx) {
  const auto n = static_cast<std::size_t>(ctx.n);
  SplitMix64 rng = tr.sampling_rng(0);
  const GaussForm f = random_gauss_factors(n, rng);
  const MatQt x = recompose(f);
  tr.inputs = json{{"factors", encode(f)}};
  const GaussForm g = gauss_decompose(x);
  tr.expect(g == f, "gauss_decompose(U t^mu H L) == (U, H, mu, L)", [&] { return encode(g).dump(); });

  const Projection same = project_pi(x, f.mu);
  tr.expect(same.point.matrix() == x && same.n_witness.is_identity() && same.nminus_witness.is_identity(),
            "project_pi idempotent on slice points");

  const MatQt left = random_polynomial_unipotent(n, true, rng);
  const MatQt right = random_polynomial_unipotent(n, false, rng);
  const MatQt moved = left * x * right;
  tr.inputs["n"] = encode(left);
  tr.inputs["n_minus"] = encode(right);
  const Projection proj = project_pi(moved, f.mu);
  tr.expect(proj.point.matrix() == x, "project_pi(n x n_minus) == x", [&] { return to_string(proj.point.matrix()); });
  const bool witnesses = proj.n_witness.is_polynomial() && proj.nminus_witness.is_polynomial() &&
                         proj.n_witness * moved * proj.nminus_witness == proj.point.matrix();
  tr.expect(witnesses, "project_pi witnesses are polynomial and reproduce the point");
}

using SuiteFn = void (*)(Trial&, const Context&);

enum class Scope { PerInterval, PerHeight, Global };

struct SuiteDef {
  const char* name;
  SuiteFn fn;
  Scope scope;
  bool exploratory;
};

const std::vector<SuiteDef>& definitions() {
  static const std::vector<SuiteDef> defs = {
      {"inverse", suite_inverse, Scope::PerInterval, false},
      {"equivariance", suite_equivariance, Scope::PerInterval, false},
      {"moment", suite_moment, Scope::PerInterval, false},
      {"xi-projection", suite_xi_projection, Scope::PerInterval, false},
      {"action", suite_action, Scope::PerInterval, false},
      {"stages", suite_stages, Scope::PerInterval, false},
      {"zastava-roundtrip", suite_zastava_roundtrip, Scope::PerInterval, false},
      {"gauss-roundtrip", suite_gauss_roundtrip, Scope::Global, false},
      {"poisson", suite_poisson, Scope::PerHeight, false},
      {"weyl", suite_weyl, Scope::PerHeight, false},
      {"lower-block", suite_lower_block, Scope::PerInterval, true},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& d : definitions()) v.emplace_back(d.name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, int n, int trials, std::uint64_t seed) {
  const auto it = std::find_if(definitions().begin(), definitions().end(),
                               [&](const SuiteDef& d) { return name == d.name; });
  if (it == definitions().end()) {
    std::string list;
    for (const auto& s : suite_names()) list += (list.empty() ? "" : ", ") + s;
    throw InvalidArgument("unknown suite \"" + name + "\"; available: " + list);
  }
  if (n < 2 || n > 6) throw InvalidArgument("n must lie in [2, 6]");
  if (trials < 1) throw InvalidArgument("trials must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = name;
  report.n = n;
  report.exploratory = it->exploratory;
  const Context ctx{n, positive_coroots(n)};

  std::vector<std::optional<CorootInterval>> slots;
  switch (it->scope) {
    case Scope::PerInterval:
      for (const auto& a : ctx.intervals) slots.emplace_back(a);
      break;
    case Scope::PerHeight:
      for (int k = 1; k < n; ++k) slots.emplace_back(CorootInterval::make(1, k, n));
      break;
    case Scope::Global:
      slots.emplace_back(std::nullopt);
      break;
  }
  for (const auto& s : slots) {
    if (s) report.alphas.push_back(*s);
  }

  for (std::size_t ai = 0; ai < slots.size(); ++ai) {
    for (long t = 0; t < trials; ++t) {
      Trial tr(report, slots[ai], ai, t, seed);
      ++report.requested;
      try {
        it->fn(tr, ctx);
        ++report.completed;
      } catch (const SamplingExhausted&) {
        ++report.rejected;
      } catch (const InternalError& e) {
        report.internal_breach = true;
        tr.fail("internal invariant", e.what());
        ++report.completed;
      } catch (const Error& e) {
        tr.fail(std::string("unexpected ") + std::string(to_string(e.kind())), e.what());
        ++report.completed;
      }
    }
  }
  if (report.exploratory) report.failures.clear();
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json report_to_json(const SuiteReport& r, bool with_wall_time) {
  json alphas = json::array();
  for (const auto& a : r.alphas) alphas.push_back(encode(a));
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back(json{{"trial", f.trial}, {"alpha", f.alpha}, {"stage", f.stage}, {"inputs", f.inputs}, {"detail", f.detail}});
  }
  json out{{"suite", r.suite},
           {"n", r.n},
           {"alphas", alphas},
           {"trials", {{"requested", r.requested}, {"completed", r.completed}, {"rejected", r.rejected}}},
           {"resamples", r.resamples},
           {"failures", failures},
           {"notes", r.notes},
           {"exploratory", r.exploratory}};
  if (r.internal_breach) out["internal_breach"] = true;
  if (with_wall_time) out["wall_seconds"] = r.wall_seconds;
  return out;
}

}  // namespace slicelab
