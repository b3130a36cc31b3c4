// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "slicelab/liedata.hpp"
#include "slicelab/sampling.hpp"
#include "slicelab/suites.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = out.ok && in_time;
  std::printf("criterion %d: %s  %s  [%s; %.2f s, limit %.0f s%s]\n", id, pass ? "PASS" : "FAIL", name.c_str(),
              out.detail.c_str(), secs, limit_seconds, in_time ? "" : ", over time");
  std::fflush(stdout);
  return pass;
}

Outcome gauss_round_trip() {
  SplitMix64 rng(1);
  long bad = 0, total = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int i = 0; i < 200; ++i, ++total) {
      const GaussForm g = random_gauss_factors(n, rng);
      if (!(gauss_decompose(recompose(g)) == g)) ++bad;
    }
  }
  return {bad == 0, std::to_string(total) + " factor sets, " + std::to_string(bad) + " mismatches"};
}

Outcome chart_and_moment() {
  SplitMix64 rng(2);
  long bad = 0, total = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& a : positive_coroots(n)) {
      for (int i = 0; i < 100; ++i, ++total) {
        const ZastavaPoint z = gen_zastava(a, rng);
        const SlicePoint y = zastava_to_matrix(z);
        // Phi = (b_1..b_{k-1}, e); zeta = (g_{k-1} e, ..., g_1 e, p e + e sum b_i g_i).
        std::vector<Rational> phi = z.b;
        phi.push_back(z.e);
        std::vector<Rational> zeta;
        Rational bg = 0;
        for (std::size_t i = 0; i < z.b.size(); ++i) bg += z.b[i] * z.g[i];
        for (std::size_t i = z.g.size(); i >= 1; --i) zeta.push_back(z.g[i - 1] * z.e);
        zeta.push_back(z.p * z.e + z.e * bg);
        if (phi_alpha(y, a).values != phi || zeta_alpha(y, a).values != zeta) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(total) + " chart points, " + std::to_string(bad) + " mismatches"};
}

Outcome suites(const std::vector<std::string>& names, std::uint64_t seed) {
  long failures = 0, completed = 0, rejected = 0, requested = 0;
  bool breach = false;
  for (const auto& name : names) {
    for (int n = 2; n <= 4; ++n) {
      const SuiteReport r = run_suite(name, n, 100, seed);
      failures += static_cast<long>(r.failures.size());
      completed += r.completed;
      rejected += r.rejected;
      requested += r.requested;
      breach = breach || r.internal_breach;
    }
  }
  return {failures == 0 && !breach && completed > 0,
          std::to_string(completed) + "/" + std::to_string(requested) + " trials, " + std::to_string(rejected) +
              " rejected, " + std::to_string(failures) + " failures"};
}

Outcome poisson_jacobi() {
  long antisym = 0, jacobi = 0, bad = 0;
  for (int pairs = 0; pairs <= 2; ++pairs) {
    const auto mons = coord_monomials(pairs, 3);
    const std::size_t m = mons.size();
    std::vector<CoordPoly> basis;
    for (const auto& x : mons) basis.push_back(CoordPoly::monomial(pairs, x));
    std::vector<CoordPoly> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) table[i * m + j] = poisson_bracket(basis[i], basis[j]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j, ++antisym) {
        if (!(table[i * m + j] == -table[j * m + i])) ++bad;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        for (std::size_t l = j; l < m; ++l, ++jacobi) {
          const CoordPoly s = poisson_bracket(basis[i], table[j * m + l]) + poisson_bracket(basis[j], table[l * m + i]) +
                              poisson_bracket(basis[l], table[i * m + j]);
          if (!s.is_zero()) ++bad;
        }
      }
    }
  }
  return {bad == 0, std::to_string(antisym) + " pairs, " + std::to_string(jacobi) + " triples, " +
                        std::to_string(bad) + " violations"};
}

Outcome weyl_semiclassics() {
  SplitMix64 rng(8);
  long bad = 0, pairs_checked = 0;
  for (int i = 0; i < 200; ++i) {
    const int pairs = i % 3;
    const NCPoly a = random_ncpoly(pairs, 3, rng);
    const NCPoly b = random_ncpoly(pairs, 3, rng);
    const NCPoly c = random_ncpoly(pairs, 3, rng);
    if (!(nc_mul(nc_mul(a, b), c) == nc_mul(a, nc_mul(b, c)))) ++bad;
  }
  for (int pairs = 0; pairs <= 2; ++pairs) {
    const auto mons = nc_monomials(pairs, 3);
    for (const auto& a : mons) {
      for (const auto& b : mons) {
        ++pairs_checked;
        if (!(semiclassical(a, b) == poisson_bracket(symbol(a), symbol(b)))) ++bad;
      }
    }
  }
  return {bad == 0, "200 triples, " + std::to_string(pairs_checked) + " monomial pairs, " + std::to_string(bad) +
                        " violations"};
}

Outcome quiver_tables() {
  // Quoted small cases, then the closed formulas for every partition of N <= 6.
  long bad = 0, total = 0;
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> quoted_mv{
      {{2, 1}, {0, 1}}, {{1, 1, 1}, {0, 1, 2}}, {{1}, {0}}, {{2}, {0}}, {{3}, {0}}};
  for (const auto& [parts, dimV] : quoted_mv) {
    ++total;
    if (mv_quiver(Partition(parts)).dimV != dimV) ++bad;
  }
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> quoted_equiv{
      {{2, 1}, {0, 1, 3, 2, 1}}, {{1, 1}, {0, 1, 2, 1}}, {{3}, {0, 3, 2, 1}}};
  for (const auto& [parts, dimV] : quoted_equiv) {
    ++total;
    const QuiverData q = equiv_quiver(Partition(parts));
    if (q.dimV != dimV || q.dimW != std::vector<int>(dimV.size(), 0)) ++bad;
  }
  for (int N = 1; N <= 6; ++N) {
    for (const auto& mu : partitions(N)) {
      ++total;
      const auto& p = mu.parts();
      const int l = static_cast<int>(p.size());
      // dimV = (0, mu_{n-1}, mu_{n-2} + mu_{n-1}, ...), dimW = (0, ..., 0, N), with n - 1 = l and 1-based mu.
      const int n = l + 1;
      std::vector<int> dimV, dimW(static_cast<std::size_t>(l), 0);
      for (int j = 0; j < l; ++j) {
        int s = 0;
        for (int i = n - j; i <= n - 1; ++i) s += p[static_cast<std::size_t>(i - 1)];
        dimV.push_back(s);
      }
      dimW.back() = N;
      std::vector<int> eqV = dimV;
      for (int i = N; i >= 1; --i) eqV.push_back(i);
      const QuiverData mv = mv_quiver(mu);
      const QuiverData eq = equiv_quiver(mu);
      if (mv.dimV != dimV || mv.dimW != dimW || eq.dimV != eqV || eq.dimW != std::vector<int>(eqV.size(), 0)) ++bad;
    }
  }
  return {bad == 0, std::to_string(total) + " tables, " + std::to_string(bad) + " mismatches"};
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "gauss round trip, n = 2..6, 200 each", 60, gauss_round_trip);
  all &= run(2, "chart and moment maps, all intervals n <= 6, 100 points each", 60, chart_and_moment);
  all &= run(3, "inverse pair, suite inverse, n = 2,3,4, 100 trials", 600, [] { return suites({"inverse"}, 3); });
  all &= run(4, "moment invariance and xi projection, n = 2,3,4, 100 trials", 600,
             [] { return suites({"moment", "xi-projection"}, 4); });
  all &= run(5, "equivariance, n = 2,3,4, 100 trials, v in [-5,5]", 600, [] { return suites({"equivariance"}, 5); });
  all &= run(6, "reduction by stages, n = 2,3,4, 100 trials", 600, [] { return suites({"stages"}, 6); });
  all &= run(7, "poisson antisymmetry and Jacobi, degree <= 3, k <= 3", 30, poisson_jacobi);
  all &= run(8, "weyl associativity and semiclassical limit, degree <= 3", 60, weyl_semiclassics);
  all &= run(9, "quiver dimension vectors, all partitions of N <= 6", 1, quiver_tables);
  return all ? 0 : 1;
}
