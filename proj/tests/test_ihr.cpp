#include <doctest.h>

#include "slicelab/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const CorootInterval a2 = CorootInterval::make(1, 1, 2);
const RatFunc inv_t = F({1}, {0, 1});

SlicePoint zast(const Rational& p, const Rational& e) { return zastava_to_matrix(ZastavaPoint{a2, p, e, {}, {}}); }

SlicePoint upper2() { return SlicePoint::from_matrix(MatQt{{RatFunc(1L), inv_t}, {RatFunc(0L), RatFunc(1L)}}); }

std::vector<Rational> lemma_phi(const ZastavaPoint& z) {
  std::vector<Rational> v = z.b;
  v.push_back(z.e);
  return v;
}

std::vector<Rational> lemma_zeta(const ZastavaPoint& z) {
  std::vector<Rational> v;
  Rational bg = 0;
  for (std::size_t i = 0; i < z.b.size(); ++i) bg += z.b[i] * z.g[i];
  for (std::size_t i = z.g.size(); i >= 1; --i) v.push_back(z.g[i - 1] * z.e);
  v.push_back(z.p * z.e + z.e * bg);
  return v;
}

}  // namespace

TEST_CASE("phi_alpha") {
  CHECK(phi_alpha(zast(0, 1), a2).values == std::vector<Rational>{Q(1)});
  SplitMix64 rng(21);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& a : positive_coroots(n)) {
      const ZastavaPoint z = gen_zastava(a, rng);
      CHECK(phi_alpha(zastava_to_matrix(z), a).values == lemma_phi(z));
    }
  }
  const SlicePoint s = shift_point(Coweight{2, 0, -1});
  CHECK(phi_alpha(s, CorootInterval::make(1, 2, 3)).values == std::vector<Rational>{Q(0), Q(0)});
  CHECK_THROWS_AS(phi_alpha(s, a2), InvalidArgument);
}

TEST_CASE("zeta_alpha") {
  CHECK(zeta_alpha(zast(0, 1), a2).values == std::vector<Rational>{Q(0)});
  SUBCASE("p = 2, e = 3 reads the second mode of 3/(t - 2)") {
    const SlicePoint y = zast(2, 3);
    CHECK(y.gauss().U(0, 1) == F({3}, {-2, 1}));
    CHECK(zeta_alpha(y, a2).values == std::vector<Rational>{oracle_coeff(F({3}, {-2, 1}), 2)});
    CHECK(zeta_alpha(y, a2).values == std::vector<Rational>{Q(6)});
  }
  SplitMix64 rng(22);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& a : positive_coroots(n)) {
      const ZastavaPoint z = gen_zastava(a, rng);
      CHECK(zeta_alpha(zastava_to_matrix(z), a).values == lemma_zeta(z));
    }
  }
}

TEST_CASE("xi_alpha") {
  CHECK(xi_alpha(upper2(), a2) == ZastavaPoint{a2, 0, 1, {}, {}});
  SplitMix64 rng(23);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& a : positive_coroots(n)) {
      const ZastavaPoint z = gen_zastava(a, rng);
      CHECK(xi_alpha(zastava_to_matrix(z), a) == z);
    }
  }
  CHECK_THROWS_AS(xi_alpha(shift_point(Coweight{1, -1}), a2), NotInOpenLocus);
}

TEST_CASE("multiply") {
  SUBCASE("zastava times t^alpha") {
    const MatQt product = zast(0, 1).matrix() * MatQt::diagonal({T(), inv_t});
    CHECK(product == MatQt{{RatFunc(0L), inv_t}, {-T(), RatFunc(1L)}});
    const SlicePoint y = multiply(zast(0, 1), shift_point(Coweight{1, -1}));
    CHECK(y == upper2());
    CHECK(y.mu() == Coweight{0, 0});
  }
  SUBCASE("identity on the right") {
    const SlicePoint y = zast(2, 3);
    CHECK(multiply(y, shift_point(Coweight::zero(2))) == y);
  }
  SUBCASE("two zastava points") {
    const SlicePoint y = multiply(zast(0, 1), zast(1, 1));
    CHECK(y.mu() == Coweight{-2, 2});
    CHECK(phi_alpha(y, a2).values == phi_alpha(zast(0, 1), a2).values);
    CHECK(phi_alpha(y, a2).values == std::vector<Rational>{Q(1)});
  }
  SUBCASE("shift points add coweights") {
    const SlicePoint y = zastava_to_matrix(ZastavaPoint{CorootInterval::make(1, 2, 3), 1, 2, {Q(1)}, {Q(-1)}});
    const Coweight nu{1, -1, 2};
    CHECK(multiply(y, shift_point(nu)).mu() == y.mu() + nu);
  }
  CHECK_THROWS_AS(multiply(zast(0, 1), shift_point(Coweight::zero(3))), InvalidArgument);
}

TEST_CASE("split_F") {
  SUBCASE("upper unipotent point of Gr_0") {
    const SplitPair s = split_F(upper2(), a2);
    CHECK(s.zast == ZastavaPoint{a2, 0, 1, {}, {}});
    CHECK(mat_inv(zast(0, 1).matrix()) * upper2().matrix() == MatQt{{T(), RatFunc(0L)}, {RatFunc(1L), inv_t}});
    CHECK(s.rest == shift_point(Coweight{1, -1}));
  }
  SUBCASE("chart points split off completely") {
    const ZastavaPoint z{CorootInterval::make(2, 4, 5), 2, 3, {Q(1), Q(-2)}, {Q(5), Q(1, 2)}};
    const SplitPair s = split_F(zastava_to_matrix(z), z.alpha);
    CHECK(s.zast == z);
    CHECK(s.rest.matrix().is_identity());
    CHECK(s.rest.mu() == Coweight::zero(5));
  }
  CHECK_THROWS_AS(split_F(shift_point(Coweight{1, -1}), a2), NotInOpenLocus);
}

TEST_CASE("act") {
  SplitMix64 rng(24);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& a : positive_coroots(n)) {
      const ZastavaPoint z = gen_zastava(a, rng);
      std::vector<Rational> v;
      for (int i = 0; i < a.height(); ++i) v.push_back(rng.uniform_int(-5, 5));
      const SlicePoint y = zastava_to_matrix(z);
      CHECK(act(v, y, a) == zastava_to_matrix(translate(z, v)));
      CHECK(act(std::vector<Rational>(v.size()), y, a) == y);
      CHECK(phi_alpha(act(v, y, a), a) == phi_alpha(y, a));
    }
  }
  CHECK_THROWS_AS(act(std::vector<Rational>{Q(1), Q(2)}, zast(0, 1), a2), InvalidArgument);
}

TEST_CASE("x_minus_alpha and N^alpha") {
  const CorootInterval a = CorootInterval::make(2, 3, 4);
  const MatQt x = x_minus_alpha(std::vector<Rational>{Q(1), Q(2)}, a);
  const RatFunc o(0L), l(1L);
  CHECK(x == MatQt{{l, o, o, o}, {o, l, o, o}, {o, o, l, o}, {o, RatFunc(2L), RatFunc(1L), l}});

  MatQt u = MatQt::identity(4);
  u(0, 3) = T();
  u(0, 1) = RatFunc(5L);
  CHECK(in_n_alpha(u, a));
  u(1, 3) = RatFunc(1L);
  CHECK_FALSE(in_n_alpha(u, a));
  CHECK_FALSE(in_n_alpha(x, a));
  CHECK(embed_block(MatQt::identity(3), a).is_identity());
}

TEST_CASE("chi_alpha and shift_point") {
  CHECK(chi_alpha(a2).values == std::vector<Rational>{Q(1)});
  const CorootInterval a3 = CorootInterval::make(1, 3, 4);
  CHECK(chi_alpha(a3).values == std::vector<Rational>{Q(0), Q(0), Q(1)});
  CHECK(chi_alpha(a3) == phi_alpha(zastava_to_matrix(ZastavaPoint{a3, 0, 1, {Q(0), Q(0)}, {Q(0), Q(0)}}), a3));

  CHECK(shift_point(Coweight::zero(3)).matrix().is_identity());
  const SlicePoint s = shift_point(Coweight{1, -1});
  CHECK(s.matrix() == MatQt::diagonal({T(), inv_t}));
  CHECK(s.mu() == Coweight{1, -1});
  CHECK(s.gauss().U.is_identity());
  CHECK(s.gauss() == gauss_decompose(s.matrix()));
}
