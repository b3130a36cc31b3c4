#include <doctest.h>

#include "slicelab/errors.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("coroot intervals") {
  const CorootInterval a = CorootInterval::make(2, 3, 5);
  CHECK(a.height() == 2);
  CHECK(a.block_start() == 1);
  CHECK(a.coweight() == Coweight{0, 1, 0, -1, 0});
  CHECK_THROWS_AS(CorootInterval::make(2, 1, 5), InvalidArgument);
  CHECK_THROWS_AS(CorootInterval::make(1, 5, 5), InvalidArgument);
  CHECK_THROWS_AS(CorootInterval::make(0, 1, 5), InvalidArgument);
  CHECK(positive_coroots(4).size() == 6);
  CHECK(positive_coroots(2) == std::vector<CorootInterval>{CorootInterval::make(1, 1, 2)});
}

TEST_CASE("zastava_to_matrix") {
  const CorootInterval a2 = CorootInterval::make(1, 1, 2);
  SUBCASE("k = 1, p = 0, e = 1") {
    const SlicePoint y = zastava_to_matrix(ZastavaPoint{a2, 0, 1, {}, {}});
    CHECK(y.matrix() == MatQt{{RatFunc(0L), RatFunc(1L)}, {RatFunc(-1L), T()}});
    CHECK(y.mu() == Coweight{-1, 1});
  }
  SUBCASE("k = 1, p = 3") {
    const SlicePoint y = zastava_to_matrix(ZastavaPoint{a2, 3, 1, {}, {}});
    CHECK(y.matrix() == MatQt{{RatFunc(0L), RatFunc(1L)}, {RatFunc(-1L), F({-3, 1})}});
  }
  SUBCASE("k = 2, auxiliary coordinates zero") {
    const SlicePoint y = zastava_to_matrix(ZastavaPoint{CorootInterval::make(1, 2, 3), 0, 1, {Q(0)}, {Q(0)}});
    const RatFunc o(0L), l(1L);
    CHECK(y.matrix() == MatQt{{o, o, l}, {o, l, o}, {-l, o, T()}});
    CHECK(y.mu() == Coweight{-1, 0, 1});
  }
  SUBCASE("k = 2 block inside PGL_4") {
    const ZastavaPoint z{CorootInterval::make(2, 3, 4), 1, 2, {Q(3)}, {Q(5)}};
    const MatQt x = zastava_to_matrix(z).matrix();
    const RatFunc o(0L), l(1L);
    // block rows: (0, 0, e), (0, 1, b_1), (-1/e, -g_1, t - p - b_1 g_1)
    const MatQt expected{{l, o, o, o},
                         {o, o, o, RatFunc(2L)},
                         {o, o, l, RatFunc(3L)},
                         {o, RatFunc(Q(-1, 2)), RatFunc(-5L), F({-16, 1})}};
    CHECK(x == expected);
  }
  SUBCASE("e = 0 is rejected") {
    CHECK_THROWS_AS(zastava_to_matrix(ZastavaPoint{a2, 0, 0, {}, {}}), InvalidCoordinate);
    CHECK_THROWS_AS(zastava_to_matrix(ZastavaPoint{CorootInterval::make(1, 2, 3), 0, 1, {}, {}}), InvalidCoordinate);
  }
}

TEST_CASE("zastava matrices are polynomial slice points") {
  SplitMix64 rng(3);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& a : positive_coroots(n)) {
      const ZastavaPoint z = gen_zastava(a, rng);
      const SlicePoint y = zastava_to_matrix(z);
      CHECK(slice_membership(y.matrix(), Coweight::zero(static_cast<std::size_t>(n)) - a.coweight()).ok);
      CHECK(in_polynomial_group(y.matrix()));
      CHECK(cofactor_det(y.matrix()) == RatFunc(1L));
    }
  }
}

TEST_CASE("matrix_to_zastava") {
  const CorootInterval a2 = CorootInterval::make(1, 1, 2);
  CHECK(matrix_to_zastava(SlicePoint::from_matrix(MatQt{{RatFunc(0L), RatFunc(1L)}, {RatFunc(-1L), T()}}), a2) ==
        ZastavaPoint{a2, 0, 1, {}, {}});
  CHECK(matrix_to_zastava(SlicePoint::from_matrix(MatQt{{RatFunc(0L), RatFunc(1L)}, {RatFunc(-1L), F({-3, 1})}}),
                          a2) == ZastavaPoint{a2, 3, 1, {}, {}});
  CHECK_THROWS_AS(matrix_to_zastava(SlicePoint::from_matrix(MatQt::identity(2)), a2), NotInChart);

  const CorootInterval a = CorootInterval::make(1, 2, 4);
  const ZastavaPoint z{a, 1, 2, {Q(3)}, {Q(5)}};
  CHECK(matrix_to_zastava(zastava_to_matrix(z), a) == z);
  CHECK_THROWS_AS(matrix_to_zastava(zastava_to_matrix(z), CorootInterval::make(2, 3, 4)), NotInChart);
}

TEST_CASE("translate") {
  const CorootInterval a2 = CorootInterval::make(1, 1, 2);
  const ZastavaPoint z{a2, 0, 1, {}, {}};
  CHECK(translate(z, std::vector<Rational>{Q(3)}) == ZastavaPoint{a2, 3, 1, {}, {}});
  CHECK(translate(z, std::vector<Rational>{Q(0)}) == z);

  const CorootInterval a = CorootInterval::make(1, 2, 3);
  const ZastavaPoint w{a, 1, 2, {Q(0)}, {Q(5)}};
  CHECK(translate(w, std::vector<Rational>{Q(1), Q(1)}) == ZastavaPoint{a, 3, 2, {Q(0)}, {Q(6)}});
  CHECK_THROWS_AS(translate(w, std::vector<Rational>{Q(1)}), InvalidArgument);
}

TEST_CASE("poisson_bracket on generators") {
  const int m = 2;
  CHECK(poisson_bracket(CoordPoly::p(m), CoordPoly::e(m)) == CoordPoly::e(m));
  CHECK(poisson_bracket(CoordPoly::p(m), CoordPoly::e(m, -1)) == -CoordPoly::e(m, -1));
  CHECK(poisson_bracket(CoordPoly::b(m, 1), CoordPoly::g(m, 1)) == CoordPoly::constant(m, 1));
  CHECK(poisson_bracket(CoordPoly::b(m, 1), CoordPoly::g(m, 2)).is_zero());
  CHECK(poisson_bracket(CoordPoly::p(m) * CoordPoly::e(m), CoordPoly::g(m, 1)).is_zero());
  CHECK(poisson_bracket(CoordPoly::e(m), CoordPoly::b(m, 2)).is_zero());
}

TEST_CASE("poisson_bracket agrees with the Leibniz expansion") {
  for (int pairs = 0; pairs <= 2; ++pairs) {
    const auto mons = coord_monomials(pairs, 2);
    for (const auto& f : mons) {
      for (const auto& g : mons) {
        const CoordPoly got = poisson_bracket(CoordPoly::monomial(pairs, f), CoordPoly::monomial(pairs, g));
        CHECK(got == leibniz_bracket(f, g, pairs));
      }
    }
  }
}

TEST_CASE("coordinate polynomials") {
  const int m = 1;
  const CoordPoly f = CoordPoly::e(m, 2) * CoordPoly::e(m, -1);
  CHECK(f == CoordPoly::e(m));
  const ZastavaPoint z{CorootInterval::make(1, 2, 3), 2, 3, {Q(5)}, {Q(7)}};
  CHECK((CoordPoly::p(m) * CoordPoly::e(m, -1) + CoordPoly::b(m, 1) * CoordPoly::g(m, 1)).eval(z) == Q(2, 3) + 35);
  CHECK((CoordPoly::p(m) * CoordPoly::p(m)).degree() == 2);
  CHECK(coord_monomials(0, 1).size() == 4);
}
