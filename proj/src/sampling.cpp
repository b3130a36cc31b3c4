#include "slicelab/sampling.hpp"

#include <optional>

#include "slicelab/errors.hpp"

namespace slicelab {

ZastavaPoint sample_zastava(const CorootInterval& alpha, SplitMix64& rng, int bound) {
  if (bound < 1) throw InvalidArgument("sampling bound must be at least 1");
  const auto m = static_cast<std::size_t>(alpha.height() - 1);
  ZastavaPoint z;
  z.alpha = alpha;
  z.p = rng.uniform_int(-bound, bound);
  do {
    z.e = rng.uniform_int(-bound, bound);
  } while (z.e == 0);
  z.b = random_vector(rng, m, bound);
  z.g = random_vector(rng, m, bound);
  return z;
}

ZastavaPoint sample_zastava(const CorootInterval& alpha, std::uint64_t seed, int bound) {
  SplitMix64 rng(seed);
  return sample_zastava(alpha, rng, bound);
}

SampledSlice sample_slice_counted(int n, const Coweight& mu_target, const std::vector<RecipeItem>& recipe,
                                  std::uint64_t seed, int bound) {
  if (n < 2) throw InvalidArgument("slice size must be at least 2");
  Coweight total = Coweight::zero(static_cast<std::size_t>(n));
  for (const auto& item : recipe) {
    if (const auto* a = std::get_if<CorootInterval>(&item)) {
      if (a->n != n) throw InvalidArgument("recipe interval " + to_string(*a) + " does not live in PGL_" + std::to_string(n));
      total = total - a->coweight();
    } else {
      const auto& nu = std::get<Coweight>(item);
      if (nu.size() != static_cast<std::size_t>(n)) throw InvalidArgument("recipe shift has the wrong length");
      total = total + nu;
    }
  }
  if (mu_target.size() != static_cast<std::size_t>(n)) throw InvalidArgument("target coweight has the wrong length");
  if (recipe.empty()) {
    if (!mu_target.is_zero()) throw InvalidArgument("empty recipe with a nonzero target");
    return {shift_point(mu_target), 0};
  }
  if (!pgl_equal(total, mu_target)) {
    throw InvalidArgument("recipe sums to " + to_string(total) + ", not " + to_string(mu_target));
  }
  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    SplitMix64 rng(derive_seed(seed, 0, static_cast<std::uint64_t>(attempt)));
    try {
      std::optional<SlicePoint> acc;
      for (const auto& item : recipe) {
        SlicePoint next = std::holds_alternative<CorootInterval>(item)
                              ? zastava_to_matrix(sample_zastava(std::get<CorootInterval>(item), rng, bound))
                              : shift_point(std::get<Coweight>(item));
        acc = acc ? multiply(*acc, next) : std::move(next);
      }
      return {std::move(*acc), attempt};
    } catch (const DecompositionFails&) {
    }
  }
  throw SamplingExhausted("no admissible sample after " + std::to_string(kSampleRetries) + " attempts");
}

SlicePoint sample_slice(int n, const Coweight& mu_target, const std::vector<RecipeItem>& recipe, std::uint64_t seed,
                        int bound) {
  return sample_slice_counted(n, mu_target, recipe, seed, bound).point;
}

std::vector<Rational> random_vector(SplitMix64& rng, std::size_t len, int bound) {
  std::vector<Rational> v(len);
  for (auto& x : v) x = rng.uniform_int(-bound, bound);
  return v;
}

namespace {

// c / (t - d), or 0 about a third of the time.
RatFunc random_proper(SplitMix64& rng) {
  if (rng.uniform_int(0, 2) == 0) return RatFunc(0L);
  const long c = rng.uniform_int(-3, 3);
  const long d = rng.uniform_int(-3, 3);
  return RatFunc(Poly{c}, Poly{-d, 1});
}

}  // namespace

GaussForm random_gauss_factors(std::size_t n, SplitMix64& rng) {
  GaussForm g{MatQt::identity(n), MatQt::identity(n), Coweight::zero(n), MatQt::identity(n)};
  std::vector<int> mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    mu[i] = static_cast<int>(rng.uniform_int(-2, 2));
    if (rng.uniform_int(0, 1) == 1) {
      const long a = rng.uniform_int(-3, 3);
      const long b = rng.uniform_int(-3, 3);
      g.H(i, i) = RatFunc(Poly{-a, 1}, Poly{-b, 1});
    }
    for (std::size_t j = i + 1; j < n; ++j) g.U(i, j) = random_proper(rng);
    for (std::size_t j = 0; j < i; ++j) g.L(i, j) = random_proper(rng);
  }
  g.mu = Coweight(std::move(mu));
  return g;
}

MatQt random_polynomial_unipotent(std::size_t n, bool upper, SplitMix64& rng) {
  MatQt m = MatQt::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (upper ? j > i : j < i) m(i, j) = RatFunc(Poly{rng.uniform_int(-3, 3), rng.uniform_int(-3, 3)});
    }
  }
  return m;
}

NCPoly random_ncpoly(int pairs, int max_degree, SplitMix64& rng) {
  const auto width = 3 + 2 * static_cast<std::size_t>(pairs);
  NCPoly a(pairs);
  const long terms = rng.uniform_int(1, 3);
  for (long t = 0; t < terms; ++t) {
    NCPoly::Key k(width, 0);
    int budget = static_cast<int>(rng.uniform_int(0, max_degree));
    while (budget > 0) {
      const auto slot = static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(width) - 1));
      if (slot == 1) {
        k[1] += rng.uniform_int(0, 1) == 0 ? -1 : 1;
      } else {
        k[slot] += 1;
      }
      --budget;
    }
    long c = 0;
    while (c == 0) c = rng.uniform_int(-3, 3);
    a.add_term(k, c);
  }
  return a;
}

std::vector<NCPoly> nc_monomials(int pairs, int max_degree) {
  std::vector<NCPoly> out;
  for (const auto& m : coord_monomials(pairs, max_degree)) {
    NCPoly::Key k{0};
    k.insert(k.end(), m.begin(), m.end());
    out.push_back(NCPoly::term(pairs, std::move(k)));
  }
  return out;
}

}  // namespace slicelab
