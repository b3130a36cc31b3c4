#pragma once

// Deterministic samplers for chart points, slice points, Gauss factors and
// Weyl algebra elements.

#include <cstdint>
#include <variant>
#include <vector>

#include "slicelab/ihr.hpp"
#include "slicelab/rng.hpp"
#include "slicelab/weyl.hpp"
#include "slicelab/zastava.hpp"

namespace slicelab {

inline constexpr int kSampleRetries = 256;

/// Integer coordinates in [-bound, bound]; e is redrawn until nonzero.
ZastavaPoint sample_zastava(const CorootInterval& alpha, std::uint64_t seed, int bound);
ZastavaPoint sample_zastava(const CorootInterval& alpha, SplitMix64& rng, int bound);

/// One factor of a slice recipe: a sampled chart point or a shift t^nu.
using RecipeItem = std::variant<CorootInterval, Coweight>;

struct SampledSlice {
  SlicePoint point;
  int rejections = 0;
};

/// Left-to-right product of the recipe's factors under multiply(). Resamples
/// when a product leaves the big cell; throws SamplingExhausted after
/// kSampleRetries attempts.
SampledSlice sample_slice_counted(int n, const Coweight& mu_target, const std::vector<RecipeItem>& recipe,
                                  std::uint64_t seed, int bound = 5);
SlicePoint sample_slice(int n, const Coweight& mu_target, const std::vector<RecipeItem>& recipe, std::uint64_t seed,
                        int bound = 5);

std::vector<Rational> random_vector(SplitMix64& rng, std::size_t len, int bound);

/// Random (U, H, mu, L) with off-diagonal entries c / (t - d), H entries
/// (t - a) / (t - b) and mu in [-2, 2]^n.
GaussForm random_gauss_factors(std::size_t n, SplitMix64& rng);

/// Random unipotent polynomial matrix, upper or lower, entries of degree <= 1.
MatQt random_polynomial_unipotent(std::size_t n, bool upper, SplitMix64& rng);

/// Up to three terms, each of total generator degree <= max_degree and no
/// hbar, coefficients in [-3, 3].
NCPoly random_ncpoly(int pairs, int max_degree, SplitMix64& rng);

/// Every hbar-free PBW monomial with |e-exponent| + other exponents at most
/// max_degree.
std::vector<NCPoly> nc_monomials(int pairs, int max_degree);

}  // namespace slicelab
