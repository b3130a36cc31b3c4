#pragma once

// Inverse Hamiltonian reduction toolkit: the moment maps Phi_alpha and
// zeta_alpha read off the Gauss U-factor, the section xi_alpha, the
// multiplication m(y1, y2) = pi(y1 y2), its inverse F_alpha, and the action
// of the translation group G_alpha = G_a^k on Gr_mu.

#include <span>
#include <vector>

#include "slicelab/matgrp.hpp"
#include "slicelab/zastava.hpp"

namespace slicelab {

struct MomentVector {
  CorootInterval alpha;
  std::vector<Rational> values;

  friend bool operator==(const MomentVector&, const MomentVector&) = default;
};

struct SplitPair {
  ZastavaPoint zast;
  SlicePoint rest;

  friend bool operator==(const SplitPair& a, const SplitPair& b) { return a.zast == b.zast && a.rest == b.rest; }
};

/// First Fourier modes of U(r2, r2+1), U(r2-1, r2+1), ..., U(r1, r2+1).
MomentVector phi_alpha(const SlicePoint& y, const CorootInterval& alpha);

/// First modes of U(r1, r1+1), ..., U(r1, r2), then the second mode of
/// U(r1, r2+1).
MomentVector zeta_alpha(const SlicePoint& y, const CorootInterval& alpha);

/// Throws NotInOpenLocus when the last component of Phi_alpha(y) vanishes.
ZastavaPoint xi_alpha(const SlicePoint& y, const CorootInterval& alpha);

/// m(y1, y2) = pi(y1 * y2) in Gr_{mu1 + mu2}.
SlicePoint multiply(const SlicePoint& y1, const SlicePoint& y2);
/// Same, also returning the polynomial witnesses of the projection.
Projection multiply_with_witness(const SlicePoint& y1, const SlicePoint& y2);

/// F_alpha(y) = (xi_alpha(y), pi(xi_alpha(y)^{-1} y)).
SplitPair split_F(const SlicePoint& y, const CorootInterval& alpha);

/// The lower unipotent block matrix whose bottom block row is
/// (w_k, ..., w_1, 1), embedded along alpha.
MatQt x_minus_alpha(std::span<const Rational> w, const CorootInterval& alpha);

/// The G_alpha action on Gr_mu. On chart points it agrees with translate().
SlicePoint act(std::span<const Rational> v, const SlicePoint& y, const CorootInterval& alpha);

/// (0, ..., 0, 1).
MomentVector chi_alpha(const CorootInterval& alpha);

/// The point t^nu with trivial Gauss factors.
SlicePoint shift_point(const Coweight& nu);

/// Upper unipotent with the (k+1) x (k+1) alpha-block equal to the identity.
bool in_n_alpha(const MatQt& u, const CorootInterval& alpha);

/// Embeds a (k+1) x (k+1) matrix into the alpha-block of the identity.
MatQt embed_block(const MatQt& block, const CorootInterval& alpha);

}  // namespace slicelab
