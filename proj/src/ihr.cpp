#include "slicelab/ihr.hpp"

#include "slicelab/errors.hpp"

namespace slicelab {

namespace {

void check_size(const SlicePoint& y, const CorootInterval& alpha) {
  if (y.size() != static_cast<std::size_t>(alpha.n)) {
    throw InvalidArgument("point of size " + std::to_string(y.size()) + " used with " + to_string(alpha));
  }
}

}  // namespace

MomentVector phi_alpha(const SlicePoint& y, const CorootInterval& alpha) {
  check_size(y, alpha);
  const MatQt& u = y.gauss().U;
  const auto k = static_cast<std::size_t>(alpha.height());
  const std::size_t s = alpha.block_start();
  MomentVector out{alpha, std::vector<Rational>(k)};
  for (std::size_t i = 1; i <= k; ++i) out.values[i - 1] = series_coeff(u(s + k - i, s + k), 1);
  return out;
}

MomentVector zeta_alpha(const SlicePoint& y, const CorootInterval& alpha) {
  check_size(y, alpha);
  const MatQt& u = y.gauss().U;
  const auto k = static_cast<std::size_t>(alpha.height());
  const std::size_t s = alpha.block_start();
  MomentVector out{alpha, std::vector<Rational>(k)};
  for (std::size_t j = 1; j < k; ++j) out.values[j - 1] = series_coeff(u(s, s + j), 1);
  out.values[k - 1] = series_coeff(u(s, s + k), 2);
  return out;
}

ZastavaPoint xi_alpha(const SlicePoint& y, const CorootInterval& alpha) {
  const std::vector<Rational> phi = phi_alpha(y, alpha).values;
  const std::vector<Rational> zeta = zeta_alpha(y, alpha).values;
  const std::size_t k = phi.size();
  const Rational& e = phi[k - 1];
  if (e == 0) throw NotInOpenLocus("last component of Phi_" + to_string(alpha) + " vanishes");
  ZastavaPoint z;
  z.alpha = alpha;
  z.e = e;
  z.b.assign(phi.begin(), phi.end() - 1);
  z.g.resize(k - 1);
  for (std::size_t i = 1; i < k; ++i) z.g[i - 1] = zeta[k - i - 1] / e;
  Rational num = zeta[k - 1];
  for (std::size_t i = 1; i < k; ++i) num -= phi[k - i - 1] * zeta[i - 1];
  z.p = num / e;
  return z;
}

Projection multiply_with_witness(const SlicePoint& y1, const SlicePoint& y2) {
  if (y1.size() != y2.size()) throw InvalidArgument("multiplying points of different sizes");
  return project_pi(y1.matrix() * y2.matrix(), y1.mu() + y2.mu());
}

SlicePoint multiply(const SlicePoint& y1, const SlicePoint& y2) { return multiply_with_witness(y1, y2).point; }

SplitPair split_F(const SlicePoint& y, const CorootInterval& alpha) {
  ZastavaPoint z = xi_alpha(y, alpha);
  const MatQt zinv = mat_inv(zastava_matrix(z));
  SlicePoint rest = project_pi(zinv * y.matrix(), y.mu() + alpha.coweight()).point;
  return SplitPair{std::move(z), std::move(rest)};
}

MatQt x_minus_alpha(std::span<const Rational> w, const CorootInterval& alpha) {
  const auto k = static_cast<std::size_t>(alpha.height());
  if (w.size() != k) throw InvalidArgument("group element must have length " + std::to_string(k));
  const std::size_t s = alpha.block_start();
  MatQt x = MatQt::identity(static_cast<std::size_t>(alpha.n));
  for (std::size_t j = 0; j < k; ++j) x(s + k, s + j) = RatFunc(w[k - 1 - j]);
  return x;
}

// The bottom-row embedding shifts the chart by g -> g - v, p -> p - v_k e,
// so the action uses the embedding of -v to match translate().
SlicePoint act(std::span<const Rational> v, const SlicePoint& y, const CorootInterval& alpha) {
  check_size(y, alpha);
  std::vector<Rational> minus_v(v.begin(), v.end());
  for (auto& c : minus_v) c = -c;
  return project_pi(x_minus_alpha(minus_v, alpha) * y.matrix(), y.mu()).point;
}

MomentVector chi_alpha(const CorootInterval& alpha) {
  MomentVector out{alpha, std::vector<Rational>(static_cast<std::size_t>(alpha.height()))};
  out.values.back() = 1;
  return out;
}

SlicePoint shift_point(const Coweight& nu) {
  const std::size_t n = nu.size();
  return SlicePoint::from_parts(shift_matrix(nu), GaussForm{MatQt::identity(n), MatQt::identity(n), nu, MatQt::identity(n)});
}

bool in_n_alpha(const MatQt& u, const CorootInterval& alpha) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!u(i, i).is_one()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!u(i, j).is_zero()) return false;
    }
  }
  const std::size_t s = alpha.block_start();
  const auto k = static_cast<std::size_t>(alpha.height());
  for (std::size_t i = s; i <= s + k; ++i) {
    for (std::size_t j = i + 1; j <= s + k; ++j) {
      if (!u(i, j).is_zero()) return false;
    }
  }
  return true;
}

MatQt embed_block(const MatQt& block, const CorootInterval& alpha) {
  const auto k = static_cast<std::size_t>(alpha.height());
  if (block.size() != k + 1) throw InvalidArgument("block size must be k+1");
  const std::size_t s = alpha.block_start();
  MatQt x = MatQt::identity(static_cast<std::size_t>(alpha.n));
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = 0; j <= k; ++j) x(s + i, s + j) = block(i, j);
  }
  return x;
}

}  // namespace slicelab
