#pragma once

// Matrices over Q(t), the Gauss (upper * diagonal * lower) decomposition,
// membership in the slice Gr_mu = N_1[[1/t]] T_1[[1/t]] t^mu N_{-,1}[[1/t]],
// and the projection pi : X_mu -> Gr_mu.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "slicelab/field.hpp"

namespace slicelab {

/// Square matrix over Q(t), row-major, indices are 0-based.
class MatQt {
 public:
  MatQt() = default;
  /// Zero matrix of size n.
  explicit MatQt(std::size_t n) : n_(n), a_(n * n) {}
  MatQt(std::initializer_list<std::initializer_list<RatFunc>> rows);

  static MatQt identity(std::size_t n);
  static MatQt diagonal(const std::vector<RatFunc>& d);

  std::size_t size() const { return n_; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  bool is_identity() const;
  bool is_polynomial() const;

  friend bool operator==(const MatQt& a, const MatQt& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<RatFunc> a_;
};

MatQt mat_mul(const MatQt& a, const MatQt& b);
inline MatQt operator*(const MatQt& a, const MatQt& b) { return mat_mul(a, b); }
MatQt scale(const MatQt& a, const RatFunc& c);
/// Exact inverse by Gauss-Jordan elimination over Q(t); throws SingularMatrix.
MatQt mat_inv(const MatQt& a);
RatFunc det(const MatQt& a);
/// Determinant of the lower-right m x m block.
RatFunc lower_right_minor(const MatQt& a, std::size_t m);

std::string to_string(const MatQt& m);

/// GL_n coweight; two coweights agree in PGL_n iff they differ by a constant.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(std::vector<int> c) : c_(std::move(c)) {}
  Coweight(std::initializer_list<int> c) : c_(c) {}
  static Coweight zero(std::size_t n) { return Coweight(std::vector<int>(n, 0)); }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  const std::vector<int>& components() const { return c_; }
  bool is_zero() const;

  friend Coweight operator+(const Coweight& a, const Coweight& b);
  friend Coweight operator-(const Coweight& a, const Coweight& b);
  friend bool operator==(const Coweight& a, const Coweight& b) { return a.c_ == b.c_; }

 private:
  std::vector<int> c_;
};

bool pgl_equal(const Coweight& a, const Coweight& b);
std::string to_string(const Coweight& mu);

/// diag(t^{mu_1}, ..., t^{mu_n}).
MatQt shift_matrix(const Coweight& mu);

/// x = U * t^mu * H * L with U unipotent upper, H diagonal, L unipotent lower.
struct GaussForm {
  MatQt U;
  MatQt H;
  Coweight mu;
  MatQt L;

  friend bool operator==(const GaussForm&, const GaussForm&) = default;
};

/// U * diag(t^mu) * H * L.
MatQt recompose(const GaussForm& g);

/// Throws DecompositionFails when a lower-right principal minor vanishes and
/// NotInSlice when some diagonal factor is not t^k (1 + O(1/t)).
GaussForm gauss_decompose(const MatQt& x);

/// Divides x by the common leading coefficient of its Gauss diagonal, which
/// turns a scalar multiple of a slice point back into its canonical lift.
MatQt canonical_lift(const MatQt& x);

enum class MembershipFactor { None, BigCell, Diagonal, Upper, Lower, Coweight };

struct MembershipReport {
  bool ok = false;
  MembershipFactor factor = MembershipFactor::None;
  /// 1-based position of the offending entry, 0 when not applicable.
  std::size_t row = 0;
  std::size_t col = 0;
  int ord = 0;
  std::string reason;
};

MembershipReport slice_membership(const MatQt& x, const Coweight& mu);

/// A point of Gr_mu stored through its canonical GL_n lift, with cached
/// Gauss factors.
class SlicePoint {
 public:
  /// Validates membership with the coweight extracted from x.
  static SlicePoint from_matrix(MatQt x);
  /// Validates membership against a prescribed coweight (PGL-equality).
  static SlicePoint from_matrix(MatQt x, const Coweight& mu);
  /// Trusted constructor for callers that already hold the decomposition.
  static SlicePoint from_parts(MatQt x, GaussForm gauss);

  std::size_t size() const { return x_.size(); }
  const MatQt& matrix() const { return x_; }
  const Coweight& mu() const { return gauss_.mu; }
  const GaussForm& gauss() const { return gauss_; }

  friend bool operator==(const SlicePoint& a, const SlicePoint& b) {
    return a.x_ == b.x_ && a.gauss_.mu == b.gauss_.mu;
  }

 private:
  SlicePoint(MatQt x, GaussForm g) : x_(std::move(x)), gauss_(std::move(g)) {}
  MatQt x_;
  GaussForm gauss_;
};

/// pi(x) = n * x * n_minus with n in N[t], n_minus in N_-[t].
struct Projection {
  SlicePoint point;
  MatQt n_witness;
  MatQt nminus_witness;
};

Projection project_pi(const MatQt& x, const Coweight& mu);

/// True iff a.x = c * b.x for some nonzero c in Q(t).
bool pgl_equal(const SlicePoint& a, const SlicePoint& b);

/// Degree value reported for an identically vanishing minor.
inline constexpr int kDegreeOfZero = INT_MIN;

struct MinorDegrees {
  /// deg Min_m for m = 1..n (lower-right minors of the cleared matrix).
  std::vector<int> degrees;
  /// Monic polynomial the matrix was multiplied by to clear denominators.
  Poly cleared_by;
};

MinorDegrees minor_degrees(const MatQt& x);
/// deg Min_m <= lambda_1 + ... + lambda_m for every m.
bool dominance_ok(const MatQt& x, const std::vector<int>& lambda);

/// Polynomial entries and nonzero constant determinant, i.e. x lies in GL_n[t]
/// up to the scalar ambiguity of PGL_n.
bool in_polynomial_group(const MatQt& x);

}  // namespace slicelab
