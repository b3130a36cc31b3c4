#pragma once

// Partitions of N, the closure (dominance) order, the coroot alpha_mu of
// PGL_{2N}, and quiver dimension vectors attached to a partition.

#include <string>
#include <vector>

#include "slicelab/field.hpp"
#include "slicelab/matgrp.hpp"

namespace slicelab {

class Partition {
 public:
  Partition() = default;
  /// Sorts descending and drops zero parts; throws InvalidArgument on negatives.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int N() const { return n_; }
  std::size_t length() const { return parts_.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::string to_string(const Partition& mu);

/// Every partition of N, in decreasing lexicographic order.
std::vector<Partition> partitions(int N);

/// Partial sums of mu bounded by those of nu; throws InvalidArgument when the
/// sizes differ.
bool dominance_leq(const Partition& mu, const Partition& nu);

/// (2, ..., 2, 0, ..., 0) - mu as a coweight of length 2N.
Coweight alpha_mu(const Partition& mu, int N);

/// Coefficients c_1..c_{n-1} of the traceless part of v in the simple coroots
/// e_i - e_{i+1}, so v = sum c_i alpha_i + (sum v / n) (1, ..., 1).
std::vector<Rational> coroot_coefficients(const Coweight& v);

struct QuiverData {
  std::vector<int> dimV;
  std::vector<int> dimW;

  friend bool operator==(const QuiverData&, const QuiverData&) = default;
};

/// dimV = (0, mu_l, mu_l + mu_{l-1}, ...), dimW = (0, ..., 0, N), both of
/// length l = number of parts.
QuiverData mv_quiver(const Partition& mu);

/// mv_quiver's dimV followed by N, N-1, ..., 1; dimW = 0.
QuiverData equiv_quiver(const Partition& mu);

}  // namespace slicelab
