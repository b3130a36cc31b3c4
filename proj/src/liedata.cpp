#include "slicelab/liedata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "slicelab/errors.hpp"

namespace slicelab {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw InvalidArgument("negative part in partition");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  n_ = std::accumulate(parts.begin(), parts.end(), 0);
  parts_ = std::move(parts);
}

std::string to_string(const Partition& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(mu.parts()[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions(int N) {
  if (N < 0) throw InvalidArgument("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(N, N);
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
  if (mu.N() != nu.N()) {
    throw InvalidArgument("dominance order needs partitions of the same size, got " + to_string(mu) + " and " +
                          to_string(nu));
  }
  const std::size_t len = std::max(mu.length(), nu.length());
  int a = 0, b = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (i < mu.length()) a += mu.parts()[i];
    if (i < nu.length()) b += nu.parts()[i];
    if (a > b) return false;
  }
  return true;
}

Coweight alpha_mu(const Partition& mu, int N) {
  if (mu.N() != N) throw InvalidArgument("partition " + to_string(mu) + " does not have size " + std::to_string(N));
  std::vector<int> v(2 * static_cast<std::size_t>(N), 0);
  for (int i = 0; i < N; ++i) v[i] = 2;
  for (std::size_t i = 0; i < mu.length(); ++i) v[i] -= mu.parts()[i];
  return Coweight(std::move(v));
}

std::vector<Rational> coroot_coefficients(const Coweight& v) {
  const std::size_t n = v.size();
  if (n < 2) return {};
  Rational total = 0;
  for (int c : v.components()) total += c;
  const Rational mean = total / static_cast<long>(n);
  std::vector<Rational> c(n - 1);
  Rational run = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    run += v[i];
    run -= mean;
    c[i] = run;
  }
  return c;
}

QuiverData mv_quiver(const Partition& mu) {
  const std::size_t l = mu.length();
  QuiverData q{std::vector<int>(l, 0), std::vector<int>(l, 0)};
  int run = 0;
  for (std::size_t j = 1; j < l; ++j) {
    run += mu.parts()[l - j];
    q.dimV[j] = run;
  }
  if (l > 0) q.dimW[l - 1] = mu.N();
  return q;
}

QuiverData equiv_quiver(const Partition& mu) {
  QuiverData q = mv_quiver(mu);
  for (int i = mu.N(); i >= 1; --i) q.dimV.push_back(i);
  q.dimW.assign(q.dimV.size(), 0);
  return q;
}

}  // namespace slicelab
