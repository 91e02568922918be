#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace anc {

// Point order used throughout: 1 < 2 < ... < n < -1 < -2 < ... < -n.
// Ground sets without the +/- pairing (plain {1,...,m}) sort the same way
// since all their points are positive.
inline bool canonical_less(int a, int b) {
  const bool neg_a = a < 0, neg_b = b < 0;
  if (neg_a != neg_b) return neg_b;
  return std::abs(a) < std::abs(b);
}

// Position of x within the canonical ordering of {1,...,n} u {-1,...,-n}.
inline int point_index(int x, int n) { return x > 0 ? x - 1 : n - x - 1; }

inline int point_at(int index, int n) { return index < n ? index + 1 : n - index - 1; }

inline void sort_canonical(std::vector<int>& pts) {
  std::sort(pts.begin(), pts.end(), canonical_less);
}

// {1,...,n,-1,...,-n} in canonical order.
inline std::vector<int> symmetric_points(int n) {
  std::vector<int> pts;
  pts.reserve(2 * n);
  for (int i = 1; i <= n; ++i) pts.push_back(i);
  for (int i = 1; i <= n; ++i) pts.push_back(-i);
  return pts;
}

inline std::vector<int> negated(const std::vector<int>& xs) {
  std::vector<int> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(-x);
  sort_canonical(out);
  return out;
}

// Thrown when a requested computation exceeds a configured exhaustive bound.
struct BoundError : std::runtime_error {
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace anc
