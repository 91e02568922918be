#include "anc/ground_perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace anc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int m) : parent(static_cast<size_t>(m)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i ? 1 : 0;
    return c;
  }
};

}  // namespace

GroundPermutation::GroundPermutation(std::vector<int> points, std::vector<int> images) {
  if (points.empty()) throw std::invalid_argument("ground set must be nonempty");
  if (points.size() != images.size())
    throw std::invalid_argument("points/images length mismatch");
  std::vector<size_t> order(points.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return canonical_less(points[a], points[b]); });
  pts_.reserve(points.size());
  img_.reserve(points.size());
  for (size_t k : order) {
    pts_.push_back(points[k]);
    img_.push_back(images[k]);
  }
  for (size_t i = 1; i < pts_.size(); ++i)
    if (pts_[i - 1] == pts_[i]) throw std::invalid_argument("duplicate point in ground set");
  idx_img_.resize(pts_.size());
  std::vector<bool> hit(pts_.size(), false);
  for (size_t i = 0; i < pts_.size(); ++i) {
    const int j = index_of(img_[i]);
    idx_img_[i] = j;
    if (hit[static_cast<size_t>(j)])
      throw std::invalid_argument("images do not form a bijection");
    hit[static_cast<size_t>(j)] = true;
  }
}

GroundPermutation GroundPermutation::identity(std::vector<int> points) {
  std::vector<int> images = points;
  return {std::move(points), std::move(images)};
}

GroundPermutation GroundPermutation::single_cycle(const std::vector<int>& cycle) {
  if (cycle.empty()) throw std::invalid_argument("empty cycle");
  std::vector<int> images(cycle.size());
  for (size_t k = 0; k < cycle.size(); ++k) images[k] = cycle[(k + 1) % cycle.size()];
  return {cycle, std::move(images)};
}

int GroundPermutation::index_of(int x) const {
  const auto it = std::lower_bound(pts_.begin(), pts_.end(), x, canonical_less);
  if (it == pts_.end() || *it != x)
    throw std::invalid_argument("point not in ground set: " + std::to_string(x));
  return static_cast<int>(it - pts_.begin());
}

bool GroundPermutation::contains(int x) const {
  const auto it = std::lower_bound(pts_.begin(), pts_.end(), x, canonical_less);
  return it != pts_.end() && *it == x;
}

std::vector<std::vector<int>> GroundPermutation::cycles() const {
  const int m = size();
  std::vector<bool> seen(static_cast<size_t>(m), false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < m; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::vector<int> orbit;
    int x = i;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = true;
      orbit.push_back(pts_[static_cast<size_t>(x)]);
      x = idx_img_[static_cast<size_t>(x)];
    }
    sort_canonical(orbit);
    out.push_back(std::move(orbit));
  }
  return out;
}

GroundPermutation to_ground(const SignedPermutation& tau) {
  std::vector<int> pts = symmetric_points(tau.rank());
  std::vector<int> img;
  img.reserve(pts.size());
  for (int x : pts) img.push_back(tau(x));
  return {std::move(pts), std::move(img)};
}

GroundPermutation ground_compose(const GroundPermutation& outer, const GroundPermutation& inner) {
  if (outer.points() != inner.points())
    throw std::invalid_argument("ground-set mismatch in ground_compose");
  std::vector<int> img;
  img.reserve(inner.points().size());
  for (int x : inner.points()) img.push_back(outer.apply(inner.apply(x)));
  return {inner.points(), std::move(img)};
}

GroundPermutation ground_inverse(const GroundPermutation& tau) {
  std::vector<int> img(tau.points().size());
  for (size_t i = 0; i < tau.points().size(); ++i)
    img[static_cast<size_t>(tau.index_image()[i])] = tau.points()[i];
  return {tau.points(), std::move(img)};
}

GroundPermutation induced(const GroundPermutation& tau, std::vector<int> subset) {
  if (subset.empty()) throw std::invalid_argument("induced permutation of an empty set");
  sort_canonical(subset);
  std::vector<bool> member(tau.points().size(), false);
  for (int a : subset) member[static_cast<size_t>(tau.index_of(a))] = true;
  std::vector<int> img;
  img.reserve(subset.size());
  for (int a : subset) {
    int x = tau.apply(a);
    while (!member[static_cast<size_t>(tau.index_of(x))]) x = tau.apply(x);
    img.push_back(x);
  }
  return {std::move(subset), std::move(img)};
}

int orbit_count(const GroundPermutation& tau) {
  UnionFind uf(tau.size());
  for (int i = 0; i < tau.size(); ++i) uf.unite(i, tau.index_image()[static_cast<size_t>(i)]);
  return uf.components();
}

int joint_orbit_count(const GroundPermutation& tau, const GroundPermutation& gamma) {
  if (tau.points() != gamma.points())
    throw std::invalid_argument("ground-set mismatch in joint_orbit_count");
  UnionFind uf(tau.size());
  for (int i = 0; i < tau.size(); ++i) {
    uf.unite(i, tau.index_image()[static_cast<size_t>(i)]);
    uf.unite(i, gamma.index_image()[static_cast<size_t>(i)]);
  }
  return uf.components();
}

}  // namespace anc
