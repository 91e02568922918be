#pragma once

#include <vector>

#include "anc/points.hpp"
#include "anc/signed_perm.hpp"

namespace anc {

/// A permutation of an arbitrary finite set of distinct integers (the
/// ground set need not be symmetric). Points are kept in canonical order,
/// so equality is structural.
class GroundPermutation {
 public:
  // points and images are parallel; both get sorted into canonical order.
  GroundPermutation(std::vector<int> points, std::vector<int> images);

  static GroundPermutation identity(std::vector<int> points);

  /// The single cycle c1 -> c2 -> ... -> ck -> c1 on the set {c1,...,ck}.
  static GroundPermutation single_cycle(const std::vector<int>& cycle);

  int size() const { return static_cast<int>(pts_.size()); }
  const std::vector<int>& points() const { return pts_; }

  int apply(int x) const { return img_[index_of(x)]; }
  int index_of(int x) const;  // throws if x is not a point
  bool contains(int x) const;

  // img over point indices: index_image()[i] is the index of apply(points()[i]).
  const std::vector<int>& index_image() const { return idx_img_; }

  std::vector<std::vector<int>> cycles() const;  // canonical form

  bool operator==(const GroundPermutation&) const = default;

 private:
  std::vector<int> pts_;      // canonical order
  std::vector<int> img_;      // img_[i] = image of pts_[i]
  std::vector<int> idx_img_;  // index form of img_
};

GroundPermutation to_ground(const SignedPermutation& tau);

GroundPermutation ground_compose(const GroundPermutation& outer, const GroundPermutation& inner);
GroundPermutation ground_inverse(const GroundPermutation& tau);

/// The permutation of A induced by tau: a maps to the first of
/// tau(a), tau^2(a), ... that lies in A again.
GroundPermutation induced(const GroundPermutation& tau, std::vector<int> subset);

int orbit_count(const GroundPermutation& tau);

/// Number of orbits of the subgroup generated by {tau, gamma}, computed by
/// union-find over the edges {x, tau(x)} and {x, gamma(x)}.
int joint_orbit_count(const GroundPermutation& tau, const GroundPermutation& gamma);

}  // namespace anc
