#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anc/ground_perm.hpp"

namespace anc {

/// Evidence of a violated non-crossing condition. DC is the disc crossing
/// pattern; AC1/AC2/AC3 are the annular ones; Incompatible records which
/// compatibility clause failed and on which orbit.
struct CrossingWitness {
  enum class Kind { DC, AC1, AC2, AC3, Incompatible };
  Kind kind;
  std::vector<int> points;  // the 4, 5 or 6 witnessing elements in pattern order
  std::string detail;       // Incompatible only: failing clause + orbit

  std::string kind_name() const;
  std::string json() const;  // {"kind":"AC3","points":[...]}
};

/// The annulus (p,q): n = p+q, the reference permutation
/// gamma = (1,...,p,-1,...,-p)(p+1,...,n,-(p+1),...,-n), and its two
/// orbits Y (outer circle) and Z (inner circle).
struct AnnulusConfig {
  int p;
  int q;
  int n;
  GroundPermutation gamma;
  std::vector<int> outer;  // Y, canonical order
  std::vector<int> inner;  // Z, canonical order

  static AnnulusConfig make(int p, int q);

  bool on_outer(int x) const { return std::abs(x) <= p; }
  SignedPermutation reference_perm() const;  // gamma as an element of B_n
};

/// Disc reference gamma_o = (1,2,...,n,-1,...,-n); the degenerate
/// single-circle configuration.
GroundPermutation disc_reference(int n);

/// Genus of the pair (tau, gamma):
/// 2g = (|X| + 2#(tau,gamma)) - (#tau + #(tau^-1 gamma) + #gamma).
/// The bracket is guaranteed even and nonnegative; anything else is an
/// internal error.
int genus(const GroundPermutation& tau, const GroundPermutation& gamma);

bool is_noncrossing(const GroundPermutation& tau, const GroundPermutation& gamma);

/// AC-test permutation: fixes y and z and cycles
/// (gamma(y),...,gamma^{|Y|-1}(y), gamma(z),...,gamma^{|Z|-1}(z)).
/// gamma must have exactly two orbits, with y in the orbit of the least
/// point and z in the other.
GroundPermutation ac_test_perm(const GroundPermutation& gamma, int y, int z);

/// Compatibility of tau with gamma. For one circle: tau and gamma induce
/// the same permutation on every orbit of tau. For two circles: induced
/// agreement on A n Y and A n Z, plus at most one jump each way per orbit.
std::optional<CrossingWitness> check_compatible(const GroundPermutation& tau,
                                                const GroundPermutation& gamma);

/// First crossing pattern in the deterministic scan order: DC/AC-1 first,
/// then AC-2, then AC-3, tuples lexicographic in the canonical point order.
std::optional<CrossingWitness> find_crossing_pattern(const GroundPermutation& tau,
                                                     const GroundPermutation& gamma);

/// The pattern-based membership test of the disc/annulus characterizations:
/// compatible and free of crossing patterns. Equivalent to genus zero; the
/// two routes are implemented independently.
bool is_noncrossing_by_patterns(const GroundPermutation& tau, const GroundPermutation& gamma);

}  // namespace anc
