#pragma once

#include <functional>
#include <string>
#include <vector>

#include "anc/points.hpp"

namespace anc {

/// An element of the hyperoctahedral group B_n: a permutation tau of
/// {1,...,n} u {-1,...,-n} with tau(-i) = -tau(i). Only the images of the
/// positive points are stored; the negative half is derived, so the
/// symmetry cannot be broken by construction.
class SignedPermutation {
 public:
  explicit SignedPermutation(int n);                 // identity
  SignedPermutation(int n, std::vector<int> image);  // images of 1..n, validated

  int rank() const { return n_; }

  // Apply to any x in {1,...,n} u {-1,...,-n}.
  int operator()(int x) const { return x > 0 ? img_[x - 1] : -img_[-x - 1]; }

  const std::vector<int>& image() const { return img_; }

  bool operator==(const SignedPermutation&) const = default;

 private:
  int n_;
  std::vector<int> img_;
};

/// The cycle decomposition on the full 2n-point set, in canonical form:
/// each orbit sorted canonically, orbits sorted by least element.
struct OrbitSet {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> zero_block;  // orbit A with A == -A
  int count() const { return static_cast<int>(orbits.size()); }
  int zero_count() const;
};

SignedPermutation compose(const SignedPermutation& outer, const SignedPermutation& inner);
SignedPermutation inverse(const SignedPermutation& tau);
OrbitSet orbits(const SignedPermutation& tau);

/// Absolute (reflection) length: n minus the number of mirror pairs {A,-A}
/// of orbits with A != -A.
int absolute_length(const SignedPermutation& tau);

/// Absolute order: sigma <= tau iff len(tau) = len(sigma) + len(sigma^-1 tau).
bool absolute_le(const SignedPermutation& sigma, const SignedPermutation& tau);

/// Cover relation of the absolute order, decided from the shape of
/// sigma^-1 tau and the orbit structure of sigma (no search).
bool covers(const SignedPermutation& sigma, const SignedPermutation& tau);

/// tau lies in the Weyl group D_n, i.e. is even as a permutation of 2n points.
bool in_type_D(const SignedPermutation& tau);

// Reflection generating sets: type B has {(i,j)(-i,-j)}, {(i,-j)(-i,j)} and
// {(i,-i)}; type D drops the (i,-i) family.
std::vector<SignedPermutation> reflections_B(int n);
std::vector<SignedPermutation> reflections_D(int n);

/// Shortest word length over reflections_B, by BFS from the identity over
/// the whole group (memoized per rank). Guarded by rank_bound.
int absolute_length_bfs(const SignedPermutation& tau, int rank_bound = 4);

/// Shortest word length over reflections_D; tau must lie in D_n.
int type_D_length_bfs(const SignedPermutation& tau, int rank_bound = 4);

/// Visit all 2^n n! elements exactly once, in lexicographic order of the
/// image vector under the canonical value order (so the identity comes
/// first). Hard cap n <= 7.
void for_each_in_hyperoctahedral(int n, const std::function<void(const SignedPermutation&)>& fn);
std::vector<SignedPermutation> hyperoctahedral_group(int n);

/// Cycle-notation parser. Accepts whitespace-insensitive text like
/// "(1,2,3,5)(4,-6)"; mirror cycles are auto-completed, and an explicit
/// cycle that contradicts an implied mirror is an error. Identity is
/// spelled "()" or "id".
SignedPermutation parse_cycles(const std::string& text, int n);

std::string cycle_string(const SignedPermutation& tau);

/// Figure-style shorthand: a mirror pair of cycles C, -C prints once as
/// ((c1,...,ck)); self-mirror cycles keep single brackets.
std::string compact_cycle_string(const SignedPermutation& tau);

}  // namespace anc
