#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anc/noncross.hpp"
#include "anc/signed_perm.hpp"

namespace anc {

/// A set partition of {1,...,n} u {-1,...,-n} in canonical form: every
/// block sorted by the canonical point order, blocks sorted by least
/// element. Equality is structural equality of canonical forms.
class SignedPartition {
 public:
  SignedPartition(int n, std::vector<std::vector<int>> blocks);

  int rank() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  int block_id(int x) const { return block_id_[point_index(x, n_)]; }
  bool same_block(int x, int y) const { return block_id(x) == block_id(y); }

  /// -A is a block whenever A is.
  bool negation_closed() const;

  std::vector<std::vector<int>> zero_blocks() const;  // blocks A with A == -A

  /// Has a block meeting both circles of the (p,q)-annulus.
  bool crosses_circles(const AnnulusConfig& cfg) const;

  bool operator==(const SignedPartition&) const = default;

  std::string to_string() const;          // {1,2,3,5}{4,-6}...
  std::string compact_string() const;     // ((1,2,3,5)) shorthand for mirror pairs
  std::string json() const;               // {"n": 6, "blocks": [[...],...]}

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_id_;  // by canonical point index
};

/// Orbit partition of tau (the map called Omega in the source theory).
SignedPartition orbit_partition(const SignedPermutation& tau);

/// Orbit partition with all inversion-invariant orbits merged into a
/// single block (at most one zero-block survives).
SignedPartition merged_orbit_partition(const SignedPermutation& tau);

/// Reverse refinement order: fine <= coarse iff every block of coarse is a
/// union of blocks of fine.
bool refinement_le(const SignedPartition& fine, const SignedPartition& coarse);

/// Intersection meet: all nonempty pairwise block intersections.
SignedPartition meet(const SignedPartition& a, const SignedPartition& b);

/// The disc poset NC^B(n): orbit partitions of the genus-zero elements of
/// B_n with respect to the disc reference. Cached; n <= 6.
const std::vector<SignedPartition>& disc_noncrossing_partitions(int n);
bool is_disc_noncrossing(const SignedPartition& part);

/// Glue a partition of the outer disc (rank p) and one of the inner disc
/// (rank q) into a rank p+q partition: non-symmetric blocks are kept (the
/// inner ones shifted by +/-p) and whatever remains forms one block.
/// Both inputs must lie in their disc posets.
SignedPartition embed_disc_pair(const SignedPartition& outer_part,
                                const SignedPartition& inner_part);

/// Trace a rank p+q partition on the outer circle (blocks M n Y).
SignedPartition project_outer(const SignedPartition& part, const AnnulusConfig& cfg);

/// Trace on the inner circle, with points shifted back to {+-1,...,+-q}.
SignedPartition project_inner(const SignedPartition& part, const AnnulusConfig& cfg);

/// The unique cyclic order any annular non-crossing element induces on a
/// realizable orbit A: gamma|A when A stays on one circle, else the
/// restriction of the AC-test permutation lambda_{-y,-z} for any choice of
/// y in A n Y, z in A n Z (the result does not depend on the choice).
struct CanonicalOrbitPerm {
  std::vector<int> points;
  GroundPermutation perm;
};
CanonicalOrbitPerm canonical_orbit_cycle(const std::vector<int>& subset,
                                         const AnnulusConfig& cfg);

/// Whether the subset occurs as an orbit of some annular non-crossing
/// element of B_n: build the witness that cycles the subset (and its
/// mirror) canonically and fixes everything else, then genus-test it.
bool is_realizable_orbit(const std::vector<int>& subset, const AnnulusConfig& cfg);

/// The permutation whose orbits are exactly the blocks of the partition,
/// each cycled canonically. Every block must be a realizable orbit, and a
/// partition that crosses the circles must not carry zero-blocks.
SignedPermutation permutation_from_blocks(const SignedPartition& part,
                                          const AnnulusConfig& cfg);

/// The unique annular non-crossing tau with merged orbit partition equal to
/// part, or nullopt when part is not in NC^B(p,q). Constructive membership
/// test: split the merged zero-block if present, reassemble, genus-test.
std::optional<SignedPermutation> annular_witness(const SignedPartition& part,
                                                 const AnnulusConfig& cfg);

/// Recover the plain orbit partition from a merged one: split the
/// inversion-invariant circle-crossing block (if any) into its outer and
/// inner parts. Errors when part is not in NC^B(p,q).
SignedPartition split_merged_zero_block(const SignedPartition& part, const AnnulusConfig& cfg);

}  // namespace anc
