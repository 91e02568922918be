#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "anc/partition.hpp"
#include "anc/poset.hpp"

namespace anc {

/// Result of one theorem verifier. A failed report always carries a
/// witness; counts record the sizes and pair totals that were scanned.
struct VerificationReport {
  std::string theorem;
  nlohmann::json params = nlohmann::json::object();
  bool passed = true;
  std::map<std::string, long long> counts;
  std::optional<nlohmann::json> witness;
  long long elapsed_ms = 0;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Exhaustive bound on p+q for the verifiers (default 5). The environment
/// variable ANNULAR_NC_BOUND or the CLI --bound flag override it.
int verifier_bound();
void set_verifier_bound(int bound);

/// Worker threads for the heavy pair scans (default 1); results are merged
/// deterministically, so the report does not depend on the thread count.
int worker_count();
void set_worker_count(int jobs);

/// All annular non-crossing elements of B_n (genus route), in canonical
/// order, cross-checked against the interval {tau <= gamma}. Cached.
const std::vector<SignedPermutation>& noncrossing_perms_B(int p, int q);

/// Their merged orbit partitions, deduplicated (a duplicate would break
/// the bijection theorem and raises an internal error). Cached.
const std::vector<SignedPartition>& noncrossing_partitions_B(int p, int q);

const std::vector<SignedPermutation>& noncrossing_perms_D(int p, int q);
const std::vector<SignedPartition>& noncrossing_partitions_D(int p, int q);

/// Every subset of X occurring as an orbit of some annular non-crossing
/// element, gathered by scanning the members. p+q <= 4. The single-subset
/// test is is_realizable_orbit (constructive, works up to p+q <= 6).
std::vector<std::vector<int>> orbit_family(int p, int q);

/// Interval characterization: genus-zero elements of B_n are exactly the
/// interval below gamma, with the disconnected three-way equivalence and
/// the connected no-zero-orbit property checked alongside.
VerificationReport verify_interval(int p, int q);

/// The merged orbit map is a bijection onto the annular partition poset and
/// a two-sided order isomorphism; also finds the negative control showing
/// the raw orbit map is not order preserving.
VerificationReport verify_order_iso(int p, int q);

/// With a two-point inner circle the annular partition poset is a lattice:
/// closed under intersection meet, lattice axioms hold, and the poset meet
/// agrees with the intersection meet on every pair.
VerificationReport verify_lattice_B(int n);

/// Type D: set equality and order isomorphism restricted to D_n; for q = 1
/// the type-D poset is a lattice and any zero-block contains both n and -n.
VerificationReport verify_type_D(int p, int q);

/// The fixed (2,2) counterexample: four partitions that admit no common
/// sandwich, so the poset is not a lattice, and the meet-derived
/// permutation displays the AC-3 pattern.
VerificationReport lattice_counterexample_22();

}  // namespace anc
