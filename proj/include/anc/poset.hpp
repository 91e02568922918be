#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace anc {

/// A finite poset over opaque canonical keys, validated at construction
/// (reflexive, antisymmetric, transitive) with the Hasse diagram computed
/// up front. One engine serves permutations and partitions alike.
class FinitePoset {
 public:
  static FinitePoset build(std::vector<std::string> elements,
                           const std::function<bool(size_t, size_t)>& leq);

  size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  size_t index_of(const std::string& key) const;  // throws if absent

  bool leq(size_t a, size_t b) const;
  const std::vector<std::pair<size_t, size_t>>& covers() const { return covers_; }

  /// The unique maximal common lower bound, or nullopt when there are zero
  /// or several maximal lower bounds.
  std::optional<size_t> meet_of(size_t a, size_t b) const;
  std::optional<size_t> join_of(size_t a, size_t b) const;

  struct LatticeResult {
    bool lattice = true;
    std::optional<std::pair<size_t, size_t>> witness;  // first failing pair
    std::string failed_op;                             // "meet" or "join"
  };
  LatticeResult lattice_check() const;

  /// Standard Moebius value mu(a,b); requires a <= b.
  long long moebius(size_t a, size_t b) const;

  /// Coefficient k counts elements of rank k under the supplied rank map.
  std::vector<long long> rank_polynomial(const std::function<int(size_t)>& rank) const;

  /// Longest-chain height from a minimal element; the natural grading for
  /// the posets built here.
  const std::vector<int>& heights() const { return heights_; }

  std::string dot(const std::function<std::string(size_t)>& label = {}) const;
  std::string json() const;  // {"elements": [...], "covers": [[i,j],...]}

 private:
  FinitePoset() = default;

  size_t words() const { return (elements_.size() + 63) / 64; }
  bool bit(const std::vector<uint64_t>& row, size_t i) const {
    return (row[i >> 6] >> (i & 63)) & 1;
  }

  std::vector<std::string> elements_;
  std::vector<std::vector<uint64_t>> down_;  // down_[b] = {a : a <= b}
  std::vector<std::vector<uint64_t>> up_;    // up_[a]   = {b : a <= b}
  std::vector<std::pair<size_t, size_t>> covers_;
  std::vector<int> heights_;
  std::vector<int> up_counts_;  // |up_[i]|; strictly decreasing along the order
};

struct OrderIsoResult {
  bool ok = true;
  std::string reason;  // human-readable witness on failure
};

/// Checks that the explicit key map f is a bijection P -> Q with
/// a <= b iff f(a) <= f(b), both directions, on every pair.
OrderIsoResult check_order_iso(const FinitePoset& P, const FinitePoset& Q,
                               const std::function<std::string(const std::string&)>& f);

}  // namespace anc
