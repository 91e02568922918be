#include "anc/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace anc {

SignedPartition::SignedPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw std::invalid_argument("rank must be a positive integer");
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("partition blocks must be nonempty");
    sort_canonical(block);
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return canonical_less(a.front(), b.front());
            });
  block_id_.assign(static_cast<size_t>(2 * n), -1);
  size_t covered = 0;
  for (size_t k = 0; k < blocks_.size(); ++k) {
    for (int x : blocks_[k]) {
      if (x == 0 || std::abs(x) > n) throw std::invalid_argument("block entry out of range");
      int& slot = block_id_[static_cast<size_t>(point_index(x, n))];
      if (slot >= 0) throw std::invalid_argument("point appears in two blocks");
      slot = static_cast<int>(k);
      ++covered;
    }
  }
  if (covered != static_cast<size_t>(2 * n))
    throw std::invalid_argument("blocks do not cover the ground set");
}

bool SignedPartition::negation_closed() const {
  for (const auto& block : blocks_) {
    const int mirror_id = block_id(-block.front());
    const auto& mirror = blocks_[static_cast<size_t>(mirror_id)];
    if (mirror.size() != block.size()) return false;
    for (int x : block)
      if (block_id(-x) != mirror_id) return false;
  }
  return true;
}

std::vector<std::vector<int>> SignedPartition::zero_blocks() const {
  std::vector<std::vector<int>> out;
  for (size_t k = 0; k < blocks_.size(); ++k) {
    bool zero = true;
    for (int x : blocks_[k])
      if (block_id(-x) != static_cast<int>(k)) {
        zero = false;
        break;
      }
    if (zero) out.push_back(blocks_[k]);
  }
  return out;
}

bool SignedPartition::crosses_circles(const AnnulusConfig& cfg) const {
  if (cfg.n != n_) throw std::invalid_argument("rank mismatch with annulus");
  for (const auto& block : blocks_) {
    bool outer = false, inner = false;
    for (int x : block) (cfg.on_outer(x) ? outer : inner) = true;
    if (outer && inner) return true;
  }
  return false;
}

std::string SignedPartition::to_string() const {
  std::string out;
  for (const auto& block : blocks_) {
    out.push_back('{');
    for (size_t k = 0; k < block.size(); ++k) {
      if (k) out.push_back(',');
      out += std::to_string(block[k]);
    }
    out.push_back('}');
  }
  return out;
}

std::string SignedPartition::compact_string() const {
  std::vector<bool> done(blocks_.size(), false);
  const auto body = [](const std::vector<int>& block) {
    std::string s;
    for (size_t j = 0; j < block.size(); ++j) {
      if (j) s.push_back(',');
      s += std::to_string(block[j]);
    }
    return s;
  };
  std::string out;
  for (size_t k = 0; k < blocks_.size(); ++k) {
    if (done[k]) continue;
    done[k] = true;
    const int mirror_id = block_id(-blocks_[k].front());
    bool mirror_is_block = blocks_[static_cast<size_t>(mirror_id)].size() == blocks_[k].size();
    for (int x : blocks_[k])
      if (block_id(-x) != mirror_id) {
        mirror_is_block = false;
        break;
      }
    if (mirror_is_block && mirror_id == static_cast<int>(k)) {
      out += "(" + body(blocks_[k]) + ")";  // zero-block
    } else if (mirror_is_block && !done[static_cast<size_t>(mirror_id)]) {
      done[static_cast<size_t>(mirror_id)] = true;
      out += "((" + body(blocks_[k]) + "))";
    } else {
      out += "{" + body(blocks_[k]) + "}";
    }
  }
  return out;
}

std::string SignedPartition::json() const {
  std::string out = "{\"n\": " + std::to_string(n_) + ", \"blocks\": [";
  for (size_t k = 0; k < blocks_.size(); ++k) {
    if (k) out += ", ";
    out.push_back('[');
    for (size_t j = 0; j < blocks_[k].size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(blocks_[k][j]);
    }
    out.push_back(']');
  }
  out += "]}";
  return out;
}

SignedPartition orbit_partition(const SignedPermutation& tau) {
  return {tau.rank(), orbits(tau).orbits};
}

SignedPartition merged_orbit_partition(const SignedPermutation& tau) {
  const OrbitSet os = orbits(tau);
  std::vector<std::vector<int>> blocks;
  std::vector<int> merged;
  for (size_t k = 0; k < os.orbits.size(); ++k) {
    if (os.zero_block[k])
      merged.insert(merged.end(), os.orbits[k].begin(), os.orbits[k].end());
    else
      blocks.push_back(os.orbits[k]);
  }
  if (!merged.empty()) blocks.push_back(std::move(merged));
  return {tau.rank(), std::move(blocks)};
}

bool refinement_le(const SignedPartition& fine, const SignedPartition& coarse) {
  if (fine.rank() != coarse.rank())
    throw std::invalid_argument("rank mismatch in refinement_le");
  for (const auto& block : fine.blocks()) {
    const int target = coarse.block_id(block.front());
    for (int x : block)
      if (coarse.block_id(x) != target) return false;
  }
  return true;
}

SignedPartition meet(const SignedPartition& a, const SignedPartition& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in meet");
  const int n = a.rank();
  const int b_count = b.block_count();
  std::vector<int> cell_of(static_cast<size_t>(a.block_count() * b_count), -1);
  std::vector<std::vector<int>> blocks;
  for (int idx = 0; idx < 2 * n; ++idx) {
    const int x = point_at(idx, n);
    int& slot = cell_of[static_cast<size_t>(a.block_id(x) * b_count + b.block_id(x))];
    if (slot < 0) {
      slot = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<size_t>(slot)].push_back(x);
  }
  return {n, std::move(blocks)};
}

namespace {

std::mutex g_disc_mutex;

}  // namespace

const std::vector<SignedPartition>& disc_noncrossing_partitions(int n) {
  if (n < 1) throw std::invalid_argument("rank must be a positive integer");
  if (n > 6) throw BoundError("disc poset construction is capped at rank 6");
  static std::map<int, std::vector<SignedPartition>> cache;
  std::lock_guard<std::mutex> lock(g_disc_mutex);
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) {
    const GroundPermutation gamma_o = disc_reference(n);
    std::unordered_set<std::string> seen;
    for_each_in_hyperoctahedral(n, [&](const SignedPermutation& tau) {
      if (!is_noncrossing(to_ground(tau), gamma_o)) return;
      SignedPartition part = orbit_partition(tau);
      if (!seen.insert(part.to_string()).second)
        throw std::logic_error("disc orbit map failed to be injective");
      it->second.push_back(std::move(part));
    });
  }
  return it->second;
}

bool is_disc_noncrossing(const SignedPartition& part) {
  for (const auto& candidate : disc_noncrossing_partitions(part.rank()))
    if (candidate == part) return true;
  return false;
}

SignedPartition embed_disc_pair(const SignedPartition& outer_part,
                                const SignedPartition& inner_part) {
  if (!is_disc_noncrossing(outer_part))
    throw std::invalid_argument("outer partition is not disc non-crossing");
  if (!is_disc_noncrossing(inner_part))
    throw std::invalid_argument("inner partition is not disc non-crossing");
  const int p = outer_part.rank(), q = inner_part.rank(), n = p + q;
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(static_cast<size_t>(2 * n), false);
  const auto push = [&](std::vector<int> block) {
    for (int x : block) used[static_cast<size_t>(point_index(x, n))] = true;
    blocks.push_back(std::move(block));
  };
  const auto not_symmetric = [](const SignedPartition& part, const std::vector<int>& block) {
    return !part.same_block(block.front(), -block.front());
  };
  for (const auto& block : outer_part.blocks())
    if (not_symmetric(outer_part, block)) push(block);
  for (const auto& block : inner_part.blocks()) {
    if (!not_symmetric(inner_part, block)) continue;
    std::vector<int> shifted;
    for (int b : block) shifted.push_back(b > 0 ? b + p : b - p);
    push(std::move(shifted));
  }
  std::vector<int> rest;
  for (int idx = 0; idx < 2 * n; ++idx)
    if (!used[static_cast<size_t>(idx)]) rest.push_back(point_at(idx, n));
  if (!rest.empty()) blocks.push_back(std::move(rest));
  return {n, std::move(blocks)};
}

SignedPartition project_outer(const SignedPartition& part, const AnnulusConfig& cfg) {
  if (part.rank() != cfg.n) throw std::invalid_argument("rank mismatch with annulus");
  std::vector<std::vector<int>> blocks;
  for (const auto& block : part.blocks()) {
    std::vector<int> trace;
    for (int x : block)
      if (cfg.on_outer(x)) trace.push_back(x);
    if (!trace.empty()) blocks.push_back(std::move(trace));
  }
  return {cfg.p, std::move(blocks)};
}

SignedPartition project_inner(const SignedPartition& part, const AnnulusConfig& cfg) {
  if (part.rank() != cfg.n) throw std::invalid_argument("rank mismatch with annulus");
  std::vector<std::vector<int>> blocks;
  for (const auto& block : part.blocks()) {
    std::vector<int> trace;
    for (int x : block)
      if (!cfg.on_outer(x)) trace.push_back(x > 0 ? x - cfg.p : x + cfg.p);
    if (!trace.empty()) blocks.push_back(std::move(trace));
  }
  return {cfg.q, std::move(blocks)};
}

CanonicalOrbitPerm canonical_orbit_cycle(const std::vector<int>& subset,
                                         const AnnulusConfig& cfg) {
  if (subset.empty()) throw std::invalid_argument("empty orbit");
  std::vector<int> pts = subset;
  sort_canonical(pts);
  int first_outer = 0, first_inner = 0;
  bool outer = false, inner = false;
  for (int x : pts) {
    if (x == 0 || std::abs(x) > cfg.n) throw std::invalid_argument("orbit entry out of range");
    if (cfg.on_outer(x)) {
      if (!outer) first_outer = x;
      outer = true;
    } else {
      if (!inner) first_inner = x;
      inner = true;
    }
  }
  GroundPermutation perm = [&] {
    if (outer && inner) {
      // Circle-crossing orbit: must avoid its own mirror.
      for (int x : pts)
        if (std::binary_search(pts.begin(), pts.end(), -x, canonical_less))
          throw std::invalid_argument("circle-crossing orbit meets its own mirror");
      return induced(ac_test_perm(cfg.gamma, -first_outer, -first_inner), pts);
    }
    return induced(cfg.gamma, pts);
  }();
  if (pts.size() > 1 && orbit_count(perm) != 1)
    throw std::logic_error("canonical orbit permutation is not a single cycle");
  return {std::move(pts), std::move(perm)};
}

namespace {

// Writes the cycle mu into the positive-image array of a rank-n signed
// permutation; the mirror cycle comes out for free from the symmetry.
void write_cycle(std::vector<int>& img, const CanonicalOrbitPerm& mu) {
  for (int x : mu.points) {
    const int y = mu.perm.apply(x);
    if (x > 0) {
      if (img[static_cast<size_t>(x - 1)] != x && img[static_cast<size_t>(x - 1)] != y)
        throw std::logic_error("conflicting canonical cycles");
      img[static_cast<size_t>(x - 1)] = y;
    } else {
      if (img[static_cast<size_t>(-x - 1)] != -x && img[static_cast<size_t>(-x - 1)] != -y)
        throw std::logic_error("conflicting canonical cycles");
      img[static_cast<size_t>(-x - 1)] = -y;
    }
  }
}

}  // namespace

bool is_realizable_orbit(const std::vector<int>& subset, const AnnulusConfig& cfg) {
  if (subset.empty()) throw std::invalid_argument("empty orbit");
  std::vector<int> pts = subset;
  sort_canonical(pts);
  bool outer = false, inner = false, meets_mirror = false, equals_mirror = true;
  for (int x : pts) {
    if (x == 0 || std::abs(x) > cfg.n) throw std::invalid_argument("orbit entry out of range");
    (cfg.on_outer(x) ? outer : inner) = true;
    if (std::binary_search(pts.begin(), pts.end(), -x, canonical_less))
      meets_mirror = true;
    else
      equals_mirror = false;
  }
  if (meets_mirror && !equals_mirror) return false;  // orbits of B_n never do this
  if (equals_mirror && outer && inner) return false; // circle-crossing zero orbit (Prop 3.4)

  const CanonicalOrbitPerm mu = canonical_orbit_cycle(pts, cfg);
  std::vector<int> img(static_cast<size_t>(cfg.n));
  for (int i = 0; i < cfg.n; ++i) img[static_cast<size_t>(i)] = i + 1;
  write_cycle(img, mu);
  const SignedPermutation witness(cfg.n, std::move(img));
  return is_noncrossing(to_ground(witness), cfg.gamma);
}

SignedPermutation permutation_from_blocks(const SignedPartition& part,
                                          const AnnulusConfig& cfg) {
  if (part.rank() != cfg.n) throw std::invalid_argument("rank mismatch with annulus");
  if (!part.negation_closed())
    throw std::invalid_argument("partition is not closed under negation");
  if (part.crosses_circles(cfg) && !part.zero_blocks().empty())
    throw std::invalid_argument(
        "a circle-crossing partition with zero-blocks has no canonical permutation");
  std::vector<int> img(static_cast<size_t>(cfg.n));
  for (int i = 0; i < cfg.n; ++i) img[static_cast<size_t>(i)] = i + 1;
  for (const auto& block : part.blocks()) {
    if (!is_realizable_orbit(block, cfg))
      throw std::invalid_argument("block is not a realizable orbit: " +
                                  SignedPartition(cfg.n, {block}).to_string());
    write_cycle(img, canonical_orbit_cycle(block, cfg));
  }
  SignedPermutation tau(cfg.n, std::move(img));
  if (orbit_partition(tau) != part)
    throw std::logic_error("assembled permutation does not reproduce the blocks");
  return tau;
}

std::optional<SignedPermutation> annular_witness(const SignedPartition& part,
                                                 const AnnulusConfig& cfg) {
  if (part.rank() != cfg.n) throw std::invalid_argument("rank mismatch with annulus");
  if (!part.negation_closed()) return std::nullopt;
  const auto zeros = part.zero_blocks();
  if (zeros.size() > 1) return std::nullopt;  // merged partitions keep at most one

  std::vector<std::vector<int>> blocks = part.blocks();
  if (zeros.size() == 1) {
    std::vector<int> outer_half, inner_half;
    for (int x : zeros.front()) (cfg.on_outer(x) ? outer_half : inner_half).push_back(x);
    if (!outer_half.empty() && !inner_half.empty()) {
      // The merged circle-crossing zero-block splits back into its halves.
      blocks.erase(std::remove(blocks.begin(), blocks.end(), zeros.front()), blocks.end());
      blocks.push_back(std::move(outer_half));
      blocks.push_back(std::move(inner_half));
    }
  }
  try {
    SignedPermutation tau = permutation_from_blocks(SignedPartition(cfg.n, blocks), cfg);
    if (!is_noncrossing(to_ground(tau), cfg.gamma)) return std::nullopt;
    if (merged_orbit_partition(tau) != part) return std::nullopt;
    return tau;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

SignedPartition split_merged_zero_block(const SignedPartition& part, const AnnulusConfig& cfg) {
  const auto tau = annular_witness(part, cfg);
  if (!tau) throw std::invalid_argument("partition is not in NC^B(p,q)");
  return orbit_partition(*tau);
}

}  // namespace anc
