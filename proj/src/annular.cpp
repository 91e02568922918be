#include "anc/annular.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace anc {

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["params"] = params;
  j["passed"] = passed;
  j["counts"] = counts;
  j["witness"] = witness ? *witness : nlohmann::json();
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string VerificationReport::to_text() const {
  std::string out = "theorem " + theorem + " " + params.dump() + ": " +
                    (passed ? "PASSED" : "FAILED") + "\n";
  for (const auto& [name, value] : counts)
    out += "  " + name + " = " + std::to_string(value) + "\n";
  if (witness) out += "  witness: " + witness->dump() + "\n";
  out += "  elapsed: " + std::to_string(elapsed_ms) + " ms\n";
  return out;
}

namespace {

int initial_bound() {
  if (const char* env = std::getenv("ANNULAR_NC_BOUND")) {
    const int v = std::atoi(env);
    if (v >= 2) return v;
  }
  return 5;
}

std::atomic<int> g_bound{initial_bound()};
std::atomic<int> g_jobs{1};

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void require_pq(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive integers");
}

void require_verifier_bound(int p, int q) {
  require_pq(p, q);
  if (p + q > verifier_bound())
    throw BoundError("p+q exceeds the exhaustive bound (" + std::to_string(verifier_bound()) +
                     "); raise it with --bound or ANNULAR_NC_BOUND");
}

// Flattened signed permutation for the tight pairwise order scans.
struct Flat {
  std::array<int8_t, 8> img{};
  int len = 0;
};

Flat flatten(const SignedPermutation& t) {
  Flat f;
  for (int i = 1; i <= t.rank(); ++i) f.img[static_cast<size_t>(i - 1)] = static_cast<int8_t>(t(i));
  f.len = absolute_length(t);
  return f;
}

int signed_apply(const std::array<int8_t, 8>& img, int x) {
  return x > 0 ? img[static_cast<size_t>(x - 1)] : -img[static_cast<size_t>(-x - 1)];
}

// Absolute length of a^-1 b without heap traffic.
int quotient_length(const Flat& a, const Flat& b, int n) {
  std::array<int8_t, 8> ainv{};
  for (int i = 1; i <= n; ++i) {
    const int j = a.img[static_cast<size_t>(i - 1)];
    if (j > 0)
      ainv[static_cast<size_t>(j - 1)] = static_cast<int8_t>(i);
    else
      ainv[static_cast<size_t>(-j - 1)] = static_cast<int8_t>(-i);
  }
  uint32_t visited = 0;
  int orbits_n = 0, zero_orbits = 0;
  for (int idx = 0; idx < 2 * n; ++idx) {
    if (visited & (uint32_t{1} << idx)) continue;
    ++orbits_n;
    const int start = point_at(idx, n);
    int x = start;
    bool zero = false;
    do {
      visited |= uint32_t{1} << point_index(x, n);
      if (x == -start) zero = true;
      x = signed_apply(ainv, signed_apply(b.img, x));
    } while (x != start);
    zero_orbits += zero ? 1 : 0;
  }
  return n - (orbits_n - zero_orbits) / 2;
}

bool flat_le(const Flat& a, const Flat& b, int n) {
  return b.len == a.len + quotient_length(a, b, n);
}

struct PairFailure {
  size_t i = 0, j = 0;
  std::string kind;
};

// Row-major pair scan over i <= j; with several workers each keeps its own
// first failure and the smallest (i,j) wins, so the result is independent
// of the thread count.
template <typename CheckFn>
std::optional<PairFailure> scan_pairs(size_t n, const CheckFn& check) {
  const int jobs = std::max(1, worker_count());
  if (jobs == 1 || n < 64) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j)
        if (auto kind = check(i, j)) return PairFailure{i, j, *kind};
    return std::nullopt;
  }
  std::vector<std::optional<PairFailure>> found(static_cast<size_t>(jobs));
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(jobs));
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (size_t i = static_cast<size_t>(w); i < n; i += static_cast<size_t>(jobs)) {
        for (size_t j = i; j < n; ++j)
          if (auto kind = check(i, j)) {
            found[static_cast<size_t>(w)] = PairFailure{i, j, *kind};
            return;
          }
      }
    });
  for (auto& t : workers) t.join();
  std::optional<PairFailure> best;
  for (const auto& f : found)
    if (f && (!best || f->i < best->i || (f->i == best->i && f->j < best->j))) best = f;
  return best;
}

std::mutex g_cache_mutex;

void require_builder(int p, int q) {
  require_pq(p, q);
  if (p + q > 6) throw BoundError("set construction is capped at p+q <= 6");
}

}  // namespace

int verifier_bound() { return g_bound.load(); }

void set_verifier_bound(int bound) {
  if (bound < 2) throw std::invalid_argument("bound must be at least 2");
  g_bound.store(bound);
}

int worker_count() { return g_jobs.load(); }

void set_worker_count(int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  g_jobs.store(jobs);
}

const std::vector<SignedPermutation>& noncrossing_perms_B(int p, int q) {
  require_builder(p, q);
  static std::map<std::pair<int, int>, std::vector<SignedPermutation>> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = cache.try_emplace({p, q});
  if (inserted) {
    const AnnulusConfig cfg = AnnulusConfig::make(p, q);
    const SignedPermutation gamma = cfg.reference_perm();
    for_each_in_hyperoctahedral(p + q, [&](const SignedPermutation& tau) {
      const bool genus_zero = is_noncrossing(to_ground(tau), cfg.gamma);
      if (genus_zero != absolute_le(tau, gamma))
        throw std::logic_error("interval cross-check failed for " + cycle_string(tau));
      if (genus_zero) it->second.push_back(tau);
    });
  }
  return it->second;
}

const std::vector<SignedPartition>& noncrossing_partitions_B(int p, int q) {
  const auto& perms = noncrossing_perms_B(p, q);
  static std::map<std::pair<int, int>, std::vector<SignedPartition>> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = cache.try_emplace({p, q});
  if (inserted) {
    std::unordered_set<std::string> seen;
    for (const auto& tau : perms) {
      SignedPartition part = merged_orbit_partition(tau);
      if (!seen.insert(part.to_string()).second)
        throw std::logic_error("merged orbit map failed to be injective");
      it->second.push_back(std::move(part));
    }
  }
  return it->second;
}

const std::vector<SignedPermutation>& noncrossing_perms_D(int p, int q) {
  require_builder(p, q);
  static std::map<std::pair<int, int>, std::vector<SignedPermutation>> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = cache.try_emplace({p, q});
  if (inserted) {
    const AnnulusConfig cfg = AnnulusConfig::make(p, q);
    const SignedPermutation gamma = cfg.reference_perm();
    for_each_in_hyperoctahedral(p + q, [&](const SignedPermutation& tau) {
      if (!in_type_D(tau)) return;
      const bool genus_zero = is_noncrossing(to_ground(tau), cfg.gamma);
      if (genus_zero != absolute_le(tau, gamma))
        throw std::logic_error("type-D interval cross-check failed for " + cycle_string(tau));
      if (genus_zero) it->second.push_back(tau);
    });
  }
  return it->second;
}

const std::vector<SignedPartition>& noncrossing_partitions_D(int p, int q) {
  const auto& perms = noncrossing_perms_D(p, q);
  static std::map<std::pair<int, int>, std::vector<SignedPartition>> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = cache.try_emplace({p, q});
  if (inserted) {
    std::unordered_set<std::string> seen;
    for (const auto& tau : perms) {
      SignedPartition part = merged_orbit_partition(tau);
      if (!seen.insert(part.to_string()).second)
        throw std::logic_error("type-D merged orbit map failed to be injective");
      it->second.push_back(std::move(part));
    }
  }
  return it->second;
}

std::vector<std::vector<int>> orbit_family(int p, int q) {
  require_pq(p, q);
  if (p + q > 4) throw BoundError("full orbit family is capped at p+q <= 4");
  const int n = p + q;
  std::set<std::vector<int>> keys;  // index sequences, ascending
  for (const auto& tau : noncrossing_perms_B(p, q)) {
    for (const auto& orbit : orbits(tau).orbits) {
      std::vector<int> key;
      key.reserve(orbit.size());
      for (int x : orbit) key.push_back(point_index(x, n));
      std::sort(key.begin(), key.end());
      keys.insert(std::move(key));
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(keys.size());
  for (const auto& key : keys) {
    std::vector<int> orbit;
    orbit.reserve(key.size());
    for (int idx : key) orbit.push_back(point_at(idx, n));
    sort_canonical(orbit);
    out.push_back(std::move(orbit));
  }
  return out;
}

VerificationReport verify_interval(int p, int q) {
  const Stopwatch timer;
  require_verifier_bound(p, q);
  VerificationReport r;
  r.theorem = "interval";
  r.params = {{"p", p}, {"q", q}};

  const AnnulusConfig cfg = AnnulusConfig::make(p, q);
  const SignedPermutation gamma = cfg.reference_perm();
  const GroundPermutation alpha = induced(cfg.gamma, cfg.outer);
  const GroundPermutation beta = induced(cfg.gamma, cfg.inner);

  long long group_size = 0, members = 0, connected_members = 0, disconnected = 0;
  for_each_in_hyperoctahedral(p + q, [&](const SignedPermutation& tau) {
    if (!r.passed) return;
    ++group_size;
    const GroundPermutation g = to_ground(tau);
    const bool genus_zero = is_noncrossing(g, cfg.gamma);
    const bool below_gamma = absolute_le(tau, gamma);
    if (genus_zero != below_gamma) {
      r.passed = false;
      r.witness = {{"tau", cycle_string(tau)},
                   {"genus_zero", genus_zero},
                   {"le_gamma", below_gamma},
                   {"check", "interval equality"}};
      return;
    }
    const OrbitSet os = orbits(tau);
    bool connected = false;
    for (const auto& orbit : os.orbits) {
      bool outer = false, inner = false;
      for (int x : orbit) (cfg.on_outer(x) ? outer : inner) = true;
      if (outer && inner) {
        connected = true;
        break;
      }
    }
    if (!connected) {
      ++disconnected;
      // Disconnected three-way equivalence: the split statement must agree.
      const bool split_nc = is_noncrossing(induced(g, cfg.outer), alpha) &&
                            is_noncrossing(induced(g, cfg.inner), beta);
      if (split_nc != genus_zero) {
        r.passed = false;
        r.witness = {{"tau", cycle_string(tau)},
                     {"genus_zero", genus_zero},
                     {"split_noncrossing", split_nc},
                     {"check", "disconnected split equivalence"}};
        return;
      }
    }
    if (genus_zero) {
      ++members;
      if (connected) {
        ++connected_members;
        if (os.zero_count() > 0) {
          r.passed = false;
          r.witness = {{"tau", cycle_string(tau)},
                       {"check", "connected member with inversion-invariant orbit"}};
          return;
        }
      }
    }
  });
  r.counts["group_size"] = group_size;
  r.counts["members"] = members;
  r.counts["connected_members"] = connected_members;
  r.counts["disconnected_scanned"] = disconnected;
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport verify_order_iso(int p, int q) {
  const Stopwatch timer;
  require_verifier_bound(p, q);
  VerificationReport r;
  r.theorem = "order-iso";
  r.params = {{"p", p}, {"q", q}};

  const int n = p + q;
  const auto& snc = noncrossing_perms_B(p, q);
  const size_t count = snc.size();

  std::vector<SignedPartition> parts;
  parts.reserve(count);
  std::unordered_set<std::string> keys;
  for (const auto& tau : snc) {
    parts.push_back(merged_orbit_partition(tau));
    keys.insert(parts.back().to_string());
  }
  if (keys.size() != count) {
    r.passed = false;
    r.witness = {{"check", "merged orbit map is not injective"}};
    r.elapsed_ms = timer.ms();
    return r;
  }

  std::vector<Flat> flats;
  flats.reserve(count);
  for (const auto& tau : snc) flats.push_back(flatten(tau));

  const auto failure = scan_pairs(count, [&](size_t i, size_t j) -> std::optional<std::string> {
    const bool le_perm_ij = flat_le(flats[i], flats[j], n);
    const bool le_part_ij = refinement_le(parts[i], parts[j]);
    if (le_perm_ij != le_part_ij) return "forward";
    if (i != j) {
      const bool le_perm_ji = flat_le(flats[j], flats[i], n);
      const bool le_part_ji = refinement_le(parts[j], parts[i]);
      if (le_perm_ji != le_part_ji) return "backward";
    }
    return std::nullopt;
  });
  if (failure) {
    r.passed = false;
    r.witness = {{"sigma", cycle_string(snc[failure->i])},
                 {"tau", cycle_string(snc[failure->j])},
                 {"check", "order mismatch (" + failure->kind + ")"}};
    r.elapsed_ms = timer.ms();
    return r;
  }

  // Negative control: the raw orbit map must fail order preservation.
  const SignedPartition omega_gamma = orbit_partition(AnnulusConfig::make(p, q).reference_perm());
  long long raw_omega_counterexamples = 0;
  for (const auto& tau : snc)
    if (!refinement_le(orbit_partition(tau), omega_gamma)) ++raw_omega_counterexamples;
  if (raw_omega_counterexamples == 0) {
    r.passed = false;
    r.witness = {{"check", "expected a raw-orbit-map order counterexample, found none"}};
  }
  r.counts["size"] = static_cast<long long>(count);
  r.counts["pairs_checked"] = static_cast<long long>(count * (count + 1) / 2);
  r.counts["raw_omega_counterexamples"] = raw_omega_counterexamples;
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport verify_lattice_B(int n) {
  const Stopwatch timer;
  if (n < 2) throw std::invalid_argument("lattice verification requires n >= 2");
  if (n > verifier_bound() + 1)
    throw BoundError("n exceeds the exhaustive bound (" + std::to_string(verifier_bound() + 1) +
                     "); raise it with --bound or ANNULAR_NC_BOUND");
  VerificationReport r;
  r.theorem = "B-lattice";
  r.params = {{"n", n}};

  const auto& parts = noncrossing_partitions_B(n - 1, 1);
  const size_t count = parts.size();

  std::vector<std::string> keys;
  keys.reserve(count);
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < count; ++i) {
    keys.push_back(parts[i].to_string());
    index.emplace(keys.back(), i);
  }
  const FinitePoset poset = FinitePoset::build(
      keys, [&](size_t a, size_t b) { return refinement_le(parts[a], parts[b]); });

  // Intersection meet stays inside the poset and agrees with the poset meet.
  const auto failure = scan_pairs(count, [&](size_t i, size_t j) -> std::optional<std::string> {
    const SignedPartition m = meet(parts[i], parts[j]);
    const auto it = index.find(m.to_string());
    if (it == index.end()) return "intersection meet escapes the poset";
    const auto poset_meet = poset.meet_of(i, j);
    if (!poset_meet || *poset_meet != it->second)
      return "poset meet differs from intersection meet";
    return std::nullopt;
  });
  if (failure) {
    r.passed = false;
    r.witness = {{"pi", parts[failure->i].to_string()},
                 {"rho", parts[failure->j].to_string()},
                 {"check", failure->kind}};
    r.elapsed_ms = timer.ms();
    return r;
  }

  const auto lattice = poset.lattice_check();
  if (!lattice.lattice) {
    r.passed = false;
    r.witness = {{"pi", parts[lattice.witness->first].to_string()},
                 {"rho", parts[lattice.witness->second].to_string()},
                 {"check", "missing " + lattice.failed_op}};
    r.elapsed_ms = timer.ms();
    return r;
  }

  r.counts["size"] = static_cast<long long>(count);
  r.counts["pairs_checked"] = static_cast<long long>(count * (count + 1) / 2);
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport verify_type_D(int p, int q) {
  const Stopwatch timer;
  require_verifier_bound(p, q);
  VerificationReport r;
  r.theorem = "type-D";
  r.params = {{"p", p}, {"q", q}};

  const int n = p + q;
  const AnnulusConfig cfg = AnnulusConfig::make(p, q);
  const SignedPermutation gamma = cfg.reference_perm();

  // Set equality over D_n: genus route against the interval route.
  long long d_size = 0;
  bool ok = true;
  for_each_in_hyperoctahedral(n, [&](const SignedPermutation& tau) {
    if (!ok || !in_type_D(tau)) return;
    ++d_size;
    const bool genus_zero = is_noncrossing(to_ground(tau), cfg.gamma);
    const bool below_gamma = absolute_le(tau, gamma);
    if (genus_zero != below_gamma) {
      ok = false;
      r.passed = false;
      r.witness = {{"tau", cycle_string(tau)},
                   {"genus_zero", genus_zero},
                   {"le_gamma", below_gamma},
                   {"check", "type-D interval equality"}};
    }
  });
  if (!r.passed) {
    r.elapsed_ms = timer.ms();
    return r;
  }

  const auto& snc = noncrossing_perms_D(p, q);
  const size_t count = snc.size();
  std::vector<SignedPartition> parts;
  parts.reserve(count);
  std::unordered_set<std::string> keys;
  for (const auto& tau : snc) {
    parts.push_back(merged_orbit_partition(tau));
    keys.insert(parts.back().to_string());
  }
  if (keys.size() != count) {
    r.passed = false;
    r.witness = {{"check", "type-D merged orbit map is not injective"}};
    r.elapsed_ms = timer.ms();
    return r;
  }
  std::vector<Flat> flats;
  flats.reserve(count);
  for (const auto& tau : snc) flats.push_back(flatten(tau));
  const auto failure = scan_pairs(count, [&](size_t i, size_t j) -> std::optional<std::string> {
    if (flat_le(flats[i], flats[j], n) != refinement_le(parts[i], parts[j])) return "forward";
    if (i != j && flat_le(flats[j], flats[i], n) != refinement_le(parts[j], parts[i]))
      return "backward";
    return std::nullopt;
  });
  if (failure) {
    r.passed = false;
    r.witness = {{"sigma", cycle_string(snc[failure->i])},
                 {"tau", cycle_string(snc[failure->j])},
                 {"check", "type-D order mismatch (" + failure->kind + ")"}};
    r.elapsed_ms = timer.ms();
    return r;
  }

  r.counts["d_size"] = d_size;
  r.counts["size"] = static_cast<long long>(count);
  r.counts["pairs_checked"] = static_cast<long long>(count * (count + 1) / 2);

  if (q == 1) {
    std::vector<std::string> key_list;
    key_list.reserve(count);
    for (const auto& part : parts) key_list.push_back(part.to_string());
    const FinitePoset poset = FinitePoset::build(
        key_list, [&](size_t a, size_t b) { return refinement_le(parts[a], parts[b]); });
    const auto lattice = poset.lattice_check();
    if (!lattice.lattice) {
      r.passed = false;
      r.witness = {{"pi", parts[lattice.witness->first].to_string()},
                   {"rho", parts[lattice.witness->second].to_string()},
                   {"check", "type-D poset is missing a " + lattice.failed_op}};
      r.elapsed_ms = timer.ms();
      return r;
    }
    r.counts["lattice"] = 1;

    // A zero-block is forced to contain the inner-circle points n and -n.
    for (const auto& part : parts) {
      for (const auto& zero : part.zero_blocks()) {
        const bool has_n = std::binary_search(zero.begin(), zero.end(), n, canonical_less);
        const bool has_neg_n = std::binary_search(zero.begin(), zero.end(), -n, canonical_less);
        if (!has_n || !has_neg_n) {
          r.passed = false;
          r.witness = {{"partition", part.to_string()},
                       {"check", "zero-block does not contain the inner circle"}};
          r.elapsed_ms = timer.ms();
          return r;
        }
      }
    }
  }
  r.elapsed_ms = timer.ms();
  return r;
}

VerificationReport lattice_counterexample_22() {
  const Stopwatch timer;
  VerificationReport r;
  r.theorem = "counterexample";
  r.params = {{"p", 2}, {"q", 2}};

  const AnnulusConfig cfg = AnnulusConfig::make(2, 2);
  const SignedPermutation sigma = parse_cycles("(1,2,3,4)(-1,-2,-3,-4)", 4);
  const SignedPermutation tau = parse_cycles("(1,-4,3,-2)(-1,4,-3,2)", 4);
  const SignedPermutation sigma_o = parse_cycles("(1,3)(-1,-3)", 4);
  const SignedPermutation tau_o = parse_cycles("(2,4)(-2,-4)", 4);

  const SignedPartition pi = orbit_partition(sigma);
  const SignedPartition rho = orbit_partition(tau);
  const SignedPartition pi_o = orbit_partition(sigma_o);
  const SignedPartition rho_o = orbit_partition(tau_o);

  const auto& ncb = noncrossing_partitions_B(2, 2);
  const auto member = [&](const SignedPartition& part) {
    for (const auto& candidate : ncb)
      if (candidate == part) return true;
    return false;
  };

  const auto fail = [&](nlohmann::json witness) {
    r.passed = false;
    r.witness = std::move(witness);
  };

  for (const auto* part : {&pi, &rho, &pi_o, &rho_o})
    if (r.passed && !member(*part))
      fail({{"partition", part->to_string()}, {"check", "membership in NC^B(2,2)"}});

  if (r.passed &&
      !(refinement_le(pi_o, pi) && refinement_le(pi_o, rho) && refinement_le(rho_o, pi) &&
        refinement_le(rho_o, rho)))
    fail({{"check", "bounding relations pi_o, rho_o <= pi, rho"}});

  long long sandwich_candidates = 0;
  if (r.passed) {
    for (const auto& nu : ncb) {
      if (refinement_le(pi_o, nu) && refinement_le(rho_o, nu) && refinement_le(nu, pi) &&
          refinement_le(nu, rho)) {
        ++sandwich_candidates;
        fail({{"nu", nu.to_string()}, {"check", "unexpected sandwich partition"}});
        break;
      }
    }
  }

  if (r.passed) {
    const SignedPartition nu = meet(pi, rho);
    const SignedPermutation from_meet = permutation_from_blocks(nu, cfg);
    const auto incompatible = check_compatible(to_ground(from_meet), cfg.gamma);
    const auto pattern = find_crossing_pattern(to_ground(from_meet), cfg.gamma);
    if (incompatible)
      fail({{"check", "meet-derived permutation should be compatible"},
            {"witness", incompatible->json()}});
    else if (!pattern || pattern->kind != CrossingWitness::Kind::AC3)
      fail({{"check", "meet-derived permutation should display AC-3"},
            {"pattern", pattern ? pattern->json() : "none"}});
    else
      r.counts["ac3_points"] = static_cast<long long>(pattern->points.size());
  }

  r.counts["ncb_size"] = static_cast<long long>(ncb.size());
  r.counts["sandwich_candidates"] = sandwich_candidates;
  r.elapsed_ms = timer.ms();
  return r;
}

}  // namespace anc
