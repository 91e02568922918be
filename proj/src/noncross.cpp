#include "anc/noncross.hpp"

#include <stdexcept>
#include <unordered_map>

namespace anc {

std::string CrossingWitness::kind_name() const {
  switch (kind) {
    case Kind::DC: return "DC";
    case Kind::AC1: return "AC1";
    case Kind::AC2: return "AC2";
    case Kind::AC3: return "AC3";
    case Kind::Incompatible: return "INCOMPATIBLE";
  }
  return "?";
}

std::string CrossingWitness::json() const {
  std::string out = "{\"kind\": \"" + kind_name() + "\", \"points\": [";
  for (size_t i = 0; i < points.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(points[i]);
  }
  out += "]";
  if (!detail.empty()) out += ", \"detail\": \"" + detail + "\"";
  out += "}";
  return out;
}

AnnulusConfig AnnulusConfig::make(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("annulus requires p >= 1 and q >= 1");
  const int n = p + q;
  std::vector<int> outer_cycle, inner_cycle;
  for (int i = 1; i <= p; ++i) outer_cycle.push_back(i);
  for (int i = 1; i <= p; ++i) outer_cycle.push_back(-i);
  for (int i = p + 1; i <= n; ++i) inner_cycle.push_back(i);
  for (int i = p + 1; i <= n; ++i) inner_cycle.push_back(-i);

  std::vector<int> pts = symmetric_points(n);
  std::vector<int> img(pts.size());
  GroundPermutation id = GroundPermutation::identity(pts);
  for (size_t k = 0; k < outer_cycle.size(); ++k)
    img[static_cast<size_t>(id.index_of(outer_cycle[k]))] =
        outer_cycle[(k + 1) % outer_cycle.size()];
  for (size_t k = 0; k < inner_cycle.size(); ++k)
    img[static_cast<size_t>(id.index_of(inner_cycle[k]))] =
        inner_cycle[(k + 1) % inner_cycle.size()];

  AnnulusConfig cfg{p, q, n, GroundPermutation(pts, img), outer_cycle, inner_cycle};
  sort_canonical(cfg.outer);
  sort_canonical(cfg.inner);
  return cfg;
}

SignedPermutation AnnulusConfig::reference_perm() const {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) img[i - 1] = gamma.apply(i);
  return {n, std::move(img)};
}

GroundPermutation disc_reference(int n) {
  if (n < 1) throw std::invalid_argument("disc reference requires n >= 1");
  std::vector<int> cycle;
  for (int i = 1; i <= n; ++i) cycle.push_back(i);
  for (int i = 1; i <= n; ++i) cycle.push_back(-i);
  return GroundPermutation::single_cycle(cycle);
}

int genus(const GroundPermutation& tau, const GroundPermutation& gamma) {
  if (tau.points() != gamma.points())
    throw std::invalid_argument("ground-set mismatch in genus");
  const int bracket = tau.size() + 2 * joint_orbit_count(tau, gamma) -
                      (orbit_count(tau) + orbit_count(ground_compose(ground_inverse(tau), gamma)) +
                       orbit_count(gamma));
  if (bracket < 0 || bracket % 2 != 0)
    throw std::logic_error("genus formula produced an odd or negative bracket");
  return bracket / 2;
}

bool is_noncrossing(const GroundPermutation& tau, const GroundPermutation& gamma) {
  return genus(tau, gamma) == 0;
}

namespace {

// Orbit tables of a permutation in index space: orbit id, position along
// the orbit, orbit length, plus the members of each orbit in walk order.
struct CycleTable {
  std::vector<int> orb, pos;
  std::vector<int> olen;
  std::vector<std::vector<int>> members;

  explicit CycleTable(const GroundPermutation& g) {
    const int m = g.size();
    orb.assign(static_cast<size_t>(m), -1);
    pos.assign(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
      if (orb[static_cast<size_t>(i)] >= 0) continue;
      const int id = static_cast<int>(members.size());
      members.emplace_back();
      int x = i, p = 0;
      while (orb[static_cast<size_t>(x)] < 0) {
        orb[static_cast<size_t>(x)] = id;
        pos[static_cast<size_t>(x)] = p++;
        members.back().push_back(x);
        x = g.index_image()[static_cast<size_t>(x)];
      }
      olen.push_back(p);
    }
  }

  // First return of the walk from u into the set S (u must be in S);
  // returns u itself when no other element of S shares u's orbit.
  int first_return(const std::vector<int>& S, int u) const {
    const int o = orb[static_cast<size_t>(u)];
    const int L = olen[static_cast<size_t>(o)];
    int best = u, best_gap = L + 1;
    for (int v : S) {
      if (v == u || orb[static_cast<size_t>(v)] != o) continue;
      int gap = (pos[static_cast<size_t>(v)] - pos[static_cast<size_t>(u)]) % L;
      if (gap <= 0) gap += L;
      if (gap < best_gap) {
        best_gap = gap;
        best = v;
      }
    }
    return best;
  }

  // Whether the induced permutation on the listed distinct points is the
  // cycle visiting them in the listed order.
  bool induces_cycle(const std::vector<int>& pts_in_order) const {
    const int o = orb[static_cast<size_t>(pts_in_order.front())];
    for (int v : pts_in_order)
      if (orb[static_cast<size_t>(v)] != o) return false;
    const int L = olen[static_cast<size_t>(o)];
    int total = 0;
    for (size_t k = 0; k < pts_in_order.size(); ++k) {
      const int u = pts_in_order[k];
      const int v = pts_in_order[(k + 1) % pts_in_order.size()];
      int gap = (pos[static_cast<size_t>(v)] - pos[static_cast<size_t>(u)]) % L;
      if (gap <= 0) gap += L;
      total += gap;
    }
    return total == L;
  }
};

// Position of every index along the long cycle of the AC-test permutation
// lambda_{y,z}; y and z get -1. The cycle length is m - 2.
std::vector<int> lambda_positions(const CycleTable& gamma, int m, int y, int z) {
  std::vector<int> lpos(static_cast<size_t>(m), -1);
  int c = 0;
  for (int base : {y, z}) {
    const int o = gamma.orb[static_cast<size_t>(base)];
    const int L = gamma.olen[static_cast<size_t>(o)];
    for (int t = 1; t < L; ++t) {
      const int idx = gamma.members[static_cast<size_t>(o)]
                                   [static_cast<size_t>((gamma.pos[static_cast<size_t>(base)] + t) % L)];
      lpos[static_cast<size_t>(idx)] = c++;
    }
  }
  return lpos;
}

bool lambda_induces_cycle(const std::vector<int>& lpos, int cycle_len,
                          const std::vector<int>& pts_in_order) {
  int total = 0;
  for (size_t k = 0; k < pts_in_order.size(); ++k) {
    const int pu = lpos[static_cast<size_t>(pts_in_order[k])];
    const int pv = lpos[static_cast<size_t>(pts_in_order[(k + 1) % pts_in_order.size()])];
    if (pu < 0 || pv < 0) return false;
    int gap = (pv - pu) % cycle_len;
    if (gap <= 0) gap += cycle_len;
    total += gap;
  }
  return total == cycle_len;
}

std::string point_list(const GroundPermutation& g, const std::vector<int>& idxs) {
  std::string out = "{";
  for (size_t k = 0; k < idxs.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(g.points()[static_cast<size_t>(idxs[k])]);
  }
  out += "}";
  return out;
}

}  // namespace

GroundPermutation ac_test_perm(const GroundPermutation& gamma, int y, int z) {
  const auto orbs = gamma.cycles();
  if (orbs.size() != 2) throw std::invalid_argument("ac_test_perm needs a two-orbit reference");
  // cycles() lists the orbit of the canonically least point first; that is
  // the outer circle.
  const auto in = [](const std::vector<int>& s, int x) {
    return std::binary_search(s.begin(), s.end(), x, canonical_less);
  };
  if (!in(orbs[0], y)) throw std::invalid_argument("y is not on the outer circle");
  if (!in(orbs[1], z)) throw std::invalid_argument("z is not on the inner circle");

  std::vector<int> img(gamma.points().size());
  GroundPermutation id = GroundPermutation::identity(gamma.points());
  std::vector<int> cycle;
  for (int base : {y, z}) {
    int x = gamma.apply(base);
    while (x != base) {
      cycle.push_back(x);
      x = gamma.apply(x);
    }
  }
  for (size_t k = 0; k < gamma.points().size(); ++k) img[k] = gamma.points()[k];
  for (size_t k = 0; k < cycle.size(); ++k)
    img[static_cast<size_t>(id.index_of(cycle[k]))] = cycle[(k + 1) % cycle.size()];
  return {gamma.points(), std::move(img)};
}

std::optional<CrossingWitness> check_compatible(const GroundPermutation& tau,
                                                const GroundPermutation& gamma) {
  if (tau.points() != gamma.points())
    throw std::invalid_argument("ground-set mismatch in check_compatible");
  const auto gamma_orbits = gamma.cycles();
  if (gamma_orbits.size() > 2)
    throw std::invalid_argument("compatibility is defined for one or two circles only");

  const CycleTable ttab(tau), gtab(gamma);
  const int m = tau.size();

  const auto orbit_points = [&](const std::vector<int>& idxs) {
    std::vector<int> pts;
    for (int i : idxs) pts.push_back(tau.points()[static_cast<size_t>(i)]);
    sort_canonical(pts);
    return pts;
  };

  if (gamma_orbits.size() == 1) {
    for (const auto& members : ttab.members) {
      // tau|A must equal gamma|A.
      for (int u : members) {
        if (ttab.first_return(members, u) != gtab.first_return(members, u)) {
          return CrossingWitness{CrossingWitness::Kind::Incompatible, orbit_points(members),
                                 "induced permutations differ on orbit " +
                                     point_list(tau, members)};
        }
      }
    }
    return std::nullopt;
  }

  // Two circles. Outer = orbit of index 0 (the canonically least point).
  std::vector<bool> on_outer(static_cast<size_t>(m), false);
  {
    const int o = gtab.orb[0];
    for (int i = 0; i < m; ++i) on_outer[static_cast<size_t>(i)] = gtab.orb[static_cast<size_t>(i)] == o;
  }

  for (const auto& members : ttab.members) {
    std::vector<int> in_y, in_z;
    for (int u : members) (on_outer[static_cast<size_t>(u)] ? in_y : in_z).push_back(u);
    // Clause (i): induced agreement on A n Y and A n Z (vacuous when empty).
    for (const auto* part : {&in_y, &in_z}) {
      for (int u : *part) {
        if (ttab.first_return(*part, u) != gtab.first_return(*part, u)) {
          return CrossingWitness{
              CrossingWitness::Kind::Incompatible, orbit_points(members),
              std::string("clause (i): induced permutations differ on ") +
                  (part == &in_y ? "outer" : "inner") + " part of orbit " +
                  point_list(tau, members)};
        }
      }
    }
    // Clause (ii): at most one jump each way.
    int jumps_out = 0, jumps_in = 0;
    for (int u : members) {
      const int v = tau.index_image()[static_cast<size_t>(u)];
      if (on_outer[static_cast<size_t>(u)] && !on_outer[static_cast<size_t>(v)]) ++jumps_out;
      if (!on_outer[static_cast<size_t>(u)] && on_outer[static_cast<size_t>(v)]) ++jumps_in;
    }
    if (jumps_out > 1 || jumps_in > 1) {
      return CrossingWitness{CrossingWitness::Kind::Incompatible, orbit_points(members),
                             "clause (ii): more than one crossing jump on orbit " +
                                 point_list(tau, members)};
    }
  }
  return std::nullopt;
}

std::optional<CrossingWitness> find_crossing_pattern(const GroundPermutation& tau,
                                                     const GroundPermutation& gamma) {
  if (tau.points() != gamma.points())
    throw std::invalid_argument("ground-set mismatch in find_crossing_pattern");
  const auto gamma_orbits = gamma.cycles();
  if (gamma_orbits.size() > 2)
    throw std::invalid_argument("crossing patterns are defined for one or two circles only");

  const int m = tau.size();
  const CycleTable ttab(tau), gtab(gamma);
  const bool disc = gamma_orbits.size() == 1;

  const auto witness = [&](CrossingWitness::Kind kind, const std::vector<int>& idxs) {
    CrossingWitness w{kind, {}, ""};
    for (int i : idxs) w.points.push_back(tau.points()[static_cast<size_t>(i)]);
    return w;
  };

  // Stage 1: DC (disc) / AC-1 (annulus) over 4-tuples.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (b == a) continue;
      for (int c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        for (int d = 0; d < m; ++d) {
          if (d == a || d == b || d == c) continue;
          if (!gtab.induces_cycle({a, b, c, d})) continue;
          const std::vector<int> S{a, b, c, d};
          if (ttab.first_return(S, a) == c && ttab.first_return(S, c) == a &&
              ttab.first_return(S, b) == d && ttab.first_return(S, d) == b)
            return witness(disc ? CrossingWitness::Kind::DC : CrossingWitness::Kind::AC1,
                           {a, b, c, d});
        }
      }
    }
  if (disc) return std::nullopt;

  std::vector<int> ys, zs;
  {
    const int o = gtab.orb[0];
    for (int i = 0; i < m; ++i)
      (gtab.orb[static_cast<size_t>(i)] == o ? ys : zs).push_back(i);
  }
  std::unordered_map<int, std::vector<int>> lambda_memo;
  const auto lpos_of = [&](int y, int z) -> const std::vector<int>& {
    auto [it, inserted] = lambda_memo.try_emplace(y * m + z);
    if (inserted) it->second = lambda_positions(gtab, m, y, z);
    return it->second;
  };

  // Stage 2: AC-2 over (a,b,c,y,z).
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (b == a) continue;
      for (int c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        // tau|{a,b,c,y,z} = (a,c,b)(y,z) forces tau|{a,b,c} = (a,c,b).
        const std::vector<int> T{a, b, c};
        if (!(ttab.first_return(T, a) == c && ttab.first_return(T, c) == b &&
              ttab.first_return(T, b) == a))
          continue;
        for (int y : ys) {
          if (y == a || y == b || y == c) continue;
          for (int z : zs) {
            if (z == a || z == b || z == c) continue;
            const auto& lpos = lpos_of(y, z);
            if (!lambda_induces_cycle(lpos, m - 2, {a, b, c})) continue;
            const std::vector<int> S{a, b, c, y, z};
            if (ttab.first_return(S, a) == c && ttab.first_return(S, c) == b &&
                ttab.first_return(S, b) == a && ttab.first_return(S, y) == z &&
                ttab.first_return(S, z) == y)
              return witness(CrossingWitness::Kind::AC2, {a, b, c, y, z});
          }
        }
      }
    }

  // Stage 3: AC-3 over (a,b,c,d,y,z).
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (b == a) continue;
      for (int c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        for (int d = 0; d < m; ++d) {
          if (d == a || d == b || d == c) continue;
          const std::vector<int> T{a, b, c, d};
          if (!(ttab.first_return(T, a) == c && ttab.first_return(T, c) == a &&
                ttab.first_return(T, b) == d && ttab.first_return(T, d) == b))
            continue;
          for (int y : ys) {
            if (y == a || y == b || y == c || y == d) continue;
            for (int z : zs) {
              if (z == a || z == b || z == c || z == d) continue;
              const auto& lpos = lpos_of(y, z);
              if (!lambda_induces_cycle(lpos, m - 2, {a, b, c, d})) continue;
              const std::vector<int> S{a, b, c, d, y, z};
              if (ttab.first_return(S, a) == c && ttab.first_return(S, c) == a &&
                  ttab.first_return(S, b) == d && ttab.first_return(S, d) == b &&
                  ttab.first_return(S, y) == z && ttab.first_return(S, z) == y)
                return witness(CrossingWitness::Kind::AC3, {a, b, c, d, y, z});
            }
          }
        }
      }
    }
  return std::nullopt;
}

bool is_noncrossing_by_patterns(const GroundPermutation& tau, const GroundPermutation& gamma) {
  return !check_compatible(tau, gamma).has_value() &&
         !find_crossing_pattern(tau, gamma).has_value();
}

}  // namespace anc
