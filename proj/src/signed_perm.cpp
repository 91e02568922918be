#include "anc/signed_perm.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace anc {

namespace {

void validate_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be a positive integer");
}

std::string image_key(const std::vector<int>& img) {
  std::string key;
  key.reserve(img.size());
  for (int v : img) key.push_back(static_cast<char>(v + 64));
  return key;
}

}  // namespace

SignedPermutation::SignedPermutation(int n) : n_(n), img_(static_cast<size_t>(n)) {
  validate_rank(n);
  for (int i = 0; i < n; ++i) img_[i] = i + 1;
}

SignedPermutation::SignedPermutation(int n, std::vector<int> image)
    : n_(n), img_(std::move(image)) {
  validate_rank(n);
  if (static_cast<int>(img_.size()) != n)
    throw std::invalid_argument("image vector has wrong length");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : img_) {
    const int a = std::abs(v);
    if (a < 1 || a > n) throw std::invalid_argument("image value out of range");
    if (seen[a]) throw std::invalid_argument("image is not a signed bijection");
    seen[a] = true;
  }
}

SignedPermutation compose(const SignedPermutation& outer, const SignedPermutation& inner) {
  if (outer.rank() != inner.rank()) throw std::invalid_argument("rank mismatch in compose");
  const int n = outer.rank();
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) img[i - 1] = outer(inner(i));
  return {n, std::move(img)};
}

SignedPermutation inverse(const SignedPermutation& tau) {
  const int n = tau.rank();
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int j = tau(i);
    if (j > 0)
      img[j - 1] = i;
    else
      img[-j - 1] = -i;
  }
  return {n, std::move(img)};
}

int OrbitSet::zero_count() const {
  int k = 0;
  for (bool z : zero_block) k += z ? 1 : 0;
  return k;
}

OrbitSet orbits(const SignedPermutation& tau) {
  const int n = tau.rank();
  const int m = 2 * n;
  std::vector<int> orbit_id(static_cast<size_t>(m), -1);
  OrbitSet out;
  for (int start = 0; start < m; ++start) {
    if (orbit_id[start] >= 0) continue;
    const int id = static_cast<int>(out.orbits.size());
    std::vector<int> orbit;
    int x = point_at(start, n);
    while (true) {
      const int idx = point_index(x, n);
      if (orbit_id[idx] >= 0) break;
      orbit_id[idx] = id;
      orbit.push_back(x);
      x = tau(x);
    }
    sort_canonical(orbit);
    out.orbits.push_back(std::move(orbit));
    out.zero_block.push_back(false);
  }
  for (size_t k = 0; k < out.orbits.size(); ++k) {
    const int a = out.orbits[k].front();
    out.zero_block[k] = orbit_id[point_index(-a, n)] == orbit_id[point_index(a, n)];
  }
  return out;
}

int absolute_length(const SignedPermutation& tau) {
  const OrbitSet os = orbits(tau);
  const int mirror_pairs = (os.count() - os.zero_count()) / 2;
  return tau.rank() - mirror_pairs;
}

bool absolute_le(const SignedPermutation& sigma, const SignedPermutation& tau) {
  if (sigma.rank() != tau.rank()) throw std::invalid_argument("rank mismatch in absolute_le");
  return absolute_length(tau) ==
         absolute_length(sigma) + absolute_length(compose(inverse(sigma), tau));
}

bool covers(const SignedPermutation& sigma, const SignedPermutation& tau) {
  if (sigma.rank() != tau.rank()) throw std::invalid_argument("rank mismatch in covers");
  const int n = sigma.rank();
  const SignedPermutation delta = compose(inverse(sigma), tau);

  std::vector<int> moved;  // points of X moved by delta
  for (int i = 1; i <= n; ++i) {
    if (delta(i) != i) {
      moved.push_back(i);
      moved.push_back(-i);
    }
  }
  if (moved.empty()) return false;

  // Orbit ids of sigma over all 2n points.
  const OrbitSet os = orbits(sigma);
  std::vector<int> oid(static_cast<size_t>(2 * n));
  for (size_t k = 0; k < os.orbits.size(); ++k)
    for (int x : os.orbits[k]) oid[point_index(x, n)] = static_cast<int>(k);
  const auto orb = [&](int x) { return oid[point_index(x, n)]; };

  if (moved.size() == 2) {
    // Candidate shape (i,-i).
    const int i = moved[0];
    if (delta(i) != -i) return false;
    return orb(i) != orb(-i);
  }
  if (moved.size() == 4) {
    // Candidate shape (i,j)(-i,-j) with |i| != |j| (covers (i,-j)(-i,j) too).
    const int i = moved[0];
    const int j = delta(i);
    if (std::abs(j) == i) return false;
    if (delta(j) != i) return false;  // rules out 4-cycles like (i,j,-i,-j)
    const int oi = orb(i), omi = orb(-i), oj = orb(j), omj = orb(-j);
    const bool i_pair = oi == omi, j_pair = oj == omj;
    if (i_pair != j_pair) return true;                              // case (b)
    if (i_pair && j_pair) return false;
    if (oi == omj) return true;                                     // case (d)
    return oi != oj && oi != omj && omi != oj;                      // case (c)
  }
  return false;
}

bool in_type_D(const SignedPermutation& tau) {
  return (2 * tau.rank() - orbits(tau).count()) % 2 == 0;
}

namespace {

SignedPermutation transposition_pair(int n, int a, int b) {
  // (a,b)(-a,-b) as an element of B_n.
  SignedPermutation id(n);
  std::vector<int> img = id.image();
  const auto set = [&](int x, int y) {
    if (x > 0)
      img[x - 1] = y;
    else
      img[-x - 1] = -y;
  };
  set(a, b);
  set(b, a);
  return {n, std::move(img)};
}

}  // namespace

std::vector<SignedPermutation> reflections_B(int n) {
  std::vector<SignedPermutation> gens = reflections_D(n);
  for (int i = 1; i <= n; ++i) gens.push_back(transposition_pair(n, i, -i));
  return gens;
}

std::vector<SignedPermutation> reflections_D(int n) {
  std::vector<SignedPermutation> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      gens.push_back(transposition_pair(n, i, j));
      gens.push_back(transposition_pair(n, i, -j));
    }
  return gens;
}

namespace {

// Word-length tables computed by breadth-first search from the identity,
// one per (rank, generator family). Insert-only, shared across callers.
const std::unordered_map<std::string, int>& bfs_table(int n, bool type_d) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::unordered_map<std::string, int>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = tables.try_emplace({n, type_d});
  if (inserted) {
    auto& dist = it->second;
    const auto gens = type_d ? reflections_D(n) : reflections_B(n);
    std::deque<SignedPermutation> queue;
    SignedPermutation id(n);
    dist[image_key(id.image())] = 0;
    queue.push_back(std::move(id));
    while (!queue.empty()) {
      const SignedPermutation cur = std::move(queue.front());
      queue.pop_front();
      const int d = dist[image_key(cur.image())];
      for (const auto& g : gens) {
        SignedPermutation next = compose(cur, g);
        auto key = image_key(next.image());
        if (dist.emplace(std::move(key), d + 1).second) queue.push_back(std::move(next));
      }
    }
  }
  return it->second;
}

}  // namespace

int absolute_length_bfs(const SignedPermutation& tau, int rank_bound) {
  if (tau.rank() > rank_bound)
    throw BoundError("rank exceeds BFS oracle bound (" + std::to_string(rank_bound) + ")");
  return bfs_table(tau.rank(), false).at(image_key(tau.image()));
}

int type_D_length_bfs(const SignedPermutation& tau, int rank_bound) {
  if (tau.rank() > rank_bound)
    throw BoundError("rank exceeds BFS oracle bound (" + std::to_string(rank_bound) + ")");
  if (!in_type_D(tau)) throw std::invalid_argument("permutation is not in D_n");
  return bfs_table(tau.rank(), true).at(image_key(tau.image()));
}

namespace {

void enumerate_rec(int n, int pos, std::vector<int>& img, std::vector<bool>& used,
                   const std::function<void(const SignedPermutation&)>& fn) {
  if (pos == n) {
    fn(SignedPermutation(n, img));
    return;
  }
  // Candidate values in canonical order: 1,...,n then -1,...,-n.
  for (int sign = 0; sign < 2; ++sign)
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      img[pos] = sign == 0 ? v : -v;
      enumerate_rec(n, pos + 1, img, used, fn);
      used[v] = false;
    }
}

}  // namespace

void for_each_in_hyperoctahedral(int n, const std::function<void(const SignedPermutation&)>& fn) {
  validate_rank(n);
  if (n > 7) throw BoundError("hyperoctahedral enumeration is capped at rank 7");
  std::vector<int> img(static_cast<size_t>(n));
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  enumerate_rec(n, 0, img, used, fn);
}

std::vector<SignedPermutation> hyperoctahedral_group(int n) {
  std::vector<SignedPermutation> out;
  for_each_in_hyperoctahedral(n, [&](const SignedPermutation& t) { out.push_back(t); });
  return out;
}

SignedPermutation parse_cycles(const std::string& text, int n) {
  validate_rank(n);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "id" || s == "()") return SignedPermutation(n);
  if (s.empty()) throw std::invalid_argument("empty permutation text");

  std::map<int, int> next;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      bool neg = false;
      if (i < s.size() && s[i] == '-') {
        neg = true;
        ++i;
      }
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) throw std::invalid_argument("expected integer in cycle notation");
      int v = std::stoi(s.substr(start, i - start));
      if (neg) v = -v;
      if (v == 0 || std::abs(v) > n) throw std::invalid_argument("cycle entry out of range");
      cycle.push_back(v);
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      throw std::invalid_argument("expected ',' or ')' in cycle notation");
    }
    for (size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (!next.emplace(from, to).second)
        throw std::invalid_argument("point appears in more than one cycle");
    }
  }

  // Auto-complete mirror cycles; an explicit cycle must agree with the
  // mirror it implies.
  const std::map<int, int> given = next;
  for (const auto& [from, to] : given) {
    const auto it = next.find(-from);
    if (it == next.end())
      next.emplace(-from, -to);
    else if (it->second != -to)
      throw std::invalid_argument("cycle conflicts with its implied mirror");
  }

  std::vector<int> img(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) {
    const auto it = next.find(v);
    img[v - 1] = it == next.end() ? v : it->second;
  }
  return {n, std::move(img)};
}

namespace {

void append_cycle(std::string& out, const SignedPermutation& tau, int start) {
  out.push_back('(');
  int x = start;
  bool first = true;
  do {
    if (!first) out.push_back(',');
    out += std::to_string(x);
    first = false;
    x = tau(x);
  } while (x != start);
  out.push_back(')');
}

}  // namespace

std::string cycle_string(const SignedPermutation& tau) {
  // Lead cycles in canonical order, then their mirrors in the same order,
  // each mirror starting at the negated lead point; this reproduces the
  // conventional form (1,2,3,5)(4,-6)(-1,-2,-3,-5)(-4,6).
  const OrbitSet os = orbits(tau);
  const int n = tau.rank();
  std::vector<int> oid(static_cast<size_t>(2 * n));
  for (size_t k = 0; k < os.orbits.size(); ++k)
    for (int x : os.orbits[k]) oid[point_index(x, n)] = static_cast<int>(k);

  std::string out, mirrors;
  std::vector<bool> done(os.orbits.size(), false);
  for (size_t k = 0; k < os.orbits.size(); ++k) {
    if (done[k] || os.orbits[k].size() < 2) continue;
    done[k] = true;
    const int lead = os.orbits[k].front();
    append_cycle(out, tau, lead);
    if (!os.zero_block[k]) {
      const size_t mirror = static_cast<size_t>(oid[point_index(-lead, n)]);
      done[mirror] = true;
      append_cycle(mirrors, tau, -lead);
    }
  }
  out += mirrors;
  return out.empty() ? "id" : out;
}

std::string compact_cycle_string(const SignedPermutation& tau) {
  const OrbitSet os = orbits(tau);
  const int n = tau.rank();
  std::vector<int> oid(static_cast<size_t>(2 * n), -1);
  for (size_t k = 0; k < os.orbits.size(); ++k)
    for (int x : os.orbits[k]) oid[point_index(x, n)] = static_cast<int>(k);
  std::vector<bool> done(os.orbits.size(), false);

  std::string out;
  for (size_t k = 0; k < os.orbits.size(); ++k) {
    if (done[k] || os.orbits[k].size() < 2) continue;
    done[k] = true;
    const int lead = os.orbits[k].front();
    if (os.zero_block[k]) {
      append_cycle(out, tau, lead);
    } else {
      const size_t mirror = static_cast<size_t>(oid[point_index(-lead, n)]);
      done[mirror] = true;
      out.push_back('(');
      append_cycle(out, tau, lead);
      out.push_back(')');
    }
  }
  return out.empty() ? "id" : out;
}

}  // namespace anc
