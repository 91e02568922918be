#include "anc/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace anc {

namespace {

int popcount_words(const std::vector<uint64_t>& row) {
  int c = 0;
  for (uint64_t w : row) c += __builtin_popcountll(w);
  return c;
}

bool subset_of(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

}  // namespace

FinitePoset FinitePoset::build(std::vector<std::string> elements,
                               const std::function<bool(size_t, size_t)>& leq) {
  FinitePoset p;
  p.elements_ = std::move(elements);
  const size_t n = p.elements_.size();
  {
    std::vector<std::string> sorted = p.elements_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("poset elements must be distinct");
  }
  const size_t nw = p.words();
  p.down_.assign(n, std::vector<uint64_t>(nw, 0));
  p.up_.assign(n, std::vector<uint64_t>(nw, 0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (leq(a, b)) {
        p.up_[a][b >> 6] |= uint64_t{1} << (b & 63);
        p.down_[b][a >> 6] |= uint64_t{1} << (a & 63);
      }

  for (size_t a = 0; a < n; ++a) {
    if (!p.bit(p.up_[a], a)) throw std::invalid_argument("relation is not reflexive");
    for (size_t b = a + 1; b < n; ++b)
      if (p.bit(p.up_[a], b) && p.bit(p.up_[b], a))
        throw std::invalid_argument("relation is not antisymmetric");
  }
  for (size_t a = 0; a < n; ++a) {
    // a <= b forces up(b) inside up(a).
    for (size_t b = 0; b < n; ++b)
      if (p.bit(p.up_[a], b) && !subset_of(p.up_[b], p.up_[a]))
        throw std::invalid_argument("relation is not transitive");
  }

  // Covers: b covers a iff the closed interval [a,b] is exactly {a,b}.
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (a == b || !p.bit(p.up_[a], b)) continue;
      int interval = 0;
      for (size_t w = 0; w < nw; ++w)
        interval += __builtin_popcountll(p.up_[a][w] & p.down_[b][w]);
      if (interval == 2) p.covers_.emplace_back(a, b);
    }

  // Heights along the cover relation, processed in order of |down|.
  p.heights_.assign(n, 0);
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return popcount_words(p.down_[a]) < popcount_words(p.down_[b]);
  });
  std::vector<std::vector<size_t>> covers_below(n);
  for (const auto& [lo, hi] : p.covers_) covers_below[hi].push_back(lo);
  for (size_t idx : order)
    for (size_t lo : covers_below[idx])
      p.heights_[idx] = std::max(p.heights_[idx], p.heights_[lo] + 1);

  p.up_counts_.resize(n);
  for (size_t i = 0; i < n; ++i) p.up_counts_[i] = popcount_words(p.up_[i]);
  return p;
}

size_t FinitePoset::index_of(const std::string& key) const {
  const auto it = std::find(elements_.begin(), elements_.end(), key);
  if (it == elements_.end()) throw std::invalid_argument("element not in poset: " + key);
  return static_cast<size_t>(it - elements_.begin());
}

bool FinitePoset::leq(size_t a, size_t b) const {
  if (a >= size() || b >= size()) throw std::invalid_argument("poset index out of range");
  return bit(up_[a], b);
}

namespace {

// Unique maximum of the candidate set, if any: the candidate of greatest
// height is the only possible maximum, and it is one exactly when every
// candidate lies below it.
std::optional<size_t> unique_extreme(const std::vector<uint64_t>& candidates,
                                     const std::vector<std::vector<uint64_t>>& down,
                                     const std::vector<int>& heights) {
  std::optional<size_t> best;
  for (size_t w = 0; w < candidates.size(); ++w) {
    uint64_t bits = candidates[w];
    while (bits) {
      const size_t i = (w << 6) + static_cast<size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      if (!best || heights[i] > heights[*best]) best = i;
    }
  }
  if (!best) return std::nullopt;
  if (!subset_of(candidates, down[*best])) return std::nullopt;
  return best;
}

}  // namespace

std::optional<size_t> FinitePoset::meet_of(size_t a, size_t b) const {
  if (a >= size() || b >= size()) throw std::invalid_argument("poset index out of range");
  std::vector<uint64_t> lower(words());
  for (size_t w = 0; w < words(); ++w) lower[w] = down_[a][w] & down_[b][w];
  return unique_extreme(lower, down_, heights_);
}

std::optional<size_t> FinitePoset::join_of(size_t a, size_t b) const {
  if (a >= size() || b >= size()) throw std::invalid_argument("poset index out of range");
  std::vector<uint64_t> upper(words());
  for (size_t w = 0; w < words(); ++w) upper[w] = up_[a][w] & up_[b][w];
  // Dual of the meet search: the unique minimum of the common upper bounds,
  // if any, is the candidate with the largest up-set.
  std::optional<size_t> best;
  for (size_t w = 0; w < upper.size(); ++w) {
    uint64_t bits = upper[w];
    while (bits) {
      const size_t i = (w << 6) + static_cast<size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      if (!best || up_counts_[i] > up_counts_[*best]) best = i;
    }
  }
  if (!best) return std::nullopt;
  if (!subset_of(upper, up_[*best])) return std::nullopt;
  return best;
}

FinitePoset::LatticeResult FinitePoset::lattice_check() const {
  for (size_t a = 0; a < size(); ++a)
    for (size_t b = a + 1; b < size(); ++b) {
      if (!meet_of(a, b)) return {false, {{a, b}}, "meet"};
      if (!join_of(a, b)) return {false, {{a, b}}, "join"};
    }
  return {};
}

long long FinitePoset::moebius(size_t a, size_t b) const {
  if (!leq(a, b)) throw std::invalid_argument("moebius requires a <= b");
  // Interval [a,b], processed upward by height.
  std::vector<size_t> interval;
  for (size_t c = 0; c < size(); ++c)
    if (bit(up_[a], c) && bit(down_[b], c)) interval.push_back(c);
  std::sort(interval.begin(), interval.end(),
            [&](size_t x, size_t y) { return heights_[x] < heights_[y]; });
  std::unordered_map<size_t, long long> mu;
  for (size_t c : interval) {
    if (c == a) {
      mu[c] = 1;
      continue;
    }
    long long acc = 0;
    for (size_t d : interval)
      if (d != c && bit(down_[c], d)) acc += mu.at(d);
    mu[c] = -acc;
  }
  return mu.at(b);
}

std::vector<long long> FinitePoset::rank_polynomial(
    const std::function<int(size_t)>& rank) const {
  std::vector<long long> coeff;
  for (size_t i = 0; i < size(); ++i) {
    const int r = rank(i);
    if (r < 0) throw std::invalid_argument("rank must be nonnegative");
    if (static_cast<size_t>(r) >= coeff.size()) coeff.resize(static_cast<size_t>(r) + 1, 0);
    ++coeff[static_cast<size_t>(r)];
  }
  return coeff;
}

std::string FinitePoset::dot(const std::function<std::string(size_t)>& label) const {
  const auto escaped = [](std::string s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out;
  };
  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" +
           escaped(label ? label(i) : elements_[i]) + "\"];\n";
  for (const auto& [lo, hi] : covers_)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  // One cluster per height level.
  std::map<int, std::vector<size_t>> levels;
  for (size_t i = 0; i < size(); ++i) levels[heights_[i]].push_back(i);
  for (const auto& [h, members] : levels) {
    out += "  { rank=same;";
    for (size_t i : members) out += " n" + std::to_string(i) + ";";
    out += " }\n";
  }
  out += "}\n";
  return out;
}

std::string FinitePoset::json() const {
  const auto escaped = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out;
  };
  std::string out = "{\"elements\": [";
  for (size_t i = 0; i < size(); ++i) {
    if (i) out += ", ";
    out += "\"" + escaped(elements_[i]) + "\"";
  }
  out += "], \"covers\": [";
  for (size_t k = 0; k < covers_.size(); ++k) {
    if (k) out += ", ";
    out += "[" + std::to_string(covers_[k].first) + ", " + std::to_string(covers_[k].second) + "]";
  }
  out += "]}";
  return out;
}

OrderIsoResult check_order_iso(const FinitePoset& P, const FinitePoset& Q,
                               const std::function<std::string(const std::string&)>& f) {
  if (P.size() != Q.size())
    return {false, "size mismatch: " + std::to_string(P.size()) + " vs " +
                       std::to_string(Q.size())};
  std::vector<size_t> image(P.size());
  std::vector<bool> hit(Q.size(), false);
  for (size_t a = 0; a < P.size(); ++a) {
    const std::string key = f(P.elements()[a]);
    size_t b;
    try {
      b = Q.index_of(key);
    } catch (const std::invalid_argument&) {
      return {false, "image not in target poset: " + key};
    }
    if (hit[b]) return {false, "map is not injective at " + key};
    hit[b] = true;
    image[a] = b;
  }
  for (size_t a = 0; a < P.size(); ++a)
    for (size_t b = 0; b < P.size(); ++b)
      if (P.leq(a, b) != Q.leq(image[a], image[b]))
        return {false, "order disagrees on (" + P.elements()[a] + ", " + P.elements()[b] + ")"};
  return {};
}

}  // namespace anc
