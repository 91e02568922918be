#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "anc/annular.hpp"
#include "anc/poset.hpp"

using namespace anc;

namespace {

FinitePoset divisor_poset(const std::vector<int>& values) {
  std::vector<std::string> keys;
  for (int v : values) keys.push_back(std::to_string(v));
  return FinitePoset::build(keys, [&](size_t a, size_t b) {
    return values[b] % values[a] == 0;
  });
}

FinitePoset ncb_poset(int p, int q) {
  const auto& parts = noncrossing_partitions_B(p, q);
  std::vector<std::string> keys;
  for (const auto& part : parts) keys.push_back(part.to_string());
  return FinitePoset::build(
      keys, [&](size_t a, size_t b) { return refinement_le(parts[a], parts[b]); });
}

}  // namespace

TEST_CASE("build validates the axioms") {
  const FinitePoset trivial = FinitePoset::build({"x"}, [](size_t, size_t) { return true; });
  CHECK(trivial.size() == 1);
  CHECK(trivial.covers().empty());

  CHECK_THROWS_AS(FinitePoset::build({"a", "b"}, [](size_t, size_t) { return false; }),
                  std::invalid_argument);  // not reflexive
  CHECK_THROWS_AS(FinitePoset::build({"a", "b"}, [](size_t, size_t) { return true; }),
                  std::invalid_argument);  // not antisymmetric
  // 0 <= 1, 1 <= 2, but 0 !<= 2.
  CHECK_THROWS_AS(FinitePoset::build({"a", "b", "c"},
                                     [](size_t a, size_t b) {
                                       if (a == b) return true;
                                       return (a == 0 && b == 1) || (a == 1 && b == 2);
                                     }),
                  std::invalid_argument);  // not transitive
  CHECK_THROWS_AS(FinitePoset::build({"a", "a"}, [](size_t a, size_t b) { return a == b; }),
                  std::invalid_argument);  // duplicate keys
}

TEST_CASE("covers generate the order by transitive closure") {
  const FinitePoset d = divisor_poset({1, 2, 3, 4, 6, 12});
  std::vector<std::vector<bool>> reach(d.size(), std::vector<bool>(d.size(), false));
  for (size_t i = 0; i < d.size(); ++i) reach[i][i] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : d.covers())
      for (size_t i = 0; i < d.size(); ++i)
        if (reach[i][lo] && !reach[i][hi]) {
          reach[i][hi] = true;
          changed = true;
        }
  }
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = 0; j < d.size(); ++j) REQUIRE(reach[i][j] == d.leq(i, j));
}

TEST_CASE("absolute order on B_2 builds and validates") {
  const auto group = hyperoctahedral_group(2);
  std::vector<std::string> keys;
  for (const auto& t : group) keys.push_back(cycle_string(t));
  const FinitePoset poset = FinitePoset::build(keys, [&](size_t a, size_t b) {
    return absolute_le(group[a], group[b]);
  });
  CHECK(poset.size() == 8);
  CHECK(poset.leq(poset.index_of("id"), poset.index_of("(1,-1)(2,-2)")));
}

TEST_CASE("meets and joins") {
  const FinitePoset d = divisor_poset({1, 2, 3, 4, 6, 12});
  const auto at = [&](int v) { return d.index_of(std::to_string(v)); };
  CHECK(*d.meet_of(at(4), at(6)) == at(2));
  CHECK(*d.join_of(at(4), at(6)) == at(12));
  CHECK(*d.meet_of(at(4), at(4)) == at(4));
  CHECK(d.lattice_check().lattice);

  // Two maximal lower bounds: no meet.
  const FinitePoset m = FinitePoset::build(
      {"a", "b", "x", "y"}, [](size_t a, size_t b) {
        if (a == b) return true;
        return a < 2 && b >= 2;  // a,b below both x and y
      });
  CHECK_FALSE(m.meet_of(m.index_of("x"), m.index_of("y")).has_value());
  const auto check = m.lattice_check();
  CHECK_FALSE(check.lattice);
  REQUIRE(check.witness.has_value());
}

TEST_CASE("chains are lattices") {
  const FinitePoset chain =
      FinitePoset::build({"a", "b", "c"}, [](size_t a, size_t b) { return a <= b; });
  CHECK(chain.lattice_check().lattice);
  CHECK(*chain.meet_of(0, 2) == 0);
  CHECK(*chain.join_of(0, 2) == 2);
}

TEST_CASE("the (2,2) annular poset has no meet for the counterexample pair") {
  const auto& parts = noncrossing_partitions_B(2, 2);
  const FinitePoset poset = ncb_poset(2, 2);
  const SignedPartition pi = orbit_partition(parse_cycles("(1,2,3,4)(-1,-2,-3,-4)", 4));
  const SignedPartition rho = orbit_partition(parse_cycles("(1,-4,3,-2)(-1,4,-3,2)", 4));
  const size_t i = poset.index_of(pi.to_string());
  const size_t j = poset.index_of(rho.to_string());
  CHECK_FALSE(poset.meet_of(i, j).has_value());
  CHECK_FALSE(poset.lattice_check().lattice);
  CHECK(parts.size() == poset.size());
}

TEST_CASE("poset meet equals intersection meet on the q = 1 posets, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    const auto& parts = noncrossing_partitions_B(n - 1, 1);
    const FinitePoset poset = ncb_poset(n - 1, 1);
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < poset.size(); ++i) index[poset.elements()[i]] = i;
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = i; j < parts.size(); ++j) {
        const auto poset_meet = poset.meet_of(i, j);
        REQUIRE(poset_meet.has_value());
        REQUIRE(*poset_meet == index.at(meet(parts[i], parts[j]).to_string()));
      }
  }
}

TEST_CASE("meet is commutative and associative where defined, q = 1, n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    const auto& parts = noncrossing_partitions_B(n - 1, 1);
    const FinitePoset poset = ncb_poset(n - 1, 1);
    const size_t count = poset.size();
    // Precompute the full meet table, then associativity is table lookups.
    std::vector<std::vector<size_t>> table(count, std::vector<size_t>(count));
    for (size_t i = 0; i < count; ++i)
      for (size_t j = i; j < count; ++j) {
        const auto mij = poset.meet_of(i, j);
        REQUIRE(mij.has_value());
        const auto mji = poset.meet_of(j, i);
        REQUIRE(mji.has_value());
        REQUIRE(*mij == *mji);
        table[i][j] = table[j][i] = *mij;
      }
    long long violations = 0;
    for (size_t i = 0; i < count; ++i)
      for (size_t j = 0; j < count; ++j)
        for (size_t k = 0; k < count; ++k)
          if (table[table[i][j]][k] != table[i][table[j][k]]) ++violations;
    REQUIRE(violations == 0);
    (void)parts;
  }
}

TEST_CASE("order isomorphism checks") {
  const FinitePoset d = divisor_poset({1, 2, 3, 6});
  CHECK(check_order_iso(d, d, [](const std::string& k) { return k; }).ok);

  const FinitePoset chain =
      FinitePoset::build({"a", "b", "c", "d"}, [](size_t a, size_t b) { return a <= b; });
  CHECK_FALSE(check_order_iso(d, chain, [&](const std::string& k) {
                return chain.elements()[d.index_of(k)];
              }).ok);
  CHECK_FALSE(check_order_iso(d, d, [](const std::string&) { return std::string("1"); }).ok);

  // The merged orbit map as an explicit poset isomorphism, p+q <= 4.
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; p + q <= 4; ++q) {
      const auto& perms = noncrossing_perms_B(p, q);
      std::vector<std::string> perm_keys;
      for (const auto& t : perms) perm_keys.push_back(cycle_string(t));
      const FinitePoset interval = FinitePoset::build(perm_keys, [&](size_t a, size_t b) {
        return absolute_le(perms[a], perms[b]);
      });
      const FinitePoset partitions = ncb_poset(p, q);
      std::map<std::string, std::string> omega_tilde;
      for (const auto& t : perms)
        omega_tilde[cycle_string(t)] = merged_orbit_partition(t).to_string();
      CHECK(check_order_iso(interval, partitions, [&](const std::string& k) {
              return omega_tilde.at(k);
            }).ok);
    }

  // Same in type D.
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; p + q <= 4; ++q) {
      const auto& perms = noncrossing_perms_D(p, q);
      std::vector<std::string> perm_keys;
      for (const auto& t : perms) perm_keys.push_back(cycle_string(t));
      const FinitePoset interval = FinitePoset::build(perm_keys, [&](size_t a, size_t b) {
        return absolute_le(perms[a], perms[b]);
      });
      const auto& parts = noncrossing_partitions_D(p, q);
      std::vector<std::string> part_keys;
      for (const auto& part : parts) part_keys.push_back(part.to_string());
      const FinitePoset partitions = FinitePoset::build(part_keys, [&](size_t a, size_t b) {
        return refinement_le(parts[a], parts[b]);
      });
      std::map<std::string, std::string> omega_tilde;
      for (const auto& t : perms)
        omega_tilde[cycle_string(t)] = merged_orbit_partition(t).to_string();
      CHECK(check_order_iso(interval, partitions, [&](const std::string& k) {
              return omega_tilde.at(k);
            }).ok);
    }
}

TEST_CASE("moebius values") {
  const FinitePoset d = divisor_poset({1, 2, 3, 4, 6, 12});
  const auto at = [&](int v) { return d.index_of(std::to_string(v)); };
  CHECK(d.moebius(at(1), at(1)) == 1);
  CHECK(d.moebius(at(1), at(2)) == -1);  // covers
  CHECK(d.moebius(at(1), at(6)) == 1);
  CHECK(d.moebius(at(1), at(4)) == 0);
  CHECK_THROWS_AS(d.moebius(at(4), at(6)), std::invalid_argument);

  // Defining recurrence on every interval of NC^B(2,1).
  const FinitePoset poset = ncb_poset(2, 1);
  for (size_t a = 0; a < poset.size(); ++a)
    for (size_t b = 0; b < poset.size(); ++b) {
      if (!poset.leq(a, b) || a == b) continue;
      long long sum = 0;
      for (size_t c = 0; c < poset.size(); ++c)
        if (poset.leq(a, c) && poset.leq(c, b)) sum += poset.moebius(a, c);
      REQUIRE(sum == 0);
    }
}

TEST_CASE("rank polynomials") {
  const auto& perms = noncrossing_perms_B(1, 1);
  std::vector<std::string> keys;
  for (const auto& t : perms) keys.push_back(cycle_string(t));
  const FinitePoset poset = FinitePoset::build(keys, [&](size_t a, size_t b) {
    return absolute_le(perms[a], perms[b]);
  });
  const auto coeff = poset.rank_polynomial(
      [&](size_t i) { return absolute_length(perms[i]); });
  CHECK(coeff == std::vector<long long>{1, 4, 1});
  long long total = 0;
  for (long long c : coeff) total += c;
  CHECK(total == static_cast<long long>(poset.size()));

  const FinitePoset trivial = FinitePoset::build({"x"}, [](size_t, size_t) { return true; });
  CHECK(trivial.rank_polynomial([](size_t) { return 0; }) == std::vector<long long>{1});
}

TEST_CASE("dot and json exports") {
  const FinitePoset chain =
      FinitePoset::build({"lo", "hi"}, [](size_t a, size_t b) { return a <= b; });
  const std::string dot = chain.dot();
  CHECK(dot.find("digraph hasse {") == 0);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(chain.json() ==
        "{\"elements\": [\"lo\", \"hi\"], \"covers\": [[0, 1]]}");
}
