#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "burnside/errors.hpp"
#include "burnside/group_engine.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {

GroupSpec cyclic(const PrimeField& F) { return GroupSpec(F, {Perm::translation(F)}); }

GroupSpec dihedral(const PrimeField& F) {
  return GroupSpec(F, {Perm::translation(F), make_affine({F.p() - 1, 0}, F)});
}

Perm transposition01(const PrimeField& F) {
  std::vector<Residue> img(F.p());
  for (Residue i = 0; i < F.p(); ++i) img[i] = i;
  std::swap(img[0], img[1]);
  return Perm(F, img);
}

GroupSpec symmetric(const PrimeField& F) { return GroupSpec(F, {Perm::translation(F), transposition01(F)}); }

GroupSpec agl(const PrimeField& F, Residue primitive_root) {
  return GroupSpec(F, {Perm::translation(F), make_affine({primitive_root, 0}, F)});
}

std::set<std::vector<Residue>> element_set(const EnumeratedGroup& H) {
  std::set<std::vector<Residue>> s;
  for (const Perm& g : H.elements) s.insert({g.images().begin(), g.images().end()});
  return s;
}

}  // namespace

TEST_CASE("group spec validation") {
  const PrimeField F5(5), F7(7);
  CHECK_THROWS_AS(GroupSpec(F5, {}), InvalidInput);
  CHECK_THROWS_AS(GroupSpec(F5, {Perm::identity(F7)}), FieldMismatch);
}

TEST_CASE("point orbits") {
  const PrimeField F(5);
  CHECK(orbit_of_point(cyclic(F), 0) == std::vector<Residue>{0, 1, 2, 3, 4});
  CHECK(orbit_of_point(GroupSpec(F, {Perm::identity(F)}), 3) == std::vector<Residue>{3});
  CHECK(orbit_of_point(GroupSpec(F, {Perm(F, {0, 2, 1, 3, 4})}), 1) == std::vector<Residue>{1, 2});
  CHECK_THROWS_AS(orbit_of_point(cyclic(F), 5), InvalidInput);
}

TEST_CASE("pair orbits") {
  const PrimeField F(5);
  CHECK(orbit_of_pair(symmetric(F), {1, 0}).size() == 20);
  CHECK(orbit_of_pair(cyclic(F), {1, 0}) ==
        std::vector<PointPair>{{0, 4}, {1, 0}, {2, 1}, {3, 2}, {4, 3}});
  CHECK(orbit_of_pair(GroupSpec(F, {Perm::identity(F)}), {1, 0}) == std::vector<PointPair>{{1, 0}});
  CHECK_THROWS_AS(orbit_of_pair(cyclic(F), {2, 2}), InvalidInput);
}

TEST_CASE("transitivity tests") {
  const PrimeField F(5);
  auto t = transitivity_tests(cyclic(F));
  CHECK(t.is_transitive);
  CHECK_FALSE(t.is_doubly_transitive);
  t = transitivity_tests(symmetric(F));
  CHECK(t.is_transitive);
  CHECK(t.is_doubly_transitive);
  t = transitivity_tests(GroupSpec(F, {Perm::identity(F)}));
  CHECK_FALSE(t.is_transitive);
  CHECK_FALSE(t.is_doubly_transitive);
  CHECK_THROWS_AS(PrimeField(4), InvalidInput);
  CHECK(pair_orbits(cyclic(F)).size() == 4);
}

TEST_CASE("enumeration") {
  const PrimeField F(5);
  CHECK(enumerate_group(cyclic(F), 10).order() == 5);
  CHECK(enumerate_group(dihedral(F), 20).order() == 10);
  CHECK(enumerate_group(symmetric(F), 120).order() == 120);
  try {
    enumerate_group(symmetric(F), 20);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.partial_count() == 21);
  }
  CHECK_THROWS_AS(enumerate_group(cyclic(F), 0), InvalidInput);
  const EnumeratedGroup C = enumerate_group(cyclic(F), 10);
  CHECK(C.elements.front().is_identity());
  CHECK(C.elements[1] == Perm::translation(F));
}

TEST_CASE("derived series") {
  const PrimeField F(5);
  CHECK(derived_series(enumerate_group(cyclic(F), 100)) == std::vector<std::size_t>{5, 1});
  CHECK(derived_series(enumerate_group(dihedral(F), 100)) == std::vector<std::size_t>{10, 5, 1});
  CHECK(derived_series(enumerate_group(agl(F, 2), 100)) == std::vector<std::size_t>{20, 5, 1});
  // S_5 > A_5, which is perfect.
  const auto s5 = derived_series(enumerate_group(symmetric(F), 120));
  CHECK(s5 == std::vector<std::size_t>{120, 60});
  CHECK_FALSE(is_solvable(enumerate_group(symmetric(F), 120)));
}

TEST_CASE("orbit and enumeration invariants on random groups") {
  std::mt19937 rng(9);
  for (auto p : {5, 7, 11}) {
    const PrimeField F(p);
    for (int t = 0; t < 60; ++t) {
      // Mix affine and random generators so both small and large groups occur.
      std::vector<Perm> gens;
      const int count = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < count; ++k) {
        if (rng() % 2) {
          gens.push_back(make_affine({static_cast<Residue>(1 + rng() % (p - 1)),
                                      static_cast<Residue>(rng() % p)},
                                     F));
        } else {
          std::vector<Residue> img(p);
          for (Residue i = 0; i < F.p(); ++i) img[i] = i;
          std::swap(img[rng() % p], img[rng() % p]);
          gens.push_back(Perm(F, img));
        }
      }
      const GroupSpec G(F, gens);

      // Point orbits partition F_p.
      std::vector<int> hits(p, 0);
      std::set<std::vector<Residue>> orbits;
      for (Residue x = 0; x < F.p(); ++x) orbits.insert(orbit_of_point(G, x));
      for (const auto& o : orbits)
        for (Residue x : o) ++hits[x];
      REQUIRE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

      // Pair orbits partition the p(p-1) ordered pairs.
      std::size_t covered = 0;
      std::set<PointPair> seen;
      for (const auto& o : pair_orbits(G)) {
        covered += o.size();
        for (const auto& pr : o) REQUIRE(seen.insert(pr).second);
      }
      REQUIRE(covered == std::size_t(p) * (p - 1));

      // Generator order independence and Lagrange.
      try {
        const EnumeratedGroup H = enumerate_group(G, 5000);
        std::vector<Perm> rev(gens.rbegin(), gens.rend());
        REQUIRE(element_set(H) == element_set(enumerate_group(GroupSpec(F, rev), 5000)));
        REQUIRE(H.order() % orbit_of_point(G, 0).size() == 0);
        // Closure under composition and inverse, spot-checked.
        const auto elems = element_set(H);
        for (int s = 0; s < 20; ++s) {
          const Perm& a = H.elements[rng() % H.order()];
          const Perm& b = H.elements[rng() % H.order()];
          const Perm c = compose(a, b);
          REQUIRE(elems.count({c.images().begin(), c.images().end()}) == 1);
          const Perm ai = a.inverse();
          REQUIRE(elems.count({ai.images().begin(), ai.images().end()}) == 1);
        }
      } catch (const CapExceeded&) {
        // Large symmetric-type groups; nothing to check here.
      }
    }
  }
}

TEST_CASE("translation-containing groups: pair orbits are unions of full difference classes") {
  for (auto p : {5, 7, 11}) {
    const PrimeField F(p);
    for (Residue a = 1; a < F.p(); ++a) {
      const GroupSpec G(F, {Perm::translation(F), make_affine({a, 0}, F)});
      for (const auto& orbit : pair_orbits(G)) {
        std::map<Residue, std::size_t> multiplicity;
        for (const auto& [i, j] : orbit) ++multiplicity[F.sub(i, j)];
        for (const auto& [d, m] : multiplicity) REQUIRE(m == F.p());
      }
    }
  }
}
