#include "burnside/group_engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "burnside/errors.hpp"

namespace burnside {

GroupSpec::GroupSpec(const PrimeField& field, std::vector<Perm> generators)
    : field_(field), generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidInput("a group needs at least one generator");
  for (const Perm& g : generators_) require_same_field(field_, g.field(), "group generator");
}

std::vector<Residue> orbit_of_point(const GroupSpec& G, Residue x) {
  if (x >= G.p()) throw InvalidInput("point " + std::to_string(x) + " outside F_p");
  std::vector<bool> seen(G.p(), false);
  std::deque<Residue> queue{x};
  seen[x] = true;
  while (!queue.empty()) {
    const Residue y = queue.front();
    queue.pop_front();
    for (const Perm& g : G.generators()) {
      const Residue z = g(y);
      if (!seen[z]) {
        seen[z] = true;
        queue.push_back(z);
      }
    }
  }
  std::vector<Residue> orbit;
  for (Residue v = 0; v < G.p(); ++v) {
    if (seen[v]) orbit.push_back(v);
  }
  return orbit;
}

namespace {

// Pair orbit as a membership table indexed by i * p + j.
std::vector<bool> pair_orbit_table(const GroupSpec& G, PointPair start) {
  const std::size_t p = G.p();
  std::vector<bool> seen(p * p, false);
  std::deque<PointPair> queue{start};
  seen[start.first * p + start.second] = true;
  while (!queue.empty()) {
    const auto [i, j] = queue.front();
    queue.pop_front();
    for (const Perm& g : G.generators()) {
      const PointPair next{g(i), g(j)};
      const std::size_t key = next.first * p + next.second;
      if (!seen[key]) {
        seen[key] = true;
        queue.push_back(next);
      }
    }
  }
  return seen;
}

std::vector<PointPair> table_to_pairs(const std::vector<bool>& table, std::size_t p) {
  std::vector<PointPair> out;
  for (std::size_t key = 0; key < table.size(); ++key) {
    if (table[key]) out.emplace_back(static_cast<Residue>(key / p), static_cast<Residue>(key % p));
  }
  return out;
}

}  // namespace

std::vector<PointPair> orbit_of_pair(const GroupSpec& G, PointPair pair) {
  if (pair.first >= G.p() || pair.second >= G.p()) throw InvalidInput("pair outside F_p");
  if (pair.first == pair.second) {
    throw InvalidInput("orbit_of_pair needs distinct points, got (" +
                       std::to_string(pair.first) + "," + std::to_string(pair.second) + ")");
  }
  return table_to_pairs(pair_orbit_table(G, pair), G.p());
}

std::vector<std::vector<PointPair>> pair_orbits(const GroupSpec& G) {
  const std::size_t p = G.p();
  std::vector<bool> covered(p * p, false);
  std::vector<std::vector<PointPair>> orbits;
  for (std::size_t key = 0; key < p * p; ++key) {
    const auto i = static_cast<Residue>(key / p), j = static_cast<Residue>(key % p);
    if (i == j || covered[key]) continue;
    const std::vector<bool> table = pair_orbit_table(G, {i, j});
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table[k]) covered[k] = true;
    }
    orbits.push_back(table_to_pairs(table, p));
  }
  return orbits;
}

TransitivityResult transitivity_tests(const GroupSpec& G) {
  TransitivityResult result;
  const std::size_t p = G.p();
  result.is_transitive = orbit_of_point(G, 0).size() == p;
  if (p >= 2) {
    result.is_doubly_transitive =
        result.is_transitive && orbit_of_pair(G, {1, 0}).size() == p * (p - 1);
  }
  return result;
}

EnumeratedGroup closure(const PrimeField& field, const std::vector<Perm>& generators,
                        std::size_t cap) {
  if (cap < 1) throw InvalidInput("enumeration cap must be at least 1");
  EnumeratedGroup group;
  std::unordered_set<Perm, PermHash> seen;
  auto admit = [&](Perm pi) {
    if (!seen.insert(pi).second) return;
    if (seen.size() > cap) {
      throw CapExceeded("group order exceeds cap " + std::to_string(cap), seen.size());
    }
    group.elements.push_back(std::move(pi));
  };

  admit(Perm::identity(field));
  for (const Perm& g : generators) {
    require_same_field(field, g.field(), "closure");
    admit(g);
  }
  // Every element is a product of generators (finite group), so right
  // multiplication by generators reaches the whole group.
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    for (const Perm& g : generators) admit(compose(group.elements[head], g));
  }
  return group;
}

EnumeratedGroup enumerate_group(const GroupSpec& G, std::size_t cap) {
  return closure(G.field(), G.generators(), cap);
}

namespace {

EnumeratedGroup commutator_subgroup(const EnumeratedGroup& H) {
  const PrimeField& field = H.elements.front().field();
  std::vector<Perm> inverses;
  inverses.reserve(H.order());
  for (const Perm& h : H.elements) inverses.push_back(h.inverse());

  std::unordered_set<Perm, PermHash> distinct;
  std::vector<Perm> commutators;
  for (std::size_t a = 0; a < H.order(); ++a) {
    for (std::size_t b = 0; b < H.order(); ++b) {
      // [a, b] = a^-1 b^-1 a b
      Perm c = compose(compose(inverses[a], inverses[b]), compose(H.elements[a], H.elements[b]));
      if (c.is_identity()) continue;
      if (distinct.insert(c).second) commutators.push_back(std::move(c));
    }
  }
  if (commutators.empty()) return EnumeratedGroup{{Perm::identity(field)}};
  return closure(field, commutators, H.order());
}

}  // namespace

std::vector<std::size_t> derived_series(const EnumeratedGroup& H) {
  if (H.elements.empty()) throw InvalidInput("derived_series needs an enumerated group");
  std::vector<std::size_t> orders{H.order()};
  EnumeratedGroup current = H;
  while (current.order() > 1) {
    EnumeratedGroup next = commutator_subgroup(current);
    if (next.order() == current.order()) break;  // perfect subgroup
    orders.push_back(next.order());
    current = std::move(next);
  }
  return orders;
}

bool is_solvable(const EnumeratedGroup& H) { return derived_series(H).back() == 1; }

}  // namespace burnside
