#ifndef BURNSIDE_GROUP_ENGINE_HPP
#define BURNSIDE_GROUP_ENGINE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "burnside/fp_core.hpp"
#include "burnside/perm.hpp"

namespace burnside {

// A group given by generators acting on F_p.
class GroupSpec {
 public:
  // Throws InvalidInput for an empty generator list, FieldMismatch when a
  // generator lives over another prime.
  GroupSpec(const PrimeField& field, std::vector<Perm> generators);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  const std::vector<Perm>& generators() const noexcept { return generators_; }

 private:
  PrimeField field_;
  std::vector<Perm> generators_;
};

using PointPair = std::pair<Residue, Residue>;

// Point orbit of x, ascending.
std::vector<Residue> orbit_of_point(const GroupSpec& G, Residue x);

// Orbit of the ordered pair (i, j), i != j, under g.(i,j) = (g(i), g(j));
// sorted ascending. Throws InvalidInput when i == j.
std::vector<PointPair> orbit_of_pair(const GroupSpec& G, PointPair pair);

// All orbits on ordered pairs of distinct points, each sorted, listed in order
// of their least pair.
std::vector<std::vector<PointPair>> pair_orbits(const GroupSpec& G);

struct TransitivityResult {
  bool is_transitive = false;
  // Meaningful only together with is_transitive.
  bool is_doubly_transitive = false;
};

// Transitive iff the orbit of 0 is everything; doubly transitive iff
// additionally the orbit of the pair (1, 0) has p(p-1) elements.
TransitivityResult transitivity_tests(const GroupSpec& G);

struct EnumeratedGroup {
  // BFS order: identity first, then generators in input order, then the
  // breadth-first closure.
  std::vector<Perm> elements;

  std::size_t order() const noexcept { return elements.size(); }
};

// Closure of the generators under composition. Throws CapExceeded once more
// than cap elements have been found.
EnumeratedGroup enumerate_group(const GroupSpec& G, std::size_t cap);

// Group generated by an arbitrary non-empty element list; cap as above.
EnumeratedGroup closure(const PrimeField& field, const std::vector<Perm>& generators,
                        std::size_t cap);

// Orders of H, H', H'', ... stopping at 1 or when the order stops shrinking.
std::vector<std::size_t> derived_series(const EnumeratedGroup& H);

// true iff the derived series ends at 1.
bool is_solvable(const EnumeratedGroup& H);

}  // namespace burnside

#endif  // BURNSIDE_GROUP_ENGINE_HPP
