#ifndef BURNSIDE_PROPOSITION_ORACLE_HPP
#define BURNSIDE_PROPOSITION_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "burnside/fp_core.hpp"
#include "burnside/perm.hpp"

namespace burnside {

// Automorphisms of the circulant digraph Cay(Z_p, U).
struct AutResult {
  DiffSet U;
  // Sorted by image table.
  std::vector<Perm> automorphisms;
  // M(U) = {a != 0 : aU = U}, ascending.
  std::vector<Residue> mult_stabilizer;
  bool all_affine = false;
};

// For all i, j with i - j in U: pi(i) - pi(j) in U.
bool check_preserves(const Perm& pi, const DiffSet& U);

// Same test with the biconditional i - j in U <=> pi(i) - pi(j) in U.
bool check_preserves_both_ways(const Perm& pi, const DiffSet& U);

std::vector<Residue> mult_stabilizer(const DiffSet& U);

// Backtracking over pi(0), pi(1), ... in ascending candidate order, pruning
// any partial assignment that breaks the biconditional on an assigned pair.
AutResult enumerate_diff_preserving(const DiffSet& U);

inline constexpr std::uint32_t kNaiveEnumerateMaxPrime = 8;

// Filters all p! permutations through check_preserves. Throws InvalidInput
// for p > 8.
AutResult naive_enumerate(const DiffSet& U);

struct ScanRow {
  DiffSet U;
  std::size_t mult_stabilizer_size = 0;
  std::size_t automorphism_count = 0;
  int min_nonzero_power_sum = 0;
  bool all_affine = false;
};

struct ScanSummary {
  std::uint32_t p = 0;
  // One row per non-empty proper U in ascending bitmask order (bit u-1 <=> u in U).
  std::vector<ScanRow> rows;
  std::size_t total_automorphisms = 0;
};

inline constexpr std::uint32_t kDefaultScanPrimeCap = 13;

// Runs enumerate_diff_preserving for every valid U. Rows are merged in
// canonical order, so the result is independent of jobs. Throws
// PropositionViolated if an automorphism is not affine or a count differs
// from p * |M(U)|; InvalidInput when p exceeds prime_cap.
ScanSummary scan_all_subsets(const PrimeField& field, unsigned jobs = 1,
                             std::uint32_t prime_cap = kDefaultScanPrimeCap);

}  // namespace burnside

#endif  // BURNSIDE_PROPOSITION_ORACLE_HPP
