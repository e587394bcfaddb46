#ifndef BURNSIDE_PROOF_TRACE_HPP
#define BURNSIDE_PROOF_TRACE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "burnside/fp_core.hpp"
#include "burnside/fp_poly.hpp"
#include "burnside/perm.hpp"

namespace burnside {

// Numerical replay of the argument that a U-difference-preserving
// permutation of F_p interpolates to a polynomial of degree 1.
//
// The trace works with the reduced set (|U| <= (p-1)/2), the interpolating
// polynomial f of degree n, and w = floor((p-1)/n), the largest w with
// nw <= p-1. With S(k) the power sums of U and r the least index with
// S(r) != 0, it checks
//
//   sum_u f(X+u)^w  ==  sum_u (f(X)+u)^w                    (vanishing)
//   sum_u (f+u)^w - |U| f^w  ==  sum_{k>=1} C(w,k) S(k) f^{w-k}
//
// and then splits on r <= nw (the coefficient of X^{nw-r} in
// sum_u ((X+u)^{nw} - X^{nw}) is C(nw,r) S(r) != 0, so nw - r <= n(w - r),
// forcing n = 1) versus r > nw (which forces S(k) = 0 for k <= (p-1)/2 and
// contradicts the nonsingular Vandermonde matrix of U).

enum class TraceVerdict { kAffine, kViolation };

struct TraceStep {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TraceReport {
  DiffSet reduced_U;
  Degree n = Degree::neg_infinity();
  std::uint32_t w_max = 0;
  int r = 0;
  // S(1) .. S((p-1)/2) of reduced_U.
  std::vector<Residue> S_values;
  std::vector<TraceStep> steps;
  TraceVerdict verdict = TraceVerdict::kViolation;

  bool all_passed() const noexcept;
};

std::string to_string(TraceVerdict v);

// U itself when |U| <= (p-1)/2, otherwise its complement.
DiffSet reduce_by_complement(const DiffSet& U);

// {pi(i+u) - pi(i) : u in U} == U for every i. Throws InvalidInput when pi
// does not preserve U-differences.
bool check_multiset_identity(const Perm& pi, const DiffSet& U);

// sum_u pi(i+u)^w == sum_u (pi(i)+u)^w for every i. Same precondition; w >= 1.
bool check_power_sum_identity(const Perm& pi, const DiffSet& U, std::uint32_t w);

// sum_u f(X+u)^w - sum_u (f(X)+u)^w is the zero polynomial. Throws
// InvalidInput when deg(f) * w > p-1 or w < 1.
bool check_vanishing_identity(const FpPoly& f, const DiffSet& U, std::uint32_t w);

// Pure algebra, valid for every f:
// sum_u (f+u)^w - |U| f^w == sum_{k=1..w} C(w,k) S(k) f^{w-k}.
bool check_binomial_expansion(const FpPoly& f, const DiffSet& U, std::uint32_t w);

// L(X) = sum_u ((X+u)^{nw} - X^{nw}).
FpPoly leading_difference_polynomial(const DiffSet& U, std::uint32_t nw);

// deg L == nw - r with leading coefficient C(nw, r) S(r) != 0 and vanishing
// coefficients of X^{nw-k} for 1 <= k < r. Requires r <= nw <= p-1, else
// InvalidInput.
bool check_leading_coefficient(const DiffSet& U, std::uint32_t n, std::uint32_t w);

// Arithmetic of the large-r branch: if p-1 < n(w+1) <= 2nw <= 2(r-1) holds
// (which needs n >= 2 for the middle step), then r > (p+1)/2. Returns true
// when the chain holds and implies the bound.
bool large_r_chain_implies_bound(std::uint32_t p, std::uint32_t n, std::uint32_t w,
                                 std::uint32_t r);

// Runs every step in order and records each outcome. Throws InvalidInput when
// pi does not preserve U-differences; any failed step gives kViolation.
TraceReport run_trace(const DiffSet& U, const Perm& pi);

}  // namespace burnside

#endif  // BURNSIDE_PROOF_TRACE_HPP
