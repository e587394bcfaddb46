#include "burnside/proof_trace.hpp"

#include <algorithm>
#include <sstream>

#include "burnside/errors.hpp"
#include "burnside/proposition_oracle.hpp"

namespace burnside {

bool TraceReport::all_passed() const noexcept {
  return std::all_of(steps.begin(), steps.end(), [](const TraceStep& s) { return s.passed; });
}

std::string to_string(TraceVerdict v) {
  return v == TraceVerdict::kAffine ? "AFFINE" : "VIOLATION";
}

DiffSet reduce_by_complement(const DiffSet& U) {
  return 2 * U.size() <= U.p() - 1 ? U : U.complement();
}

namespace {

void require_preserving(const Perm& pi, const DiffSet& U) {
  if (!check_preserves(pi, U)) {
    throw InvalidInput("permutation does not preserve U-differences (U = " + U.to_string() + ")");
  }
}

}  // namespace

bool check_multiset_identity(const Perm& pi, const DiffSet& U) {
  require_preserving(pi, U);
  const PrimeField& F = U.field();
  for (Residue i = 0; i < F.p(); ++i) {
    std::vector<Residue> diffs;
    for (Residue u : U.elements()) diffs.push_back(F.sub(pi(F.add(i, u)), pi(i)));
    std::sort(diffs.begin(), diffs.end());
    if (!std::equal(diffs.begin(), diffs.end(), U.elements().begin(), U.elements().end())) {
      return false;
    }
  }
  return true;
}

bool check_power_sum_identity(const Perm& pi, const DiffSet& U, std::uint32_t w) {
  require_preserving(pi, U);
  if (w < 1) throw InvalidInput("power-sum identity needs w >= 1");
  const PrimeField& F = U.field();
  for (Residue i = 0; i < F.p(); ++i) {
    Residue lhs = 0, rhs = 0;
    for (Residue u : U.elements()) {
      lhs = F.add(lhs, F.pow(pi(F.add(i, u)), w));
      rhs = F.add(rhs, F.pow(F.add(pi(i), u), w));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_vanishing_identity(const FpPoly& f, const DiffSet& U, std::uint32_t w) {
  require_same_field(f.field(), U.field(), "check_vanishing_identity");
  const PrimeField& F = U.field();
  if (w < 1) throw InvalidInput("vanishing identity needs w >= 1");
  if (f.degree().is_finite() && f.degree().value() * w > F.p() - 1) {
    throw InvalidInput("vanishing identity needs n*w <= p-1, got n = " + f.degree().to_string() +
                       ", w = " + std::to_string(w));
  }
  FpPoly diff(F);
  for (Residue u : U.elements()) {
    diff += f.shift(u).pow(w);
    diff -= (f + FpPoly::constant(F, u)).pow(w);
  }
  return diff.is_zero();
}

bool check_binomial_expansion(const FpPoly& f, const DiffSet& U, std::uint32_t w) {
  require_same_field(f.field(), U.field(), "check_binomial_expansion");
  if (w < 1) throw InvalidInput("binomial expansion needs w >= 1");
  const PrimeField& F = U.field();

  FpPoly lhs(F);
  for (Residue u : U.elements()) lhs += (f + FpPoly::constant(F, u)).pow(w);
  lhs -= f.pow(w).scale(F.reduce(static_cast<std::int64_t>(U.size())));

  FpPoly rhs(F);
  for (std::uint32_t k = 1; k <= w; ++k) {
    const Residue c = F.mul(binomial_mod_p(w, k, F), power_sum(U, k));
    if (c != 0) rhs += f.pow(w - k).scale(c);
  }
  return lhs == rhs;
}

FpPoly leading_difference_polynomial(const DiffSet& U, std::uint32_t nw) {
  const PrimeField& F = U.field();
  const FpPoly x_pow = FpPoly::monomial(F, 1, nw);
  FpPoly L(F);
  for (Residue u : U.elements()) L += x_pow.shift(u) - x_pow;
  return L;
}

bool check_leading_coefficient(const DiffSet& U, std::uint32_t n, std::uint32_t w) {
  const PrimeField& F = U.field();
  const std::uint64_t nw = std::uint64_t{n} * w;
  const int r = min_nonzero_power_sum(U);
  if (r < 1 || static_cast<std::uint64_t>(r) > nw || nw > F.p() - 1) {
    throw InvalidInput("leading-coefficient step needs r <= n*w <= p-1, got r = " +
                       std::to_string(r) + ", n*w = " + std::to_string(nw));
  }
  const FpPoly L = leading_difference_polynomial(U, static_cast<std::uint32_t>(nw));
  const std::uint64_t top = nw - static_cast<std::uint64_t>(r);
  const Residue expected = F.mul(binomial_mod_p(static_cast<std::int64_t>(nw), r, F), power_sum(U, r));
  if (expected == 0) return false;
  if (L.degree() != Degree(top)) return false;
  if (L.coeff(top) != expected) return false;
  for (int k = 1; k < r; ++k) {
    if (L.coeff(nw - k) != 0) return false;
  }
  return true;
}

bool large_r_chain_implies_bound(std::uint32_t p, std::uint32_t n, std::uint32_t w,
                                 std::uint32_t r) {
  const std::uint64_t P = p, N = n, W = w, R = r;
  if (R < 1) return false;
  const bool chain = P - 1 < N * (W + 1) && N * (W + 1) <= 2 * N * W && 2 * N * W <= 2 * (R - 1);
  // r > (p+1)/2  <=>  2r > p+1
  return chain && 2 * R > P + 1;
}

namespace {

class TraceBuilder {
 public:
  explicit TraceBuilder(TraceReport& report) : report_(report) {}

  bool record(std::string name, bool passed, std::string detail) {
    report_.steps.push_back({std::move(name), passed, std::move(detail)});
    return passed;
  }

 private:
  TraceReport& report_;
};

std::string join(const std::vector<Residue>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str();
}

}  // namespace

TraceReport run_trace(const DiffSet& U, const Perm& pi) {
  require_same_field(U.field(), pi.field(), "run_trace");
  require_preserving(pi, U);
  const PrimeField& F = U.field();
  const std::uint32_t p = F.p();
  const std::uint32_t half = (p - 1) / 2;

  TraceReport report{reduce_by_complement(U), Degree::neg_infinity(), 0, 0, {}, {},
                     TraceVerdict::kViolation};
  TraceBuilder trace(report);
  const DiffSet& V = report.reduced_U;

  trace.record("complement_reduction",
               V.size() <= half && check_preserves(pi, V) == check_preserves(pi, U),
               U.to_string() + " -> " + V.to_string() + " (|U| = " + std::to_string(V.size()) +
                   " <= " + std::to_string(half) + ")");

  trace.record("multiset_identity", check_multiset_identity(pi, V),
               "{pi(i+u) - pi(i) : u in U} = U for all i");

  for (std::uint32_t w = 1; w <= p - 1; ++w) {
    trace.record("power_sum_identity[w=" + std::to_string(w) + "]",
                 check_power_sum_identity(pi, V, w),
                 "sum_u pi(i+u)^" + std::to_string(w) + " = sum_u (pi(i)+u)^" + std::to_string(w));
  }

  const FpPoly f = interpolate(pi);
  bool round_trip = true;
  for (Residue i = 0; i < p; ++i) round_trip = round_trip && f.eval(i) == pi(i);
  report.n = f.degree();
  trace.record("interpolation", round_trip, "f = " + f.to_string() + ", n = " + report.n.to_string());

  if (!report.n.is_finite() || report.n.value() < 1 || report.n.value() > p - 1) {
    trace.record("degree_range", false, "n = " + report.n.to_string() + " outside [1, p-1]");
    return report;
  }
  const auto n = static_cast<std::uint32_t>(report.n.value());
  report.w_max = (p - 1) / n;
  const std::uint32_t w = report.w_max;

  trace.record("vanishing_identity[w=" + std::to_string(w) + "]", check_vanishing_identity(f, V, w),
               "sum_u f(X+u)^w - sum_u (f(X)+u)^w = 0 with n*w = " + std::to_string(n * w));
  trace.record("binomial_expansion[w=" + std::to_string(w) + "]", check_binomial_expansion(f, V, w),
               "sum_u (f+u)^w - |U| f^w = sum_k C(w,k) S(k) f^(w-k)");

  for (std::uint32_t k = 1; k <= half; ++k) report.S_values.push_back(power_sum(V, k));
  try {
    report.r = min_nonzero_power_sum(V);
  } catch (const InternalInvariantViolation& e) {
    trace.record("min_power_sum_index", false, e.what());
    return report;
  }
  const auto r = static_cast<std::uint32_t>(report.r);
  trace.record("min_power_sum_index", true,
               "r = " + std::to_string(r) + ", S(1..(p-1)/2) = " + join(report.S_values));

  if (r <= n * w) {
    trace.record("leading_coefficient", check_leading_coefficient(V, n, w),
                 "coefficient of X^(nw-r) = X^" + std::to_string(n * w - r) +
                     " in sum_u ((X+u)^nw - X^nw) is C(nw,r) S(r)");

    // The right-hand side only involves f^(w-k) with k >= r.
    FpPoly rhs(F);
    for (std::uint32_t k = 1; k <= w; ++k) {
      const Residue c = F.mul(binomial_mod_p(w, k, F), power_sum(V, k));
      if (c != 0) rhs += f.pow(w - k).scale(c);
    }
    const std::int64_t bound = std::int64_t{n} * (std::int64_t{w} - std::int64_t{r});
    const bool rhs_ok = bound < 0 ? rhs.is_zero() : rhs.degree() <= Degree(static_cast<std::size_t>(bound));
    trace.record("rhs_degree_bound", rhs_ok,
                 "deg sum_k C(w,k) S(k) f^(w-k) = " + rhs.degree().to_string() +
                     " <= n(w-r) = " + std::to_string(bound));

    const std::int64_t lhs_degree = std::int64_t{n} * w - r;
    const bool comparison = lhs_degree <= bound;
    trace.record("degree_comparison", comparison,
                 "nw - r = " + std::to_string(lhs_degree) + " <= n(w - r) = " +
                     std::to_string(bound) + (comparison ? " forces n = 1" : " fails"));
  } else {
    trace.record("large_r_bound", large_r_chain_implies_bound(p, n, w, r),
                 "p-1 < n(w+1) <= 2nw <= 2(r-1) gives r > (p+1)/2");
    const bool vanish = std::all_of(report.S_values.begin(), report.S_values.end(),
                                    [](Residue s) { return s == 0; });
    trace.record("power_sums_vanish", vanish, "S(k) = 0 for k = 1..(p-1)/2");
    trace.record("vandermonde_contradiction", false,
                 "|U| = " + std::to_string(V.size()) + " <= (p-1)/2 yet U's Vandermonde matrix is nonsingular");
  }

  trace.record("conclusion", n == 1, "n = " + std::to_string(n));
  report.verdict = report.all_passed() && n == 1 ? TraceVerdict::kAffine : TraceVerdict::kViolation;
  return report;
}

}  // namespace burnside
