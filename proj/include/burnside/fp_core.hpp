#ifndef BURNSIDE_FP_CORE_HPP
#define BURNSIDE_FP_CORE_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace burnside {

// Canonical representative in [0, p-1].
using Residue = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrimeCap = 97;

// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

// The prime field F_p. Every operation returns a canonical residue.
class PrimeField {
 public:
  // Throws InvalidInput if p is not prime or exceeds cap.
  explicit PrimeField(std::uint32_t p, std::uint32_t cap = kDefaultPrimeCap);

  std::uint32_t p() const noexcept { return p_; }

  // Maps any integer onto its canonical residue.
  Residue reduce(std::int64_t v) const noexcept;

  Residue add(Residue a, Residue b) const noexcept;
  Residue sub(Residue a, Residue b) const noexcept;
  Residue neg(Residue a) const noexcept;
  Residue mul(Residue a, Residue b) const noexcept;
  // Square-and-multiply; pow(0, 0) == 1.
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  // Throws DivisionByZero for a == 0.
  Residue inv(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  bool contains(std::int64_t v) const noexcept { return v >= 0 && v < static_cast<std::int64_t>(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// Throws FieldMismatch with a message naming the operation.
void require_same_field(const PrimeField& a, const PrimeField& b, const char* op);

// A non-empty proper subset U of F_p \ {0}, kept sorted ascending.
class DiffSet {
 public:
  // Accepts elements in any order. Throws InvalidInput on duplicates, on
  // values outside [1, p-1], or unless 1 <= |U| <= p-2.
  DiffSet(const PrimeField& field, std::vector<Residue> elements);
  DiffSet(const PrimeField& field, std::initializer_list<Residue> elements)
      : DiffSet(field, std::vector<Residue>(elements)) {}

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }
  std::span<const Residue> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Residue v) const noexcept;

  // {1..p-1} \ U; again a valid DiffSet.
  DiffSet complement() const;

  // Bitmask with bit (u-1) set for each member u; requires p <= 65.
  std::uint64_t mask() const noexcept;
  static DiffSet from_mask(const PrimeField& field, std::uint64_t mask);

  // "{1,2,4}"
  std::string to_string() const;

  friend bool operator==(const DiffSet& a, const DiffSet& b) {
    return a.field_ == b.field_ && a.elements_ == b.elements_;
  }

 private:
  PrimeField field_;
  std::vector<Residue> elements_;
  std::vector<bool> member_;  // indexed by residue
};

// C(n, k) mod p via Lucas. Throws InvalidInput for negatives or k > n.
Residue binomial_mod_p(std::int64_t n, std::int64_t k, const PrimeField& field);

// S(k) = sum of u^k over U. Throws InvalidInput for k < 1.
Residue power_sum(const DiffSet& U, std::int64_t k);

// Least r in [1, p-1] with S(r) != 0. All-zero is impossible for a valid U and
// raises InternalInvariantViolation.
int min_nonzero_power_sum(const DiffSet& U);

// e_1..e_m from S(1)..S(m) by Newton's identities:
//   k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} S(i).
// Requires 1 <= m <= |U| and m <= p-1.
std::vector<Residue> elementary_symmetric_via_newton(const DiffSet& U, int m);

// det (u_j^k) for k = 1..|U| by Gaussian elimination over F_p. A zero
// determinant raises InternalInvariantViolation.
Residue vandermonde_det(const DiffSet& U);

}  // namespace burnside

#endif  // BURNSIDE_FP_CORE_HPP
