#ifndef BURNSIDE_PERM_HPP
#define BURNSIDE_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/fp_core.hpp"

namespace burnside {

// i -> a*i + b with a != 0.
struct AffineCoeffs {
  Residue a = 1;
  Residue b = 0;

  friend bool operator==(const AffineCoeffs&, const AffineCoeffs&) = default;
};

// A bijection of F_p = {0..p-1} stored as its image table.
class Perm {
 public:
  // Throws InvalidInput unless images is a bijection of {0..p-1}.
  Perm(const PrimeField& field, std::vector<Residue> images);

  static Perm identity(const PrimeField& field);
  // i -> i + b
  static Perm translation(const PrimeField& field, Residue b = 1);
  // Parses "i0,i1,...,i_{p-1}". Throws InvalidInput.
  static Perm parse(const PrimeField& field, std::string_view text);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t degree() const noexcept { return field_.p(); }
  std::span<const Residue> images() const noexcept { return images_; }
  Residue operator()(Residue i) const noexcept { return images_[i]; }
  bool is_identity() const noexcept;

  Perm inverse() const;
  // (*this)^k, k may be negative.
  Perm power(std::int64_t k) const;
  // Least m >= 1 with pi^m = id.
  std::uint64_t order() const;
  // Sorted cycle lengths, fixed points included.
  std::vector<std::size_t> cycle_type() const;

  // "1,2,3,4,0"
  std::string to_string() const;
  // "(0 1 2 3 4)", fixed points omitted, "()" for the identity. Render only.
  std::string to_cycle_string() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.field_ == b.field_ && a.images_ == b.images_;
  }
  // Lexicographic on image tables.
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

 private:
  PrimeField field_;
  std::vector<Residue> images_;
};

// (sigma o tau)(i) = sigma(tau(i)). Throws FieldMismatch for different degrees.
Perm compose(const Perm& sigma, const Perm& tau);

// lambda o sigma o lambda^-1
Perm conjugate(const Perm& sigma, const Perm& lambda);

struct PermHash {
  std::size_t operator()(const Perm& pi) const noexcept;
};

// Throws InvalidInput for a == 0 or out-of-range coefficients.
Perm make_affine(const AffineCoeffs& coeffs, const PrimeField& field);

// (a, b) with pi(i) = a*i + b for all i, via the first-difference test; nullopt
// when pi is not affine.
std::optional<AffineCoeffs> recognize_affine(const Perm& pi);

// For a p-cycle sigma, the relabeling lambda with lambda(sigma^k(0)) = k, so that
// lambda sigma lambda^-1 is i -> i + 1. Throws InvalidInput otherwise.
Perm relabel_to_translation(const Perm& sigma);

}  // namespace burnside

#endif  // BURNSIDE_PERM_HPP
