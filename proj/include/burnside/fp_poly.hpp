#ifndef BURNSIDE_FP_POLY_HPP
#define BURNSIDE_FP_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "burnside/fp_core.hpp"
#include "burnside/perm.hpp"

namespace burnside {

// Polynomial degree with a distinct -infinity for the zero polynomial.
// -infinity compares below every finite degree; value() refuses to hand it
// out as an integer.
class Degree {
 public:
  static constexpr Degree neg_infinity() noexcept { return Degree(); }
  constexpr explicit Degree(std::size_t d) noexcept : value_(d) {}

  constexpr bool is_finite() const noexcept { return value_.has_value(); }
  // Throws InvalidInput for -infinity.
  std::size_t value() const;

  friend constexpr auto operator<=>(const Degree&, const Degree&) = default;
  friend constexpr bool operator==(const Degree&, const Degree&) = default;

  std::string to_string() const;

 private:
  constexpr Degree() noexcept = default;
  std::optional<std::size_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

// Dense polynomial over F_p; coeffs()[k] is the coefficient of X^k and the
// last stored coefficient is never zero.
class FpPoly {
 public:
  explicit FpPoly(const PrimeField& field) : field_(field) {}
  // Reduces and trims the given coefficients.
  FpPoly(const PrimeField& field, std::vector<Residue> coeffs);

  static FpPoly constant(const PrimeField& field, Residue c);
  // c * X^k
  static FpPoly monomial(const PrimeField& field, Residue c, std::size_t k);
  // a*X + b
  static FpPoly linear(const PrimeField& field, Residue a, Residue b);

  const PrimeField& field() const noexcept { return field_; }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }
  // Coefficient of X^k; zero beyond the degree.
  Residue coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
  Degree degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Residue leading_coefficient() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Residue eval(Residue x) const;
  FpPoly derivative() const;
  FpPoly scale(Residue c) const;
  FpPoly pow(std::uint64_t e) const;
  // f(X + u) by Horner rebasing.
  FpPoly shift(Residue u) const;

  FpPoly& operator+=(const FpPoly& g);
  FpPoly& operator-=(const FpPoly& g);
  friend FpPoly operator+(FpPoly f, const FpPoly& g) { return f += g; }
  friend FpPoly operator-(FpPoly f, const FpPoly& g) { return f -= g; }
  friend FpPoly operator*(const FpPoly& f, const FpPoly& g);

  friend bool operator==(const FpPoly& f, const FpPoly& g) {
    return f.field_ == g.field_ && f.coeffs_ == g.coeffs_;
  }

  // "c0 + c1*X + c2*X^2", zero terms omitted; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim() noexcept;

  PrimeField field_;
  std::vector<Residue> coeffs_;
};

// Lagrange interpolation through arbitrary points with distinct abscissae.
// Throws InvalidInput on duplicate abscissae or out-of-range values.
FpPoly interpolate_points(const PrimeField& field,
                          std::span<const std::pair<Residue, Residue>> points);

// The unique polynomial of degree <= p-1 with f(i) = values[i] for all i in
// F_p. Requires exactly p values.
FpPoly interpolate(const PrimeField& field, std::span<const Residue> values);
// Same, from a point list; exactly p points with distinct abscissae.
FpPoly interpolate(const PrimeField& field, std::span<const std::pair<Residue, Residue>> points);
FpPoly interpolate(const Perm& pi);

}  // namespace burnside

#endif  // BURNSIDE_FP_POLY_HPP
