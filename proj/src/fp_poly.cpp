#include "burnside/fp_poly.hpp"

#include <algorithm>
#include <sstream>

#include "burnside/errors.hpp"

namespace burnside {

std::size_t Degree::value() const {
  if (!value_) throw InvalidInput("degree of the zero polynomial is -infinity");
  return *value_;
}

std::string Degree::to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.to_string(); }

FpPoly::FpPoly(const PrimeField& field, std::vector<Residue> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (Residue& c : coeffs_) c %= field_.p();
  trim();
}

FpPoly FpPoly::constant(const PrimeField& field, Residue c) { return FpPoly(field, {c}); }

FpPoly FpPoly::monomial(const PrimeField& field, Residue c, std::size_t k) {
  std::vector<Residue> coeffs(k + 1, 0);
  coeffs[k] = c;
  return FpPoly(field, std::move(coeffs));
}

FpPoly FpPoly::linear(const PrimeField& field, Residue a, Residue b) {
  return FpPoly(field, {b, a});
}

void FpPoly::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree FpPoly::degree() const noexcept {
  return coeffs_.empty() ? Degree::neg_infinity() : Degree(coeffs_.size() - 1);
}

Residue FpPoly::eval(Residue x) const {
  Residue acc = 0;
  x %= field_.p();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, x), *it);
  }
  return acc;
}

FpPoly FpPoly::derivative() const {
  std::vector<Residue> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(field_.mul(coeffs_[k], field_.reduce(static_cast<std::int64_t>(k))));
  }
  return FpPoly(field_, std::move(d));
}

FpPoly FpPoly::scale(Residue c) const {
  std::vector<Residue> out(coeffs_);
  for (Residue& v : out) v = field_.mul(v, c);
  return FpPoly(field_, std::move(out));
}

FpPoly FpPoly::pow(std::uint64_t e) const {
  FpPoly result = constant(field_, 1);
  FpPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

FpPoly FpPoly::shift(Residue u) const {
  // Horner in the variable (X + u): acc <- acc * (X + u) + c_k.
  const FpPoly x_plus_u = linear(field_, 1, u % field_.p());
  FpPoly acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x_plus_u + constant(field_, *it);
  }
  return acc;
}

FpPoly& FpPoly::operator+=(const FpPoly& g) {
  require_same_field(field_, g.field_, "polynomial add");
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), 0);
  for (std::size_t k = 0; k < g.coeffs_.size(); ++k) coeffs_[k] = field_.add(coeffs_[k], g.coeffs_[k]);
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& g) {
  require_same_field(field_, g.field_, "polynomial sub");
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), 0);
  for (std::size_t k = 0; k < g.coeffs_.size(); ++k) coeffs_[k] = field_.sub(coeffs_[k], g.coeffs_[k]);
  trim();
  return *this;
}

FpPoly operator*(const FpPoly& f, const FpPoly& g) {
  require_same_field(f.field_, g.field_, "polynomial mul");
  if (f.is_zero() || g.is_zero()) return FpPoly(f.field_);
  const PrimeField& F = f.field_;
  // Accumulate unreduced products in 64 bits, reducing when close to overflow.
  const std::uint64_t p = F.p();
  const std::uint64_t limit = ~std::uint64_t{0} - (p - 1) * (p - 1);
  std::vector<std::uint64_t> acc(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      std::uint64_t& slot = acc[i + j];
      if (slot > limit) slot %= p;
      slot += std::uint64_t{f.coeffs_[i]} * g.coeffs_[j];
    }
  }
  std::vector<Residue> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<Residue>(acc[k] % p);
  return FpPoly(F, std::move(out));
}

std::string FpPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k];
    if (k >= 1) os << "*X";
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

FpPoly interpolate_points(const PrimeField& field,
                          std::span<const std::pair<Residue, Residue>> points) {
  std::vector<bool> used(field.p(), false);
  for (const auto& [x, y] : points) {
    if (x >= field.p() || y >= field.p()) throw InvalidInput("interpolation point outside F_p");
    if (used[x]) throw InvalidInput("duplicate abscissa " + std::to_string(x));
    used[x] = true;
  }

  // master(X) = prod (X - x_j); basis_i = master / (X - x_i) / master'(x_i).
  FpPoly master = FpPoly::constant(field, 1);
  for (const auto& pt : points) master = master * FpPoly::linear(field, 1, field.neg(pt.first));

  FpPoly result(field);
  for (const auto& [xi, yi] : points) {
    if (yi == 0) continue;
    // Synthetic division of master by (X - xi).
    const auto m = master.coeffs();
    std::vector<Residue> q(m.size() - 1, 0);
    Residue carry = 0;
    for (std::size_t k = m.size() - 1; k >= 1; --k) {
      carry = field.add(m[k], field.mul(carry, xi));
      q[k - 1] = carry;
    }
    FpPoly basis(field, std::move(q));
    const Residue denom = basis.eval(xi);
    result += basis.scale(field.div(yi, denom));
  }
  return result;
}

FpPoly interpolate(const PrimeField& field, std::span<const Residue> values) {
  if (values.size() != field.p()) {
    throw InvalidInput("interpolation over F_" + std::to_string(field.p()) + " needs exactly " +
                       std::to_string(field.p()) + " values, got " + std::to_string(values.size()));
  }
  std::vector<std::pair<Residue, Residue>> points;
  points.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    points.emplace_back(static_cast<Residue>(i), values[i]);
  }
  return interpolate_points(field, points);
}

FpPoly interpolate(const PrimeField& field, std::span<const std::pair<Residue, Residue>> points) {
  if (points.size() != field.p()) {
    throw InvalidInput("interpolation over F_" + std::to_string(field.p()) + " needs exactly " +
                       std::to_string(field.p()) + " points, got " + std::to_string(points.size()));
  }
  return interpolate_points(field, points);
}

FpPoly interpolate(const Perm& pi) { return interpolate(pi.field(), pi.images()); }

}  // namespace burnside
