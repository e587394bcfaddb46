#include "burnside/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

#include "burnside/errors.hpp"

namespace burnside {

Perm::Perm(const PrimeField& field, std::vector<Residue> images)
    : field_(field), images_(std::move(images)) {
  const std::uint32_t p = field_.p();
  if (images_.size() != p) {
    throw InvalidInput("permutation of F_" + std::to_string(p) + " needs " + std::to_string(p) +
                       " images, got " + std::to_string(images_.size()));
  }
  std::vector<bool> seen(p, false);
  for (Residue v : images_) {
    if (v >= p) throw InvalidInput("image " + std::to_string(v) + " outside [0, p-1]");
    if (seen[v]) throw InvalidInput("image " + std::to_string(v) + " repeated; not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(const PrimeField& field) {
  std::vector<Residue> img(field.p());
  std::iota(img.begin(), img.end(), Residue{0});
  return Perm(field, std::move(img));
}

Perm Perm::translation(const PrimeField& field, Residue b) {
  return make_affine(AffineCoeffs{1, b}, field);
}

Perm Perm::parse(const PrimeField& field, std::string_view text) {
  std::vector<Residue> img;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r'))
      tok.remove_suffix(1);
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size() || value >= field.p()) {
      throw InvalidInput("bad permutation entry '" + std::string(tok) + "'");
    }
    img.push_back(static_cast<Residue>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Perm(field, std::move(img));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Residue> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Residue>(i);
  return Perm(field_, std::move(inv));
}

Perm Perm::power(std::int64_t k) const {
  Perm base = k < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Perm result = identity(field_);
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint64_t Perm::order() const {
  std::uint64_t m = 1;
  for (std::size_t len : cycle_type()) m = std::lcm(m, static_cast<std::uint64_t>(len));
  return m;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << images_[i];
  }
  return os.str();
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    for (std::size_t i = start; !seen[i]; i = images_[i]) {
      if (i != start) os << ' ';
      os << i;
      seen[i] = true;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Perm compose(const Perm& sigma, const Perm& tau) {
  require_same_field(sigma.field(), tau.field(), "compose");
  std::vector<Residue> img(tau.degree());
  for (Residue i = 0; i < tau.degree(); ++i) img[i] = sigma(tau(i));
  return Perm(sigma.field(), std::move(img));
}

Perm conjugate(const Perm& sigma, const Perm& lambda) {
  return compose(lambda, compose(sigma, lambda.inverse()));
}

std::size_t PermHash::operator()(const Perm& pi) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ULL;
  for (Residue v : pi.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Perm make_affine(const AffineCoeffs& coeffs, const PrimeField& field) {
  if (coeffs.a == 0) throw InvalidInput("affine map needs a != 0");
  if (coeffs.a >= field.p() || coeffs.b >= field.p()) {
    throw InvalidInput("affine coefficients must lie in [0, p-1]");
  }
  std::vector<Residue> img(field.p());
  for (Residue i = 0; i < field.p(); ++i) img[i] = field.add(field.mul(coeffs.a, i), coeffs.b);
  return Perm(field, std::move(img));
}

std::optional<AffineCoeffs> recognize_affine(const Perm& pi) {
  const PrimeField& F = pi.field();
  if (F.p() < 2) return std::nullopt;
  const Residue b = pi(0);
  const Residue a = F.sub(pi(1), pi(0));
  for (Residue i = 1; i + 1 < F.p(); ++i) {
    if (F.sub(pi(i + 1), pi(i)) != a) return std::nullopt;
  }
  return AffineCoeffs{a, b};
}

Perm relabel_to_translation(const Perm& sigma) {
  const std::vector<std::size_t> type = sigma.cycle_type();
  if (type.size() != 1) {
    throw InvalidInput("relabel_to_translation needs a p-cycle, got " + sigma.to_cycle_string());
  }
  std::vector<Residue> lambda(sigma.degree());
  Residue x = 0;
  for (Residue k = 0; k < sigma.degree(); ++k) {
    lambda[x] = k;
    x = sigma(x);
  }
  return Perm(sigma.field(), std::move(lambda));
}

}  // namespace burnside
