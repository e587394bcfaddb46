#include "burnside/fp_core.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "burnside/errors.hpp"

namespace burnside {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p, std::uint32_t cap) : p_(p) {
  if (p > cap) {
    throw InvalidInput("modulus " + std::to_string(p) + " exceeds the prime cap " +
                       std::to_string(cap));
  }
  if (!is_prime(p)) {
    throw InvalidInput(std::to_string(p) + " is not prime");
  }
}

Residue PrimeField::reduce(std::int64_t v) const noexcept {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

Residue PrimeField::add(Residue a, Residue b) const noexcept {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= p_ ? s - p_ : s);
}

Residue PrimeField::sub(Residue a, Residue b) const noexcept {
  return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
}

Residue PrimeField::neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }

Residue PrimeField::mul(Residue a, Residue b) const noexcept {
  return static_cast<Residue>((std::uint64_t{a} * b) % p_);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t old_r = a, r = p_;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return reduce(old_s);
}

void require_same_field(const PrimeField& a, const PrimeField& b, const char* op) {
  if (a != b) {
    throw FieldMismatch(std::string(op) + ": operands over F_" + std::to_string(a.p()) +
                        " and F_" + std::to_string(b.p()));
  }
}

DiffSet::DiffSet(const PrimeField& field, std::vector<Residue> elements)
    : field_(field), elements_(std::move(elements)), member_(field.p(), false) {
  const std::uint32_t p = field_.p();
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Residue u = elements_[i];
    if (u == 0 || u >= p) {
      throw InvalidInput("difference set element " + std::to_string(u) + " outside [1, " +
                         std::to_string(p - 1) + "]");
    }
    if (i > 0 && elements_[i - 1] == u) {
      throw InvalidInput("duplicate difference set element " + std::to_string(u));
    }
    member_[u] = true;
  }
  if (elements_.empty() || elements_.size() + 2 > p) {
    throw InvalidInput("difference set must be a non-empty proper subset of {1.." +
                       std::to_string(p - 1) + "}, got size " +
                       std::to_string(elements_.size()));
  }
}

bool DiffSet::contains(Residue v) const noexcept { return v < member_.size() && member_[v]; }

DiffSet DiffSet::complement() const {
  std::vector<Residue> rest;
  for (Residue u = 1; u < field_.p(); ++u) {
    if (!member_[u]) rest.push_back(u);
  }
  return DiffSet(field_, std::move(rest));
}

std::uint64_t DiffSet::mask() const noexcept {
  std::uint64_t m = 0;
  for (Residue u : elements_) m |= std::uint64_t{1} << (u - 1);
  return m;
}

DiffSet DiffSet::from_mask(const PrimeField& field, std::uint64_t mask) {
  std::vector<Residue> elems;
  for (Residue u = 1; u < field.p() && u <= 64; ++u) {
    if (mask & (std::uint64_t{1} << (u - 1))) elems.push_back(u);
  }
  return DiffSet(field, std::move(elems));
}

std::string DiffSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ',';
    os << elements_[i];
  }
  os << '}';
  return os.str();
}

namespace {

// C(n, k) mod p for 0 <= k <= n < p.
Residue small_binomial(std::uint64_t n, std::uint64_t k, const PrimeField& field) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Residue num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = field.mul(num, field.reduce(static_cast<std::int64_t>(n - i)));
    den = field.mul(den, field.reduce(static_cast<std::int64_t>(i + 1)));
  }
  return field.div(num, den);
}

}  // namespace

Residue binomial_mod_p(std::int64_t n, std::int64_t k, const PrimeField& field) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidInput("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                       ") requires 0 <= k <= n");
  }
  const std::uint64_t p = field.p();
  auto nn = static_cast<std::uint64_t>(n);
  auto kk = static_cast<std::uint64_t>(k);
  Residue result = 1;
  while (kk > 0 || nn > 0) {
    const std::uint64_t nd = nn % p, kd = kk % p;
    if (kd > nd) return 0;
    result = field.mul(result, small_binomial(nd, kd, field));
    nn /= p;
    kk /= p;
  }
  return result;
}

Residue power_sum(const DiffSet& U, std::int64_t k) {
  if (k < 1) throw InvalidInput("power_sum requires k >= 1, got " + std::to_string(k));
  const PrimeField& F = U.field();
  Residue s = 0;
  for (Residue u : U.elements()) s = F.add(s, F.pow(u, static_cast<std::uint64_t>(k)));
  return s;
}

int min_nonzero_power_sum(const DiffSet& U) {
  const auto p = static_cast<int>(U.p());
  for (int k = 1; k <= p - 1; ++k) {
    if (power_sum(U, k) != 0) return k;
  }
  throw InternalInvariantViolation("all power sums S(1..p-1) vanish for U = " + U.to_string(),
                                   "{\"p\":" + std::to_string(p) + ",\"U\":\"" +
                                       U.to_string() + "\"}");
}

std::vector<Residue> elementary_symmetric_via_newton(const DiffSet& U, int m) {
  const PrimeField& F = U.field();
  if (m < 1 || static_cast<std::size_t>(m) > U.size()) {
    throw InvalidInput("Newton identities need 1 <= m <= |U| = " + std::to_string(U.size()));
  }
  if (static_cast<std::uint32_t>(m) >= F.p()) {
    throw InvalidInput("Newton identities need m <= p-1 so that 1..m are invertible");
  }
  std::vector<Residue> S(m + 1, 0);
  for (int k = 1; k <= m; ++k) S[k] = power_sum(U, k);

  std::vector<Residue> e(m + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Residue acc = 0;
    for (int i = 1; i <= k; ++i) {
      const Residue term = F.mul(e[k - i], S[i]);
      acc = (i % 2 == 1) ? F.add(acc, term) : F.sub(acc, term);
    }
    e[k] = F.div(acc, static_cast<Residue>(k));
  }
  return {e.begin() + 1, e.end()};
}

Residue vandermonde_det(const DiffSet& U) {
  const PrimeField& F = U.field();
  const std::size_t n = U.size();
  std::vector<std::vector<Residue>> a(n, std::vector<Residue>(n));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) a[row][col] = F.pow(U.elements()[col], row + 1);
  }

  Residue det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) {
      det = 0;
      break;
    }
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = F.neg(det);
    }
    det = F.mul(det, a[c][c]);
    const Residue inv_pivot = F.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Residue factor = F.mul(a[r][c], inv_pivot);
      if (factor == 0) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] = F.sub(a[r][k], F.mul(factor, a[c][k]));
    }
  }
  if (det == 0) {
    throw InternalInvariantViolation("singular Vandermonde matrix for U = " + U.to_string(),
                                     "{\"p\":" + std::to_string(F.p()) + ",\"U\":\"" +
                                         U.to_string() + "\"}");
  }
  return det;
}

}  // namespace burnside
