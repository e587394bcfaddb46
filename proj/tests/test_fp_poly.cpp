#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "burnside/errors.hpp"
#include "burnside/fp_poly.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {

std::vector<Residue> coeffs_of(const FpPoly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

Perm random_perm(const PrimeField& F, std::mt19937& rng) {
  std::vector<Residue> img(F.p());
  std::iota(img.begin(), img.end(), Residue{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(F, img);
}

FpPoly random_poly(const PrimeField& F, std::mt19937& rng, std::size_t max_degree) {
  std::vector<Residue> c(rng() % (max_degree + 1) + 1);
  for (auto& v : c) v = rng() % F.p();
  return FpPoly(F, c);
}

}  // namespace

TEST_CASE("degree sentinel") {
  const PrimeField F(5);
  const FpPoly zero(F);
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.degree().is_finite());
  CHECK(zero.degree() < Degree(0));
  CHECK(zero.degree().to_string() == "-inf");
  CHECK_THROWS_AS(zero.degree().value(), InvalidInput);
  CHECK(FpPoly(F, {0, 0, 0}).is_zero());
  CHECK(FpPoly(F, {3, 5, 0}).degree() == Degree(0));  // 5 reduces to 0
}

TEST_CASE("ring operations") {
  const PrimeField F5(5), F7(7);
  CHECK(coeffs_of(FpPoly::linear(F5, 1, 1).pow(2)) == std::vector<Residue>{1, 2, 1});
  CHECK(FpPoly::linear(F7, 2, 1).pow(3).degree() == Degree(3));
  CHECK(FpPoly::monomial(F5, 1, 5).derivative().is_zero());
  CHECK(coeffs_of(FpPoly(F7, {1, 2, 3}).derivative()) == std::vector<Residue>{2, 6});
  CHECK(FpPoly(F7, {1, 2}).pow(0) == FpPoly::constant(F7, 1));
  CHECK(FpPoly(F7, {1, 2, 3}).eval(2) == (1 + 4 + 12) % 7);
  CHECK(FpPoly(F5, {1, 0, 2, 3}).to_string() == "1 + 2*X^2 + 3*X^3");
  CHECK(FpPoly(F5).to_string() == "0");
  CHECK_THROWS_AS(FpPoly(F5, {1}) + FpPoly(F7, {1}), FieldMismatch);
  CHECK_THROWS_AS(FpPoly(F5, {1}) * FpPoly(F7, {1}), FieldMismatch);
}

TEST_CASE("degree is additive under multiplication") {
  std::mt19937 rng(11);
  for (auto p : {5, 7, 11, 13}) {
    const PrimeField F(p);
    for (int t = 0; t < 100; ++t) {
      const FpPoly f = random_poly(F, rng, 6), g = random_poly(F, rng, 6);
      const FpPoly fg = f * g;
      if (f.is_zero() || g.is_zero()) {
        REQUIRE(fg.is_zero());
      } else {
        REQUIRE(fg.degree().value() == f.degree().value() + g.degree().value());
      }
      for (Residue x = 0; x < F.p(); ++x) REQUIRE(fg.eval(x) == F.mul(f.eval(x), g.eval(x)));
    }
  }
}

TEST_CASE("shift") {
  const PrimeField F5(5), F7(7);
  CHECK(coeffs_of(FpPoly::monomial(F5, 1, 2).shift(1)) == std::vector<Residue>{1, 2, 1});
  CHECK(FpPoly::constant(F5, 3).shift(4) == FpPoly::constant(F5, 3));
  CHECK(coeffs_of(FpPoly::monomial(F7, 1, 3).shift(2)) == std::vector<Residue>{1, 5, 6, 1});

  std::mt19937 rng(3);
  for (auto p : oracle::kSmallPrimes) {
    const PrimeField F(p);
    for (int t = 0; t < 30; ++t) {
      const FpPoly f = random_poly(F, rng, p - 1);
      REQUIRE(f.shift(0) == f);
      for (Residue u = 0; u < F.p(); ++u) {
        const FpPoly g = f.shift(u);
        REQUIRE(g.degree() == f.degree());
        REQUIRE(g.shift(F.neg(u)) == f);
        for (Residue x = 0; x < F.p(); ++x) REQUIRE(g.eval(x) == f.eval(F.add(x, u)));
      }
    }
  }
}

TEST_CASE("interpolation examples") {
  const PrimeField F(5);
  CHECK(coeffs_of(interpolate(make_affine({2, 1}, F))) == std::vector<Residue>{1, 2});
  CHECK(coeffs_of(interpolate(Perm::identity(F))) == std::vector<Residue>{0, 1});

  // Frozen from the Vandermonde-system oracle.
  const Perm swap01(F, {1, 0, 2, 3, 4});
  const auto expected = oracle::solve_interpolation({1, 0, 2, 3, 4}, 5);
  CHECK(expected == std::vector<oracle::Int>{1, 2, 1, 1});
  const FpPoly f = interpolate(swap01);
  CHECK(coeffs_of(f) == std::vector<Residue>{1, 2, 1, 1});
  CHECK(f.degree() == Degree(3));

  const std::vector<Residue> four{0, 1, 2, 3};
  CHECK_THROWS_AS(interpolate(F, std::span<const Residue>(four)), InvalidInput);
  const std::vector<std::pair<Residue, Residue>> dup{{0, 1}, {0, 2}, {1, 0}, {2, 2}, {3, 3}};
  CHECK_THROWS_AS(interpolate(F, std::span<const std::pair<Residue, Residue>>(dup)), InvalidInput);
  const std::vector<std::pair<Residue, Residue>> shuffled{{4, 4}, {1, 0}, {3, 3}, {0, 1}, {2, 2}};
  CHECK(interpolate(F, std::span<const std::pair<Residue, Residue>>(shuffled)) == f);
}

TEST_CASE("interpolation round trip: exhaustive p <= 7, sampled to 13") {
  for (auto p : {2, 3, 5, 7}) {
    const PrimeField F(p);
    std::vector<Residue> img(p);
    std::iota(img.begin(), img.end(), Residue{0});
    do {
      const Perm pi(F, img);
      const FpPoly f = interpolate(pi);
      REQUIRE(f.degree() <= Degree(p - 1));
      for (Residue i = 0; i < F.p(); ++i) REQUIRE(f.eval(i) == pi(i));
      // Affinity criterion: degree <= 1 iff constant first differences.
      bool constant_step = true;
      for (Residue i = 0; i + 1 < F.p(); ++i) {
        constant_step = constant_step && F.sub(pi(i + 1), pi(i)) == F.sub(pi(1), pi(0));
      }
      REQUIRE((f.degree() <= Degree(1)) == constant_step);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  std::mt19937 rng(5);
  for (auto p : {11, 13}) {
    const PrimeField F(p);
    for (int t = 0; t < 200; ++t) {
      const Perm pi = random_perm(F, rng);
      const FpPoly f = interpolate(pi);
      for (Residue i = 0; i < F.p(); ++i) REQUIRE(f.eval(i) == pi(i));
      const auto expected = oracle::solve_interpolation({pi.images().begin(), pi.images().end()}, p);
      REQUIRE(std::equal(expected.begin(), expected.end(), f.coeffs().begin(), f.coeffs().end()));
    }
  }
}
