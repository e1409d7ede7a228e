#include "odo/lattice.hpp"
#include "odo/polyfactor.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace odo;
using odo::test::Rng;

namespace {

// Leibniz expansion over all permutations.
Int leibniz_det(const IntMatrix& m) {
  const std::size_t d = m.rows();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    Int term = 1;
    for (std::size_t i = 0; i < d; ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Elementary divisors from gcds of k x k minors.
IntVector determinantal_divisors(const IntMatrix& m) {
  const std::size_t d = m.rows();
  IntVector out;
  Int previous = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    Int g = 0;
    for (const auto& rows : subsets(d, k))
      for (const auto& cols : subsets(d, k)) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(rows[i], cols[j]);
        Int det = leibniz_det(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      }
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

bool trial_prime(const Int& n) {
  if (n < 2) return false;
  for (Int q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("snf examples") {
    CHECK(snf(IntMatrix::diagonal({Int(6), Int(10)})).elementary_divisors() == IntVector{2, 30});
    CHECK(snf(IntMatrix::identity(3)).D == IntMatrix::identity(3));
    CHECK(snf(IntMatrix::from_rows({{2, 1}, {0, 2}})).elementary_divisors() == IntVector{1, 4});
    CHECK_THROWS_AS(snf(IntMatrix::from_rows({{1, 2}, {2, 4}})), Error);
  }

  TEST_CASE("snf identity and divisibility on random matrices") {
    Rng rng(101);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t d = rng.range(1, 3);
      const IntMatrix m = odo::test::random_nonsingular(rng, d, 9);
      const SNFData s = snf(m);
      CHECK(s.U * m * s.V == s.D);
      CHECK(abs(determinant(s.U)) == 1);
      CHECK(abs(determinant(s.V)) == 1);
      const IntVector e = s.elementary_divisors();
      Int prod = 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        CHECK(e[i] > 0);
        if (i + 1 < e.size()) CHECK(e[i + 1] % e[i] == 0);
        prod *= e[i];
      }
      CHECK(prod == abs(determinant(m)));
      CHECK(e == determinantal_divisors(m));
    }
  }

  TEST_CASE("snf is deterministic") {
    const IntMatrix m = IntMatrix::from_rows({{4, 6, 2}, {3, -1, 7}, {0, 5, 9}});
    const SNFData a = snf(m), b = snf(m);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
    CHECK(a.D == b.D);
  }

  TEST_CASE("determinant against the Leibniz expansion") {
    Rng rng(102);
    for (int trial = 0; trial < 200; ++trial) {
      const IntMatrix m = odo::test::random_matrix(rng, rng.range(1, 4), 20);
      CHECK(determinant(m) == leibniz_det(m));
    }
  }

  TEST_CASE("hnf shape and lattice equality") {
    Rng rng(103);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t d = rng.range(1, 4);
      const IntMatrix m = odo::test::random_nonsingular(rng, d, 8);
      const IntMatrix h = hnf(m);
      CHECK(h.is_lower_triangular());
      for (std::size_t i = 0; i < d; ++i) {
        CHECK(h(i, i) > 0);
        for (std::size_t j = 0; j < i; ++j) CHECK((h(i, j) >= 0 && h(i, j) < h(i, i)));
      }
      CHECK(abs(determinant(h)) == abs(determinant(m)));
      for (std::size_t j = 0; j < d; ++j) {
        CHECK(solve_integral(h, m.column(j)).has_value());
        CHECK(solve_integral(m, h.column(j)).has_value());
      }
    }
  }

  TEST_CASE("hnf_reduce examples") {
    CHECK(hnf_reduce(IntMatrix::diagonal({Int(2), Int(30)}), {Int(3), Int(31)}) == IntVector{1, 1});
    CHECK(hnf_reduce(IntMatrix::from_rows({{2, 1}, {0, 2}}), {Int(1), Int(2)}) == IntVector{0, 0});
    CHECK(hnf_reduce(IntMatrix::from_rows({{3, 1}, {1, 5}}), {Int(0), Int(0)}) == IntVector{0, 0});
  }

  TEST_CASE("hnf_reduce agrees with membership") {
    Rng rng(104);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t d = rng.range(1, 3);
      const IntMatrix m = odo::test::random_nonsingular(rng, d, 6);
      const IntVector v = odo::test::random_vector(rng, d, 30);
      const IntVector w = odo::test::random_vector(rng, d, 30);
      const bool same = hnf_reduce(m, v) == hnf_reduce(m, w);
      CHECK(same == solve_integral(m, v - w).has_value());
      if (auto x = solve_integral(m, v)) CHECK(m * *x == v);
    }
  }

  TEST_CASE("solve_integral examples") {
    const IntMatrix d230 = IntMatrix::diagonal({Int(2), Int(30)});
    CHECK(solve_integral(d230, {Int(4), Int(60)}) == IntVector{2, 2});
    CHECK_FALSE(solve_integral(d230, {Int(1), Int(0)}).has_value());
    CHECK(solve_integral(IntMatrix::from_rows({{2, 1}, {0, 2}}), {Int(1), Int(2)}) == IntVector{0, 1});
  }

  TEST_CASE("charpoly examples") {
    CHECK(charpoly(IntMatrix::diagonal({Int(2), Int(15)})) == IntVector{30, -17, 1});
    CHECK(charpoly(IntMatrix::from_rows({{2, 1}, {0, 2}})) == IntVector{4, -4, 1});
    CHECK(charpoly(IntMatrix::identity(2)) == IntVector{1, -2, 1});
  }

  TEST_CASE("Cayley-Hamilton and pointwise charpoly") {
    Rng rng(105);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t d = rng.range(1, 4);
      const IntMatrix m = odo::test::random_matrix(rng, d, 12);
      const IntVector c = charpoly(m);
      REQUIRE(c.size() == d + 1);
      CHECK(c.back() == 1);
      CHECK(evaluate_at(c, m) == IntMatrix(d, d));
      for (long lambda : {-3L, 0L, 2L, 7L}) {
        IntMatrix shifted(d, d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) shifted(i, j) = (i == j ? Int(lambda) : Int(0)) - m(i, j);
        Int value = 0;
        for (std::size_t k = c.size(); k-- > 0;) value = value * lambda + c[k];
        CHECK(value == leibniz_det(shifted));
      }
    }
  }

  TEST_CASE("factor_integer examples") {
    CHECK(factor_integer(60) == PrimeFactorization{{2, 2}, {3, 1}, {5, 1}});
    CHECK(factor_integer(30) == PrimeFactorization{{2, 1}, {3, 1}, {5, 1}});
    CHECK(factor_integer(1).empty());
  }

  TEST_CASE("factor_integer round trip") {
    Rng rng(106);
    for (int trial = 0; trial < 300; ++trial) {
      const Int n = Int(rng.range(1, 200000));
      const auto f = factor_integer(n);
      CHECK(product(f) == n);
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(trial_prime(f[i].prime));
        CHECK(f[i].exponent >= 1);
        if (i > 0) CHECK(f[i - 1].prime < f[i].prime);
      }
    }
    // Two primes beyond the trial-division range force the randomized splitting path.
    const Int p(1000000007), q(998244353);
    const Int n = p * p * q * 12;
    const auto f = factor_integer(n);
    CHECK(product(f) == n);
    CHECK(f == PrimeFactorization{{2, 2}, {3, 1}, {q, 1}, {p, 2}});
    const Int big("18446744073709551557");
    CHECK(factor_integer(big) == PrimeFactorization{{big, 1}});
  }

  TEST_CASE("unit_factor_test examples") {
    CHECK(unit_factor_test({30, -17, 1}) == UnitFactor::NoUnitFactor);
    CHECK(unit_factor_test({1, -3, 1}) == UnitFactor::HasUnitFactor);
    CHECK(unit_factor_test({-1, 1}) == UnitFactor::HasUnitFactor);
    // (x^2 + x + 2)(x^2 - x - 1): the unit factor is hidden inside a quartic.
    CHECK(unit_factor_test(poly::multiply({2, 1, 1}, {-1, -1, 1})) == UnitFactor::HasUnitFactor);
    CHECK(unit_factor_test(poly::multiply({2, 1, 1}, {3, 0, 1})) == UnitFactor::NoUnitFactor);
    IntVector deg9(10, 0);
    deg9[0] = 2;
    deg9[9] = 1;
    CHECK(unit_factor_test(deg9) == UnitFactor::Unknown);
  }

  TEST_CASE("polynomial factors multiply back") {
    Rng rng(107);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<poly::IntPoly> parts;
      std::size_t degree = 0;
      while (degree < 6) {
        const std::size_t k = rng.range(1, 2);
        poly::IntPoly f;
        for (std::size_t i = 0; i < k; ++i) f.push_back(Int(rng.range(-5, 5)));
        f.push_back(1);
        parts.push_back(f);
        degree += k;
      }
      poly::IntPoly product_poly{1};
      for (const auto& f : parts) product_poly = poly::multiply(product_poly, f);
      const auto factors = poly::irreducible_factors(product_poly);
      REQUIRE(factors.has_value());
      // Every listed factor divides, and every random part is a product of listed factors.
      for (const auto& g : *factors) CHECK(poly::divide_exact(product_poly, g).has_value());
      for (auto f : parts) {
        for (const auto& g : *factors)
          while (f.size() > 1)
            if (auto q = poly::divide_exact(f, g)) f = *q; else break;
        CHECK(f == poly::IntPoly{1});
      }
    }
  }
}
