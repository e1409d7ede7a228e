#include "odo/finite_group.hpp"
#include "odo/tower.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace odo;
using odo::test::Rng;

namespace {

IntMatrix diag(long a, long b) { return IntMatrix::diagonal({Int(a), Int(b)}); }

Coset at(unsigned level, std::initializer_list<long> r) {
  IntVector v;
  for (long x : r) v.push_back(Int(x));
  return Coset{level, v};
}

Coset random_coset(Rng& rng, const QuotientTower& t, unsigned level) {
  return t.reduce(level, odo::test::random_vector(rng, t.dim(), 1000));
}

}  // namespace

TEST_SUITE("tower") {
  TEST_CASE("build examples") {
    const auto t = QuotientTower::build(ZdScale::geometric("a", diag(2, 15)), 2);
    CHECK(t->cardinality(1) == 30);
    CHECK(t->cardinality(2) == 900);
    const auto z = QuotientTower::build(ZdScale::geometric("z", IntMatrix::diagonal({Int(2)})), 3);
    CHECK(z->cardinality(1) == 2);
    CHECK(z->cardinality(2) == 4);
    CHECK(z->cardinality(3) == 8);
    const auto b = QuotientTower::build(ZdScale::geometric("b", diag(6, 10)), 1);
    CHECK(b->invariant_factors(1) == IntVector{2, 30});
    CHECK_THROWS_AS(b->lattice(2), Error);
    CHECK_THROWS_AS(QuotientTower::build(ZdScale::explicit_list("e", {diag(2, 2)}), 2), Error);
  }

  TEST_CASE("coset arithmetic examples") {
    const auto t = QuotientTower::build(ZdScale::geometric("a", diag(2, 30)), 2);
    CHECK(t->add(at(1, {1, 29}), at(1, {1, 1})) == at(1, {0, 0}));
    CHECK(t->neg(at(1, {1, 1})) == at(1, {1, 29}));
    const Coset x = at(2, {1, 17}), y = at(2, {0, 1});
    CHECK(t->add(t->project(x, 1), t->project(y, 1)) == t->project(t->add(x, y), 1));
    CHECK_THROWS_AS(t->add(at(1, {0, 0}), at(2, {0, 0})), Error);
  }

  TEST_CASE("group laws on random triples") {
    Rng rng(301);
    const std::vector<ZdScale> scales{ZdScale::geometric("a", diag(2, 15)),
                                      ZdScale::geometric("b", IntMatrix::from_rows({{2, 1}, {0, 2}})),
                                      ZdScale::geometric("c", IntMatrix::from_rows({{0, -2}, {1, 1}})),
                                      ZdScale::geometric("d", IntMatrix::from_rows({{1, 2, 0}, {0, 3, 1}, {2, 0, 2}}))};
    for (const auto& s : scales) {
      const auto t = QuotientTower::build(s, 3);
      for (int trial = 0; trial < 200; ++trial) {
        const unsigned n = rng.range(0, 3);
        const Coset a = random_coset(rng, *t, n), b = random_coset(rng, *t, n), c = random_coset(rng, *t, n);
        CHECK(t->is_canonical(a));
        CHECK(t->add(t->add(a, b), c) == t->add(a, t->add(b, c)));
        CHECK(t->add(a, b) == t->add(b, a));
        CHECK(t->add(a, t->neg(a)) == t->zero(n));
        CHECK(t->sub(a, b) == t->add(a, t->neg(b)));
        const unsigned m = rng.range(0, n);
        CHECK(t->project(t->add(a, b), m) == t->add(t->project(a, m), t->project(b, m)));
      }
    }
  }

  TEST_CASE("enumerate, index_of and fibres") {
    const auto t = QuotientTower::build(ZdScale::geometric("j", IntMatrix::from_rows({{2, 1}, {0, 2}})), 3);
    for (unsigned n = 0; n <= 3; ++n) {
      const auto cells = t->enumerate(n);
      CHECK(Int(cells.size()) == t->cardinality(n));
      CHECK(cells.front() == t->zero(n));
      std::set<Coset> distinct(cells.begin(), cells.end());
      CHECK(distinct.size() == cells.size());
      for (std::size_t i = 0; i < cells.size(); ++i) {
        CHECK(t->index_of(cells[i]) == i);
        CHECK(t->coset_at(n, i) == cells[i]);
      }
    }
    for (unsigned n = 0; n < 3; ++n) {
      const Int ratio = t->cardinality(n + 1) / t->cardinality(n);
      for (auto size : t->fiber_sizes(n)) CHECK(Int(size) == ratio);
    }
  }

  TEST_CASE("snf coordinates are an isomorphism") {
    Rng rng(302);
    const auto t = QuotientTower::build(ZdScale::geometric("c", IntMatrix::from_rows({{0, -2}, {1, 1}})), 4);
    for (unsigned n = 1; n <= 4; ++n) {
      const IntVector d = t->snf_data(n).elementary_divisors();
      std::set<IntVector> images;
      for (const auto& c : t->enumerate(n)) images.insert(t->snf_coordinates(c));
      CHECK(Int(images.size()) == t->cardinality(n));
      for (int trial = 0; trial < 50; ++trial) {
        const Coset a = random_coset(rng, *t, n), b = random_coset(rng, *t, n);
        const IntVector ca = t->snf_coordinates(a), cb = t->snf_coordinates(b), cs = t->snf_coordinates(t->add(a, b));
        for (std::size_t i = 0; i < d.size(); ++i) CHECK(floor_mod(ca[i] + cb[i] - cs[i], d[i]) == 0);
      }
    }
  }

  TEST_CASE("section examples") {
    const auto z = QuotientTower::build(ZdScale::geometric("z", IntMatrix::diagonal({Int(2)})), 2);
    CHECK(z->section(1, 2) == std::vector<Coset>{at(2, {0}), at(2, {1})});
    const auto b = QuotientTower::build(ZdScale::geometric("b", diag(6, 10)), 1);
    const auto all = b->section(1, 1);
    CHECK(all.size() == 60);
    CHECK(all.front() == b->zero(1));
    const auto e = QuotientTower::build(
        ZdScale::explicit_list("e", {IntMatrix::diagonal({Int(6)}), IntMatrix::diagonal({Int(12)}),
                                     IntMatrix::diagonal({Int(24)})}),
        3);
    const auto reps = e->section(1, 3);
    CHECK(reps.size() == 6);
    std::set<Coset> below;
    for (const auto& r : reps) {
      CHECK(r.level == 3);
      below.insert(e->project(r, 1));
    }
    CHECK(below.size() == 6);
  }

  TEST_CASE("uniform measure") {
    const auto a = QuotientTower::build(ZdScale::geometric("a", diag(2, 15)), 1);
    CHECK(a->uniform_measure(at(1, {1, 3})) == Rational(1, 30));
    CHECK(a->uniform_measure(a->zero(0)) == 1);
    const auto b = QuotientTower::build(ZdScale::geometric("b", diag(6, 10)), 1);
    CHECK(b->uniform_measure(at(1, {0, 0})) == Rational(1, 60));
    Rational total = 0;
    const Coset shift = at(1, {1, 7});
    for (const auto& c : b->enumerate(1)) {
      total += b->uniform_measure(c);
      CHECK(b->uniform_measure(b->add(c, shift)) == b->uniform_measure(c));
    }
    CHECK(total == 1);
  }

  TEST_CASE("enumeration bound") {
    const auto t = QuotientTower::build(ZdScale::geometric("big", diag(10, 30)), 3, 1000);
    CHECK(t->cardinality(3) == Int(27000000));
    try {
      t->enumerate(3);
      FAIL("expected SizeGuard");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SizeGuard);
    }
  }
}

TEST_SUITE("finite_group") {
  TEST_CASE("Heisenberg tower") {
    const auto h1 = FiniteGroupTower::heisenberg(2, 1);
    CHECK(h1.group(1).order() == 8);
    CHECK_FALSE(h1.group(1).is_abelian());
    // (1,0,0)(0,1,0) = (1,1,1) but (0,1,0)(1,0,0) = (1,1,0)
    const FiniteGroup& g = h1.group(1);
    CHECK(g.mul(4, 2) != g.mul(2, 4));
    CHECK(g.center().size() == 2);

    const auto h2 = FiniteGroupTower::heisenberg(2, 2);
    CHECK(h2.group(2).order() == 64);
    CHECK(h2.kernel(1, 2).size() == 8);
    std::set<Elem> image;
    for (Elem x = 0; x < 64; ++x) image.insert(h2.project(x, 2, 1));
    CHECK(image.size() == 8);
    CHECK_THROWS_AS(FiniteGroupTower::heisenberg(5, 2), Error);
  }

  TEST_CASE("small groups") {
    const FiniteGroup s3 = symmetric_group_3();
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(s3.center().size() == 1);
    const FiniteGroup c4 = cyclic_group(4);
    CHECK(c4.is_abelian());
    for (Elem a = 0; a < 4; ++a) CHECK(c4.mul(a, c4.inv(a)) == c4.identity());
  }

  TEST_CASE("table validation") {
    // Not associative: a Latin square that is not a group table.
    std::vector<Elem> bad{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", 5, bad), Error);
    // x -> x mod 2 from Z/3 to Z/2 is not a homomorphism.
    CHECK_THROWS_AS(FiniteGroupTower::make("bad", {cyclic_group(1), cyclic_group(2), cyclic_group(3)},
                                           {{0, 0}, {0, 1, 0}}),
                    Error);
  }

  TEST_CASE("tower from a quotient tower") {
    const auto q = QuotientTower::build(ZdScale::geometric("z", IntMatrix::diagonal({Int(3)})), 2);
    const auto t = FiniteGroupTower::from_quotient(*q, 2);
    CHECK(t.is_abelian());
    CHECK(t.group(2).order() == 9);
    CHECK(t.kernel(1, 2).size() == 3);
    CHECK(t.has_labels());
    for (Elem x = 0; x < 9; ++x)
      CHECK(q->project(t.labels(2)[x], 1) == t.labels(1)[t.project(x, 2, 1)]);
  }
}
