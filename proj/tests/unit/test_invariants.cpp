#include "odo/invariants.hpp"
#include "odo/worked_examples.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace odo;
using odo::test::Rng;

namespace {

IntMatrix diag(long a, long b) { return IntMatrix::diagonal({Int(a), Int(b)}); }

using E = Exponent;

std::vector<ZdScale> geometric_corpus() {
  std::vector<ZdScale> out;
  for (auto& s : fixture_corpus())
    if (s.is_geometric()) out.push_back(s);
  Rng rng(501);
  while (out.size() < 40) {
    const std::size_t d = rng.range(1, 3);
    IntMatrix base = odo::test::random_nonsingular(rng, d, 4);
    if (!base.is_upper_triangular()) continue;
    bool expanding = true;
    for (std::size_t i = 0; i < d; ++i) expanding = expanding && abs(base(i, i)) >= 2;
    if (!expanding) continue;
    out.push_back(ZdScale::geometric("rand-" + std::to_string(out.size()), base,
                                     odo::test::random_nonsingular(rng, d, 3)));
  }
  return out;
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("supernatural examples") {
    CHECK(supernatural(ZdScale::geometric("a", diag(2, 15))).render() == "2^inf·3^inf·5^inf");
    CHECK(supernatural(ZdScale::geometric("b", diag(10, 3))).render() == "2^inf·3^inf·5^inf");
    const ZdScale ex = ZdScale::explicit_list(
        "e", {IntMatrix::diagonal({Int(6)}), IntMatrix::diagonal({Int(12)}), IntMatrix::diagonal({Int(24)})});
    const auto s = supernatural(ex);
    CHECK(s.at(2) == E::at_least(3));
    CHECK(s.at(3) == E::finite(1));
    CHECK(s.has_at_least());
    const auto g = supernatural(ZdScale::geometric("g", IntMatrix::diagonal({Int(2)}), IntMatrix::diagonal({Int(3)})));
    CHECK(g.render() == "2^inf·3^1");
    CHECK(supernatural(ZdScale::geometric("h", IntMatrix::from_rows({{1, 1}, {-1, 1}}))).render() == "2^inf");
  }

  TEST_CASE("profinite type examples") {
    const auto a = profinite_type(ZdScale::geometric("a", diag(2, 15)));
    CHECK(a.render() == "Z_2 x Z_3 x Z_5");
    for (long p : {2, 3, 5}) CHECK(a.at(p)->exponents == std::vector<E>{E::finite(0), E::infinite()});
    const auto b = profinite_type(ZdScale::geometric("b", diag(6, 10)));
    CHECK(b.at(2)->exponents == std::vector<E>{E::infinite(), E::infinite()});
    CHECK(b.at(3)->exponents == std::vector<E>{E::finite(0), E::infinite()});
    CHECK(b.render() == "Z_2 x Z_2 x Z_3 x Z_5");
    const auto j = profinite_type(ZdScale::geometric("j", IntMatrix::from_rows({{2, 1}, {0, 2}})));
    CHECK(j.at(2)->rank() == 2);
    const auto p = profinite_type(ZdScale::geometric("p", diag(2, 5), diag(1, 2)));
    CHECK(p.at(2)->exponents == std::vector<E>{E::finite(1), E::infinite()});
    CHECK(p.at(2)->torsion() == std::vector<unsigned long>{1});
    CHECK(p.render() == "Z_2 x Z/2 x Z_5");
    CHECK(profinite_type(ZdScale::geometric("t", IntMatrix::diagonal({Int(2)}), IntMatrix::diagonal({Int(3)})))
              .render() == "Z_2 x Z/3");
  }

  TEST_CASE("jordan block SNF valuations") {
    const IntMatrix m = IntMatrix::from_rows({{2, 1}, {0, 2}});
    const std::vector<std::vector<unsigned long>> expected{{0, 2}, {2, 2}, {2, 4}, {4, 4}};
    for (unsigned n = 1; n <= 4; ++n) CHECK(snf_valuations(matrix_power(m, n), 2) == expected[n - 1]);
    CHECK(rank_at(m, 2) == 2);
    CHECK(rank_at(m, 3) == 0);
  }

  TEST_CASE("explicit scales are evidence only") {
    const auto t = profinite_type(ZdScale::explicit_list("e", {diag(2, 10), diag(4, 50)}));
    CHECK(t.evidence_only);
    CHECK(t.has_at_least());
    CHECK_FALSE(min_generators(t).has_value());
  }

  TEST_CASE("min generators") {
    CHECK(min_generators(profinite_type(ZdScale::geometric("a", diag(6, 10)))) == 2u);
    CHECK(min_generators(profinite_type(ZdScale::geometric("b", diag(6, 5)))) == 1u);
    CHECK(min_generators(profinite_type(ZdScale::geometric("c", diag(2, 15)))) == 1u);
  }

  TEST_CASE("comparison examples") {
    const auto t1 = profinite_type(ZdScale::geometric("a", diag(2, 15)));
    const auto t2 = profinite_type(ZdScale::geometric("b", diag(10, 3)));
    CHECK(type_equal(t1, t2).result == Comparison::Equal);
    const auto t3 = profinite_type(ZdScale::geometric("c", diag(6, 10)));
    const auto t4 = profinite_type(ZdScale::geometric("d", diag(6, 5)));
    const auto cmp = type_equal(t3, t4);
    CHECK(cmp.result == Comparison::NotEqual);
    CHECK(cmp.prime == Int(2));
    CHECK(supernatural_equal(supernatural(ZdScale::geometric("c", diag(6, 10))),
                             supernatural(ZdScale::geometric("d", diag(6, 5))))
              .result == Comparison::Equal);
    // Different dimensions compare by padding.
    const auto z = profinite_type(ZdScale::geometric("z", IntMatrix::diagonal({Int(30)})));
    CHECK(type_equal(z, t1).result == Comparison::Equal);
  }

  TEST_CASE("lower bounds block only where they could matter") {
    SupernaturalNumber a{{{Int(2), E::at_least(3)}}};
    SupernaturalNumber b{{{Int(2), E::finite(1)}}};
    SupernaturalNumber c{{{Int(2), E::finite(5)}}};
    SupernaturalNumber d{{{Int(2), E::infinite()}}};
    CHECK(supernatural_equal(a, b).result == Comparison::NotEqual);
    CHECK(supernatural_equal(a, c).result == Comparison::Inconclusive);
    CHECK(supernatural_equal(a, d).result == Comparison::Inconclusive);
    CHECK(supernatural_equal(a, a).result == Comparison::Inconclusive);
  }

  TEST_CASE("supernatural equals the summed type") {
    for (const auto& s : geometric_corpus()) {
      const auto sn = supernatural(s);
      const auto t = profinite_type(s);
      CHECK_FALSE(t.evidence_only);
      for (const auto& pt : t.primes) {
        const E expected = pt.rank() > 0 ? E::infinite() : E::finite(pt.torsion_order_exponent());
        CHECK(sn.at(pt.prime) == expected);
      }
      for (const auto& [p, e] : sn.factors) CHECK(t.at(p) != nullptr);
    }
  }

  TEST_CASE("type agrees with direct SNF valuations") {
    for (const auto& s : geometric_corpus()) {
      const auto t = profinite_type(s);
      const std::size_t d = s.dim();
      for (const auto& pt : t.primes) {
        const unsigned r = pt.rank();
        REQUIRE(r == rank_at(s.geometric_data().base, pt.prime));
        std::vector<unsigned long> finite;
        for (const auto& e : pt.exponents)
          if (e.is_finite()) finite.push_back(e.value);
        // far enough out, the bottom d - r valuations are the finite exponents
        const unsigned start = 12;
        std::size_t growing = 0;
        const auto early = snf_valuations(s.gamma(start), pt.prime);
        const auto late = snf_valuations(s.gamma(start + 2 * d), pt.prime);
        for (std::size_t i = 0; i < d; ++i) growing += late[i] > early[i];
        CHECK(growing == r);
        for (unsigned n = start; n <= start + d; ++n) {
          const auto v = snf_valuations(s.gamma(n), pt.prime);
          CHECK(std::vector<unsigned long>(v.begin(), v.begin() + (d - r)) == finite);
        }
      }
    }
  }

  TEST_CASE("cylinder subgroups keep ranks and need no more generators") {
    for (const auto& s : geometric_corpus()) {
      const auto t = profinite_type(s);
      const auto sub = profinite_type(ZdScale::geometric("sub", s.geometric_data().base));
      for (const auto& pt : t.primes) {
        const PrimeType ps = sub.tuple_at(pt.prime);
        CHECK(ps.rank() == pt.rank());
        const auto big = pt.torsion(), small = ps.torsion();
        CHECK(small.size() <= big.size());
        for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] <= big[i]);
      }
      CHECK(*min_generators(sub) <= *min_generators(t));
    }
  }
}
