#include "odo/decide.hpp"
#include "odo/worked_examples.hpp"

#include <doctest.h>

#include <algorithm>

using namespace odo;

namespace {

bool has_note(const DecisionReport& r, const std::string& text) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& n) { return n.find(text) != std::string::npos; });
}

std::vector<ScaleInvariants> certified_corpus() {
  std::vector<ScaleInvariants> out;
  for (const auto& s : fixture_corpus()) {
    auto inv = compute_invariants(s);
    if (inv.certificate.status == TrivialityCertificate::Status::Certified && inv.type) out.push_back(inv);
  }
  return out;
}

}  // namespace

TEST_SUITE("decide") {
  TEST_CASE("diag(2,15) vs diag(10,3)") {
    const auto a = fixture_scale("z2-diag-2-15"), b = fixture_scale("z2-diag-10-3");
    CHECK(decide_oe(a, b).verdict == Verdict::Yes);
    const auto stab = decide_stab_iso(a, b);
    CHECK(stab.verdict == Verdict::Yes);
    REQUIRE(stab.witness.has_value());
    CHECK(stab.witness->index == 1);
    CHECK(stab.witness->type.render() == "Z_2 x Z_3 x Z_5");
    const auto coe = decide_coe(a, b);
    CHECK(coe.verdict == Verdict::Inconclusive);
  }

  TEST_CASE("diag(6,10) vs diag(6,5)") {
    const auto a = fixture_scale("z2-diag-6-10"), b = fixture_scale("z2-diag-6-5");
    CHECK(decide_oe(a, b).verdict == Verdict::Yes);
    const auto stab = decide_stab_iso(a, b);
    CHECK(stab.verdict == Verdict::No);
    REQUIRE(stab.distinguishing.has_value());
    CHECK(stab.distinguishing->kind == "rank");
    CHECK(stab.distinguishing->prime == Int(2));
    CHECK(stab.distinguishing->first == "rank 2");
    CHECK(stab.distinguishing->second == "rank 1");
    CHECK(stab.s1.min_generators == 2u);
    CHECK(stab.s2.min_generators == 1u);
    const auto coe = decide_coe(a, b);
    CHECK(coe.verdict == Verdict::No);
    CHECK(coe.distinguishing.has_value());
  }

  TEST_CASE("prefix example needs index 2") {
    const auto stab = decide_stab_iso(fixture_scale("z2-prefix-1-2-diag-2-5"), fixture_scale("z2-diag-2-5"));
    CHECK(stab.verdict == Verdict::Yes);
    REQUIRE(stab.witness.has_value());
    CHECK(stab.witness->index == 2);
    CHECK(stab.witness->index_factorization == PrimeFactorization{{2, 1}});
    CHECK(stab.witness->type.render() == "Z_2 x Z_5");
  }

  TEST_CASE("Z-odometers") {
    const auto s2 = fixture_scale("z-2n"), s3 = fixture_scale("z-3n"), s4 = fixture_scale("z-4n");
    const auto s32 = fixture_scale("z-3x2n");
    const auto yes = decide_stab_iso(s2, s4);
    CHECK(yes.verdict == Verdict::Yes);
    CHECK(yes.witness->index == 1);
    const auto oe = decide_oe(s2, s3);
    CHECK(oe.verdict == Verdict::No);
    CHECK(oe.distinguishing->kind == "supernatural");
    CHECK(decide_stab_iso(s2, s3).verdict == Verdict::No);
    const auto torsion = decide_stab_iso(s32, s2);
    CHECK(torsion.verdict == Verdict::No);
    CHECK(torsion.distinguishing->kind == "torsion-order");
    CHECK(torsion.distinguishing->prime == Int(3));
    CHECK(decide_oe(s32, s2).verdict == Verdict::No);
  }

  TEST_CASE("identical scales") {
    const auto a = fixture_scale("z2-diag-6-10");
    const auto r = decide_coe(a, a);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(has_note(r, "identical scales are trivially COE"));
  }

  TEST_CASE("explicit scales stay inconclusive") {
    const auto e = ZdScale::explicit_list("e", {IntMatrix::diagonal({Int(2), Int(10)}),
                                                IntMatrix::diagonal({Int(4), Int(50)})});
    const auto b = fixture_scale("z2-diag-2-5");
    const auto oe = decide_oe(e, b);
    CHECK(oe.verdict == Verdict::Inconclusive);
    CHECK(has_note(oe, ">="));
    CHECK(decide_stab_iso(e, b).verdict == Verdict::Inconclusive);
    CHECK(decide_coe(e, b).verdict == Verdict::Inconclusive);
  }

  TEST_CASE("not trivial intersection is inconclusive") {
    const auto fixed = ZdScale::geometric("fixed", IntMatrix::from_rows({{1, 0}, {0, 3}}));
    const auto r = decide_stab_iso(fixed, fixture_scale("z2-diag-2-5"));
    CHECK(r.verdict == Verdict::Inconclusive);
  }

  TEST_CASE("match_prime closed form") {
    using E = Exponent;
    const PrimeType a{2, {E::finite(1), E::finite(2), E::infinite()}};
    const PrimeType b{2, {E::finite(0), E::finite(3), E::infinite()}};
    const auto m = match_prime(a, b);
    CHECK(m.matched);
    CHECK(m.witness == std::vector<unsigned long>{2});
    CHECK(m.deficit1 == 1);
    CHECK(m.deficit2 == 1);
    CHECK(m.index_exponent == 1);
    const PrimeType c{3, {E::finite(0), E::finite(2)}};
    const PrimeType d{3, {E::finite(1), E::finite(1)}};
    CHECK(match_prime(c, d).matched);
    const PrimeType e{3, {E::finite(0), E::finite(1)}};
    CHECK_FALSE(match_prime(c, e).matched);
  }

  TEST_CASE("symmetry, reflexivity and supernatural agreement") {
    const auto corpus = certified_corpus();
    REQUIRE(corpus.size() >= 10);
    for (const auto& a : corpus) {
      CHECK(decide_stab_iso(a, a).verdict == Verdict::Yes);
      CHECK(decide_oe(a, a).verdict == Verdict::Yes);
      for (const auto& b : corpus) {
        const auto ab = decide_stab_iso(a, b), ba = decide_stab_iso(b, a);
        CHECK(ab.verdict == ba.verdict);
        CHECK(decide_oe(a, b).verdict == decide_oe(b, a).verdict);
        if (ab.verdict == Verdict::Yes) {
          CHECK(supernatural_equal(a.supernatural, b.supernatural).result == Comparison::Equal);
          CHECK(ab.witness->index == ba.witness->index);
        }
      }
    }
  }

  TEST_CASE("implication chain on fixtures and random pairs") {
    std::vector<std::pair<ZdScale, ZdScale>> pairs;
    const auto corpus = fixture_corpus();
    for (const auto& a : corpus)
      for (const auto& b : corpus) pairs.emplace_back(a, b);
    const auto report = implication_chain_check(pairs);
    CHECK(report.ok());
    CHECK(report.checked == pairs.size());
    const auto random = implication_chain_check(random_diagonal_pairs(200, 7));
    CHECK(random.ok());
    CHECK(random.checked + random.excluded == 200);
  }
}
