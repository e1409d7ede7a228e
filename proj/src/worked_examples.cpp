#include "odo/worked_examples.hpp"

#include <map>
#include <random>

namespace odo {

namespace {

using Builder = ZdScale (*)();

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> list{
      {"z-2n", [] { return ZdScale::geometric("z-2n", IntMatrix::diagonal({2})); }},
      {"z-3n", [] { return ZdScale::geometric("z-3n", IntMatrix::diagonal({3})); }},
      {"z-4n", [] { return ZdScale::geometric("z-4n", IntMatrix::diagonal({4})); }},
      {"z-6n", [] { return ZdScale::geometric("z-6n", IntMatrix::diagonal({6})); }},
      {"z-3x2n", [] { return ZdScale::geometric("z-3x2n", IntMatrix::diagonal({2}), IntMatrix::diagonal({3})); }},
      {"z2-diag-2-15", [] { return ZdScale::geometric("z2-diag-2-15", IntMatrix::diagonal({2, 15})); }},
      {"z2-diag-10-3", [] { return ZdScale::geometric("z2-diag-10-3", IntMatrix::diagonal({10, 3})); }},
      {"z2-diag-6-10", [] { return ZdScale::geometric("z2-diag-6-10", IntMatrix::diagonal({6, 10})); }},
      {"z2-diag-6-5", [] { return ZdScale::geometric("z2-diag-6-5", IntMatrix::diagonal({6, 5})); }},
      {"z2-diag-2-3", [] { return ZdScale::geometric("z2-diag-2-3", IntMatrix::diagonal({2, 3})); }},
      {"z2-diag-2-2", [] { return ZdScale::geometric("z2-diag-2-2", IntMatrix::diagonal({2, 2})); }},
      {"z2-diag-2-5", [] { return ZdScale::geometric("z2-diag-2-5", IntMatrix::diagonal({2, 5})); }},
      {"z2-jordan-2", [] { return ZdScale::geometric("z2-jordan-2", IntMatrix::from_rows({{2, 1}, {0, 2}})); }},
      {"z2-companion-x2-2",
       [] { return ZdScale::geometric("z2-companion-x2-2", IntMatrix::from_rows({{0, 2}, {1, 0}})); }},
      {"z2-companion-x2-x+2",
       [] { return ZdScale::geometric("z2-companion-x2-x+2", IntMatrix::from_rows({{0, -2}, {1, 1}})); }},
      {"z2-prefix-1-2-diag-2-5",
       [] {
         return ZdScale::geometric("z2-prefix-1-2-diag-2-5", IntMatrix::diagonal({2, 5}),
                                   IntMatrix::diagonal({1, 2}));
       }},
  };
  return list;
}

}  // namespace

ZdScale fixture_scale(const std::string& name) {
  for (const auto& [key, build] : registry())
    if (key == name) return build();
  throw Error(Errc::InvalidArgument, "unknown fixture scale '" + name + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& entry : registry()) out.push_back(entry.first);
  return out;
}

std::vector<ZdScale> fixture_corpus() {
  std::vector<ZdScale> out;
  for (const auto& entry : registry()) out.push_back(entry.second());
  return out;
}

std::vector<std::pair<ZdScale, ZdScale>> random_diagonal_pairs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const long primes[] = {2, 3, 5, 7};
  auto entry = [&](bool allow_one) {
    while (true) {
      long v = 1;
      for (long p : primes) {
        const int e = std::uniform_int_distribution<int>(0, 2)(rng) - 1;
        for (int i = 0; i < e; ++i) v *= p;
      }
      if (v >= 2 || allow_one) return v;
    }
  };
  auto scale = [&](std::size_t i, char tag) {
    const std::size_t d = std::uniform_int_distribution<int>(1, 2)(rng);
    IntVector diag, pre;
    for (std::size_t k = 0; k < d; ++k) diag.push_back(Int(entry(false)));
    const bool prefix = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    for (std::size_t k = 0; k < d && prefix; ++k) pre.push_back(Int(entry(true)));
    const std::string name = "random-" + std::to_string(i) + tag;
    if (!prefix) return ZdScale::geometric(name, IntMatrix::diagonal(diag));
    return ZdScale::geometric(name, IntMatrix::diagonal(diag), IntMatrix::diagonal(pre));
  };
  std::vector<std::pair<ZdScale, ZdScale>> out;
  for (std::size_t i = 0; i < count; ++i) {
    ZdScale a = scale(i, 'a');
    ZdScale b = scale(i, 'b');
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

Verdict ExampleRecord::computed_verdict(Question q) const {
  for (const auto& r : computed)
    if (r.question == q) return r.verdict;
  return Verdict::Inconclusive;
}

namespace {

std::string factorization_text(const Int& n) {
  std::string out = to_string(n) + " = ";
  bool first = true;
  for (const auto& [p, e] : factor_integer(n)) {
    out += (first ? "" : "·") + to_string(p) + (e > 1 ? "^" + std::to_string(e) : "");
    first = false;
  }
  return out;
}

ExampleRecord make_record(std::string id, std::string description, const std::string& a, const std::string& b,
                          std::vector<std::pair<Question, Verdict>> asserted) {
  ExampleRecord r{std::move(id), std::move(description), fixture_scale(a), fixture_scale(b), std::move(asserted)};
  const ScaleInvariants ia = compute_invariants(r.first), ib = compute_invariants(r.second);
  r.computed.push_back(decide_oe(ia, ib));
  r.computed.push_back(decide_stab_iso(ia, ib));
  r.computed.push_back(decide_coe(ia, ib, false));
  for (const auto& [q, v] : r.asserted)
    if (r.computed_verdict(q) != v) r.discrepancy = true;
  for (const ScaleInvariants* s : {&ia, &ib}) {
    r.facts.emplace_back(s->name + " supernatural", s->supernatural.render());
    if (s->type) r.facts.emplace_back(s->name + " type", s->type->render());
    if (s->min_generators) r.facts.emplace_back(s->name + " min generators", std::to_string(*s->min_generators));
  }
  return r;
}

}  // namespace

std::vector<ExampleRecord> run_worked_examples() {
  std::vector<ExampleRecord> out;

  auto r1 = make_record("oe-stab-not-coe", "diag(2,15)^n vs diag(10,3)^n", "z2-diag-2-15", "z2-diag-10-3",
                        {{Question::OE, Verdict::Yes}, {Question::StabIso, Verdict::Yes}});
  r1.notes.push_back("asserted: orbit equivalent but not continuously orbit equivalent; the second claim is "
                     "recorded, not certified (coe stays inconclusive)");
  out.push_back(std::move(r1));

  auto r2 = make_record("oe-not-stab", "diag(6,10)^n vs diag(6,5)^n", "z2-diag-6-10", "z2-diag-6-5",
                        {{Question::OE, Verdict::Yes}, {Question::StabIso, Verdict::No}, {Question::COE, Verdict::No}});
  r2.facts.emplace_back("index of level 1, first scale", factorization_text(r2.first.index(1)));
  r2.facts.emplace_back("index of level 1, second scale", factorization_text(r2.second.index(1)));
  r2.notes.push_back("label swap: the source attributes index 60 to the second system and 30 to the first, while "
                     "the displayed generators give 60 for diag(6,10) and 30 for diag(6,5); the displayed "
                     "matrices are followed");
  out.push_back(std::move(r2));

  auto r3 = make_record("stab-not-topiso", "diag(2,2)^n vs companion(x^2-x+2)^n", "z2-diag-2-2",
                        "z2-companion-x2-x+2", {{Question::StabIso, Verdict::Yes}});
  r3.notes.push_back("discrepancy: the odometers are Z_2 x Z_2 and Z_2, of ranks 2 and 1 at p = 2; every clopen "
                     "subgroup keeps the rank, so no two clopen subgroups are isomorphic and the clopen-subgroup "
                     "criterion gives no; the asserted yes relies on an external example that is not reproduced "
                     "here");
  out.push_back(std::move(r3));

  out.push_back(make_record("z-2n-vs-4n", "Z-odometers 2^n vs 4^n", "z-2n", "z-4n",
                            {{Question::StabIso, Verdict::Yes}}));
  out.push_back(make_record("z-2n-vs-3n", "Z-odometers 2^n vs 3^n", "z-2n", "z-3n",
                            {{Question::StabIso, Verdict::No}}));
  out.push_back(make_record("z-3x2n-vs-2n", "Z-odometers 3*2^n vs 2^n", "z-3x2n", "z-2n",
                            {{Question::StabIso, Verdict::No}}));
  return out;
}

}  // namespace odo
