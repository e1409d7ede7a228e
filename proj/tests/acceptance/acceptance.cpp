// One pass/fail line per acceptance criterion; exit status 1 if any fail.

#include "odo/oracle.hpp"
#include "odo/worked_examples.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace odo;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::string fact(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.facts)
    if (k == key) return v;
  return "";
}

void require_checks(Outcome& o, const std::vector<CheckReport>& checks) {
  for (const auto& c : checks) {
    o.require(c.passed, c.check + " [" + c.subject + "]");
    for (const auto& f : c.failures) o.detail << "(" << f << ") ";
  }
}

const std::vector<CheckReport>& fullgroup_suite() {
  static const std::vector<CheckReport> checks = run_suite("fullgroup", kDefaultSeed);
  return checks;
}

void ac1(Outcome& o) {
  const auto a = compute_invariants(fixture_scale("z2-diag-2-15"));
  const auto b = compute_invariants(fixture_scale("z2-diag-10-3"));
  const auto oe = decide_oe(a, b);
  const auto stab = decide_stab_iso(a, b);
  o.require(oe.verdict == Verdict::Yes, "oe yes");
  o.require(stab.verdict == Verdict::Yes, "stab-iso yes");
  o.require(stab.witness && stab.witness->index == 1, "witness index 1");
  o.require(a.type && a.type->render() == "Z_2 x Z_3 x Z_5", "first type");
  o.require(b.type && b.type->render() == "Z_2 x Z_3 x Z_5", "second type");
  o.detail << "types " << (a.type ? a.type->render() : "?") << " / " << (b.type ? b.type->render() : "?");
}

void ac2(Outcome& o) {
  const auto a = compute_invariants(fixture_scale("z2-diag-6-10"));
  const auto b = compute_invariants(fixture_scale("z2-diag-6-5"));
  const auto stab = decide_stab_iso(a, b);
  o.require(decide_oe(a, b).verdict == Verdict::Yes, "oe yes");
  o.require(a.supernatural.render() == "2^inf·3^inf·5^inf" && b.supernatural.render() == "2^inf·3^inf·5^inf",
            "supernaturals");
  o.require(stab.verdict == Verdict::No, "stab-iso no");
  o.require(stab.distinguishing && stab.distinguishing->kind == "rank" && stab.distinguishing->prime == Int(2) &&
                stab.distinguishing->first == "rank 2" && stab.distinguishing->second == "rank 1",
            "distinguishing rank at 2");
  o.require(a.min_generators == 2u && b.min_generators == 1u, "min generators 2 vs 1");
  o.require(decide_coe(a, b, false).verdict == Verdict::No, "coe no");
  o.detail << "index " << to_string(a.indices.at(0)) << " vs " << to_string(b.indices.at(0));
}

void ac3(Outcome& o) {
  const auto a = compute_invariants(fixture_scale("z2-diag-2-2"));
  const auto b = compute_invariants(fixture_scale("z2-companion-x2-x+2"));
  o.require(a.type && a.type->render() == "Z_2 x Z_2", "first type Z_2 x Z_2");
  o.require(b.type && b.type->render() == "Z_2", "second type Z_2");
  o.require(decide_stab_iso(a, b).verdict == Verdict::No, "stab-iso no");
  std::size_t flags = 0;
  for (const auto& r : run_worked_examples()) {
    if (!r.discrepancy) continue;
    ++flags;
    o.require(r.id == "stab-not-topiso", "flag on " + r.id);
    bool explained = false;
    for (const auto& n : r.notes) explained = explained || n.find("rank") != std::string::npos;
    o.require(explained, "rank explanation note");
  }
  o.require(flags == 1, "exactly one discrepancy");
  o.detail << flags << " discrepancy flag(s)";
}

void ac4(Outcome& o) {
  const auto s2 = fixture_scale("z-2n");
  o.require(decide_stab_iso(s2, fixture_scale("z-4n")).verdict == Verdict::Yes, "2^n vs 4^n yes");
  o.require(decide_stab_iso(s2, fixture_scale("z-3n")).verdict == Verdict::No, "2^n vs 3^n no");
  const auto t = decide_stab_iso(fixture_scale("z-3x2n"), s2);
  o.require(t.verdict == Verdict::No, "3*2^n vs 2^n no");
  o.require(t.distinguishing && t.distinguishing->kind == "torsion-order" && t.distinguishing->prime == Int(3),
            "torsion order at 3");
  if (t.distinguishing) o.detail << "3*2^n vs 2^n: " << t.distinguishing->first << " vs " << t.distinguishing->second;
}

void ac5(Outcome& o) {
  std::size_t towers = 0;
  bool saw_32 = false, saw_z2 = false;
  for (const auto& c : fullgroup_suite()) {
    if (c.check != "enumerate_full_group") continue;
    ++towers;
    o.require(c.passed, c.subject);
    o.require(fact(c, "formula") == fact(c, "right_count"), c.subject + " count");
    saw_32 = saw_32 || (c.subject == "z-2n n=1 N=3" && fact(c, "right_count") == "32");
    saw_z2 = saw_z2 || c.subject.rfind("z2-", 0) == 0;
    o.detail << c.subject << ": " << fact(c, "right_count") << "; ";
  }
  o.require(towers >= 3, "at least 3 towers");
  o.require(saw_32, "z-2n n=1 N=3 gives 32");
  o.require(saw_z2, "a Z^2 tower");
}

void ac6(Outcome& o) {
  std::size_t count = 0;
  for (const auto& c : fullgroup_suite()) {
    if (c.check != "semidirect_law") continue;
    ++count;
    o.require(c.passed, c.subject);
    const Int formula(fact(c, "formula"));
    if (formula <= 10000)
      o.require(c.mode != CheckMode::Sampled, c.subject + " must be exhaustive");
    else
      o.require(c.mode == CheckMode::Sampled && fact(c, "pairs") == "1000" && c.seed, c.subject + " 1000 seeded pairs");
    o.detail << c.subject << " " << mode_name(c.mode) << "; ";
  }
  o.require(count > 0, "semidirect checks ran");
}

void ac7(Outcome& o) {
  const auto cent = run_suite("centralizer", kDefaultSeed);
  const auto comm = run_suite("commutant", kDefaultSeed);
  require_checks(o, cent);
  require_checks(o, comm);
  bool heis = false;
  for (const auto& c : cent) heis = heis || c.subject.find("H3") != std::string::npos;
  o.require(heis, "Heisenberg tower in the centralizer list");
  std::size_t found = 0;
  for (const auto& c : comm)
    for (const char* g : {"Z/4", "H3(Z/2)", "Sym(3)"}) found += c.subject == g;
  o.require(found == 3, "commutants of Z/4, H3(Z/2), Sym(3)");
  o.detail << cent.size() << " centralizer, " << comm.size() << " commutant checks";
}

void ac8(Outcome& o) {
  const auto r = alpha_check(FiniteGroupTower::heisenberg(2, 2), 1, 2, kDefaultSeed);
  require_checks(o, {r});
  o.require(r.mode == CheckMode::Exhaustive, "exhaustive");
  o.detail << r.subject << " " << mode_name(r.mode);
}

void ac9(Outcome& o) {
  const auto all = subgroup_matching_all(512);
  require_checks(o, {all});
  o.require(all.mode == CheckMode::Exhaustive, "exhaustive subgroup search");
  const auto witnesses = run_suite("witness", kDefaultSeed);
  require_checks(o, witnesses);
  o.require(!witnesses.empty(), "corpus has yes verdicts");
  o.detail << fact(all, "groups") << " groups over " << fact(all, "primes") << " primes; " << witnesses.size()
           << " witnesses";
}

void ac10(Outcome& o) {
  const auto chain = implication_chain_check(random_diagonal_pairs(200, kDefaultSeed));
  for (const auto& v : chain.violations) o.detail << "(" << v << ") ";
  o.require(chain.ok(), "no violations");
  o.require(chain.checked + chain.excluded == 200, "200 pairs");
  o.detail << chain.checked << " checked, " << chain.excluded << " excluded, " << chain.violations.size()
           << " violations";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"AC1 worked example diag(2,15) vs diag(10,3)", ac1},
      {"AC2 worked example diag(6,10) vs diag(6,5)", ac2},
      {"AC3 discrepancy Z_2 x Z_2 vs Z_2", ac3},
      {"AC4 Z-odometer conjugacy pairs", ac4},
      {"AC5 full group order formula", ac5},
      {"AC6 semidirect law", ac6},
      {"AC7 centralizer and regular commutant", ac7},
      {"AC8 alpha anti-isomorphism", ac8},
      {"AC9 closed-form soundness", ac9},
      {"AC10 implication chain", ac10},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << " :: " << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
