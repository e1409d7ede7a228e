#include "odo/decide.hpp"

#include <algorithm>
#include <set>

namespace odo {

const char* question_name(Question q) {
  switch (q) {
    case Question::OE: return "oe";
    case Question::StabIso: return "stab-iso";
    case Question::COE: return "coe";
  }
  return "unknown";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::optional<Question> parse_question(const std::string& text) {
  for (Question q : {Question::OE, Question::StabIso, Question::COE})
    if (text == question_name(q)) return q;
  return std::nullopt;
}

ScaleInvariants compute_invariants(const ZdScale& scale) {
  ScaleInvariants inv;
  inv.name = scale.name();
  inv.indices = validate(scale);
  inv.certificate = certify_trivial_intersection(scale);
  inv.supernatural = supernatural(scale);
  try {
    inv.type = profinite_type(scale);
    inv.min_generators = min_generators(*inv.type);
  } catch (const Error& e) {
    if (e.code() != Errc::NotStabilized) throw;
    inv.type_error = e.what();
  }
  return inv;
}

namespace {

bool certified(const ScaleInvariants& s) {
  return s.certificate.status == TrivialityCertificate::Status::Certified;
}

void note_lower_bounds(const ScaleInvariants& s, DecisionReport& report) {
  for (const auto& [p, e] : s.supernatural.factors)
    if (e.is_at_least())
      report.notes.push_back("scale '" + s.name + "': exponent " + to_string(p) + "^" + e.render() +
                             " is only a lower bound");
}

// Adds a note per uncertified scale; returns true when both are certified.
bool require_certified(const ScaleInvariants& a, const ScaleInvariants& b, DecisionReport& report) {
  bool ok = true;
  for (const ScaleInvariants* s : {&a, &b}) {
    if (certified(*s)) continue;
    ok = false;
    report.notes.push_back("scale '" + s->name + "': trivial intersection " +
                           status_name(s->certificate.status) + " (" + s->certificate.rule + ")");
    note_lower_bounds(*s, report);
  }
  return ok;
}

DecisionReport start(Question q, const ScaleInvariants& a, const ScaleInvariants& b) {
  DecisionReport r;
  r.question = q;
  r.s1 = a;
  r.s2 = b;
  return r;
}

std::string rank_text(unsigned r) { return "rank " + std::to_string(r); }

std::string torsion_text(const Int& p, unsigned long k) { return to_string(p) + "^" + std::to_string(k); }

}  // namespace

DecisionReport decide_oe(const ScaleInvariants& a, const ScaleInvariants& b) {
  DecisionReport r = start(Question::OE, a, b);
  if (!require_certified(a, b, r)) return r;
  const ComparisonResult cmp = supernatural_equal(a.supernatural, b.supernatural);
  switch (cmp.result) {
    case Comparison::Equal:
      r.verdict = Verdict::Yes;
      r.notes.push_back("supernatural numbers agree: " + a.supernatural.render());
      break;
    case Comparison::NotEqual:
      r.verdict = Verdict::No;
      r.distinguishing = Distinguishing{"supernatural", cmp.prime, a.supernatural.render(), b.supernatural.render()};
      r.notes.push_back("supernatural numbers differ: " + cmp.detail);
      break;
    case Comparison::Inconclusive:
      r.notes.push_back("supernatural comparison blocked: " + cmp.detail);
      note_lower_bounds(a, r);
      note_lower_bounds(b, r);
      break;
  }
  return r;
}

PrimeMatch match_prime(const PrimeType& a, const PrimeType& b) {
  PrimeMatch m;
  m.prime = a.prime;
  m.torsion1 = a.torsion();
  m.torsion2 = b.torsion();
  const unsigned r1 = a.rank(), r2 = b.rank();
  m.rank = r1;
  const std::size_t common = std::min(m.torsion1.size(), m.torsion2.size());
  unsigned long w = 0;
  for (std::size_t i = 0; i < common; ++i) {
    m.witness.push_back(std::min(m.torsion1[i], m.torsion2[i]));
    w += m.witness.back();
  }
  m.deficit1 = a.torsion_order_exponent() - w;
  m.deficit2 = b.torsion_order_exponent() - w;
  m.index_exponent = std::max(m.deficit1, m.deficit2);
  m.matched = r1 == r2 && (r1 > 0 || m.deficit1 == m.deficit2);
  return m;
}

DecisionReport decide_stab_iso(const ScaleInvariants& a, const ScaleInvariants& b) {
  DecisionReport r = start(Question::StabIso, a, b);
  if (!require_certified(a, b, r)) return r;
  for (const ScaleInvariants* s : {&a, &b})
    if (!s->type) {
      r.notes.push_back("scale '" + s->name + "': " + s->type_error);
      return r;
    }
  const ProfiniteType& ta = *a.type;
  const ProfiniteType& tb = *b.type;
  if (ta.has_at_least() || tb.has_at_least()) {
    r.notes.push_back("profinite types carry lower-bound exponents");
    return r;
  }
  std::set<Int> primes;
  for (const auto& t : ta.primes) primes.insert(t.prime);
  for (const auto& t : tb.primes) primes.insert(t.prime);

  Witness witness;
  witness.type.dim = std::max(ta.dim, tb.dim);
  witness.index = 1;
  for (const Int& p : primes) {
    const PrimeType pa = ta.tuple_at(p), pb = tb.tuple_at(p);
    const PrimeMatch m = match_prime(pa, pb);
    if (pa.rank() != pb.rank()) {
      r.verdict = Verdict::No;
      r.distinguishing = Distinguishing{"rank", p, rank_text(pa.rank()), rank_text(pb.rank())};
      r.notes.push_back("rank at p = " + to_string(p) + " is " + std::to_string(pa.rank()) + " vs " +
                        std::to_string(pb.rank()) + "; ranks are unchanged by passing to clopen subgroups");
      return r;
    }
    if (!m.matched) {
      r.verdict = Verdict::No;
      r.distinguishing = Distinguishing{"torsion-order", p, torsion_text(p, pa.torsion_order_exponent()),
                                        torsion_text(p, pb.torsion_order_exponent())};
      r.notes.push_back("at the rank-0 prime " + to_string(p) + " the torsion orders differ: " +
                        torsion_text(p, pa.torsion_order_exponent()) + " vs " +
                        torsion_text(p, pb.torsion_order_exponent()));
      return r;
    }
    PrimeType wp{p, {}};
    std::vector<unsigned long> asc(m.witness.rbegin(), m.witness.rend());
    const std::size_t zeros = witness.type.dim - m.rank - asc.size();
    wp.exponents.assign(zeros, Exponent::finite(0));
    for (auto k : asc) wp.exponents.push_back(Exponent::finite(k));
    for (unsigned i = 0; i < m.rank; ++i) wp.exponents.push_back(Exponent::infinite());
    if (m.rank > 0 || !asc.empty()) witness.type.primes.push_back(std::move(wp));
    if (m.index_exponent > 0) {
      witness.index *= power(p, m.index_exponent);
      witness.index_factorization.push_back(PrimeFactorization::value_type{p, m.index_exponent});
    }
  }
  r.verdict = Verdict::Yes;
  r.notes.push_back("common clopen subgroup type " + witness.type.render() + " of index " +
                    to_string(witness.index) + " in both odometers");
  r.witness = std::move(witness);
  return r;
}

DecisionReport decide_coe(const ScaleInvariants& a, const ScaleInvariants& b, bool identical_scales) {
  const DecisionReport stab = decide_stab_iso(a, b);
  DecisionReport r = start(Question::COE, a, b);
  r.notes = stab.notes;
  if (stab.verdict == Verdict::No) {
    r.verdict = Verdict::No;
    r.distinguishing = stab.distinguishing;
    r.notes.push_back("certified: continuous orbit equivalence would imply isomorphic stabilized groups");
    return r;
  }
  r.notes.push_back(std::string("stabilized isomorphism is ") + verdict_name(stab.verdict) +
                    "; no sufficient criterion for continuous orbit equivalence is implemented");
  if (identical_scales) r.notes.push_back("identical scales are trivially COE");
  return r;
}

namespace {

bool identical(const ZdScale& a, const ZdScale& b) {
  if (a.dim() != b.dim() || a.is_geometric() != b.is_geometric()) return false;
  if (a.is_geometric()) return a.geometric_data() == b.geometric_data();
  return a.explicit_data() == b.explicit_data();
}

}  // namespace

DecisionReport decide_oe(const ZdScale& s1, const ZdScale& s2) {
  return decide_oe(compute_invariants(s1), compute_invariants(s2));
}

DecisionReport decide_stab_iso(const ZdScale& s1, const ZdScale& s2) {
  return decide_stab_iso(compute_invariants(s1), compute_invariants(s2));
}

DecisionReport decide_coe(const ZdScale& s1, const ZdScale& s2) {
  return decide_coe(compute_invariants(s1), compute_invariants(s2), identical(s1, s2));
}

ChainReport implication_chain_check(const std::vector<std::pair<ZdScale, ZdScale>>& pairs) {
  ChainReport report;
  for (const auto& [s1, s2] : pairs) {
    const ScaleInvariants a = compute_invariants(s1), b = compute_invariants(s2);
    if (!certified(a) || !certified(b) || !a.type || !b.type) {
      ++report.excluded;
      continue;
    }
    ++report.checked;
    const Verdict oe = decide_oe(a, b).verdict;
    const Verdict stab = decide_stab_iso(a, b).verdict;
    const Verdict coe = decide_coe(a, b, identical(s1, s2)).verdict;
    const std::string pair = "'" + s1.name() + "' vs '" + s2.name() + "'";
    if (stab == Verdict::Yes && oe != Verdict::Yes)
      report.violations.push_back(pair + ": stab-iso yes but oe " + verdict_name(oe));
    if (coe == Verdict::No && stab != Verdict::No)
      report.violations.push_back(pair + ": coe no but stab-iso " + verdict_name(stab));
    if (stab == Verdict::No && coe != Verdict::No)
      report.violations.push_back(pair + ": stab-iso no but coe " + verdict_name(coe));
  }
  return report;
}

}  // namespace odo
