#pragma once

// Orbit equivalence, stabilized-automorphism-group isomorphism, and the
// certified-negative continuous orbit equivalence check for Z^d odometers.

#include "odo/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace odo {

enum class Question { OE, StabIso, COE };
enum class Verdict { Yes, No, Inconclusive };

const char* question_name(Question q);  // "oe", "stab-iso", "coe"
const char* verdict_name(Verdict v);    // "yes", "no", "inconclusive"
std::optional<Question> parse_question(const std::string& text);

struct ScaleInvariants {
  std::string name;
  TrivialityCertificate certificate;
  SupernaturalNumber supernatural;
  std::optional<ProfiniteType> type;
  std::string type_error;  // set when the type could not be computed
  std::optional<unsigned> min_generators;
  std::vector<Int> indices;  // index(1), ..., as validated
};

// Validates the scale (throws on NotNested / NotDecreasing / Singular).
ScaleInvariants compute_invariants(const ZdScale& scale);

struct Witness {
  ProfiniteType type;  // common clopen subgroup type
  Int index;           // common finite index
  PrimeFactorization index_factorization;
};

struct Distinguishing {
  std::string kind;  // "rank", "torsion-order", "supernatural", "type"
  std::optional<Int> prime;
  std::string first;
  std::string second;
};

struct DecisionReport {
  Question question = Question::OE;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Witness> witness;
  std::optional<Distinguishing> distinguishing;
  ScaleInvariants s1;
  ScaleInvariants s2;
  std::vector<std::string> notes;
};

DecisionReport decide_oe(const ZdScale& s1, const ZdScale& s2);
DecisionReport decide_stab_iso(const ZdScale& s1, const ZdScale& s2);
DecisionReport decide_coe(const ZdScale& s1, const ZdScale& s2);

DecisionReport decide_oe(const ScaleInvariants& a, const ScaleInvariants& b);
DecisionReport decide_stab_iso(const ScaleInvariants& a, const ScaleInvariants& b);
DecisionReport decide_coe(const ScaleInvariants& a, const ScaleInvariants& b, bool identical_scales);

// Per-prime data of the closed form: index exponent k_p and witness torsion.
struct PrimeMatch {
  Int prime;
  unsigned rank = 0;
  std::vector<unsigned long> torsion1;  // descending
  std::vector<unsigned long> torsion2;
  std::vector<unsigned long> witness;  // componentwise minimum
  unsigned long deficit1 = 0;
  unsigned long deficit2 = 0;
  unsigned long index_exponent = 0;
  bool matched = false;
};
PrimeMatch match_prime(const PrimeType& a, const PrimeType& b);

struct ChainReport {
  std::size_t checked = 0;
  std::size_t excluded = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
ChainReport implication_chain_check(const std::vector<std::pair<ZdScale, ZdScale>>& pairs);

}  // namespace odo
