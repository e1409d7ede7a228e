#pragma once

// Bundled scales: the fixture corpus used by tests and oracle suites, and the
// worked example pairs with their asserted verdicts.

#include "odo/decide.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace odo {

// Named fixture scales, e.g. "z-2n", "z2-diag-6-10", "z2-jordan-2".
ZdScale fixture_scale(const std::string& name);
std::vector<std::string> fixture_names();
std::vector<ZdScale> fixture_corpus();

// Certified diagonal scales over the primes 2, 3, 5, 7, some with a prefix.
std::vector<std::pair<ZdScale, ZdScale>> random_diagonal_pairs(std::size_t count, std::uint64_t seed);

struct ExampleRecord {
  std::string id;
  std::string description;
  ZdScale first;
  ZdScale second;
  std::vector<std::pair<Question, Verdict>> asserted;
  std::vector<DecisionReport> computed;  // one per question: oe, stab-iso, coe
  bool discrepancy = false;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> notes;

  Verdict computed_verdict(Question q) const;
};

std::vector<ExampleRecord> run_worked_examples();

}  // namespace odo
