#pragma once

// Brute-force checks of the structural identities on finite models. Every
// report states whether it was exhaustive, exhaustive on a generating set, or
// sampled (with the seed).

#include "odo/decide.hpp"
#include "odo/finite_group.hpp"
#include "odo/fullgroup.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace odo {

constexpr std::uint64_t kDefaultSeed = 20160;

enum class CheckMode { Exhaustive, GeneratorExhaustive, Sampled };
const char* mode_name(CheckMode mode);

struct CheckReport {
  std::string check;
  std::string subject;
  bool passed = true;
  CheckMode mode = CheckMode::Exhaustive;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> failures;

  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  void fail(std::string message);
};

enum class Side { Left, Right };

// A bijection of the level-N elements acting on each level-n cell by one
// group element: x -> x * xi^-1 (right) or x -> g * x (left).
struct PiecewiseBijection {
  unsigned level = 0;
  unsigned depth = 0;
  Side side = Side::Right;
  std::vector<Elem> perm;
};

// |kernel(n, N)|^[Q_n] * [Q_n]!
Int full_group_order(const FiniteGroupTower& tower, unsigned n, unsigned N);

std::vector<PiecewiseBijection> enumerate_full_group(const FiniteGroupTower& tower, unsigned n, unsigned N,
                                                     Side side = Side::Right,
                                                     std::size_t bound = QuotientTower::kDefaultEnumerationBound);

// Count against the order formula plus closure under composition and inverse.
CheckReport enumeration_check(const FiniteGroupTower& tower, unsigned n, unsigned N,
                              std::uint64_t seed = kDefaultSeed);
CheckReport centralizer_check(const FiniteGroupTower& tower, unsigned n, unsigned N,
                              std::uint64_t seed = kDefaultSeed);
CheckReport regular_commutant_check(const FiniteGroup& q);
CheckReport alpha_check(const FiniteGroupTower& tower, unsigned n, unsigned N, std::uint64_t seed = kDefaultSeed);
CheckReport orbit_count_check(const FiniteGroupTower& tower, unsigned n, unsigned N);

// Decomposition round trip and the homomorphism law for the (phi, sigma)
// coordinates, cross-checked against raw permutation composition.
CheckReport semidirect_law_check(const TowerPtr& tower, unsigned n, unsigned N, std::uint64_t seed = kDefaultSeed);

// Finite abelian p-groups given by descending exponent tuples.
using PartitionType = std::vector<unsigned>;
// Types of all subgroups, found by exhaustive search inside the group.
std::vector<PartitionType> subgroup_types(unsigned p, const PartitionType& group);
bool has_subgroup_of_type(unsigned p, const PartitionType& group, const PartitionType& sub);
// Componentwise domination of descending tuples (missing entries are 0).
bool dominates(const PartitionType& big, const PartitionType& small);
CheckReport subgroup_matching_oracle(unsigned p, const PartitionType& a, const PartitionType& b);
// Every abelian p-group of order <= max_order, every prime p <= max_order.
CheckReport subgroup_matching_all(unsigned max_order = 512);

// Rechecks a stab-iso Yes witness by subgroup search at every torsion prime.
CheckReport witness_soundness_check(const DecisionReport& report);

// Named suites: fullgroup, centralizer, commutant, alpha, orbits, subgroups,
// witness, all.
std::vector<std::string> suite_names();
std::vector<CheckReport> run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed);

}  // namespace odo
