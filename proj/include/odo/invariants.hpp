#pragma once

// Classification invariants of a scale: the supernatural number of its index
// sequence and the per-prime profinite type of the odometer.

#include "odo/scale.hpp"

#include <optional>
#include <string>
#include <vector>

namespace odo {

struct Exponent {
  enum class Kind { Finite, Infinite, AtLeast };
  Kind kind = Kind::Finite;
  unsigned long value = 0;  // unused for Infinite

  static Exponent finite(unsigned long k) { return {Kind::Finite, k}; }
  static Exponent infinite() { return {Kind::Infinite, 0}; }
  static Exponent at_least(unsigned long k) { return {Kind::AtLeast, k}; }

  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool is_infinite() const noexcept { return kind == Kind::Infinite; }
  bool is_at_least() const noexcept { return kind == Kind::AtLeast; }
  bool is_zero() const noexcept { return kind == Kind::Finite && value == 0; }
  // "inf", "k" or ">=k"
  std::string render() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Finite < AtLeast < Infinite, each ordered by value.
bool exponent_less(const Exponent& a, const Exponent& b);

struct SupernaturalNumber {
  std::vector<std::pair<Int, Exponent>> factors;  // primes increasing, no zero exponents

  Exponent at(const Int& p) const;
  bool has_at_least() const;
  // e.g. "2^inf·3^1·5^>=2"; "1" when empty
  std::string render() const;
  friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;
};

struct PrimeType {
  Int prime;
  std::vector<Exponent> exponents;  // ascending, length dim

  unsigned rank() const;
  // Nonzero finite exponents, descending.
  std::vector<unsigned long> torsion() const;
  unsigned long torsion_order_exponent() const;
  bool has_at_least() const;
  friend bool operator==(const PrimeType&, const PrimeType&) = default;
};

struct ProfiniteType {
  std::size_t dim = 0;
  std::vector<PrimeType> primes;  // increasing; absent primes have all-zero tuples
  bool evidence_only = false;

  const PrimeType* at(const Int& p) const;
  PrimeType tuple_at(const Int& p) const;
  bool has_at_least() const;
  // e.g. "Z_2 x Z_2 x Z/3 x Z_5"; "0" for the trivial group
  std::string render() const;
  friend bool operator==(const ProfiniteType&, const ProfiniteType&) = default;
};

enum class Comparison { Equal, NotEqual, Inconclusive };
const char* comparison_name(Comparison c);

struct ComparisonResult {
  Comparison result = Comparison::Equal;
  // First prime where the comparison failed or was blocked.
  std::optional<Int> prime;
  std::string detail;
};

// Sorted ascending p-adic valuations of the elementary divisors of m.
std::vector<unsigned long> snf_valuations(const IntMatrix& m, const Int& p);
// Multiplicity of the root 0 of charpoly(m) mod p.
unsigned rank_at(const IntMatrix& m, const Int& p);

SupernaturalNumber supernatural(const ZdScale& scale);

constexpr unsigned kStabilizationBudget = 64;
// Throws NotStabilized when the finite exponents do not settle within the budget.
ProfiniteType profinite_type(const ZdScale& scale, unsigned budget = kStabilizationBudget);

std::optional<unsigned> min_generators(const ProfiniteType& type);

ComparisonResult supernatural_equal(const SupernaturalNumber& a, const SupernaturalNumber& b);
ComparisonResult type_equal(const ProfiniteType& a, const ProfiniteType& b);

}  // namespace odo
