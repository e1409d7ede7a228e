#pragma once

// Finite quotient towers Z^d / Gamma_n of a scale: the depth-N shadow of the
// odometer. Cosets are stored as canonical residues in the Hermite box of
// their level, so equality of cosets is equality of residues.

#include "odo/scale.hpp"

#include <memory>
#include <vector>

namespace odo {

struct Coset {
  unsigned level = 0;
  IntVector residue;

  friend bool operator==(const Coset&, const Coset&) = default;
  friend bool operator<(const Coset& a, const Coset& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.residue < b.residue;
  }
};

class QuotientTower {
 public:
  static constexpr std::size_t kDefaultEnumerationBound = 20000;

  static std::shared_ptr<const QuotientTower> build(const ZdScale& scale, unsigned depth,
                                                    std::size_t enumeration_bound = kDefaultEnumerationBound);

  const ZdScale& scale() const noexcept { return scale_; }
  unsigned depth() const noexcept { return depth_; }
  std::size_t dim() const noexcept { return scale_.dim(); }
  std::size_t enumeration_bound() const noexcept { return enumeration_bound_; }

  const HermiteLattice& lattice(unsigned n) const;
  const SNFData& snf_data(unsigned n) const;
  const Int& cardinality(unsigned n) const;
  // Nontrivial elementary divisors: level n is isomorphic to the sum of Z/d_i.
  IntVector invariant_factors(unsigned n) const;

  Coset zero(unsigned n) const;
  Coset reduce(unsigned n, IntVector v) const;
  Coset add(const Coset& a, const Coset& b) const;
  Coset neg(const Coset& a) const;
  Coset sub(const Coset& a, const Coset& b) const;
  Coset project(const Coset& a, unsigned to_level) const;
  bool is_canonical(const Coset& a) const;

  // All cosets of level n in lexicographic residue order (identity first).
  std::vector<Coset> enumerate(unsigned n) const;
  std::size_t index_of(const Coset& a) const;
  Coset coset_at(unsigned n, std::size_t idx) const;
  // Coordinates in the elementary-divisor presentation, entry i modulo d_i.
  IntVector snf_coordinates(const Coset& a) const;

  Rational uniform_measure(const Coset& a) const;

  // One level-N coset above each level-n coset, ordered like enumerate(n),
  // identity first.
  std::vector<Coset> section(unsigned n, unsigned N) const;

  // Sizes of the fibres of level n+1 over each level-n coset.
  std::vector<std::size_t> fiber_sizes(unsigned n) const;

 private:
  struct Level {
    HermiteLattice lattice;
    SNFData snf;
    Int cardinality;
  };

  QuotientTower(ZdScale scale, unsigned depth, std::size_t bound)
      : scale_(std::move(scale)), depth_(depth), enumeration_bound_(bound) {}

  void check_level(unsigned n) const;
  std::size_t enumerable_size(unsigned n) const;

  ZdScale scale_;
  unsigned depth_;
  std::size_t enumeration_bound_;
  std::vector<Level> levels_;
};

using TowerPtr = std::shared_ptr<const QuotientTower>;

}  // namespace odo
