#pragma once

// Depth-truncated elements of the topological full group of a Z^d odometer.
// An element of level n and depth N translates each level-n cell a by a fixed
// level-N coset t_a. It is determined by its table, so equality of elements is
// equality of (tower, level, depth, table).

#include "odo/tower.hpp"

#include <vector>

namespace odo {

class FullGroupElement {
 public:
  // Level-0 element adding xi everywhere; depth is xi.level.
  static FullGroupElement translation(TowerPtr tower, const Coset& xi);
  static FullGroupElement identity(TowerPtr tower, unsigned level, unsigned depth);
  // table[i] is the translation on cell enumerate(n)[i].
  static FullGroupElement from_table(TowerPtr tower, unsigned n, unsigned N, std::vector<Coset> table);
  // Same, with cells listed explicitly in any order; every cell exactly once.
  static FullGroupElement from_cells(TowerPtr tower, unsigned n, unsigned N,
                                     const std::vector<std::pair<Coset, Coset>>& cells);

  const TowerPtr& tower() const noexcept { return tower_; }
  unsigned level() const noexcept { return level_; }
  unsigned depth() const noexcept { return depth_; }
  const std::vector<Coset>& table() const noexcept { return table_; }
  const Coset& translation_at(const Coset& cell) const;

  // x must satisfy level() <= x.level <= depth(); the result has x's level.
  Coset apply(const Coset& x) const;
  // sigma()[i] is the index of the image of cell i.
  std::vector<std::size_t> sigma() const;

  friend bool operator==(const FullGroupElement& a, const FullGroupElement& b);

 private:
  FullGroupElement(TowerPtr tower, unsigned n, unsigned N, std::vector<Coset> table)
      : tower_(std::move(tower)), level_(n), depth_(N), table_(std::move(table)) {}

  TowerPtr tower_;
  unsigned level_ = 0;
  unsigned depth_ = 0;
  std::vector<Coset> table_;
};

// g after f. Level is the larger level, depth the smaller depth.
FullGroupElement compose(const FullGroupElement& g, const FullGroupElement& f);
FullGroupElement invert(const FullGroupElement& f);
// Refines the cells to level m (default level + 1) without changing the map.
FullGroupElement embed(const FullGroupElement& f, std::optional<unsigned> m = std::nullopt);
// Keeps the level and reduces translations to depth M.
FullGroupElement truncate(const FullGroupElement& f, unsigned M);
// Pointwise equality on cosets of the smaller depth.
bool same_map(const FullGroupElement& a, const FullGroupElement& b);
bool is_measure_preserving(const FullGroupElement& f);

struct Decomposition {
  TowerPtr tower;
  unsigned level = 0;
  unsigned depth = 0;
  std::vector<std::size_t> sigma;
  // phi[i]: the w coordinate on cell i, a level-depth coset vanishing at level.
  std::vector<Coset> phi;

  friend bool operator==(const Decomposition& a, const Decomposition& b);
};

Decomposition decompose(const FullGroupElement& f, const std::vector<Coset>& reps);
Decomposition decompose(const FullGroupElement& f);
FullGroupElement recompose(const Decomposition& dec, const std::vector<Coset>& reps);
FullGroupElement recompose(const Decomposition& dec);
// Product in the wreath-type semidirect product, matching composition order:
// decompose(compose(g, f)) == semidirect_mul(decompose(g), decompose(f)).
Decomposition semidirect_mul(const Decomposition& g, const Decomposition& f);

std::string render_residue(const IntVector& residue);

}  // namespace odo
