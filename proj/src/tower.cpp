#include "odo/tower.hpp"

#include <map>

namespace odo {

std::shared_ptr<const QuotientTower> QuotientTower::build(const ZdScale& scale, unsigned depth,
                                                          std::size_t enumeration_bound) {
  if (auto max = scale.max_depth(); max && depth > *max)
    throw Error(Errc::DepthExceeded, "tower depth " + std::to_string(depth) + " beyond explicit depth " +
                                         std::to_string(*max));
  std::shared_ptr<QuotientTower> tower(new QuotientTower(scale, depth, enumeration_bound));
  tower->levels_.reserve(depth + 1);
  for (unsigned n = 0; n <= depth; ++n) {
    const IntMatrix g = scale.gamma(n);
    Level level{HermiteLattice(g), snf(g), 0};
    level.cardinality = level.lattice.index();
    tower->levels_.push_back(std::move(level));
  }
  return tower;
}

void QuotientTower::check_level(unsigned n) const {
  if (n > depth_)
    throw Error(Errc::DepthExceeded, "level " + std::to_string(n) + " beyond tower depth " + std::to_string(depth_));
}

const HermiteLattice& QuotientTower::lattice(unsigned n) const {
  check_level(n);
  return levels_[n].lattice;
}

const SNFData& QuotientTower::snf_data(unsigned n) const {
  check_level(n);
  return levels_[n].snf;
}

const Int& QuotientTower::cardinality(unsigned n) const {
  check_level(n);
  return levels_[n].cardinality;
}

IntVector QuotientTower::invariant_factors(unsigned n) const {
  IntVector out;
  for (const auto& d : snf_data(n).elementary_divisors())
    if (d != 1) out.push_back(d);
  return out;
}

Coset QuotientTower::zero(unsigned n) const {
  check_level(n);
  return Coset{n, IntVector(dim(), Int(0))};
}

Coset QuotientTower::reduce(unsigned n, IntVector v) const {
  return Coset{n, lattice(n).reduce(std::move(v))};
}

Coset QuotientTower::add(const Coset& a, const Coset& b) const {
  if (a.level != b.level)
    throw Error(Errc::LevelMismatch, "adding cosets of levels " + std::to_string(a.level) + " and " +
                                         std::to_string(b.level));
  return reduce(a.level, a.residue + b.residue);
}

Coset QuotientTower::neg(const Coset& a) const { return reduce(a.level, -a.residue); }

Coset QuotientTower::sub(const Coset& a, const Coset& b) const {
  if (a.level != b.level)
    throw Error(Errc::LevelMismatch, "subtracting cosets of levels " + std::to_string(a.level) + " and " +
                                         std::to_string(b.level));
  return reduce(a.level, a.residue - b.residue);
}

Coset QuotientTower::project(const Coset& a, unsigned to_level) const {
  if (to_level > a.level)
    throw Error(Errc::LevelMismatch, "cannot project level " + std::to_string(a.level) + " to deeper level " +
                                         std::to_string(to_level));
  if (to_level == a.level) return a;
  return reduce(to_level, a.residue);
}

bool QuotientTower::is_canonical(const Coset& a) const {
  if (a.level > depth_ || a.residue.size() != dim()) return false;
  return lattice(a.level).reduce(a.residue) == a.residue;
}

std::size_t QuotientTower::enumerable_size(unsigned n) const {
  const Int& card = cardinality(n);
  if (card > enumeration_bound_)
    throw Error(Errc::SizeGuard, "level " + std::to_string(n) + " has " + to_string(card) +
                                     " cosets, above the enumeration bound " + std::to_string(enumeration_bound_));
  return card.get_ui();
}

std::vector<Coset> QuotientTower::enumerate(unsigned n) const {
  const std::size_t count = enumerable_size(n);
  std::vector<Coset> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(coset_at(n, i));
  return out;
}

std::size_t QuotientTower::index_of(const Coset& a) const {
  enumerable_size(a.level);
  const IntMatrix& h = lattice(a.level).basis();
  Int idx = 0;
  for (std::size_t i = 0; i < dim(); ++i) idx = idx * h(i, i) + a.residue[i];
  return idx.get_ui();
}

Coset QuotientTower::coset_at(unsigned n, std::size_t idx) const {
  const std::size_t count = enumerable_size(n);
  if (idx >= count) throw Error(Errc::InvalidArgument, "coset index out of range");
  const IntMatrix& h = lattice(n).basis();
  Coset c{n, IntVector(dim())};
  Int rest = static_cast<unsigned long>(idx);
  for (std::size_t i = dim(); i-- > 0;) {
    c.residue[i] = floor_mod(rest, h(i, i));
    rest = floor_div(rest, h(i, i));
  }
  return c;
}

IntVector QuotientTower::snf_coordinates(const Coset& a) const {
  const SNFData& s = snf_data(a.level);
  IntVector y = s.U * a.residue;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = floor_mod(y[i], s.D(i, i));
  return y;
}

Rational QuotientTower::uniform_measure(const Coset& a) const {
  Rational m(Int(1), cardinality(a.level));
  m.canonicalize();
  return m;
}

std::vector<Coset> QuotientTower::section(unsigned n, unsigned N) const {
  if (n > N) throw Error(Errc::LevelMismatch, "section needs n <= N");
  check_level(N);
  std::vector<Coset> reps;
  for (const Coset& a : enumerate(n)) reps.push_back(reduce(N, a.residue));
  return reps;
}

std::vector<std::size_t> QuotientTower::fiber_sizes(unsigned n) const {
  check_level(n + 1);
  std::map<IntVector, std::size_t> counts;
  for (const Coset& c : enumerate(n + 1)) ++counts[project(c, n).residue];
  std::vector<std::size_t> out;
  for (const Coset& a : enumerate(n)) out.push_back(counts[a.residue]);
  return out;
}

}  // namespace odo
