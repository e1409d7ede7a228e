#include "odo/fullgroup.hpp"

#include <algorithm>
#include <map>

namespace odo {

std::string render_residue(const IntVector& residue) {
  std::string out = "[";
  for (std::size_t i = 0; i < residue.size(); ++i) {
    if (i) out += ", ";
    out += to_string(residue[i]);
  }
  return out + "]";
}

namespace {

void check_levels(const QuotientTower& tower, unsigned n, unsigned N) {
  if (n > N) throw Error(Errc::LevelMismatch, "level " + std::to_string(n) + " exceeds depth " + std::to_string(N));
  if (N > tower.depth())
    throw Error(Errc::DepthExceeded, "depth " + std::to_string(N) + " beyond tower depth " +
                                         std::to_string(tower.depth()));
}

const TowerPtr& common_tower(const FullGroupElement& a, const FullGroupElement& b) {
  if (a.tower() != b.tower() && a.tower()->scale() != b.tower()->scale())
    throw Error(Errc::TowerMismatch, "elements over scales '" + a.tower()->scale().name() + "' and '" +
                                         b.tower()->scale().name() + "'");
  return a.tower()->depth() >= b.tower()->depth() ? a.tower() : b.tower();
}

}  // namespace

FullGroupElement FullGroupElement::translation(TowerPtr tower, const Coset& xi) {
  check_levels(*tower, 0, xi.level);
  return from_table(tower, 0, xi.level, {tower->reduce(xi.level, xi.residue)});
}

FullGroupElement FullGroupElement::identity(TowerPtr tower, unsigned level, unsigned depth) {
  check_levels(*tower, level, depth);
  const std::size_t cells = tower->enumerate(level).size();
  std::vector<Coset> table(cells, tower->zero(depth));
  return FullGroupElement(std::move(tower), level, depth, std::move(table));
}

FullGroupElement FullGroupElement::from_table(TowerPtr tower, unsigned n, unsigned N, std::vector<Coset> table) {
  check_levels(*tower, n, N);
  const std::vector<Coset> cells = tower->enumerate(n);
  if (table.size() != cells.size())
    throw Error(Errc::InvalidArgument, "table has " + std::to_string(table.size()) + " entries for " +
                                           std::to_string(cells.size()) + " cells");
  for (auto& t : table) {
    if (t.level != N || t.residue.size() != tower->dim())
      throw Error(Errc::LevelMismatch, "translation " + render_residue(t.residue) + " is not a level-" +
                                           std::to_string(N) + " coset");
    t = tower->reduce(N, std::move(t.residue));
  }
  std::map<IntVector, std::size_t> seen;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Coset image = tower->add(cells[i], tower->project(table[i], n));
    auto [it, fresh] = seen.emplace(image.residue, i);
    if (!fresh)
      throw Error(Errc::NotBijective, "cells " + render_residue(cells[it->second].residue) + " and " +
                                          render_residue(cells[i].residue) + " both map to " +
                                          render_residue(image.residue));
  }
  return FullGroupElement(std::move(tower), n, N, std::move(table));
}

FullGroupElement FullGroupElement::from_cells(TowerPtr tower, unsigned n, unsigned N,
                                              const std::vector<std::pair<Coset, Coset>>& cells) {
  check_levels(*tower, n, N);
  const std::size_t count = tower->enumerate(n).size();
  std::vector<std::optional<Coset>> slots(count);
  for (const auto& [cell, t] : cells) {
    if (cell.level != n || cell.residue.size() != tower->dim())
      throw Error(Errc::LevelMismatch, "cell " + render_residue(cell.residue) + " is not a level-" +
                                           std::to_string(n) + " coset");
    const Coset canonical = tower->reduce(n, cell.residue);
    auto& slot = slots[tower->index_of(canonical)];
    if (slot) throw Error(Errc::InvalidArgument, "cell " + render_residue(canonical.residue) + " listed twice");
    slot = t;
  }
  std::vector<Coset> table;
  table.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!slots[i])
      throw Error(Errc::InvalidArgument, "no translation for cell " + render_residue(tower->coset_at(n, i).residue));
    table.push_back(std::move(*slots[i]));
  }
  return from_table(std::move(tower), n, N, std::move(table));
}

const Coset& FullGroupElement::translation_at(const Coset& cell) const {
  return table_[tower_->index_of(tower_->project(cell, level_))];
}

Coset FullGroupElement::apply(const Coset& x) const {
  if (x.level < level_ || x.level > depth_)
    throw Error(Errc::LevelMismatch, "cannot apply a level-" + std::to_string(level_) + ", depth-" +
                                         std::to_string(depth_) + " element to a level-" +
                                         std::to_string(x.level) + " coset");
  return tower_->add(x, tower_->project(translation_at(x), x.level));
}

std::vector<std::size_t> FullGroupElement::sigma() const {
  const std::vector<Coset> cells = tower_->enumerate(level_);
  std::vector<std::size_t> out(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    out[i] = tower_->index_of(tower_->add(cells[i], tower_->project(table_[i], level_)));
  return out;
}

bool operator==(const FullGroupElement& a, const FullGroupElement& b) {
  return a.tower_->scale() == b.tower_->scale() && a.level_ == b.level_ && a.depth_ == b.depth_ &&
         a.table_ == b.table_;
}

FullGroupElement compose(const FullGroupElement& g, const FullGroupElement& f) {
  const TowerPtr& tower = common_tower(g, f);
  const unsigned level = std::max(g.level(), f.level());
  const unsigned depth = std::min(g.depth(), f.depth());
  if (level > depth)
    throw Error(Errc::LevelMismatch, "composite level " + std::to_string(level) + " exceeds depth " +
                                         std::to_string(depth));
  std::vector<Coset> table;
  for (const Coset& cell : tower->enumerate(level)) {
    const Coset x = tower->reduce(depth, cell.residue);
    const Coset tf = tower->project(f.translation_at(x), depth);
    const Coset y = tower->add(x, tf);
    const Coset tg = tower->project(g.translation_at(y), depth);
    table.push_back(tower->add(tf, tg));
  }
  return FullGroupElement::from_table(tower, level, depth, std::move(table));
}

FullGroupElement invert(const FullGroupElement& f) {
  const auto& tower = f.tower();
  const std::vector<std::size_t> s = f.sigma();
  std::vector<Coset> table(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) table[s[i]] = tower->neg(f.table()[i]);
  return FullGroupElement::from_table(tower, f.level(), f.depth(), std::move(table));
}

FullGroupElement embed(const FullGroupElement& f, std::optional<unsigned> m) {
  const unsigned target = m.value_or(f.level() + 1);
  if (target > f.depth())
    throw Error(Errc::DepthExceeded, "cannot refine to level " + std::to_string(target) + " at depth " +
                                         std::to_string(f.depth()));
  if (target < f.level()) throw Error(Errc::LevelMismatch, "embedding must not coarsen cells");
  std::vector<Coset> table;
  for (const Coset& cell : f.tower()->enumerate(target)) table.push_back(f.translation_at(cell));
  return FullGroupElement::from_table(f.tower(), target, f.depth(), std::move(table));
}

FullGroupElement truncate(const FullGroupElement& f, unsigned M) {
  if (M < f.level() || M > f.depth())
    throw Error(Errc::LevelMismatch, "truncation depth " + std::to_string(M) + " outside [" +
                                         std::to_string(f.level()) + ", " + std::to_string(f.depth()) + "]");
  std::vector<Coset> table;
  for (const Coset& t : f.table()) table.push_back(f.tower()->project(t, M));
  return FullGroupElement::from_table(f.tower(), f.level(), M, std::move(table));
}

bool same_map(const FullGroupElement& a, const FullGroupElement& b) {
  const TowerPtr& tower = common_tower(a, b);
  const unsigned depth = std::min(a.depth(), b.depth());
  if (std::max(a.level(), b.level()) > depth) return false;
  for (const Coset& x : tower->enumerate(depth))
    if (a.apply(x) != b.apply(x)) return false;
  return true;
}

bool is_measure_preserving(const FullGroupElement& f) {
  const auto& tower = f.tower();
  const std::vector<Coset> points = tower->enumerate(f.depth());
  std::map<IntVector, Rational> pushed;
  for (const Coset& x : points) pushed[f.apply(x).residue] += tower->uniform_measure(x);
  if (pushed.size() != points.size()) return false;
  for (const Coset& y : points)
    if (pushed[y.residue] != tower->uniform_measure(y)) return false;
  return true;
}

bool operator==(const Decomposition& a, const Decomposition& b) {
  return a.tower->scale() == b.tower->scale() && a.level == b.level && a.depth == b.depth &&
         a.sigma == b.sigma && a.phi == b.phi;
}

namespace {

void check_reps(const QuotientTower& tower, unsigned n, unsigned N, const std::vector<Coset>& reps) {
  if (reps.size() != tower.enumerate(n).size())
    throw Error(Errc::LevelMismatch, "section has " + std::to_string(reps.size()) + " representatives");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (reps[i].level != N)
      throw Error(Errc::LevelMismatch, "representative " + std::to_string(i) + " is not at depth " +
                                           std::to_string(N));
    if (tower.index_of(tower.project(reps[i], n)) != i)
      throw Error(Errc::LevelMismatch, "representative " + std::to_string(i) + " lies over the wrong cell");
  }
}

}  // namespace

Decomposition decompose(const FullGroupElement& f, const std::vector<Coset>& reps) {
  const auto& tower = f.tower();
  check_reps(*tower, f.level(), f.depth(), reps);
  Decomposition dec{tower, f.level(), f.depth(), f.sigma(), {}};
  for (std::size_t i = 0; i < reps.size(); ++i)
    dec.phi.push_back(tower->sub(tower->add(reps[i], f.table()[i]), reps[dec.sigma[i]]));
  return dec;
}

Decomposition decompose(const FullGroupElement& f) {
  return decompose(f, f.tower()->section(f.level(), f.depth()));
}

FullGroupElement recompose(const Decomposition& dec, const std::vector<Coset>& reps) {
  const auto& tower = dec.tower;
  check_reps(*tower, dec.level, dec.depth, reps);
  if (dec.sigma.size() != reps.size() || dec.phi.size() != reps.size())
    throw Error(Errc::LevelMismatch, "decomposition size does not match the level");
  std::vector<Coset> table;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (dec.sigma[i] >= reps.size()) throw Error(Errc::InvalidArgument, "sigma entry out of range");
    if (tower->project(dec.phi[i], dec.level) != tower->zero(dec.level))
      throw Error(Errc::InvalidArgument, "phi entry " + render_residue(dec.phi[i].residue) +
                                             " does not vanish at level " + std::to_string(dec.level));
    table.push_back(tower->sub(tower->add(dec.phi[i], reps[dec.sigma[i]]), reps[i]));
  }
  return FullGroupElement::from_table(tower, dec.level, dec.depth, std::move(table));
}

FullGroupElement recompose(const Decomposition& dec) {
  return recompose(dec, dec.tower->section(dec.level, dec.depth));
}

Decomposition semidirect_mul(const Decomposition& g, const Decomposition& f) {
  if (g.tower->scale() != f.tower->scale()) throw Error(Errc::TowerMismatch, "decompositions over different scales");
  if (g.level != f.level || g.depth != f.depth || g.sigma.size() != f.sigma.size())
    throw Error(Errc::LevelMismatch, "decompositions of different level or depth");
  Decomposition out{g.tower, g.level, g.depth, {}, {}};
  for (std::size_t i = 0; i < f.sigma.size(); ++i) {
    out.sigma.push_back(g.sigma[f.sigma[i]]);
    out.phi.push_back(g.tower->add(f.phi[i], g.phi[f.sigma[i]]));
  }
  return out;
}

}  // namespace odo
