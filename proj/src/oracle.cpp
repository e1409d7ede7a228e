#include "odo/oracle.hpp"

#include "odo/worked_examples.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

namespace odo {

const char* mode_name(CheckMode mode) {
  switch (mode) {
    case CheckMode::Exhaustive: return "exhaustive";
    case CheckMode::GeneratorExhaustive: return "generator-exhaustive";
    case CheckMode::Sampled: return "sampled";
  }
  return "unknown";
}

void CheckReport::fail(std::string message) {
  passed = false;
  if (failures.size() < 20) failures.push_back(std::move(message));
}

namespace {

using Perm = std::vector<Elem>;

Perm perm_compose(const Perm& g, const Perm& f) {
  Perm out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = g[f[x]];
  return out;
}

Perm perm_inverse(const Perm& f) {
  Perm out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<Elem>(x);
  return out;
}

bool is_bijection(const Perm& f) {
  std::vector<bool> hit(f.size(), false);
  for (Elem y : f) {
    if (y >= f.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

Int factorial(std::size_t k) {
  Int f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

// Level n and level N of a finite group tower, with the projection between
// them tabulated.
struct View {
  const FiniteGroupTower& tower;
  unsigned n, N;
  const FiniteGroup& low;
  const FiniteGroup& top;
  std::vector<Elem> proj;
  std::vector<Elem> kernel;
  std::vector<std::vector<Elem>> fibres;

  View(const FiniteGroupTower& t, unsigned n_, unsigned N_)
      : tower(t), n(n_), N(N_), low(t.group(n_)), top(t.group(N_)) {
    if (n > N) throw Error(Errc::LevelMismatch, "oracle needs n <= N");
    fibres.resize(low.order());
    for (Elem x = 0; x < top.order(); ++x) {
      proj.push_back(tower.project(x, N, n));
      fibres[proj.back()].push_back(x);
    }
    kernel = fibres[low.identity()];
  }
  std::size_t cells() const { return low.order(); }
  std::size_t points() const { return top.order(); }

  // Required projection of the cell element moving cell a onto cell b.
  Elem needed(Elem a, Elem b, Side side) const {
    return side == Side::Right ? low.mul(low.inv(b), a) : low.mul(b, low.inv(a));
  }

  Perm build(const std::vector<Elem>& per_cell, Side side) const {
    Perm out(points());
    for (Elem x = 0; x < points(); ++x) {
      const Elem h = per_cell[proj[x]];
      out[x] = side == Side::Right ? top.mul(x, top.inv(h)) : top.mul(h, x);
    }
    return out;
  }

  Perm identity() const {
    Perm out(points());
    std::iota(out.begin(), out.end(), Elem{0});
    return out;
  }

  bool is_piecewise(const Perm& f, Side side) const {
    for (const auto& fibre : fibres) {
      const Elem x0 = fibre.front();
      const Elem h = side == Side::Right ? top.mul(top.inv(x0), f[x0]) : top.mul(f[x0], top.inv(x0));
      for (Elem x : fibre)
        if (f[x] != (side == Side::Right ? top.mul(x, h) : top.mul(h, x))) return false;
    }
    return true;
  }

  // Translation of every point by a kernel element on the left.
  Perm left_translation(Elem k) const {
    Perm out(points());
    for (Elem x = 0; x < points(); ++x) out[x] = top.mul(k, x);
    return out;
  }

  // Greedy generating set of the kernel.
  std::vector<Elem> kernel_generators() const {
    std::vector<bool> in(points(), false);
    in[top.identity()] = true;
    std::vector<Elem> members{top.identity()};
    std::vector<Elem> gens;
    for (Elem k : kernel) {
      if (in[k]) continue;
      gens.push_back(k);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (Elem g : gens) {
          const Elem y = top.mul(members[i], g);
          if (!in[y]) {
            in[y] = true;
            members.push_back(y);
          }
        }
    }
    return gens;
  }

  // Single-cell kernel translations and cell swaps. With full = false the
  // kernel part uses a generating set and only adjacent swaps.
  std::vector<Perm> generators(Side side, bool full) const {
    std::vector<Perm> out;
    std::vector<Elem> ks;
    if (full) {
      for (Elem k : kernel)
        if (k != top.identity()) ks.push_back(k);
    } else {
      ks = kernel_generators();
    }
    for (Elem a = 0; a < cells(); ++a)
      for (Elem k : ks) {
        std::vector<Elem> per_cell(cells(), top.identity());
        per_cell[a] = k;
        out.push_back(build(per_cell, side));
      }
    for (Elem a = 0; a < cells(); ++a)
      for (Elem b = a + 1; b < cells(); ++b) {
        if (!full && b != a + 1) continue;
        std::vector<Elem> per_cell(cells(), top.identity());
        per_cell[a] = fibres[needed(a, b, side)].front();
        per_cell[b] = fibres[needed(b, a, side)].front();
        out.push_back(build(per_cell, side));
      }
    return out;
  }

  bool small_generating_set() const { return cells() * kernel.size() + cells() * cells() / 2 <= 256; }

  Perm random_element(Side side, std::mt19937_64& rng) const {
    std::vector<Elem> sigma(cells());
    std::iota(sigma.begin(), sigma.end(), Elem{0});
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<Elem> per_cell(cells());
    for (Elem a = 0; a < cells(); ++a) {
      const auto& options = fibres[needed(a, sigma[a], side)];
      per_cell[a] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    }
    return build(per_cell, side);
  }
};

std::string subject_of(const FiniteGroupTower& tower, unsigned n, unsigned N) {
  return tower.name() + " n=" + std::to_string(n) + " N=" + std::to_string(N);
}

}  // namespace

Int full_group_order(const FiniteGroupTower& tower, unsigned n, unsigned N) {
  const View v(tower, n, N);
  return power(Int(static_cast<unsigned long>(v.kernel.size())), v.cells()) * factorial(v.cells());
}

std::vector<PiecewiseBijection> enumerate_full_group(const FiniteGroupTower& tower, unsigned n, unsigned N,
                                                     Side side, std::size_t bound) {
  const View v(tower, n, N);
  const Int count = full_group_order(tower, n, N);
  if (count > bound)
    throw Error(Errc::SizeGuard, "full group of " + subject_of(tower, n, N) + " has " + to_string(count) +
                                     " elements, above the bound " + std::to_string(bound));
  std::vector<PiecewiseBijection> out;
  std::vector<Elem> sigma(v.cells());
  std::iota(sigma.begin(), sigma.end(), Elem{0});
  do {
    std::vector<const std::vector<Elem>*> options;
    for (Elem a = 0; a < v.cells(); ++a) options.push_back(&v.fibres[v.needed(a, sigma[a], side)]);
    std::vector<std::size_t> choice(v.cells(), 0);
    while (true) {
      std::vector<Elem> per_cell(v.cells());
      for (Elem a = 0; a < v.cells(); ++a) per_cell[a] = (*options[a])[choice[a]];
      out.push_back(PiecewiseBijection{n, N, side, v.build(per_cell, side)});
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == options[i]->size()) choice[i++] = 0;
      if (i == choice.size()) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

CheckReport enumeration_check(const FiniteGroupTower& tower, unsigned n, unsigned N, std::uint64_t seed) {
  CheckReport r{"enumerate_full_group", subject_of(tower, n, N)};
  const View v(tower, n, N);
  const Int formula = full_group_order(tower, n, N);
  r.fact("formula", to_string(formula));
  for (Side side : {Side::Right, Side::Left}) {
    const auto elements = enumerate_full_group(tower, n, N, side);
    std::set<Perm> set;
    for (const auto& e : elements) {
      if (!is_bijection(e.perm)) r.fail("enumerated element is not a bijection");
      set.insert(e.perm);
    }
    const std::string tag = side == Side::Right ? "right" : "left";
    r.fact(tag + "_count", std::to_string(set.size()));
    if (formula != static_cast<unsigned long>(set.size()))
      r.fail(tag + " count " + std::to_string(set.size()) + " differs from formula " + to_string(formula));
    if (side == Side::Left) continue;

    std::vector<Perm> list(set.begin(), set.end());
    for (const auto& f : list)
      if (!set.count(perm_inverse(f))) r.fail("inverse of an element is missing");
    const double work = static_cast<double>(list.size()) * list.size() * v.points();
    if (work <= 5e7) {
      for (const auto& g : list)
        for (const auto& f : list)
          if (!set.count(perm_compose(g, f))) r.fail("composite missing from the enumeration");
      r.fact("closure_pairs", std::to_string(list.size() * list.size()));
    } else {
      r.mode = CheckMode::Sampled;
      r.seed = seed;
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
      for (int i = 0; i < 10000; ++i)
        if (!set.count(perm_compose(list[pick(rng)], list[pick(rng)])))
          r.fail("composite missing from the enumeration");
      r.fact("closure_pairs", "10000");
    }
  }
  return r;
}

CheckReport centralizer_check(const FiniteGroupTower& tower, unsigned n, unsigned N, std::uint64_t seed) {
  CheckReport r{"centralizer", subject_of(tower, n, N)};
  const View v(tower, n, N);
  const Int formula = full_group_order(tower, n, N);
  r.fact("cells", std::to_string(v.cells()));
  r.fact("kernel_order", std::to_string(v.kernel.size()));
  r.fact("formula", to_string(formula));

  // The kernel acts freely with one orbit per cell, so its centralizer in
  // the symmetric group of the level-N set has order |K|^k * k!.
  std::set<std::vector<Elem>> orbits;
  for (Elem x = 0; x < v.points(); ++x) {
    std::vector<Elem> orbit;
    for (Elem k : v.kernel) orbit.push_back(v.top.mul(k, x));
    std::sort(orbit.begin(), orbit.end());
    if (std::adjacent_find(orbit.begin(), orbit.end()) != orbit.end()) r.fail("kernel action is not free");
    orbits.insert(orbit);
  }
  r.fact("orbits", std::to_string(orbits.size()));
  if (orbits.size() != v.cells()) r.fail("kernel has " + std::to_string(orbits.size()) + " orbits");
  const Int centralizer_order =
      power(Int(static_cast<unsigned long>(v.kernel.size())), orbits.size()) * factorial(orbits.size());
  if (centralizer_order != formula) r.fail("centralizer order differs from the enumeration formula");

  std::vector<Perm> translations;
  for (Elem k : v.kernel) translations.push_back(v.left_translation(k));
  auto commutes = [&](const Perm& f, const Perm& t) {
    for (Elem x = 0; x < v.points(); ++x)
      if (f[t[x]] != t[f[x]]) return false;
    return true;
  };

  if (formula <= QuotientTower::kDefaultEnumerationBound) {
    const auto elements = enumerate_full_group(tower, n, N, Side::Right);
    std::set<Perm> distinct;
    for (const auto& e : elements) {
      distinct.insert(e.perm);
      for (const auto& t : translations)
        if (!commutes(e.perm, t)) {
          r.fail("enumerated element does not commute with a kernel translation");
          break;
        }
    }
    r.fact("counted", std::to_string(distinct.size()));
    if (formula != static_cast<unsigned long>(distinct.size())) r.fail("enumeration count differs from the formula");
    return r;
  }

  r.mode = CheckMode::GeneratorExhaustive;
  r.seed = seed;
  const auto gens = v.generators(Side::Right, v.small_generating_set());
  const auto kgens = v.kernel_generators();
  std::vector<Perm> kernel_gen_translations;
  for (Elem k : kgens) kernel_gen_translations.push_back(v.left_translation(k));
  for (const auto& g : gens) {
    if (!v.is_piecewise(g, Side::Right)) r.fail("generator is not right-piecewise");
    for (const auto& t : kernel_gen_translations)
      if (!commutes(g, t)) r.fail("generator does not commute with a kernel translation");
  }
  r.fact("generators", std::to_string(gens.size()));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, translations.size() - 1);
  std::size_t pairs = 0;
  for (int i = 0; i < 100; ++i) {
    const Perm f = v.random_element(Side::Right, rng);
    for (int j = 0; j < 100; ++j, ++pairs)
      if (!commutes(f, translations[pick(rng)])) r.fail("random element does not commute with a kernel translation");
  }
  r.fact("sampled_pairs", std::to_string(pairs));
  return r;
}

CheckReport regular_commutant_check(const FiniteGroup& q) {
  CheckReport r{"regular_commutant", q.name()};
  const std::size_t size = q.order();
  auto commutes_with_left = [&](const Perm& f) {
    for (Elem g = 0; g < size; ++g)
      for (Elem x = 0; x < size; ++x)
        if (f[q.mul(g, x)] != q.mul(g, f[x])) return false;
    return true;
  };
  std::vector<Perm> right(size);
  std::set<Perm> right_set;
  for (Elem a = 0; a < size; ++a) {
    right[a].resize(size);
    for (Elem x = 0; x < size; ++x) right[a][x] = q.mul(x, q.inv(a));
    right_set.insert(right[a]);
  }
  std::set<Perm> commutant;
  if (size <= 8) {
    Perm f(size);
    std::iota(f.begin(), f.end(), Elem{0});
    do
      if (commutes_with_left(f)) commutant.insert(f);
    while (std::next_permutation(f.begin(), f.end()));
    r.fact("permutations_searched", to_string(factorial(size)));
  } else {
    // A map commuting with left translations satisfies f(x) = x * f(1).
    r.mode = CheckMode::GeneratorExhaustive;
    for (Elem c = 0; c < size; ++c) {
      Perm f(size);
      for (Elem x = 0; x < size; ++x) f[x] = q.mul(x, c);
      if (is_bijection(f) && commutes_with_left(f)) commutant.insert(f);
    }
  }
  r.fact("commutant_order", std::to_string(commutant.size()));
  if (commutant != right_set) r.fail("commutant differs from the right translations");
  for (Elem a = 0; a < size; ++a)
    for (Elem b = 0; b < size; ++b)
      if (right[q.mul(a, b)] != perm_compose(right[a], right[b])) r.fail("a -> f^R_a is not a homomorphism");
  if (right_set.size() != size) r.fail("a -> f^R_a is not injective");
  return r;
}

CheckReport alpha_check(const FiniteGroupTower& tower, unsigned n, unsigned N, std::uint64_t seed) {
  CheckReport r{"alpha", subject_of(tower, n, N), true, CheckMode::GeneratorExhaustive, seed};
  const View v(tower, n, N);
  Perm iota(v.points());
  for (Elem x = 0; x < v.points(); ++x) iota[x] = v.top.inv(x);
  auto alpha = [&](const Perm& f) { return perm_compose(iota, perm_compose(f, iota)); };

  if (alpha(v.identity()) != v.identity()) r.fail("alpha(id) != id");
  const bool full = v.small_generating_set();
  const auto left = v.generators(Side::Left, full);
  const auto right = v.generators(Side::Right, full);
  for (const auto& f : left) {
    if (!v.is_piecewise(alpha(f), Side::Right)) r.fail("alpha of a left generator is not right-piecewise");
    if (alpha(alpha(f)) != f) r.fail("alpha is not an involution");
  }
  for (const auto& f : right)
    if (!v.is_piecewise(alpha(f), Side::Left)) r.fail("alpha of a right generator is not left-piecewise");
  for (const auto* gens : {&left, &right})
    for (const auto& f : *gens)
      for (const auto& g : *gens)
        if (alpha(perm_compose(f, g)) != perm_compose(alpha(f), alpha(g))) r.fail("alpha is not multiplicative");
  r.fact("generator_pairs", std::to_string(left.size() * left.size() + right.size() * right.size()));

  if (full) {
    // Single-cell kernel translations come first in both lists.
    const std::size_t pieces = v.cells() * (v.kernel.size() - 1);
    std::set<Perm> image, target(right.begin(), right.begin() + pieces);
    for (std::size_t i = 0; i < pieces; ++i) image.insert(alpha(left[i]));
    if (image != target) r.fail("alpha does not map left cell translations onto right cell translations");
    r.mode = CheckMode::Exhaustive;
  }

  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const Perm f = v.random_element(Side::Left, rng), g = v.random_element(Side::Left, rng);
    if (!v.is_piecewise(alpha(f), Side::Right)) r.fail("alpha of a random left element is not right-piecewise");
    if (alpha(perm_compose(f, g)) != perm_compose(alpha(f), alpha(g))) r.fail("alpha is not multiplicative");
  }
  r.fact("sampled_pairs", "1000");

  bool left_is_right = true;
  for (const auto& f : left) left_is_right = left_is_right && v.is_piecewise(f, Side::Right);
  r.fact("left_generators_right_piecewise", left_is_right ? "true" : "false");
  if (v.top.is_abelian() && !left_is_right) r.fail("abelian tower with distinct left and right sets");
  return r;
}

CheckReport orbit_count_check(const FiniteGroupTower& tower, unsigned n, unsigned N) {
  CheckReport r{"orbit_count", subject_of(tower, n, N)};
  const View v(tower, n, N);
  std::set<std::vector<Elem>> orbits;
  for (Elem x = 0; x < v.points(); ++x) {
    std::vector<Elem> orbit;
    for (Elem k : v.kernel) orbit.push_back(v.top.mul(k, x));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (orbit != v.fibres[v.proj[x]]) r.fail("orbit of a point differs from its cylinder fibre");
    orbits.insert(orbit);
  }
  r.fact("orbits", std::to_string(orbits.size()));
  r.fact("orbit_size", std::to_string(v.kernel.size()));
  if (orbits.size() != v.cells()) r.fail("orbit count differs from the number of cells");
  return r;
}

namespace {

struct FullGroupModel {
  TowerPtr tower;
  unsigned n, N;
  std::vector<Coset> cells, reps, kernel;

  FullGroupModel(TowerPtr t, unsigned n_, unsigned N_) : tower(std::move(t)), n(n_), N(N_) {
    cells = tower->enumerate(n);
    reps = tower->section(n, N);
    for (const Coset& x : tower->enumerate(N))
      if (tower->project(x, n) == tower->zero(n)) kernel.push_back(x);
  }

  FullGroupElement make(const std::vector<std::size_t>& sigma, const std::vector<std::size_t>& lift) const {
    std::vector<Coset> table;
    for (std::size_t a = 0; a < cells.size(); ++a)
      table.push_back(tower->add(tower->sub(reps[sigma[a]], reps[a]), kernel[lift[a]]));
    return FullGroupElement::from_table(tower, n, N, std::move(table));
  }

  std::vector<FullGroupElement> all() const {
    std::vector<FullGroupElement> out;
    std::vector<std::size_t> sigma(cells.size());
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
      std::vector<std::size_t> lift(cells.size(), 0);
      while (true) {
        out.push_back(make(sigma, lift));
        std::size_t i = 0;
        while (i < lift.size() && ++lift[i] == kernel.size()) lift[i++] = 0;
        if (i == lift.size()) break;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
  }

  std::vector<FullGroupElement> generators() const {
    std::vector<FullGroupElement> out;
    const std::vector<Coset> zero(cells.size(), tower->zero(N));
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (const Coset& k : kernel) {
        if (k == tower->zero(N)) continue;
        auto table = zero;
        table[a] = k;
        out.push_back(FullGroupElement::from_table(tower, n, N, table));
      }
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        auto table = zero;
        table[a] = tower->sub(reps[b], reps[a]);
        table[b] = tower->sub(reps[a], reps[b]);
        out.push_back(FullGroupElement::from_table(tower, n, N, table));
      }
    return out;
  }

  FullGroupElement random(std::mt19937_64& rng) const {
    std::vector<std::size_t> sigma(cells.size()), lift(cells.size());
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::uniform_int_distribution<std::size_t> pick(0, kernel.size() - 1);
    for (auto& l : lift) l = pick(rng);
    return make(sigma, lift);
  }
};

}  // namespace

CheckReport semidirect_law_check(const TowerPtr& tower, unsigned n, unsigned N, std::uint64_t seed) {
  CheckReport r{"semidirect_law",
                tower->scale().name() + " n=" + std::to_string(n) + " N=" + std::to_string(N)};
  const FullGroupModel model(tower, n, N);
  const Int formula = power(Int(static_cast<unsigned long>(model.kernel.size())), model.cells.size()) *
                      factorial(model.cells.size());
  r.fact("formula", to_string(formula));
  const std::vector<Coset> points = tower->enumerate(N);
  std::mt19937_64 rng(seed);

  auto check_pair = [&](const FullGroupElement& g, const Decomposition& dg, const FullGroupElement& f,
                        const Decomposition& df, bool all_points) {
    const FullGroupElement h = compose(g, f);
    const Decomposition dh = decompose(h);
    if (dh != semidirect_mul(dg, df)) r.fail("decompose(g o f) != decompose(g) * decompose(f)");
    for (std::size_t i = 0; i < df.sigma.size(); ++i)
      if (dh.sigma[i] != dg.sigma[df.sigma[i]]) {
        r.fail("sigma of a composite is not the composite of sigmas");
        break;
      }
    if (all_points) {
      for (const Coset& x : points)
        if (h.apply(x) != g.apply(f.apply(x))) {
          r.fail("composite disagrees with pointwise composition");
          break;
        }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
      for (int i = 0; i < 32; ++i) {
        const Coset& x = points[pick(rng)];
        if (h.apply(x) != g.apply(f.apply(x))) r.fail("composite disagrees with pointwise composition");
      }
    }
  };
  auto round_trip = [&](const FullGroupElement& f, const Decomposition& d) {
    for (const Coset& w : d.phi)
      if (tower->project(w, n) != tower->zero(n)) r.fail("phi coordinate does not vanish at level n");
    if (recompose(d) != f) r.fail("recompose(decompose(f)) != f");
  };

  if (formula <= 10000) {
    const auto elements = model.all();
    std::vector<Decomposition> decs;
    std::set<std::vector<std::size_t>> tables;
    std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> coords;
    for (const auto& f : elements) {
      decs.push_back(decompose(f));
      round_trip(f, decs.back());
      std::vector<std::size_t> t, w;
      for (const Coset& c : f.table()) t.push_back(tower->index_of(c));
      for (const Coset& c : decs.back().phi) w.push_back(tower->index_of(c));
      tables.insert(t);
      coords.emplace(decs.back().sigma, w);
    }
    r.fact("elements", std::to_string(tables.size()));
    if (formula != static_cast<unsigned long>(tables.size())) r.fail("element count differs from the formula");
    if (coords.size() != tables.size()) r.fail("decompose is not injective");
    if (elements.size() <= 400) {
      for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j)
          check_pair(elements[i], decs[i], elements[j], decs[j], true);
      r.fact("pairs", std::to_string(elements.size() * elements.size()));
    } else {
      // The law for (generator, anything) implies it for all pairs.
      r.mode = CheckMode::GeneratorExhaustive;
      const auto gens = model.generators();
      for (const auto& g : gens) {
        const Decomposition dg = decompose(g);
        for (std::size_t j = 0; j < elements.size(); ++j) check_pair(g, dg, elements[j], decs[j], false);
      }
      r.seed = seed;
      r.fact("generators", std::to_string(gens.size()));
      r.fact("pairs", std::to_string(gens.size() * elements.size()));
    }
    return r;
  }

  r.mode = CheckMode::Sampled;
  r.seed = seed;
  for (int i = 0; i < 1000; ++i) {
    const FullGroupElement g = model.random(rng), f = model.random(rng);
    const Decomposition dg = decompose(g), df = decompose(f);
    round_trip(g, dg);
    round_trip(f, df);
    check_pair(g, dg, f, df, false);
  }
  r.fact("pairs", "1000");
  return r;
}

namespace {

class PGroup {
 public:
  PGroup(unsigned p, PartitionType type) : p_(p), type_(std::move(type)) {
    std::sort(type_.rbegin(), type_.rend());
    while (!type_.empty() && type_.back() == 0) type_.pop_back();
    size_ = 1;
    for (unsigned e : type_) {
      for (unsigned i = 0; i < e; ++i) {
        size_ *= p;
        if (size_ > 512) throw Error(Errc::SizeGuard, "p-group larger than 512");
      }
      moduli_.push_back(static_cast<unsigned>(std::lround(std::pow(p, e))));
    }
    std::vector<std::vector<unsigned>> coords(size_);
    for (unsigned x = 0; x < size_; ++x) {
      unsigned rest = x;
      coords[x].resize(moduli_.size());
      for (std::size_t i = moduli_.size(); i-- > 0;) {
        coords[x][i] = rest % moduli_[i];
        rest /= moduli_[i];
      }
    }
    add_.resize(static_cast<std::size_t>(size_) * size_);
    for (unsigned x = 0; x < size_; ++x)
      for (unsigned y = 0; y < size_; ++y) {
        unsigned idx = 0;
        for (std::size_t i = 0; i < moduli_.size(); ++i)
          idx = idx * moduli_[i] + (coords[x][i] + coords[y][i]) % moduli_[i];
        add_[x * size_ + y] = static_cast<std::uint16_t>(idx);
      }
    times_p_.resize(size_);
    for (unsigned x = 0; x < size_; ++x) {
      unsigned y = 0;
      for (unsigned i = 0; i < p; ++i) y = add(y, x);
      times_p_[x] = y;
    }
    order_exp_.assign(size_, 0);
    socle_.assign(size_, 0);
    for (unsigned x = 1; x < size_; ++x) {
      unsigned y = x, prev = x, e = 0;
      while (y != 0) {
        prev = y;
        y = times_p_[y];
        ++e;
      }
      order_exp_[x] = e;
      socle_[x] = prev;
    }
  }

  unsigned size() const { return size_; }
  unsigned add(unsigned x, unsigned y) const { return add_[x * size_ + y]; }

  bool has_subgroup(PartitionType lambda) const {
    std::sort(lambda.rbegin(), lambda.rend());
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    if (lambda.empty()) return true;
    max_j_ = std::max(lambda.front(), type_.empty() ? 0u : type_.front());
    log_a_.assign(max_j_ + 1, 0);
    for (unsigned j = 1; j <= max_j_; ++j) {
      unsigned count = 0;
      for (unsigned x = 0; x < size_; ++x) count += order_exp_[x] <= j;
      log_a_[j] = log_p(count);
    }
    seen_.assign(lambda.size() + 1, {});
    Bits s;
    s.set(0);
    return extend(s, {0}, lambda, 0);
  }

 private:
  using Bits = std::bitset<512>;

  unsigned log_p(unsigned count) const {
    unsigned e = 0;
    while (count > 1) {
      count /= p_;
      ++e;
    }
    return e;
  }

  // |S[p^j]| * |complement[p^j]| <= |A[p^j]| for the remaining parts.
  bool feasible(const std::vector<unsigned>& elems, const PartitionType& lambda, std::size_t i) const {
    for (unsigned j = 1; j <= max_j_; ++j) {
      unsigned count = 0;
      for (unsigned x : elems) count += order_exp_[x] <= j;
      unsigned need = log_p(count);
      for (std::size_t t = i; t < lambda.size(); ++t) need += std::min(lambda[t], j);
      if (need > log_a_[j]) return false;
    }
    return true;
  }

  bool extend(const Bits& s, const std::vector<unsigned>& elems, const PartitionType& lambda, std::size_t i) const {
    if (i == lambda.size()) return true;
    if (!feasible(elems, lambda, i)) return false;
    for (unsigned g = 1; g < size_; ++g) {
      if (order_exp_[g] != lambda[i] || s.test(socle_[g])) continue;
      Bits next = s;
      std::vector<unsigned> next_elems = elems;
      unsigned multiple = g;
      while (multiple != 0) {
        for (unsigned x : elems) {
          const unsigned y = add(x, multiple);
          next.set(y);
          next_elems.push_back(y);
        }
        multiple = add(multiple, g);
      }
      if (!seen_[i + 1].insert(next).second) continue;
      if (extend(next, next_elems, lambda, i + 1)) return true;
    }
    return false;
  }

  unsigned p_;
  PartitionType type_;
  std::vector<unsigned> moduli_;
  unsigned size_ = 1;
  std::vector<std::uint16_t> add_;
  std::vector<unsigned> times_p_, order_exp_, socle_;
  mutable unsigned max_j_ = 0;
  mutable std::vector<unsigned> log_a_;
  mutable std::vector<std::unordered_set<Bits>> seen_;
};

void partitions_of(unsigned m, unsigned max_part, PartitionType& current, std::vector<PartitionType>& out) {
  if (m == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(m, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_of(m - part, part, current, out);
    current.pop_back();
  }
}

std::vector<PartitionType> partitions_up_to(unsigned n) {
  std::vector<PartitionType> out;
  PartitionType current;
  for (unsigned m = 0; m <= n; ++m) partitions_of(m, m, current, out);
  return out;
}

unsigned weight(const PartitionType& t) { return std::accumulate(t.begin(), t.end(), 0u); }

std::string render_partition(const PartitionType& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

std::vector<unsigned> primes_up_to(unsigned n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<unsigned> out;
  for (unsigned i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

// Checks the domination criterion for one group; returns its subgroup types.
std::vector<PartitionType> check_group(unsigned p, const PartitionType& group, CheckReport& r) {
  const std::vector<PartitionType> types = subgroup_types(p, group);
  const std::set<PartitionType> found(types.begin(), types.end());
  for (const auto& lambda : partitions_up_to(weight(group))) {
    if (dominates(group, lambda) != (found.count(lambda) > 0))
      r.fail("p=" + std::to_string(p) + " group " + render_partition(group) + " type " + render_partition(lambda) +
             ": search and domination disagree");
  }
  return types;
}

bool rank0_match(const std::vector<PartitionType>& ta, unsigned wa, const std::vector<PartitionType>& tb,
                 unsigned wb) {
  const std::set<PartitionType> sb(tb.begin(), tb.end());
  for (const auto& t : ta)
    if (sb.count(t) && wa - weight(t) == wb - weight(t)) return true;
  return false;
}

}  // namespace

bool dominates(const PartitionType& big, const PartitionType& small) {
  PartitionType b = big, s = small;
  std::sort(b.rbegin(), b.rend());
  std::sort(s.rbegin(), s.rend());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > (i < b.size() ? b[i] : 0)) return false;
  return true;
}

bool has_subgroup_of_type(unsigned p, const PartitionType& group, const PartitionType& sub) {
  return PGroup(p, group).has_subgroup(sub);
}

std::vector<PartitionType> subgroup_types(unsigned p, const PartitionType& group) {
  const PGroup g(p, group);
  std::vector<PartitionType> out;
  for (const auto& lambda : partitions_up_to(weight(group)))
    if (g.has_subgroup(lambda)) out.push_back(lambda);
  return out;
}

CheckReport subgroup_matching_oracle(unsigned p, const PartitionType& a, const PartitionType& b) {
  CheckReport r{"subgroup_matching",
                "p=" + std::to_string(p) + " A=" + render_partition(a) + " B=" + render_partition(b)};
  const auto ta = check_group(p, a, r);
  const auto tb = check_group(p, b, r);
  std::string rendered;
  for (const auto& t : ta) rendered += (rendered.empty() ? "" : " ") + render_partition(t);
  r.fact("types_A", rendered);
  const bool match = rank0_match(ta, weight(a), tb, weight(b));
  r.fact("matching_subgroups", match ? "true" : "false");
  if (match != (weight(a) == weight(b))) r.fail("rank-0 rule fails");
  return r;
}

CheckReport subgroup_matching_all(unsigned max_order) {
  CheckReport r{"subgroup_matching_all", "abelian p-groups of order <= " + std::to_string(max_order)};
  std::size_t groups = 0, pairs = 0;
  const auto primes = primes_up_to(max_order);
  for (unsigned p : primes) {
    unsigned max_exp = 0;
    for (unsigned long q = p; q <= max_order; q *= p) ++max_exp;
    std::vector<std::pair<PartitionType, std::vector<PartitionType>>> catalogue;
    for (const auto& group : partitions_up_to(max_exp)) {
      if (group.empty()) continue;
      catalogue.emplace_back(group, check_group(p, group, r));
      ++groups;
    }
    for (const auto& [a, ta] : catalogue)
      for (const auto& [b, tb] : catalogue) {
        ++pairs;
        if (rank0_match(ta, weight(a), tb, weight(b)) != (weight(a) == weight(b)))
          r.fail("rank-0 rule fails for p=" + std::to_string(p) + " " + render_partition(a) + " vs " +
                 render_partition(b));
      }
  }
  r.fact("primes", std::to_string(primes.size()));
  r.fact("groups", std::to_string(groups));
  r.fact("pairs", std::to_string(pairs));
  return r;
}

CheckReport witness_soundness_check(const DecisionReport& report) {
  CheckReport r{"witness_soundness", report.s1.name + " vs " + report.s2.name};
  if (report.question != Question::StabIso || report.verdict != Verdict::Yes || !report.witness ||
      !report.s1.type || !report.s2.type) {
    r.fail("not a stab-iso yes report with a witness");
    return r;
  }
  const Witness& w = *report.witness;
  std::set<Int> primes;
  for (const auto* t : {&*report.s1.type, &*report.s2.type})
    for (const auto& pt : t->primes) primes.insert(pt.prime);
  Int index = 1;
  for (const Int& p : primes) {
    const PrimeType a = report.s1.type->tuple_at(p), b = report.s2.type->tuple_at(p);
    const PrimeType wt = w.type.tuple_at(p);
    const std::string at = "p=" + to_string(p) + ": ";
    if (a.rank() != b.rank() || wt.rank() != a.rank()) r.fail(at + "ranks differ");
    const unsigned long k = valuation(w.index, p);
    index *= power(p, k);
    if (!p.fits_uint_p()) {
      r.fail(at + "prime too large for the finite model");
      continue;
    }
    const unsigned pu = static_cast<unsigned>(p.get_ui());
    PartitionType wpart;
    for (auto e : wt.torsion()) wpart.push_back(static_cast<unsigned>(e));
    for (const PrimeType* side : {&a, &b}) {
      PartitionType tpart;
      for (auto e : side->torsion()) tpart.push_back(static_cast<unsigned>(e));
      const unsigned deficit = weight(tpart) - weight(wpart);
      if (!dominates(tpart, wpart)) r.fail(at + "witness torsion does not dominate-embed");
      if (k < deficit) r.fail(at + "index below the torsion deficit");
      if (side->rank() == 0 && k != deficit) r.fail(at + "rank-0 index differs from the torsion deficit");
      // Finite model: one free factor truncated to Z/p^L next to the torsion.
      const unsigned extra = static_cast<unsigned>(k) - std::min<unsigned>(deficit, static_cast<unsigned>(k));
      const unsigned L = extra + 1 + (tpart.empty() ? 0 : tpart.front());
      PartitionType model = tpart, target = wpart;
      if (side->rank() > 0) {
        model.push_back(L);
        target.push_back(L - extra);
      }
      double order = std::pow(static_cast<double>(pu), weight(model));
      if (order > 512) {
        r.fail(at + "finite model above 512 elements");
        continue;
      }
      if (!has_subgroup_of_type(pu, model, target))
        r.fail(at + "no subgroup of type " + render_partition(target) + " in " + render_partition(model));
      else
        r.fact(at + "model " + render_partition(model), "subgroup " + render_partition(target) + " of index " +
                                                             to_string(p) + "^" + std::to_string(k));
    }
  }
  if (index != w.index) r.fail("witness index is not the product of the per-prime indices");
  return r;
}

namespace {

struct TowerFixture {
  std::string scale;
  unsigned n, N;
};

const std::vector<TowerFixture>& abelian_fixtures() {
  static const std::vector<TowerFixture> list{
      {"z-2n", 1, 3},          {"z-3x2n", 1, 2},      {"z-6n", 1, 2},      {"z2-diag-2-15", 1, 2},
      {"z2-diag-6-10", 1, 2},  {"z2-diag-6-5", 1, 2}, {"z2-jordan-2", 1, 2},
  };
  return list;
}

FiniteGroupTower group_tower(const std::string& name, unsigned N) {
  return FiniteGroupTower::from_quotient(*QuotientTower::build(fixture_scale(name), N), N);
}

CheckReport chain_report(std::uint64_t seed) {
  CheckReport r{"implication_chain", "200 random diagonal pairs plus the fixture corpus", true, CheckMode::Sampled,
                seed};
  std::vector<std::pair<ZdScale, ZdScale>> pairs;
  const auto corpus = fixture_corpus();
  for (const auto& a : corpus)
    for (const auto& b : corpus)
      if (a.dim() == b.dim()) pairs.emplace_back(a, b);
  const auto random = random_diagonal_pairs(200, seed);
  pairs.insert(pairs.end(), random.begin(), random.end());
  const ChainReport chain = implication_chain_check(pairs);
  r.fact("checked", std::to_string(chain.checked));
  r.fact("excluded", std::to_string(chain.excluded));
  for (const auto& v : chain.violations) r.fail(v);
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"fullgroup", "centralizer", "commutant", "alpha", "orbits", "subgroups", "witness", "chain", "all"};
}

std::vector<CheckReport> run_suite(const std::string& name, std::uint64_t seed) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error(Errc::InvalidArgument, "unknown suite '" + name + "'");
  const bool all = name == "all";
  std::vector<CheckReport> out;
  if (all || name == "fullgroup") {
    out.push_back(enumeration_check(group_tower("z-2n", 3), 1, 3, seed));
    out.push_back(enumeration_check(group_tower("z-2n", 3), 1, 2, seed));
    out.push_back(enumeration_check(group_tower("z-3n", 2), 1, 2, seed));
    out.push_back(enumeration_check(group_tower("z2-companion-x2-2", 3), 1, 3, seed));
    out.push_back(enumeration_check(group_tower("z2-companion-x2-2", 3), 2, 3, seed));
    for (const auto& [scale, n, N] : std::vector<TowerFixture>{{"z-2n", 1, 2},
                                                               {"z-2n", 1, 3},
                                                               {"z-2n", 2, 3},
                                                               {"z-3n", 1, 2},
                                                               {"z2-companion-x2-2", 1, 3},
                                                               {"z2-companion-x2-2", 2, 3},
                                                               {"z2-jordan-2", 1, 2},
                                                               {"z-3x2n", 1, 2},
                                                               {"z2-diag-2-3", 1, 2},
                                                               {"z2-diag-6-10", 1, 2}})
      out.push_back(semidirect_law_check(QuotientTower::build(fixture_scale(scale), N), n, N, seed));
  }
  if (all || name == "centralizer") {
    for (const auto& [scale, n, N] : abelian_fixtures()) out.push_back(centralizer_check(group_tower(scale, N), n, N, seed));
    out.push_back(centralizer_check(group_tower("z2-diag-2-3", 2), 1, 2, seed));
    out.push_back(centralizer_check(FiniteGroupTower::heisenberg(2, 2), 1, 2, seed));
  }
  if (all || name == "commutant") {
    out.push_back(regular_commutant_check(cyclic_group(4)));
    out.push_back(regular_commutant_check(heisenberg_group(2)));
    out.push_back(regular_commutant_check(symmetric_group_3()));
    out.push_back(regular_commutant_check(heisenberg_group(3)));
  }
  if (all || name == "alpha") {
    out.push_back(alpha_check(FiniteGroupTower::heisenberg(2, 2), 1, 2, seed));
    out.push_back(alpha_check(group_tower("z-2n", 3), 1, 3, seed));
  }
  if (all || name == "orbits") {
    for (const auto& [scale, n, N] : abelian_fixtures()) out.push_back(orbit_count_check(group_tower(scale, N), n, N));
    out.push_back(orbit_count_check(group_tower("z-2n", 3), 0, 3));
    out.push_back(orbit_count_check(group_tower("z2-diag-6-10", 1), 1, 1));
    out.push_back(orbit_count_check(FiniteGroupTower::heisenberg(2, 2), 1, 2));
  }
  if (all || name == "subgroups") {
    out.push_back(subgroup_matching_oracle(2, {2, 1}, {3}));
    out.push_back(subgroup_matching_oracle(2, {2}, {1, 1}));
    out.push_back(subgroup_matching_all(512));
  }
  if (all || name == "witness") {
    const auto corpus = fixture_corpus();
    for (const auto& a : corpus)
      for (const auto& b : corpus) {
        const auto rep = decide_stab_iso(a, b);
        if (rep.verdict == Verdict::Yes) out.push_back(witness_soundness_check(rep));
      }
  }
  if (all || name == "chain") out.push_back(chain_report(seed));
  return out;
}

}  // namespace odo
