#include "odo/finite_group.hpp"

#include <algorithm>
#include <map>

namespace odo {

FiniteGroup FiniteGroup::from_table(std::string name, std::size_t order, std::vector<Elem> table) {
  if (order == 0 || order > kTableBound)
    throw Error(Errc::SizeGuard, name + ": order " + std::to_string(order) + " outside table bound");
  if (table.size() != order * order) throw Error(Errc::InvalidArgument, name + ": table has wrong size");
  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.table_ = std::move(table);
  for (Elem x : g.table_)
    if (x >= order) throw Error(Errc::InvalidArgument, g.name_ + ": table entry out of range");

  std::optional<Elem> identity;
  for (Elem e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (Elem x = 0; x < order && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error(Errc::InvalidArgument, g.name_ + ": no identity");
  g.identity_ = *identity;

  g.inverse_.assign(order, 0);
  for (Elem x = 0; x < order; ++x) {
    bool found = false;
    for (Elem y = 0; y < order && !found; ++y)
      if (g.mul(x, y) == g.identity_ && g.mul(y, x) == g.identity_) {
        g.inverse_[x] = y;
        found = true;
      }
    if (!found) throw Error(Errc::InvalidArgument, g.name_ + ": element without inverse");
  }
  if (order <= 128)
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b)
        for (Elem c = 0; c < order; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw Error(Errc::InvalidArgument, g.name_ + ": not associative");
  for (Elem a = 0; a < order && g.abelian_; ++a)
    for (Elem b = a + 1; b < order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        g.abelian_ = false;
        break;
      }
  return g;
}

std::vector<Elem> FiniteGroup::center() const {
  std::vector<Elem> out;
  for (Elem z = 0; z < order_; ++z) {
    bool central = true;
    for (Elem x = 0; x < order_ && central; ++x) central = mul(z, x) == mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup::from_table("Z/" + std::to_string(n), n, std::move(t));
}

FiniteGroup symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<Elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // a after b
      t[a * n + b] = static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup::from_table("Sym(3)", n, std::move(t));
}

FiniteGroup heisenberg_group(std::size_t q) {
  const std::size_t n = q * q * q;
  if (n > FiniteGroup::kTableBound) throw Error(Errc::SizeGuard, "Heisenberg group too large for a table");
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x / (q * q), b = (x / q) % q, c = x % q;
      const std::size_t a2 = y / (q * q), b2 = (y / q) % q, c2 = y % q;
      const std::size_t ra = (a + a2) % q, rb = (b + b2) % q, rc = (c + c2 + a * b2) % q;
      t[x * n + y] = static_cast<Elem>((ra * q + rb) * q + rc);
    }
  return FiniteGroup::from_table("H3(Z/" + std::to_string(q) + ")", n, std::move(t));
}

Elem FiniteGroupTower::project(Elem x, std::size_t from, std::size_t to) const {
  if (to > from || from > depth()) throw Error(Errc::LevelMismatch, "bad projection levels");
  for (std::size_t k = from; k > to; --k) x = maps_[k - 1][x];
  return x;
}

std::vector<Elem> FiniteGroupTower::kernel(std::size_t n, std::size_t N) const {
  std::vector<Elem> out;
  const Elem e = group(n).identity();
  for (Elem x = 0; x < group(N).order(); ++x)
    if (project(x, N, n) == e) out.push_back(x);
  return out;
}

FiniteGroupTower FiniteGroupTower::make(std::string name, std::vector<FiniteGroup> groups,
                                        std::vector<std::vector<Elem>> maps) {
  if (groups.empty() || groups.front().order() != 1)
    throw Error(Errc::InvalidArgument, "tower must start with the trivial group");
  if (maps.size() + 1 != groups.size()) throw Error(Errc::InvalidArgument, "one connecting map per level");
  FiniteGroupTower t;
  t.name_ = std::move(name);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const FiniteGroup& lo = groups[k];
    const FiniteGroup& hi = groups[k + 1];
    const auto& m = maps[k];
    if (m.size() != hi.order()) throw Error(Errc::InvalidArgument, "connecting map has wrong domain");
    std::vector<bool> hit(lo.order(), false);
    for (Elem x = 0; x < hi.order(); ++x) {
      if (m[x] >= lo.order()) throw Error(Errc::InvalidArgument, "connecting map leaves its codomain");
      hit[m[x]] = true;
      for (Elem y = 0; y < hi.order(); ++y)
        if (m[hi.mul(x, y)] != lo.mul(m[x], m[y]))
          throw Error(Errc::InvalidArgument, "connecting map " + std::to_string(k + 1) + " is not a homomorphism");
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw Error(Errc::InvalidArgument, "connecting map " + std::to_string(k + 1) + " is not surjective");
  }
  for (const auto& g : groups) t.abelian_ = t.abelian_ && g.is_abelian();
  t.groups_ = std::move(groups);
  t.maps_ = std::move(maps);
  return t;
}

FiniteGroupTower FiniteGroupTower::from_quotient(const QuotientTower& tower, unsigned depth) {
  std::vector<FiniteGroup> groups;
  std::vector<std::vector<Coset>> labels;
  for (unsigned k = 0; k <= depth; ++k) {
    if (tower.cardinality(k) > FiniteGroup::kTableBound)
      throw Error(Errc::SizeGuard, "level " + std::to_string(k) + " too large for a multiplication table");
    std::vector<Coset> cosets = tower.enumerate(k);
    const std::size_t n = cosets.size();
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        const Elem s = static_cast<Elem>(tower.index_of(tower.add(cosets[a], cosets[b])));
        t[a * n + b] = s;
        t[b * n + a] = s;
      }
    groups.push_back(FiniteGroup::from_table(tower.scale().name() + "/level" + std::to_string(k), n, std::move(t)));
    labels.push_back(std::move(cosets));
  }
  std::vector<std::vector<Elem>> maps;
  for (unsigned k = 0; k < depth; ++k) {
    std::vector<Elem> m;
    for (const Coset& c : labels[k + 1]) m.push_back(static_cast<Elem>(tower.index_of(tower.project(c, k))));
    maps.push_back(std::move(m));
  }
  FiniteGroupTower t = make(tower.scale().name(), std::move(groups), std::move(maps));
  t.labels_ = std::move(labels);
  return t;
}

FiniteGroupTower FiniteGroupTower::heisenberg(std::size_t p, std::size_t m, std::size_t bound) {
  if (!is_prime(Int(static_cast<unsigned long>(p)))) throw Error(Errc::InvalidArgument, "p must be prime");
  std::size_t q = 1;
  for (std::size_t k = 0; k < m; ++k) q *= p;
  if (q * q * q > bound) throw Error(Errc::SizeGuard, "Heisenberg tower exceeds the enumeration bound");
  std::vector<FiniteGroup> groups{cyclic_group(1)};
  std::vector<std::vector<Elem>> maps;
  std::size_t prev = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    const std::size_t cur = prev * p;
    groups.push_back(heisenberg_group(cur));
    std::vector<Elem> red(cur * cur * cur);
    for (std::size_t x = 0; x < red.size(); ++x) {
      const std::size_t a = x / (cur * cur), b = (x / cur) % cur, c = x % cur;
      red[x] = static_cast<Elem>(((a % prev) * prev + (b % prev)) * prev + (c % prev));
    }
    maps.push_back(std::move(red));
    prev = cur;
  }
  return make("H3 tower p=" + std::to_string(p), std::move(groups), std::move(maps));
}

}  // namespace odo
