#include "odo/invariants.hpp"

#include <algorithm>
#include <set>

namespace odo {

std::string Exponent::render() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "inf";
    case Kind::AtLeast: return ">=" + std::to_string(value);
  }
  return "?";
}

bool exponent_less(const Exponent& a, const Exponent& b) {
  auto rank = [](Exponent::Kind k) {
    switch (k) {
      case Exponent::Kind::Finite: return 0;
      case Exponent::Kind::AtLeast: return 1;
      case Exponent::Kind::Infinite: return 2;
    }
    return 3;
  };
  if (a.kind != b.kind) return rank(a.kind) < rank(b.kind);
  return a.value < b.value;
}

Exponent SupernaturalNumber::at(const Int& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return Exponent::finite(0);
}

bool SupernaturalNumber::has_at_least() const {
  return std::any_of(factors.begin(), factors.end(), [](const auto& f) { return f.second.is_at_least(); });
}

std::string SupernaturalNumber::render() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors) {
    if (!out.empty()) out += "·";
    out += to_string(p) + "^" + e.render();
  }
  return out;
}

unsigned PrimeType::rank() const {
  return static_cast<unsigned>(std::count_if(exponents.begin(), exponents.end(),
                                             [](const Exponent& e) { return e.is_infinite(); }));
}

std::vector<unsigned long> PrimeType::torsion() const {
  std::vector<unsigned long> out;
  for (const auto& e : exponents)
    if (e.is_finite() && e.value > 0) out.push_back(e.value);
  std::sort(out.rbegin(), out.rend());
  return out;
}

unsigned long PrimeType::torsion_order_exponent() const {
  unsigned long s = 0;
  for (auto k : torsion()) s += k;
  return s;
}

bool PrimeType::has_at_least() const {
  return std::any_of(exponents.begin(), exponents.end(), [](const Exponent& e) { return e.is_at_least(); });
}

const PrimeType* ProfiniteType::at(const Int& p) const {
  for (const auto& t : primes)
    if (t.prime == p) return &t;
  return nullptr;
}

PrimeType ProfiniteType::tuple_at(const Int& p) const {
  if (const PrimeType* t = at(p)) return *t;
  return PrimeType{p, std::vector<Exponent>(dim, Exponent::finite(0))};
}

bool ProfiniteType::has_at_least() const {
  return std::any_of(primes.begin(), primes.end(), [](const PrimeType& t) { return t.has_at_least(); });
}

std::string ProfiniteType::render() const {
  std::vector<std::string> parts;
  for (const auto& t : primes) {
    const std::string p = to_string(t.prime);
    for (unsigned i = 0; i < t.rank(); ++i) parts.push_back("Z_" + p);
    for (const auto& e : t.exponents)
      if (e.is_at_least()) parts.push_back("Z/" + p + "^>=" + std::to_string(e.value));
    for (auto k : t.torsion()) parts.push_back(k == 1 ? "Z/" + p : "Z/" + p + "^" + std::to_string(k));
  }
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : " x ") + s;
  return out;
}

const char* comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Equal: return "equal";
    case Comparison::NotEqual: return "not-equal";
    case Comparison::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::vector<unsigned long> snf_valuations(const IntMatrix& m, const Int& p) {
  std::vector<unsigned long> out;
  for (const auto& d : snf(m).elementary_divisors()) out.push_back(valuation(d, p));
  std::sort(out.begin(), out.end());
  return out;
}

unsigned rank_at(const IntMatrix& m, const Int& p) {
  const IntVector c = charpoly(m);
  unsigned r = 0;
  while (r < c.size() && floor_mod(c[r], p) == 0) ++r;
  return r;
}

namespace {

std::vector<Int> scale_primes(const ZdScale& scale) {
  Int n;
  if (scale.is_geometric()) {
    const auto& g = scale.geometric_data();
    n = abs(determinant(g.prefix) * determinant(g.base));
  } else {
    n = scale.index(*scale.max_depth());
  }
  std::vector<Int> out;
  for (const auto& pp : factor_integer(n)) out.push_back(pp.prime);
  return out;
}

// Explicit scales: compare the deepest level against the one before it.
std::vector<Exponent> explicit_exponents(const ZdScale& scale, const Int& p) {
  const unsigned depth = *scale.max_depth();
  const auto cur = snf_valuations(scale.gamma(depth), p);
  const auto prev = snf_valuations(scale.gamma(depth - 1), p);
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < cur.size(); ++i)
    out.push_back(cur[i] == prev[i] ? Exponent::finite(cur[i]) : Exponent::at_least(cur[i]));
  return out;
}

}  // namespace

SupernaturalNumber supernatural(const ZdScale& scale) {
  SupernaturalNumber s;
  for (const Int& p : scale_primes(scale)) {
    Exponent e;
    if (scale.is_geometric()) {
      const auto& g = scale.geometric_data();
      if (determinant(g.base) % p == 0)
        e = Exponent::infinite();
      else
        e = Exponent::finite(valuation(determinant(g.prefix), p));
    } else {
      const unsigned depth = *scale.max_depth();
      const auto cur = valuation(scale.index(depth), p);
      const auto prev = valuation(scale.index(depth - 1), p);
      e = cur == prev ? Exponent::finite(cur) : Exponent::at_least(cur);
    }
    if (!e.is_zero()) s.factors.emplace_back(p, e);
  }
  return s;
}

ProfiniteType profinite_type(const ZdScale& scale, unsigned budget) {
  ProfiniteType type;
  type.dim = scale.dim();
  const std::size_t d = scale.dim();
  if (!scale.is_geometric()) {
    type.evidence_only = true;
    for (const Int& p : scale_primes(scale)) type.primes.push_back(PrimeType{p, explicit_exponents(scale, p)});
    return type;
  }
  const auto& g = scale.geometric_data();
  const std::size_t window = std::max<std::size_t>(d, 2);
  for (const Int& p : scale_primes(scale)) {
    const unsigned r = rank_at(g.base, p);
    const std::size_t free = d - r;
    PrimeType t{p, {}};
    if (free > 0) {
      std::vector<std::vector<unsigned long>> bottoms;
      std::vector<unsigned long> tops;
      IntMatrix level = g.prefix;
      bool settled = false;
      for (unsigned n = 1; n <= budget && !settled; ++n) {
        level = level * g.base;
        const auto vals = snf_valuations(level, p);
        bottoms.emplace_back(vals.begin(), vals.begin() + free);
        unsigned long top = 0;
        for (std::size_t i = free; i < d; ++i) top += vals[i];
        tops.push_back(top);
        if (bottoms.size() < window) continue;
        settled = true;
        for (std::size_t k = bottoms.size() - window + 1; k < bottoms.size(); ++k)
          if (bottoms[k] != bottoms.back() || (r > 0 && tops[k] <= tops[k - 1])) settled = false;
      }
      if (!settled)
        throw Error(Errc::NotStabilized, "finite exponents at p = " + to_string(p) + " did not settle within " +
                                             std::to_string(budget) + " levels");
      for (auto v : bottoms.back()) t.exponents.push_back(Exponent::finite(v));
    }
    for (unsigned i = 0; i < r; ++i) t.exponents.push_back(Exponent::infinite());
    std::sort(t.exponents.begin(), t.exponents.end(), exponent_less);
    type.primes.push_back(std::move(t));
  }
  return type;
}

std::optional<unsigned> min_generators(const ProfiniteType& type) {
  if (type.has_at_least()) return std::nullopt;
  unsigned best = 0;
  for (const auto& t : type.primes) {
    const auto nonzero = std::count_if(t.exponents.begin(), t.exponents.end(),
                                       [](const Exponent& e) { return !e.is_zero(); });
    best = std::max(best, static_cast<unsigned>(nonzero));
  }
  return best;
}

namespace {

std::set<Int> prime_union(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::set<Int> out(a.begin(), a.end());
  out.insert(b.begin(), b.end());
  return out;
}

// Folds per-prime outcomes: the first NotEqual wins, otherwise the first block.
struct Fold {
  ComparisonResult not_equal{Comparison::NotEqual, std::nullopt, ""};
  ComparisonResult blocked{Comparison::Inconclusive, std::nullopt, ""};
  bool saw_not_equal = false;
  bool saw_block = false;

  void add(Comparison c, const Int& p, std::string detail) {
    if (c == Comparison::NotEqual && !saw_not_equal) {
      saw_not_equal = true;
      not_equal.prime = p;
      not_equal.detail = std::move(detail);
    } else if (c == Comparison::Inconclusive && !saw_block) {
      saw_block = true;
      blocked.prime = p;
      blocked.detail = std::move(detail);
    }
  }
  ComparisonResult result() const {
    if (saw_not_equal) return not_equal;
    if (saw_block) return blocked;
    return {};
  }
};

std::string render_tuple(const std::vector<Exponent>& es) {
  std::string out = "(";
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? "," : "") + es[i].render();
  return out + ")";
}

// known: fully determined tuple; other: contains AtLeast bounds. Equal
// tuples are possible iff the determined entries of `other` occur in `known`
// and the rest of `known` can dominate the lower bounds pairwise.
bool could_match(const std::vector<Exponent>& known, const std::vector<Exponent>& other) {
  std::vector<Exponent> rest = known;
  std::vector<unsigned long> bounds;
  for (const auto& e : other) {
    if (e.is_at_least()) {
      bounds.push_back(e.value);
      continue;
    }
    auto it = std::find(rest.begin(), rest.end(), e);
    if (it == rest.end()) return false;
    rest.erase(it);
  }
  std::sort(rest.begin(), rest.end(), exponent_less);
  std::sort(bounds.begin(), bounds.end());
  for (std::size_t i = 0; i < bounds.size(); ++i)
    if (rest[i].is_finite() && rest[i].value < bounds[i]) return false;
  return true;
}

}  // namespace

ComparisonResult supernatural_equal(const SupernaturalNumber& a, const SupernaturalNumber& b) {
  std::vector<Int> pa, pb;
  for (const auto& f : a.factors) pa.push_back(f.first);
  for (const auto& f : b.factors) pb.push_back(f.first);
  Fold fold;
  for (const Int& p : prime_union(pa, pb)) {
    const Exponent ea = a.at(p), eb = b.at(p);
    const std::string detail = to_string(p) + "^" + ea.render() + " vs " + to_string(p) + "^" + eb.render();
    if (!ea.is_at_least() && !eb.is_at_least()) {
      if (ea != eb) fold.add(Comparison::NotEqual, p, detail);
      continue;
    }
    const Exponent& bound = ea.is_at_least() ? ea : eb;
    const Exponent& other = ea.is_at_least() ? eb : ea;
    if (other.is_finite() && other.value < bound.value)
      fold.add(Comparison::NotEqual, p, detail);
    else
      fold.add(Comparison::Inconclusive, p, detail);
  }
  return fold.result();
}

ComparisonResult type_equal(const ProfiniteType& a, const ProfiniteType& b) {
  std::vector<Int> pa, pb;
  for (const auto& t : a.primes) pa.push_back(t.prime);
  for (const auto& t : b.primes) pb.push_back(t.prime);
  const std::size_t len = std::max(a.dim, b.dim);
  auto padded = [len](std::vector<Exponent> es) {
    es.insert(es.begin(), len - es.size(), Exponent::finite(0));
    return es;
  };
  Fold fold;
  for (const Int& p : prime_union(pa, pb)) {
    const auto ta = padded(a.tuple_at(p).exponents);
    const auto tb = padded(b.tuple_at(p).exponents);
    const std::string detail = "at p = " + to_string(p) + ": " + render_tuple(ta) + " vs " + render_tuple(tb);
    const bool la = std::any_of(ta.begin(), ta.end(), [](const Exponent& e) { return e.is_at_least(); });
    const bool lb = std::any_of(tb.begin(), tb.end(), [](const Exponent& e) { return e.is_at_least(); });
    if (!la && !lb) {
      if (ta != tb) fold.add(Comparison::NotEqual, p, detail);
    } else if (la && lb) {
      fold.add(Comparison::Inconclusive, p, detail);
    } else {
      const bool possible = la ? could_match(tb, ta) : could_match(ta, tb);
      fold.add(possible ? Comparison::Inconclusive : Comparison::NotEqual, p, detail);
    }
  }
  return fold.result();
}

}  // namespace odo
