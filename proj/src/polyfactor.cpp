#include "odo/polyfactor.hpp"

#include "odo/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace odo::poly {

namespace {

using ModPoly = std::vector<std::int64_t>;

struct Field {
  std::int64_t p;

  std::int64_t norm(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t result = 1, base = norm(a), e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  ModPoly trim(ModPoly f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
  }
  ModPoly reduce(const IntPoly& f) const {
    ModPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      Int r = floor_mod(f[i], Int(static_cast<long>(p)));
      out[i] = r.get_si();
    }
    return trim(out);
  }
  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = norm(out[i] - b[i]);
    return trim(out);
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return trim(out);
  }
  // quotient and remainder; b nonzero
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
    a = trim(a);
    if (a.size() < b.size()) return {{}, a};
    const std::int64_t lead_inv = inv(b.back());
    ModPoly q(a.size() - b.size() + 1, 0);
    for (std::size_t k = a.size(); k-- >= b.size();) {
      const std::int64_t c = mul(a[k], lead_inv);
      q[k - (b.size() - 1)] = c;
      if (c != 0)
        for (std::size_t j = 0; j < b.size(); ++j) {
          const std::size_t idx = k - (b.size() - 1) + j;
          a[idx] = norm(a[idx] - mul(c, b[j]));
        }
      if (k == 0) break;
    }
    return {trim(q), trim(a)};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly f) const {
    if (f.empty()) return f;
    const std::int64_t li = inv(f.back());
    for (auto& c : f) c = mul(c, li);
    return f;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = gcd (monic)
  void ext_gcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::int64_t li = inv(r0.back());
    for (auto& c : s0) c = mul(c, li);
    for (auto& c : t0) c = mul(c, li);
    s = trim(s0);
    t = trim(t0);
  }
  ModPoly derivative(const ModPoly& f) const {
    if (f.size() <= 1) return {};
    ModPoly out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = norm(static_cast<std::int64_t>(i) % p * f[i]);
    return trim(out);
  }
  ModPoly powmod(ModPoly base, const Int& e, const ModPoly& m) const {
    ModPoly result{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }
};

bool is_one(const ModPoly& f) { return f.size() == 1 && f[0] == 1; }

// Cantor-Zassenhaus equal-degree splitting of a product of degree-d irreducibles.
void equal_degree_split(const Field& F, const ModPoly& g, std::size_t d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  const Int exponent = (power(Int(static_cast<long>(F.p)), d) - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coeff(0, F.p - 1);
  for (;;) {
    ModPoly a(n);
    for (auto& c : a) c = coeff(rng);
    a = F.trim(a);
    if (a.size() <= 1) continue;
    ModPoly b = F.sub(F.powmod(a, exponent, g), ModPoly{1});
    ModPoly h = F.gcd(b, g);
    if (h.size() > 1 && h.size() < g.size()) {
      equal_degree_split(F, h, d, rng, out);
      equal_degree_split(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const Field& F, ModPoly f) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0xfac7ULL);
  const ModPoly x{0, 1};
  ModPoly h = x;
  for (std::size_t i = 1; 2 * i <= f.size() - 1; ++i) {
    h = F.powmod(h, Int(static_cast<long>(F.p)), f);
    ModPoly g = F.gcd(F.sub(h, x), f);
    if (!is_one(g)) {
      equal_degree_split(F, g, i, rng, out);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
    if (f.size() <= 1) break;
  }
  if (f.size() > 1) out.push_back(F.monic(f));
  return out;
}

IntPoly to_int(const ModPoly& f) {
  IntPoly out;
  for (auto c : f) out.emplace_back(static_cast<long>(c));
  return out;
}

IntPoly mod_coeffs(IntPoly f, const Int& m) {
  for (auto& c : f) c = floor_mod(c, m);
  return trim(f);
}

// Lift T = g*q (mod p) to T = g*q (mod p^k); g, q monic and coprime mod p.
void hensel_lift(const Field& F, const IntPoly& target, IntPoly& g, IntPoly& q, unsigned k) {
  const Int p(static_cast<long>(F.p));
  const ModPoly gp = F.reduce(g), qp = F.reduce(q);
  ModPoly s, t;
  F.ext_gcd(gp, qp, s, t);
  Int pj = p;
  const Int pk = power(p, k);
  for (unsigned j = 1; j < k; ++j) {
    IntPoly diff = mod_coeffs(
        [&] {
          IntPoly gq = multiply(g, q);
          IntPoly d(std::max(target.size(), gq.size()));
          for (std::size_t i = 0; i < target.size(); ++i) d[i] += target[i];
          for (std::size_t i = 0; i < gq.size(); ++i) d[i] -= gq[i];
          return d;
        }(),
        pk);
    for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    const ModPoly e = F.reduce(diff);
    const ModPoly dg = F.rem(F.mul(t, e), gp);
    const ModPoly dq = F.divmod(F.sub(e, F.mul(dg, qp)), gp).first;
    auto bump = [&](IntPoly& f, const ModPoly& delta) {
      for (std::size_t i = 0; i < delta.size(); ++i) {
        if (i >= f.size()) f.resize(i + 1);
        f[i] += pj * Int(static_cast<long>(delta[i]));
      }
      f = mod_coeffs(f, pk);
    };
    bump(g, dg);
    bump(q, dq);
    pj *= p;
  }
}

IntPoly symmetric(IntPoly f, const Int& m) {
  const Int half = m / 2;
  for (auto& c : f) {
    c = floor_mod(c, m);
    if (c > half) c -= m;
  }
  return trim(f);
}

IntPoly derivative(const IntPoly& f) {
  if (f.size() <= 1) return {};
  IntPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
  return trim(out);
}

// gcd over Q, returned monic with rational coefficients.
std::vector<Rational> rational_gcd(const IntPoly& a, const IntPoly& b) {
  auto to_q = [](const IntPoly& f) {
    std::vector<Rational> out;
    for (const auto& c : f) out.emplace_back(c);
    return out;
  };
  auto qtrim = [](std::vector<Rational>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  std::vector<Rational> r0 = to_q(a), r1 = to_q(b);
  qtrim(r0);
  qtrim(r1);
  while (!r1.empty()) {
    std::vector<Rational> r = r0;
    while (r.size() >= r1.size()) {
      const Rational c = r.back() / r1.back();
      const std::size_t shift = r.size() - r1.size();
      for (std::size_t j = 0; j < r1.size(); ++j) r[shift + j] -= c * r1[j];
      r.pop_back();
      qtrim(r);
    }
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  const Rational lead = r0.back();
  for (auto& c : r0) c /= lead;
  return r0;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

IntPoly trim(IntPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& monic_den) {
  IntPoly r = trim(num);
  const IntPoly& d = monic_den;
  if (d.empty() || d.back() != 1) throw Error(Errc::InvalidArgument, "divisor must be monic");
  if (r.size() < d.size()) {
    if (r.empty()) return IntPoly{};
    return std::nullopt;
  }
  IntPoly q(r.size() - d.size() + 1);
  for (std::size_t k = r.size(); k-- >= d.size();) {
    const Int c = r[k];
    q[k - (d.size() - 1)] = c;
    if (c != 0)
      for (std::size_t j = 0; j < d.size(); ++j) r[k - (d.size() - 1) + j] -= c * d[j];
    if (k == 0) break;
  }
  if (!trim(r).empty()) return std::nullopt;
  return trim(q);
}

std::optional<std::vector<IntPoly>> irreducible_factors(const IntPoly& monic) {
  const IntPoly f = trim(monic);
  if (f.empty() || f.back() != 1) throw Error(Errc::InvalidArgument, "polynomial must be monic");
  const std::size_t degree = f.size() - 1;
  if (degree > kMaxFactorDegree) return std::nullopt;
  if (degree == 0) return std::vector<IntPoly>{};

  // square-free part; a monic rational divisor of a monic integer polynomial is integral
  IntPoly sq = f;
  if (degree > 1) {
    const auto g = rational_gcd(f, derivative(f));
    if (g.size() > 1) {
      IntPoly gi;
      for (const auto& c : g) {
        if (c.get_den() != 1) throw Error(Errc::InvalidArgument, "non-integral square-free divisor");
        gi.push_back(c.get_num());
      }
      sq = *divide_exact(f, gi);
    }
  }
  const std::size_t n = sq.size() - 1;
  if (n == 1) return std::vector<IntPoly>{sq};

  // prime keeping sq square-free
  Field F{3};
  for (;; F.p += 2) {
    if (!is_prime(Int(static_cast<long>(F.p)))) continue;
    const ModPoly fp = F.reduce(sq);
    if (is_one(F.gcd(fp, F.derivative(fp)))) break;
  }
  std::vector<ModPoly> modular = factor_mod_p(F, F.reduce(sq));
  std::vector<IntPoly> result;
  if (modular.size() == 1) {
    result.push_back(sq);
    return result;
  }

  // Mignotte-style bound on factor coefficients, then lift past 2B
  Int max_coeff = 0;
  for (const auto& c : sq) max_coeff = std::max(max_coeff, Int(abs(c)));
  const Int bound = power(Int(2), n) * Int(static_cast<unsigned long>(n + 1)) * max_coeff;
  const Int p(static_cast<long>(F.p));
  unsigned k = 1;
  while (power(p, k) <= 2 * bound) ++k;
  const Int pk = power(p, k);

  std::vector<IntPoly> lifted;
  IntPoly target = sq;
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    IntPoly g = to_int(modular[i]);
    ModPoly rest{1};
    for (std::size_t j = i + 1; j < modular.size(); ++j) rest = F.mul(rest, modular[j]);
    IntPoly q = to_int(rest);
    hensel_lift(F, target, g, q, k);
    lifted.push_back(g);
    target = q;
  }
  lifted.push_back(target);

  // recombination over subsets of increasing size
  IntPoly remaining = sq;
  std::vector<IntPoly> pool = lifted;
  for (std::size_t s = 1; 2 * s <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      IntPoly cand{1};
      for (auto i : idx) cand = mod_coeffs(multiply(cand, pool[i]), pk);
      cand = symmetric(cand, pk);
      if (cand.back() == 1 && (remaining.front() == 0 ||
                               (cand.front() != 0 &&
                                mpz_divisible_p(remaining.front().get_mpz_t(), cand.front().get_mpz_t())))) {
        if (auto quotient = divide_exact(remaining, cand)) {
          result.push_back(cand);
          remaining = *quotient;
          for (std::size_t i = s; i-- > 0;) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx[i]));
          found = true;
          break;
        }
      }
      // next combination
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == pool.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (remaining.size() > 1) result.push_back(remaining);
  std::sort(result.begin(), result.end(), poly_less);
  return result;
}

}  // namespace odo::poly
