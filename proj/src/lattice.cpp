#include "odo/lattice.hpp"

#include "odo/polyfactor.hpp"

#include <algorithm>
#include <random>

namespace odo {

namespace {

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(Errc::InvalidArgument, std::string(what) + ": matrix is not square");
}

void require_nonsingular(const IntMatrix& m, const char* what) {
  require_square(m, what);
  if (m.rows() == 0 || determinant(m) == 0)
    throw Error(Errc::SingularMatrix, std::string(what) + ": determinant is zero");
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

// col_dst -= q * col_src
void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> converted;
  for (const auto& r : rows) {
    IntVector row;
    for (long x : r) row.emplace_back(x);
    converted.push_back(std::move(row));
  }
  return from_rows(converted);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool IntMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

bool IntMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < std::min(i, cols_); ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::InvalidArgument, "matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw Error(Errc::InvalidArgument, "matrix-vector dimension mismatch");
  IntVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::InvalidArgument, "matrix sum dimension mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned long exponent) {
  require_square(m, "matrix_power");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(Errc::InvalidArgument, "vector size mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(Errc::InvalidArgument, "vector size mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Int determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      swap_rows(a, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntVector SNFData::elementary_divisors() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SNFData snf(const IntMatrix& m) {
  require_nonsingular(m, "snf");
  const std::size_t n = m.rows();
  SNFData out{m, IntMatrix::identity(n), IntMatrix::identity(n)};
  IntMatrix& d = out.D;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the trailing block, lowest row-major index
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == n || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      swap_rows(d, t, pi);
      swap_rows(out.U, t, pi);
      swap_cols(d, t, pj);
      swap_cols(out.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_axpy(d, i, t, q);
        row_axpy(out.U, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_axpy(d, j, t, q);
        col_axpy(out.V, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold any offending row into the pivot row and retry
      std::size_t bad_row = n;
      for (std::size_t i = t + 1; i < n && bad_row == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == n) break;
      row_axpy(d, t, bad_row, Int(-1));
      row_axpy(out.U, t, bad_row, Int(-1));
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) {
        d(t, j) = -d(t, j);
        out.U(t, j) = -out.U(t, j);
      }
    }
  }
  return out;
}

IntMatrix hnf(const IntMatrix& m) {
  require_nonsingular(m, "hnf");
  const std::size_t n = m.rows();
  IntMatrix h = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (;;) {
      std::size_t pj = n;
      for (std::size_t j = i; j < n; ++j) {
        if (h(i, j) == 0) continue;
        if (pj == n || abs(h(i, j)) < abs(h(i, pj))) pj = j;
      }
      swap_cols(h, i, pj);
      bool clean = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (h(i, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, i).get_mpz_t());
        col_axpy(h, j, i, q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(i, i) < 0)
      for (std::size_t r = 0; r < n; ++r) h(r, i) = -h(r, i);
    for (std::size_t j = 0; j < i; ++j) {
      Int q = floor_div(h(i, j), h(i, i));
      if (q != 0) col_axpy(h, j, i, q);
    }
  }
  return h;
}

HermiteLattice::HermiteLattice(const IntMatrix& generators) : basis_(hnf(generators)) {}

IntVector HermiteLattice::reduce(IntVector v) const {
  const std::size_t n = basis_.rows();
  if (v.size() != n) throw Error(Errc::InvalidArgument, "residue vector has wrong dimension");
  for (std::size_t i = 0; i < n; ++i) {
    Int q = floor_div(v[i], basis_(i, i));
    if (q == 0) continue;
    for (std::size_t r = i; r < n; ++r) v[r] -= q * basis_(r, i);
  }
  return v;
}

bool HermiteLattice::contains(const IntVector& v) const {
  const IntVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

Int HermiteLattice::index() const {
  Int idx = 1;
  for (std::size_t i = 0; i < basis_.rows(); ++i) idx *= basis_(i, i);
  return idx;
}

IntVector hnf_reduce(const IntMatrix& m, const IntVector& v) { return HermiteLattice(m).reduce(v); }

std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& v) {
  const SNFData s = snf(m);
  if (v.size() != m.rows()) throw Error(Errc::InvalidArgument, "right-hand side has wrong dimension");
  // M x = v  <=>  D (V^-1 x) = U v
  IntVector y = s.U * v;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!mpz_divisible_p(y[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), y[i].get_mpz_t(), s.D(i, i).get_mpz_t());
  }
  return s.V * y;
}

IntVector charpoly(const IntMatrix& m) {
  require_square(m, "charpoly");
  // Faddeev-LeVerrier; every division below is exact over Z.
  const std::size_t n = m.rows();
  IntVector c(n + 1);
  c[n] = 1;
  IntMatrix acc(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * acc;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    acc = std::move(next);
    IntMatrix prod = m * acc;
    Int trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    Int t = -trace;
    mpz_divexact_ui(c[n - k].get_mpz_t(), t.get_mpz_t(), k);
  }
  return c;
}

IntMatrix evaluate_at(const IntVector& coefficients, const IntMatrix& m) {
  require_square(m, "evaluate_at");
  IntMatrix result(m.rows(), m.cols());
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    result = result * m;
    for (std::size_t i = 0; i < m.rows(); ++i) result(i, i) += coefficients[k];
  }
  return result;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Int pollard_brent(const Int& n, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::uniform_int_distribution<unsigned long> dist(1, 1UL << 40);
  for (;;) {
    Int y = Int(static_cast<unsigned long>(dist(rng))) % n;
    Int c = Int(static_cast<unsigned long>(dist(rng))) % n;
    const unsigned long m = 128;
    Int g = 1, q = 1, x, ys;
    unsigned long r = 1;
    auto step = [&](Int& v) {
      v = v * v + c;
      v %= n;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        Int diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Int& n, std::vector<Int>& primes, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Int f = pollard_brent(n, rng);
  split_into(f, primes, rng);
  split_into(n / f, primes, rng);
}

}  // namespace

PrimeFactorization factor_integer(const Int& n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "factor_integer expects a positive integer");
  std::vector<Int> primes;
  Int rest = n;
  constexpr unsigned long kTrialBound = 10000;
  for (unsigned long p = 2; p <= kTrialBound && rest > 1; ++p) {
    if (Int(p) * Int(p) > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      primes.emplace_back(p);
      rest /= p;
    }
  }
  if (rest > 1) {
    std::mt19937_64 rng(0x5eedULL);
    split_into(rest, primes, rng);
  }
  std::sort(primes.begin(), primes.end());
  PrimeFactorization out;
  for (const Int& p : primes) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().exponent;
    else
      out.push_back({p, 1});
  }
  return out;
}

Int product(const PrimeFactorization& factorization) {
  Int r = 1;
  for (const auto& [p, e] : factorization) r *= power(p, e);
  return r;
}

UnitFactor unit_factor_test(const IntVector& monic_coefficients) {
  auto factors = poly::irreducible_factors(monic_coefficients);
  if (!factors) return UnitFactor::Unknown;
  for (const auto& f : *factors)
    if (f.front() == 1 || f.front() == -1) return UnitFactor::HasUnitFactor;
  return UnitFactor::NoUnitFactor;
}

}  // namespace odo
