#include "odo/scale.hpp"

#include <algorithm>
#include <functional>

namespace odo {

namespace {

void check_square(const IntMatrix& m, std::size_t dim, const std::string& what) {
  if (m.rows() != dim || m.cols() != dim)
    throw Error(Errc::InvalidArgument, what + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
  if (determinant(m) == 0) throw Error(Errc::SingularMatrix, what + " is singular");
}

bool triangular_expanding(const IntMatrix& m) {
  if (!m.is_lower_triangular() && !m.is_upper_triangular()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (abs(m(i, i)) < 2) return false;
  return true;
}

Int norm_squared(const IntVector& v) {
  Int s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

}  // namespace

ZdScale ZdScale::geometric(std::string name, IntMatrix base, std::optional<IntMatrix> prefix) {
  const std::size_t dim = base.rows();
  if (dim == 0) throw Error(Errc::InvalidArgument, "scale dimension must be positive");
  check_square(base, dim, "matrix");
  IntMatrix a = prefix ? std::move(*prefix) : IntMatrix::identity(dim);
  check_square(a, dim, "prefix");
  return ZdScale(std::move(name), dim, GeometricScale{std::move(a), std::move(base)});
}

ZdScale ZdScale::explicit_list(std::string name, std::vector<IntMatrix> matrices) {
  if (matrices.empty()) throw Error(Errc::InvalidArgument, "explicit scale needs at least one matrix");
  const std::size_t dim = matrices.front().rows();
  if (dim == 0) throw Error(Errc::InvalidArgument, "scale dimension must be positive");
  for (std::size_t i = 0; i < matrices.size(); ++i)
    check_square(matrices[i], dim, "matrices[" + std::to_string(i) + "]");
  return ZdScale(std::move(name), dim, ExplicitScale{std::move(matrices)});
}

bool ZdScale::has_prefix() const {
  return is_geometric() && geometric_data().prefix != IntMatrix::identity(dim_);
}

std::optional<unsigned> ZdScale::max_depth() const {
  if (is_geometric()) return std::nullopt;
  return static_cast<unsigned>(explicit_data().matrices.size());
}

IntMatrix ZdScale::gamma(unsigned n) const {
  if (n == 0) return IntMatrix::identity(dim_);
  if (is_geometric()) {
    const auto& g = geometric_data();
    return g.prefix * matrix_power(g.base, n);
  }
  const auto& list = explicit_data().matrices;
  if (n > list.size())
    throw Error(Errc::DepthExceeded, "level " + std::to_string(n) + " beyond explicit depth " +
                                         std::to_string(list.size()));
  return list[n - 1];
}

Int ZdScale::index(unsigned n) const { return abs(determinant(gamma(n))); }

std::vector<Int> validate(const ZdScale& scale, unsigned levels) {
  std::vector<Int> indices;
  if (scale.is_geometric()) {
    const auto& g = scale.geometric_data();
    const Int det_base = abs(determinant(g.base));
    if (det_base < 2)
      throw Error(Errc::NotDecreasing, "|det matrix| = " + to_string(det_base) + ", levels never shrink");
    const Int det_prefix = abs(determinant(g.prefix));
    Int idx = det_prefix;
    for (unsigned n = 1; n <= levels; ++n) {
      idx *= det_base;
      indices.push_back(idx);
    }
    return indices;
  }
  const auto& list = scale.explicit_data().matrices;
  IntMatrix previous = IntMatrix::identity(scale.dim());
  Int previous_index = 1;
  for (std::size_t n = 0; n < list.size(); ++n) {
    for (std::size_t j = 0; j < scale.dim(); ++j)
      if (!solve_integral(previous, list[n].column(j)))
        throw Error(Errc::NotNested, "level " + std::to_string(n + 1) + " is not contained in level " +
                                         std::to_string(n));
    const Int idx = abs(determinant(list[n]));
    if (idx == previous_index)
      throw Error(Errc::NotDecreasing,
                  "levels " + std::to_string(n) + " and " + std::to_string(n + 1) + " coincide");
    indices.push_back(idx);
    previous = list[n];
    previous_index = idx;
  }
  return indices;
}

const char* status_name(TrivialityCertificate::Status status) {
  switch (status) {
    case TrivialityCertificate::Status::Certified: return "certified";
    case TrivialityCertificate::Status::NotTrivial: return "not-trivial";
    case TrivialityCertificate::Status::EvidenceOnly: return "evidence-only";
  }
  return "unknown";
}

TrivialityCertificate certify_trivial_intersection(const ZdScale& scale) {
  TrivialityCertificate cert;
  if (scale.is_geometric()) {
    const IntMatrix& base = scale.geometric_data().base;
    if (triangular_expanding(base)) {
      cert.status = TrivialityCertificate::Status::Certified;
      cert.rule = "triangular matrix with all diagonal entries of absolute value >= 2";
      return cert;
    }
    switch (unit_factor_test(charpoly(base))) {
      case UnitFactor::NoUnitFactor:
        cert.status = TrivialityCertificate::Status::Certified;
        cert.rule = "characteristic polynomial has no irreducible factor with constant term +-1";
        return cert;
      case UnitFactor::HasUnitFactor:
        cert.status = TrivialityCertificate::Status::NotTrivial;
        cert.rule = "characteristic polynomial has an irreducible factor with constant term +-1";
        return cert;
      case UnitFactor::Unknown:
        throw Error(Errc::UnsupportedDegree, "characteristic polynomial degree " + std::to_string(scale.dim()) +
                                                 " exceeds the factoring bound");
    }
  }
  const unsigned depth = *scale.max_depth();
  cert.status = TrivialityCertificate::Status::EvidenceOnly;
  cert.rule = "finitely many levels cannot certify an infinite intersection";
  cert.depth = depth;
  cert.shortest_vector = shortest_vector(scale.gamma(depth));
  cert.shortest_norm_squared = norm_squared(cert.shortest_vector);
  return cert;
}

IntVector shortest_vector(const IntMatrix& generators) {
  const std::size_t d = generators.rows();
  if (d > 4) throw Error(Errc::UnsupportedDegree, "shortest vector search supports d <= 4");
  const HermiteLattice lattice(generators);
  const IntMatrix& h = lattice.basis();

  IntVector best = h.column(0);
  Int best_norm = norm_squared(best);
  for (std::size_t j = 0; j < d; ++j) {
    for (const IntMatrix* m : {&h, &generators}) {
      IntVector c = m->column(j);
      Int n = norm_squared(c);
      if (n < best_norm) {
        best_norm = n;
        best = c;
      }
    }
  }
  // every coordinate of a shorter vector lies in [-R, R]
  Int radius;
  mpz_sqrt(radius.get_mpz_t(), best_norm.get_mpz_t());

  constexpr unsigned long kVisitBound = 20'000'000;
  unsigned long visited = 0;
  IntVector x(d), v(d);
  // v = H x with H lower triangular: v_i = sum_{j<=i} H(i,j) x_j
  std::function<void(std::size_t, const Int&)> search = [&](std::size_t i, const Int& partial_norm) {
    if (i == d) {
      if (partial_norm != 0 && partial_norm < best_norm) {
        best_norm = partial_norm;
        best = v;
      }
      return;
    }
    Int s = 0;
    for (std::size_t j = 0; j < i; ++j) s += h(i, j) * x[j];
    Int lo = -floor_div(radius + s, h(i, i));  // ceil((-R - s) / h_ii)
    Int hi = floor_div(radius - s, h(i, i));
    for (Int xi = lo; xi <= hi; ++xi) {
      if (++visited > kVisitBound) throw Error(Errc::SizeGuard, "shortest vector search box too large");
      x[i] = xi;
      v[i] = s + h(i, i) * xi;
      Int next = partial_norm + v[i] * v[i];
      if (next > best_norm) continue;
      search(i + 1, next);
    }
  };
  search(0, Int(0));
  // canonical sign: first nonzero coordinate positive
  auto first = std::find_if(best.begin(), best.end(), [](const Int& c) { return c != 0; });
  if (first != best.end() && *first < 0) best = -best;
  return best;
}

}  // namespace odo
