#pragma once

// Scales of Z^d: decreasing chains of full-rank sublattices. A geometric scale
// has levels A * M^n * Z^d; an explicit scale lists M_1, ..., M_N. Level 0 is
// always Z^d itself.

#include "odo/lattice.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace odo {

struct GeometricScale {
  IntMatrix prefix;
  IntMatrix base;
  friend bool operator==(const GeometricScale&, const GeometricScale&) = default;
};

struct ExplicitScale {
  std::vector<IntMatrix> matrices;
  friend bool operator==(const ExplicitScale&, const ExplicitScale&) = default;
};

class ZdScale {
 public:
  // Structural checks only (square, matching dimension, nonsingular).
  static ZdScale geometric(std::string name, IntMatrix base, std::optional<IntMatrix> prefix = std::nullopt);
  static ZdScale explicit_list(std::string name, std::vector<IntMatrix> matrices);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_geometric() const noexcept { return std::holds_alternative<GeometricScale>(kind_); }
  const GeometricScale& geometric_data() const { return std::get<GeometricScale>(kind_); }
  const ExplicitScale& explicit_data() const { return std::get<ExplicitScale>(kind_); }
  bool has_prefix() const;

  // Deepest represented level; nullopt for geometric scales.
  std::optional<unsigned> max_depth() const;
  // Generator matrix of level n (identity at n = 0).
  IntMatrix gamma(unsigned n) const;
  // [Z^d : level n] = |det gamma(n)|.
  Int index(unsigned n) const;

  friend bool operator==(const ZdScale&, const ZdScale&) = default;

 private:
  ZdScale(std::string name, std::size_t dim, std::variant<GeometricScale, ExplicitScale> kind)
      : name_(std::move(name)), dim_(dim), kind_(std::move(kind)) {}

  std::string name_;
  std::size_t dim_ = 0;
  std::variant<GeometricScale, ExplicitScale> kind_;
};

// Checks nesting and proper decrease; returns index(1), ..., index(levels)
// (explicit scales: every represented level).
std::vector<Int> validate(const ZdScale& scale, unsigned levels = 8);

struct TrivialityCertificate {
  enum class Status { Certified, NotTrivial, EvidenceOnly };
  Status status = Status::EvidenceOnly;
  std::string rule;
  // EvidenceOnly: checked depth and a shortest nonzero vector of that level.
  unsigned depth = 0;
  IntVector shortest_vector;
  Int shortest_norm_squared;
};

const char* status_name(TrivialityCertificate::Status status);

TrivialityCertificate certify_trivial_intersection(const ZdScale& scale);

// Exhaustive search for a nonzero lattice vector of minimal Euclidean norm,
// d <= 4. Throws SizeGuard when the search box is unreasonably large.
IntVector shortest_vector(const IntMatrix& generators);

}  // namespace odo
