#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace odo {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;

enum class Errc {
  SingularMatrix,
  NotNested,
  NotDecreasing,
  DepthExceeded,
  SizeGuard,
  LevelMismatch,
  TowerMismatch,
  NotBijective,
  UnsupportedDegree,
  NotStabilized,
  Parse,
  InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Quotient rounded toward -infinity; b != 0.
Int floor_div(const Int& a, const Int& b);
// Representative in [0, |b|).
Int floor_mod(const Int& a, const Int& b);
// Largest k with p^k | n, for n != 0 and p >= 2.
unsigned long valuation(const Int& n, const Int& p);
Int power(const Int& base, unsigned long exponent);
std::optional<std::int64_t> to_int64(const Int& value);
std::string to_string(const Int& value);

}  // namespace odo
