#include "odo/bigint.hpp"

namespace odo {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotNested: return "NotNested";
    case Errc::NotDecreasing: return "NotDecreasing";
    case Errc::DepthExceeded: return "DepthExceeded";
    case Errc::SizeGuard: return "SizeGuard";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::TowerMismatch: return "TowerMismatch";
    case Errc::NotBijective: return "NotBijective";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::NotStabilized: return "NotStabilized";
    case Errc::Parse: return "Parse";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

unsigned long valuation(const Int& n, const Int& p) {
  if (n == 0) throw Error(Errc::InvalidArgument, "valuation of zero");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Int power(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::optional<std::int64_t> to_int64(const Int& value) {
  if (!value.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value.get_si());
}

std::string to_string(const Int& value) { return value.get_str(); }

}  // namespace odo
