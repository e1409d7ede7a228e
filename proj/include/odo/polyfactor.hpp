#pragma once

// Factorization of monic integer polynomials of small degree: square-free
// reduction, factorization modulo a prime, Hensel lifting and recombination.

#include "odo/bigint.hpp"

#include <optional>
#include <vector>

namespace odo::poly {

// Coefficients lowest degree first, no trailing zeros (the zero polynomial is empty).
using IntPoly = IntVector;

IntPoly trim(IntPoly f);
IntPoly multiply(const IntPoly& a, const IntPoly& b);
// num / den over Z when den is monic and divides num exactly.
std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& monic_den);

// Distinct monic irreducible factors over Z, sorted by (degree, coefficients).
// nullopt when the degree exceeds kMaxFactorDegree.
std::optional<std::vector<IntPoly>> irreducible_factors(const IntPoly& monic);

}  // namespace odo::poly
