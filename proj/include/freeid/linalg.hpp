#pragma once

#include "freeid/rational.hpp"

#include <vector>

namespace freeid {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<BigInt>>;

// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt bareiss_determinant(IntMatrix a);

// Determinant of a rational matrix: rows are cleared of denominators first.
Rational determinant(const RationalMatrix& a);

// Solves A x = b exactly for square nonsingular A with fraction-free
// elimination. Throws StructureError when A is singular.
std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace freeid
