#pragma once

#include "prat/integer.hpp"

#include <vector>

namespace prat {

/// Dense row-major matrices over Z and Q. Sizes here never exceed ~8, so
/// nested vectors are fine.
using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

IntMatrix identity_int(std::size_t n);
RatMatrix identity_rat(std::size_t n);

/// Fraction-free (Bareiss) determinant.
Integer determinant(IntMatrix m);
Rational determinant(const RatMatrix& m);

/// Gauss-Jordan inverse; throws DomainError when singular.
RatMatrix inverse(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace prat
