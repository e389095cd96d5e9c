#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monstrous/bigint.hpp"

namespace monstrous::lattice {

/// Dense integer matrix, row major.
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntMatrix& m);
/// Throws std::overflow_error when an entry does not fit in 64 bits.
IntMatrix to_int(const BigMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(BigMatrix m);
BigInt determinant(const IntMatrix& m);

/// Row Hermite normal form of the lattice spanned by the rows: the nonzero
/// rows are returned, upper echelon with positive pivots and entries above
/// each pivot reduced into [0, pivot).
BigMatrix hermite_normal_form(BigMatrix rows);

/// Invariant factors d_1 | d_2 | ... of a matrix (zeros for rank defect).
std::vector<BigInt> smith_invariants(BigMatrix m);

/// Integer x with x * basis = v, for a square upper-triangular basis
/// (as produced by hermite_normal_form); nullopt when v is not in the span.
std::optional<std::vector<std::int64_t>> triangular_coordinates(const IntMatrix& basis,
                                                                const std::vector<std::int64_t>& v);

}  // namespace monstrous::lattice
