#pragma once
// Algebras of square matrices given by a spanning list: radicals, splitting elements,
// invertible elements.  Used for endomorphism rings of modules and complexes.

#include "tilt/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tilt {

// Polynomials with coefficients low degree first.
using Poly = std::vector<Scalar>;

Poly minimal_polynomial(const Matrix& x);
// Roots lying in the base field (for the rationals: found through the rational root test).
std::vector<Scalar> roots_in_field(const Poly& p, Field f);

Matrix matrix_power(const Matrix& x, std::size_t k);
bool is_nilpotent(const Matrix& x);

// Basis of the Jacobson radical of the algebra spanned by `basis` (which must be closed under
// products and contain the identity).  Valid in every characteristic.
std::vector<Matrix> radical_basis(const std::vector<Matrix>& basis, Field f);

// Some element of the span that is neither invertible nor nilpotent; absent when none was found.
// When the field is finite and the quotient by the radical is small, the search is exhaustive.
std::optional<Matrix> find_splitting_element(const std::vector<Matrix>& basis, const std::vector<Matrix>& radical,
                                             Field f, std::uint64_t seed);

// Is some linear combination of the block lists invertible in every block?
bool find_invertible(const std::vector<std::vector<Matrix>>& basis, Field f, std::uint64_t seed);

// Flatten / coordinates helpers.
Vec flatten(const Matrix& m);
// Independent subset spanning the same space, as a list of indices.
std::vector<std::size_t> independent_indices(const std::vector<Vec>& vecs, Field f, std::size_t len);

}  // namespace tilt
