#ifndef SYMCHAR2_MATRIX_POLY_HPP
#define SYMCHAR2_MATRIX_POLY_HPP

#include <cstdint>
#include <vector>

#include "symchar2/matrix.hpp"
#include "symchar2/poly.hpp"

namespace symchar2 {

/// Companion matrix: ones on the subdiagonal, last column holds the (negated) low coefficients of monic f.
Matrix companion(const Poly& f);
/// Companion blocks of each modulus on the diagonal, in list order.
Matrix block_companion(const std::vector<Poly>& moduli);

/// Monic minimal polynomial: lcm of the Krylov annihilators of the standard basis vectors.
Poly min_poly(const Matrix& m);
/// det(X*I - M) by Berkowitz's division-free recurrence.
Poly char_poly(const Matrix& m);

/// C(i, j) mod 2: 1 iff the bits of j are contained in those of i.
constexpr int binom_parity(std::uint64_t i, std::uint64_t j) { return j <= i && (i & j) == j ? 1 : 0; }

}  // namespace symchar2

#endif
