#ifndef SYMCHAR2_BILINEAR_HPP
#define SYMCHAR2_BILINEAR_HPP

#include <cstddef>

#include "symchar2/matrix.hpp"

namespace symchar2 {

struct FormClass {
    bool alternating = false;
    bool nondegenerate = false;
    bool diagonal_all_squares = false;
};

/// Basis-level classification of a symmetric Gram matrix. Throws NotSymmetric.
FormClass classify(const Matrix& gram);

/// Nonzero, non-degenerate, non-alternating, with square diagonal: exactly the forms isometric to the unit form.
bool is_unit_certifiable(const Matrix& gram);

/**
 * Result of the characteristic-two Gauss reduction of a Gram matrix S.
 *
 * The rows of U are the coefficient vectors of linear forms phi_1..phi_r with S = U^T U.
 * Q extends U to an invertible matrix by appending standard basis rows, and P = Q^-1, so that
 * P^T S P = diag(I_r, 0). When r = n the columns of P are an orthonormal basis.
 */
struct ReductionResult {
    Matrix U;
    Matrix Q;
    Matrix P;
    std::size_t rank = 0;
};

/// Peels square diagonal pivots one at a time; alternating residues are split off as hyperbolic pairs and folded
/// into an existing phi with the three-square identity. Throws NotSymmetric, NonSquarePivot, ReductionFailed.
ReductionResult gauss_reduce(const Matrix& gram);

enum class CongruenceMode {
    ToIdentity,     ///< Q^T S Q = I
    Factorization,  ///< Q^T Q = S
};

bool congruence_check(const Matrix& gram, const Matrix& q, CongruenceMode mode);

}  // namespace symchar2

#endif
