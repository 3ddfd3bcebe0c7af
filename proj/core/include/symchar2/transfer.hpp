#ifndef SYMCHAR2_TRANSFER_HPP
#define SYMCHAR2_TRANSFER_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "symchar2/extension.hpp"
#include "symchar2/matrix.hpp"

/**
 * @file transfer.hpp
 * @brief Linear forms s on quotient algebras k[X]/(f) and their transfers (x, y) -> s(xy).
 *
 * A form is stored block by block: for each block modulus f_i it keeps s on the power basis
 * 1, alpha, ..., alpha^(deg f_i - 1). Any other element is reduced mod f_i first. Blocks of a
 * direct sum multiply componentwise, so the Gram matrix is block diagonal.
 */

namespace symchar2 {

enum class BlockClaim { Unit, Hyperbolic };

std::string_view to_string(BlockClaim c);

struct FormBlock {
    Poly modulus;
    std::vector<Scalar> values;
    BlockClaim claim = BlockClaim::Unit;
};

struct TransferForm {
    Field field;
    std::vector<FormBlock> blocks;

    std::size_t dimension() const;
    /// Product of the block moduli.
    Poly modulus() const;
};

/// s(alpha^(2m-1)) = 1 and zero elsewhere on k[X]/(g), g in k[X^2] monic of degree 2m >= 2. Throws NotEvenPolynomial.
TransferForm even_form(const Poly& g);
/// t((gamma - a)^j) = 1 for j < m on F[X]/((X - a)^m), where F is the field of a.
TransferForm sep_local_form(const Scalar& a, unsigned m);
/// Tr_{L/k} composed with sep_local_form on L = k[Y]/(pi), block modulus pi^m. Throws InseparableCore.
TransferForm sep_power_form(const Poly& pi, unsigned m);
/// t(gamma^(2^n)) = t(gamma^(2^n m - 1)) = 1 on F[X]/((X^(2^n) - a)^m). Throws SquareParameter, BadMultiplicity.
TransferForm insep_local_form(const Scalar& a, unsigned n, unsigned m);
/// Tr_{L/k} composed with the local form above, block modulus pi(X^(2^n))^m. Throws InseparableCore, BadMultiplicity.
TransferForm insep_power_form(const Poly& pi, unsigned n, unsigned m);
/// s(1) = 1 and zero elsewhere on k[X]/(h^2), h(0) != 0. Throws NotSquareShape, ZeroConstantTerm.
TransferForm square_block_form(const Poly& g);
/// Evaluation at 0 on k[X]/(X).
TransferForm point_form(const Field& k);
/// Concatenates blocks; moduli must be pairwise coprime. Throws NotCoprimeBlocks.
TransferForm direct_sum(const std::vector<TransferForm>& forms);

/// s(p mod f) for a single block.
Scalar evaluate(const FormBlock& block, const Poly& p);
Matrix gram(const FormBlock& block);
/// Block-diagonal N x N Gram with entries s(alpha^(i+j) mod f_block).
Matrix gram(const TransferForm& form);

/// Per-block check: Unit blocks are unit-certifiable, Hyperbolic blocks are alternating and non-degenerate.
std::vector<bool> check_claims(const TransferForm& form);
/// At least one Unit block and every claim holds.
bool claims_unit_certifiable(const TransferForm& form);

/// Local form parameters: n = 0 for (X - a)^m, n >= 1 for (X^(2^n) - a)^m.
struct LocalParams {
    Scalar a;
    unsigned n = 0;
    unsigned m = 1;
};
/// Power form parameters for pi(X^(2^n))^m.
struct PowerParams {
    Poly pi;
    unsigned n = 0;
    unsigned m = 1;
};

/// High-power value formulas, valid for i >= m (n = 0) or i >= 2^n m (n >= 1). Throws OutOfRange below that.
Scalar closed_form_value(const LocalParams& p, std::uint64_t i);
Scalar closed_form_value(const PowerParams& p, std::uint64_t i);

/// Orthonormal basis P_ij of k[X]/(pi(X^(2^n))^m) for insep_power_form / sep_power_form, built by CRT-lifting
/// gamma_i Q_j from the local algebras at the Frobenius conjugates of a root of pi. Ordered j outer, i inner.
/// Finite base fields only (UnsupportedField); throws DescentFailure when a lift leaves k[X].
std::vector<Poly> crt_orthonormal_basis(const Poly& pi, unsigned n, unsigned m);

}  // namespace symchar2

#endif
