#ifndef SYMCHAR2_REALIZER_HPP
#define SYMCHAR2_REALIZER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symchar2/factor.hpp"
#include "symchar2/matrix.hpp"
#include "symchar2/transfer.hpp"

/**
 * @file realizer.hpp
 * @brief Symmetric matrices with prescribed minimal polynomial over fields of characteristic two.
 *
 * A monic f is the minimal polynomial of a symmetric matrix unless f is a product of pairwise distinct
 * inseparable irreducibles. When it is, realize() builds a linear form s on k[X]/(f) whose transfer is
 * isometric to the unit form, finds an orthonormal basis by Gauss reduction and conjugates the companion
 * matrix into that basis.
 */

namespace symchar2 {

enum class Decision { Realizable, NotRealizable };

enum class PlanCase {
    SeparablePresent,  ///< at least one separable irreducible factor
    AllInseparable,    ///< every factor inseparable, one of them with multiplicity >= 2
    NotRealizable,
};

std::string_view to_string(PlanCase c);

enum class UnitKind { SepPower, InsepPower, SquareBlock, Point };

std::string_view to_string(UnitKind k);

struct UnitBlock {
    UnitKind kind = UnitKind::SepPower;
    Poly pi;         ///< separable core (SepPower, InsepPower); the block modulus otherwise
    unsigned n = 0;  ///< inseparability depth
    unsigned m = 1;  ///< multiplicity
    Poly modulus;    ///< pi(X^(2^n))^m
};

struct RealizationPlan {
    PlanCase kind = PlanCase::NotRealizable;
    std::vector<UnitBlock> units;
    /// Product of the remaining factors, a polynomial in X^2 carrying a hyperbolic form. Absent when it is 1.
    std::optional<Poly> even;
    /// Product of the block moduli in block order.
    std::vector<Poly> moduli() const;
};

struct RealizeOptions {
    /// Reduce each unit block on its own and the last unit block together with the even block, then glue.
    bool block_pairing = false;
    /// Use s(1) = 1 on the remaining factors when their product is a square with nonzero constant term.
    bool square_block = false;
};

struct Certificate {
    bool symmetric = false;
    bool min_poly_ok = false;
    bool char_poly_ok = false;
    /// Q^T Q = S
    bool gram_ok = false;
    bool passed() const { return symmetric && min_poly_ok && char_poly_ok && gram_ok; }
};

struct Realization {
    Poly f;       ///< polynomial that was asked for
    Poly target;  ///< min and char polynomial of M: f, or X*f for an inseparable eigenvalue
    RealizationPlan plan;
    TransferForm form;
    Matrix S;
    Matrix C;
    Matrix Q;
    Matrix M;
    Certificate certificate;
    /// Eigen mode only: no symmetric matrix of size deg f has a root of f as eigenvalue.
    bool smaller_size_impossible = false;
};

/// NotRealizable iff every factor has depth >= 1 and multiplicity 1.
Decision decide(const FactorDecomposition& fd);
/// Throws PlanInvariantViolated on inconsistent input.
RealizationPlan plan(const FactorDecomposition& fd, const RealizeOptions& options = {});
/// Throws NotRealizable, CertificateFailure.
Realization realize(const Poly& f, const FactorDecomposition& fd, const RealizeOptions& options = {});
/// f monic irreducible; inseparable f yields a matrix of size deg f + 1. Throws NotIrreducible.
Realization realize_eigen(const Poly& f, const FactorDecomposition& fd, const RealizeOptions& options = {});

enum class VerifyMode { MinPoly, CharPoly, Eigen };

struct VerifyReport {
    bool symmetric = false;
    std::optional<Poly> min_poly;
    std::optional<Poly> char_poly;
    bool min_poly_ok = false;
    bool char_poly_ok = false;
    bool eigen_ok = false;
    bool passed = false;
    std::vector<std::string> failures;
};

/// MinPoly: mu_M = f. CharPoly: chi_M = f. Eigen: f divides chi_M. Symmetry is always required.
VerifyReport verify(const Matrix& m, const Poly& f, VerifyMode mode);

}  // namespace symchar2

#endif
