#ifndef SYMCHAR2_EXTENSION_HPP
#define SYMCHAR2_EXTENSION_HPP

#include <cstdint>
#include <vector>

#include "symchar2/poly.hpp"

namespace symchar2 {

/**
 * Simple extension L = k[Y]/(pi) of a characteristic-two field k.
 *
 * L is itself a Field (kind Extension), so polynomials and matrices over L use the ordinary Poly and Matrix
 * types. Elements are stored as coefficient vectors in the power basis 1, a, ..., a^(d-1) of the generator a.
 */
class ExtensionField {
public:
    /// pi must be monic of degree >= 1. Over a finite base it is checked for irreducibility (NotIrreducible).
    explicit ExtensionField(const Poly& pi);
    /// Recovers the extension structure of a Field of kind Extension. Throws InvalidArgument otherwise.
    static ExtensionField of(const Field& l);

    const Field& field() const { return field_; }
    const Field& base() const;
    const Poly& modulus() const;
    unsigned degree() const;

    Scalar generator() const;
    Scalar embed(const Scalar& c) const;
    Poly embed(const Poly& p) const;
    Scalar from_coefficients(std::vector<Scalar> coeffs) const;
    /// Exactly degree() coordinates in the power basis.
    std::vector<Scalar> coefficients(const Scalar& x) const;

    bool in_base(const Scalar& x) const;
    /// Throws DescentFailure when x is not in k.
    Scalar to_base(const Scalar& x) const;
    Poly to_base(const Poly& p) const;

    /// Tr_{L/k}(x), the trace of multiplication by x.
    Scalar trace(const Scalar& x) const;
    /// x^q for q = |k|, the generator of Gal(L/k). Finite base only.
    Scalar frobenius_q(const Scalar& x) const;

private:
    explicit ExtensionField(Field f) : field_(std::move(f)) {}
    Field field_;
};

/**
 * The local algebra A = F[X]/((X^(2^n) - a)^m) with gamma the class of X.
 * F may be a base field or an extension; a must be nonzero when n >= 1.
 */
class LocalAlgebra {
public:
    LocalAlgebra(Scalar a, unsigned n, unsigned m);

    const Field& field() const { return a_.field(); }
    const Scalar& a() const { return a_; }
    unsigned n() const { return n_; }
    unsigned m() const { return m_; }
    std::size_t dimension() const;
    const Poly& modulus() const { return modulus_; }

    Poly reduce(const Poly& p) const;
    Poly mul(const Poly& x, const Poly& y) const;
    /// gamma^i as a reduced polynomial in X.
    Poly power(std::uint64_t i) const;

private:
    Scalar a_;
    unsigned n_;
    unsigned m_;
    Poly modulus_;
};

/// Coefficients c_j with p = sum c_j (X - a)^j (Taylor shift).
std::vector<Scalar> to_shifted_basis(const Poly& p, const Scalar& a);
Poly from_shifted_basis(const std::vector<Scalar>& coeffs, const Scalar& a);

/// Basis g_1..g_d of L with Tr(g_i g_j) = delta_ij, obtained by Gauss reduction of the trace form on the power
/// basis. Requires pi separable; throws ReductionFailed when the trace form has no orthonormal basis.
std::vector<Scalar> trace_orthonormal_basis(const ExtensionField& l);

}  // namespace symchar2

#endif
