#ifndef SYMCHAR2_FACTOR_HPP
#define SYMCHAR2_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "symchar2/poly.hpp"

namespace symchar2 {

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed2c4a11ULL;

/// One irreducible factor rho = pi(X^(2^depth)) with pi separable, raised to `multiplicity`.
struct FactorEntry {
    Poly pi;
    unsigned depth = 0;
    unsigned multiplicity = 1;

    Poly rho() const { return substitute_power_of_two(pi, depth); }
    bool separable() const { return depth == 0; }
};

struct FactorDecomposition {
    Scalar unit;
    std::vector<FactorEntry> entries;

    /// unit * prod rho_i^m_i
    Poly product() const;
};

struct SeparableCore {
    Poly pi;
    unsigned depth = 0;
};

/// gcd(p, p') = 1 with p' != 0.
bool is_separable(const Poly& p);

/// Splits rho = pi(X^(2^n)) by halving exponents while every exponent is even. Throws NotIrreducibleHint when the
/// resulting core is inseparable or rho is visibly not irreducible (a square, or reducible over a finite field).
SeparableCore inseparability_depth(const Poly& rho);

/// Complete factorization over GF(2^m): squarefree split, distinct-degree split, trace-based equal-degree split.
/// Entries are sorted by (degree, coefficients). Throws UnsupportedField for other fields.
FactorDecomposition factor(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

struct ClaimedFactor {
    Poly factor;
    unsigned multiplicity = 1;
};

/// Checks a user-supplied factorization and re-derives separable cores and depths.
/// Throws NotMonic, NotCoprime, ProductMismatch, NotIrreducibleHint.
FactorDecomposition validate_factored_input(const Poly& f, const std::vector<ClaimedFactor>& claimed);
FactorDecomposition validate_factored_input(const Poly& f, const FactorDecomposition& claimed);

}  // namespace symchar2

#endif
