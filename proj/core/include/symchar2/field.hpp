#ifndef SYMCHAR2_FIELD_HPP
#define SYMCHAR2_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symchar2/errors.hpp"

/**
 * @file field.hpp
 * @brief Exact arithmetic in fields of characteristic two.
 *
 * Three kinds of fields share one runtime interface:
 *  - GF(2^m), 1 <= m <= 16, elements bit-encoded in the polynomial basis of an irreducible modulus;
 *  - GF(2^m)(t), reduced fractions of polynomials in t with monic denominator;
 *  - simple extensions k[Y]/(pi) over one of the above (see extension.hpp).
 *
 * A Field is a cheap shared handle; Scalars carry their field and are immutable values.
 */

namespace symchar2 {

enum class FieldKind { Binary, RationalFunction, Extension };

class Scalar;
class Field;

namespace detail {
class FieldImpl;
}

/// Dense polynomial in t over GF(2^m), constant term first, no trailing zeros.
using BinPoly = std::vector<std::uint32_t>;

struct Fraction {
    BinPoly num;
    BinPoly den;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct ExtCoeffs {
    std::vector<Scalar> c;
};

using ScalarRep = std::variant<std::uint32_t, Fraction, ExtCoeffs>;

class Field {
public:
    /// GF(2) with modulus X.
    static Field gf2();
    /// GF(2^m) with the shipped default modulus.
    static Field binary(unsigned m);
    /// GF(2^m) with an explicit modulus (bit-encoded, leading bit included). Irreducibility is checked.
    static Field binary(unsigned m, std::uint32_t modulus);
    /// Rational function field base(t); the base must be a binary field.
    static Field rational_function(const Field& base);
    /// Parses `gf2`, `gf(2^m)`, `gf(2^m):bits`, `f2(t)`, `gf(2^m)(t)`, `gf(2^m):bits(t)`.
    static Field parse(std::string_view spec);

    /// Smallest irreducible polynomial of degree m over GF(2), for 1 <= m <= 16.
    static std::uint32_t default_modulus(unsigned m);
    static bool is_irreducible_binary(std::uint32_t poly);

    explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}

    FieldKind kind() const;
    std::string name() const;
    bool is_finite() const;
    bool is_perfect() const { return is_finite(); }
    /// log2 of the number of elements for finite fields, 0 otherwise.
    unsigned absolute_degree() const;

    /// For Binary: the field itself. For RationalFunction: GF(2^m). For Extension: the field extended.
    Field base() const;
    /// Extension degree m of a Binary field, or of the binary base of a function field.
    unsigned binary_degree() const;
    std::uint32_t binary_modulus() const;

    Scalar zero() const;
    Scalar one() const;
    /// Bit-encoded element of the binary field (or its constant embedding into a function field).
    Scalar from_bits(std::uint32_t bits) const;
    /// The indeterminate t of a function field.
    Scalar t() const;
    /// num/den in a function field, reduced on construction.
    Scalar fraction(BinPoly num, BinPoly den) const;

    const detail::FieldImpl& impl() const { return *impl_; }

    friend bool operator==(const Field& a, const Field& b);

private:
    std::shared_ptr<const detail::FieldImpl> impl_;
};

class Scalar {
public:
    Scalar(Field field, ScalarRep rep) : field_(std::move(field)), rep_(std::move(rep)) {}

    const Field& field() const { return field_; }
    const ScalarRep& rep() const { return rep_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const { return *this + rhs; }
    Scalar operator-() const { return *this; }
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

    Scalar inv() const;
    /// x^e; negative exponents invert first.
    Scalar pow(long long e) const;

    std::string to_string() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    void require_same_field(const Scalar& rhs) const;

    Field field_;
    ScalarRep rep_;
};

/// Squaring, an additive ring endomorphism in characteristic two.
Scalar frobenius(const Scalar& x);
bool is_square(const Scalar& x);
/// Throws NotASquare when !is_square(x).
Scalar sqrt(const Scalar& x);
/// Total order used for deterministic tie-breaking: <0, 0, >0.
int compare(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace symchar2

#endif
