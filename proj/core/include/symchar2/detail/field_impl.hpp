#ifndef SYMCHAR2_DETAIL_FIELD_IMPL_HPP
#define SYMCHAR2_DETAIL_FIELD_IMPL_HPP

#include <cstdint>
#include <string>

#include "symchar2/field.hpp"

namespace symchar2::detail {

/// Bit-level GF(2^m) arithmetic; elements are m-bit integers.
struct Gf2m {
    unsigned m = 1;
    std::uint32_t modulus = 0b10;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    /// Unique square root, a^(2^(m-1)).
    std::uint32_t sqrt(std::uint32_t a) const;
    std::uint32_t square(std::uint32_t a) const { return mul(a, a); }
};

// Polynomials in t over GF(2^m).
namespace binpoly {
void trim(BinPoly& p);
int degree(const BinPoly& p);
BinPoly add(const BinPoly& a, const BinPoly& b);
BinPoly mul(const Gf2m& f, const BinPoly& a, const BinPoly& b);
BinPoly scale(const Gf2m& f, const BinPoly& a, std::uint32_t c);
void divrem(const Gf2m& f, const BinPoly& a, const BinPoly& b, BinPoly& q, BinPoly& r);
/// Monic gcd; gcd(0, 0) = 0.
BinPoly gcd(const Gf2m& f, BinPoly a, BinPoly b);
int compare(const BinPoly& a, const BinPoly& b);
}  // namespace binpoly

class FieldImpl {
public:
    virtual ~FieldImpl() = default;

    virtual FieldKind kind() const = 0;
    virtual std::string name() const = 0;
    virtual bool equals(const FieldImpl& other) const = 0;
    virtual bool is_finite() const = 0;
    virtual unsigned absolute_degree() const = 0;
    /// Underlying field for function fields and extensions; nullptr for prime-tower binary fields.
    virtual const Field* base_field() const { return nullptr; }
    /// Bit-level arithmetic of the binary field (or binary base of a function field); nullptr for extensions.
    virtual const Gf2m* binary() const { return nullptr; }

    virtual ScalarRep zero() const = 0;
    virtual ScalarRep one() const = 0;
    virtual bool is_zero(const ScalarRep& x) const = 0;
    virtual ScalarRep add(const ScalarRep& a, const ScalarRep& b) const = 0;
    virtual ScalarRep mul(const ScalarRep& a, const ScalarRep& b) const = 0;
    virtual ScalarRep inv(const ScalarRep& a) const = 0;
    virtual ScalarRep square(const ScalarRep& a) const { return mul(a, a); }
    virtual bool is_square(const ScalarRep& a) const = 0;
    virtual ScalarRep sqrt(const ScalarRep& a) const = 0;
    virtual std::string render(const ScalarRep& a) const = 0;
    virtual int compare(const ScalarRep& a, const ScalarRep& b) const = 0;
};

}  // namespace symchar2::detail

#endif
