#ifndef SYMCHAR2_POLY_HPP
#define SYMCHAR2_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symchar2/field.hpp"

namespace symchar2 {

/// Dense univariate polynomial over a Field, constant term first, never stores trailing zeros.
class Poly {
public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Scalar> coeffs);

    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, std::size_t k);
    static Poly x(const Field& field) { return monomial(field.one(), 1); }
    static Poly one(const Field& field) { return constant(field.one()); }

    const Field& field() const { return field_; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Scalar leading() const;
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const { return *this + rhs; }
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Scalar& rhs) const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    /// Renders as `c*x^k+...`, compound coefficients parenthesized.
    std::string to_string(const std::string& var = "x") const;

    friend bool operator==(const Poly& a, const Poly& b);

private:
    void trim();

    Field field_;
    std::vector<Scalar> c_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws DivisionByZero for b = 0.
DivRem divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Exact quotient; throws InvalidArgument if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd (zero only for gcd(0, 0)).
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly g;  ///< monic gcd
    Poly s;  ///< s*a + t*b = g
    Poly t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly monic(const Poly& a);

Poly derivative(const Poly& a);
Scalar eval(const Poly& a, const Scalar& x);
Poly pow(const Poly& a, unsigned e);
Poly mulmod(const Poly& a, const Poly& b, const Poly& f);
/// X^i mod f.
Poly reduce_power(std::uint64_t i, const Poly& f);

/// True iff every odd-exponent coefficient vanishes.
bool in_k_of_X2(const Poly& f);
/// f(X^(2^n)).
Poly substitute_power_of_two(const Poly& f, unsigned n);
/// h with h^2 = f; requires f in k[X^2] with square coefficients. Throws NotASquare otherwise.
Poly sqrt(const Poly& f);
bool is_square(const Poly& f);

/// Degree first, then coefficients from the top down.
int compare(const Poly& a, const Poly& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace symchar2

#endif
