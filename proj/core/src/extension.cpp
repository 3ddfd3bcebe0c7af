#include "symchar2/extension.hpp"

#include <optional>

#include "symchar2/bilinear.hpp"
#include "symchar2/detail/field_impl.hpp"
#include "symchar2/factor.hpp"
#include "symchar2/matrix.hpp"

namespace symchar2 {

namespace {

class ExtensionFieldImpl final : public detail::FieldImpl {
public:
    ExtensionFieldImpl(Field base, Poly pi) : base_(std::move(base)), pi_(std::move(pi)), d_(static_cast<std::size_t>(pi_.degree())) {
        // Coordinates of a^(2i); invertible exactly when L = k(a^2), e.g. pi separable.
        Matrix w(base_, d_, d_);
        for (std::size_t i = 0; i < d_; ++i) {
            const Poly sq = reduce_power(2 * i, pi_);
            for (std::size_t r = 0; r < d_; ++r) w(r, i) = sq.coeff(r);
        }
        if (rank(w) == d_) square_coords_ = inverse(w);
    }

    const Poly& modulus() const { return pi_; }
    std::size_t degree() const { return d_; }

    FieldKind kind() const override { return FieldKind::Extension; }
    std::string name() const override { return base_.name() + "[a]/(" + pi_.to_string("a") + ")"; }
    bool equals(const FieldImpl& other) const override {
        const auto* o = dynamic_cast<const ExtensionFieldImpl*>(&other);
        return o && o->base_ == base_ && o->pi_ == pi_;
    }
    bool is_finite() const override { return base_.is_finite(); }
    unsigned absolute_degree() const override {
        return base_.is_finite() ? static_cast<unsigned>(d_) * base_.absolute_degree() : 0;
    }
    const Field* base_field() const override { return &base_; }

    ScalarRep zero() const override { return ExtCoeffs{std::vector<Scalar>(d_, base_.zero())}; }
    ScalarRep one() const override {
        ExtCoeffs e{std::vector<Scalar>(d_, base_.zero())};
        e.c[0] = base_.one();
        return e;
    }
    bool is_zero(const ScalarRep& x) const override {
        for (const auto& c : coords(x))
            if (!c.is_zero()) return false;
        return true;
    }
    ScalarRep add(const ScalarRep& a, const ScalarRep& b) const override {
        const auto& x = coords(a);
        const auto& y = coords(b);
        ExtCoeffs r{x};
        for (std::size_t i = 0; i < d_; ++i) r.c[i] += y[i];
        return r;
    }
    ScalarRep mul(const ScalarRep& a, const ScalarRep& b) const override {
        return from_poly((to_poly(a) * to_poly(b)) % pi_);
    }
    ScalarRep inv(const ScalarRep& a) const override {
        if (is_zero(a)) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
        const ExtGcd eg = ext_gcd(to_poly(a), pi_);
        if (!eg.g.is_one())
            throw Error(ErrorCode::NotInvertible, "element shares the factor " + eg.g.to_string("a") + " with the modulus");
        return from_poly(eg.s % pi_);
    }
    bool is_square(const ScalarRep& a) const override {
        if (!square_coords_) throw Error(ErrorCode::UnsupportedField, "square test in inseparable extension " + name());
        for (const auto& c : *square_coords_ * std::span<const Scalar>(coords(a)))
            if (!symchar2::is_square(c)) return false;
        return true;
    }
    ScalarRep sqrt(const ScalarRep& a) const override {
        if (!square_coords_) throw Error(ErrorCode::UnsupportedField, "square root in inseparable extension " + name());
        std::vector<Scalar> c = *square_coords_ * std::span<const Scalar>(coords(a));
        for (auto& x : c) {
            if (!symchar2::is_square(x)) throw Error(ErrorCode::NotASquare, render(a) + " is not a square in " + name());
            x = symchar2::sqrt(x);
        }
        return ExtCoeffs{std::move(c)};
    }
    std::string render(const ScalarRep& a) const override { return to_poly(a).to_string("a"); }
    int compare(const ScalarRep& a, const ScalarRep& b) const override {
        const auto& x = coords(a);
        const auto& y = coords(b);
        for (std::size_t i = d_; i-- > 0;)
            if (int c = symchar2::compare(x[i], y[i]); c != 0) return c;
        return 0;
    }

    const std::vector<Scalar>& coords(const ScalarRep& x) const { return std::get<ExtCoeffs>(x).c; }
    Poly to_poly(const ScalarRep& x) const { return Poly(base_, coords(x)); }
    ScalarRep from_poly(const Poly& p) const {
        ExtCoeffs e{std::vector<Scalar>(d_, base_.zero())};
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) e.c[i] = p.coeffs()[i];
        return e;
    }

private:
    Field base_;
    Poly pi_;
    std::size_t d_;
    std::optional<Matrix> square_coords_;
};

const ExtensionFieldImpl& ext_impl(const Field& f) {
    const auto* p = dynamic_cast<const ExtensionFieldImpl*>(&f.impl());
    if (!p) throw Error(ErrorCode::InvalidArgument, f.name() + " is not a simple extension");
    return *p;
}

}  // namespace

ExtensionField::ExtensionField(const Poly& pi) : field_(Field::gf2()) {
    if (!pi.is_monic() || pi.degree() < 1)
        throw Error(ErrorCode::NotMonic, "extension modulus " + pi.to_string() + " must be monic of degree >= 1");
    if (pi.field().kind() == FieldKind::Binary) {
        const auto fd = factor(pi);
        if (fd.entries.size() != 1 || fd.entries.front().multiplicity != 1)
            throw Error(ErrorCode::NotIrreducible, pi.to_string() + " is reducible over " + pi.field().name());
    }
    field_ = Field(std::make_shared<ExtensionFieldImpl>(pi.field(), pi));
}

ExtensionField ExtensionField::of(const Field& l) {
    ext_impl(l);
    return ExtensionField(l);
}

const Field& ExtensionField::base() const { return *field_.impl().base_field(); }
const Poly& ExtensionField::modulus() const { return ext_impl(field_).modulus(); }
unsigned ExtensionField::degree() const { return static_cast<unsigned>(ext_impl(field_).degree()); }

Scalar ExtensionField::generator() const {
    if (degree() == 1) return embed(-modulus().coeff(0));
    std::vector<Scalar> c(degree(), base().zero());
    c[1] = base().one();
    return from_coefficients(std::move(c));
}

Scalar ExtensionField::embed(const Scalar& c) const {
    if (!(c.field() == base())) throw Error(ErrorCode::DescriptorMismatch, "cannot embed element of " + c.field().name());
    std::vector<Scalar> v(degree(), base().zero());
    v[0] = c;
    return from_coefficients(std::move(v));
}

Poly ExtensionField::embed(const Poly& p) const {
    std::vector<Scalar> c;
    for (const auto& x : p.coeffs()) c.push_back(embed(x));
    return Poly(field_, std::move(c));
}

Scalar ExtensionField::from_coefficients(std::vector<Scalar> coeffs) const {
    const auto& impl = ext_impl(field_);
    if (coeffs.size() > impl.degree()) return Scalar(field_, impl.from_poly(Poly(base(), std::move(coeffs)) % modulus()));
    coeffs.resize(impl.degree(), base().zero());
    return Scalar(field_, ExtCoeffs{std::move(coeffs)});
}

std::vector<Scalar> ExtensionField::coefficients(const Scalar& x) const {
    if (!(x.field() == field_)) throw Error(ErrorCode::DescriptorMismatch, "element of " + x.field().name());
    return ext_impl(field_).coords(x.rep());
}

bool ExtensionField::in_base(const Scalar& x) const {
    const auto c = coefficients(x);
    for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
    return true;
}

Scalar ExtensionField::to_base(const Scalar& x) const {
    if (!in_base(x)) throw Error(ErrorCode::DescentFailure, x.to_string() + " does not lie in " + base().name());
    return coefficients(x)[0];
}

Poly ExtensionField::to_base(const Poly& p) const {
    std::vector<Scalar> c;
    for (const auto& x : p.coeffs()) c.push_back(to_base(x));
    return Poly(base(), std::move(c));
}

Scalar ExtensionField::trace(const Scalar& x) const {
    const unsigned d = degree();
    Scalar t = base().zero();
    Scalar y = x;
    const Scalar a = generator();
    for (unsigned i = 0; i < d; ++i) {
        t += coefficients(y)[i];
        y *= a;
    }
    return t;
}

Scalar ExtensionField::frobenius_q(const Scalar& x) const {
    if (!base().is_finite()) throw Error(ErrorCode::UnsupportedField, "Frobenius over infinite base " + base().name());
    Scalar y = x;
    for (unsigned i = 0; i < base().absolute_degree(); ++i) y = frobenius(y);
    return y;
}

LocalAlgebra::LocalAlgebra(Scalar a, unsigned n, unsigned m) : a_(std::move(a)), n_(n), m_(m), modulus_(a_.field()) {
    if (a_.is_zero() && n_ > 0) throw Error(ErrorCode::InvalidArgument, "X^(2^n) - 0 is not irreducible");
    if (m_ < 1) throw Error(ErrorCode::BadMultiplicity, "local algebra multiplicity must be >= 1");
    if (n_ > 20) throw Error(ErrorCode::OutOfRange, "inseparability depth " + std::to_string(n_) + " is too large");
    const Poly base = Poly::monomial(field().one(), std::size_t{1} << n_) + Poly::constant(a_);
    modulus_ = pow(base, m_);
}

std::size_t LocalAlgebra::dimension() const { return (std::size_t{1} << n_) * m_; }

Poly LocalAlgebra::reduce(const Poly& p) const { return p % modulus_; }

Poly LocalAlgebra::mul(const Poly& x, const Poly& y) const { return mulmod(x, y, modulus_); }

Poly LocalAlgebra::power(std::uint64_t i) const { return reduce_power(i, modulus_); }

std::vector<Scalar> to_shifted_basis(const Poly& p, const Scalar& a) {
    // Repeated synthetic division by (X - a).
    std::vector<Scalar> rem(p.coeffs());
    std::vector<Scalar> out;
    while (!rem.empty()) {
        std::vector<Scalar> q(rem.size() - 1, a.field().zero());
        Scalar carry = a.field().zero();
        for (std::size_t i = rem.size(); i-- > 0;) {
            const Scalar v = rem[i] + carry * a;
            if (i == 0) {
                out.push_back(v);
            } else {
                q[i - 1] = v;
            }
            carry = v;
        }
        rem = std::move(q);
    }
    return out;
}

Poly from_shifted_basis(const std::vector<Scalar>& coeffs, const Scalar& a) {
    const Field& f = a.field();
    const Poly lin = Poly::x(f) - Poly::constant(a);
    Poly acc(f);
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * lin + Poly::constant(coeffs[j]);
    return acc;
}

std::vector<Scalar> trace_orthonormal_basis(const ExtensionField& l) {
    const unsigned d = l.degree();
    const Field& k = l.base();
    const Scalar a = l.generator();
    std::vector<Scalar> powers;
    Scalar p = l.field().one();
    for (unsigned i = 0; i < 2 * d - 1; ++i) {
        powers.push_back(l.trace(p));
        p *= a;
    }
    Matrix g(k, d, d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) g(i, j) = powers[i + j];
    ReductionResult red = [&] {
        try {
            return gauss_reduce(g);
        } catch (const Error& e) {
            throw Error(ErrorCode::ReductionFailed, std::string("trace form of ") + l.field().name() + ": " + e.what());
        }
    }();
    if (red.rank != d)
        throw Error(ErrorCode::ReductionFailed, "trace form of " + l.field().name() + " is degenerate");
    std::vector<Scalar> basis;
    for (unsigned j = 0; j < d; ++j) {
        std::vector<Scalar> c;
        for (unsigned i = 0; i < d; ++i) c.push_back(red.P(i, j));
        basis.push_back(l.from_coefficients(std::move(c)));
    }
    return basis;
}

}  // namespace symchar2
