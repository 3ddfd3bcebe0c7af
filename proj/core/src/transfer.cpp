#include "symchar2/transfer.hpp"

#include <functional>

#include "symchar2/bilinear.hpp"
#include "symchar2/factor.hpp"
#include "symchar2/matrix_poly.hpp"

namespace symchar2 {

namespace {

Poly times_x_mod(const Poly& r, const Poly& f) { return (r * Poly::x(r.field())) % f; }

Scalar apply_values(const Poly& reduced, const std::vector<Scalar>& values, const Field& k) {
    Scalar s = k.zero();
    for (std::size_t j = 0; j < reduced.coeffs().size(); ++j)
        if (!reduced.coeffs()[j].is_zero() && !values[j].is_zero()) s += reduced.coeffs()[j] * values[j];
    return s;
}

// Values of the local form on the power basis of F[X]/((X^(2^n) - a)^m).
std::vector<Scalar> local_values(const Scalar& a, unsigned n, unsigned m) {
    const Field& f = a.field();
    const std::size_t dim = (std::size_t{1} << n) * m;
    std::vector<Scalar> v(dim, f.zero());
    if (n == 0) {
        for (std::size_t i = 0; i < m; ++i) {
            const auto shifted = to_shifted_basis(Poly::monomial(f.one(), i), a);
            for (std::size_t j = 0; j < shifted.size() && j < m; ++j) v[i] += shifted[j];
        }
    } else {
        v[std::size_t{1} << n] = f.one();
        v[dim - 1] = f.one();
    }
    return v;
}

void require_separable(const Poly& pi) {
    if (!pi.is_monic() || pi.degree() < 1) throw Error(ErrorCode::NotMonic, pi.to_string() + " is not monic of degree >= 1");
    if (!is_separable(pi)) throw Error(ErrorCode::InseparableCore, pi.to_string() + " is not separable");
}

// s(alpha^i) = Tr_{L/k}(t(gamma^i)) for i < deg(pi) 2^n m, computed by reduction in the local algebra.
TransferForm power_form(const Poly& pi, unsigned n, unsigned m) {
    require_separable(pi);
    const Field& k = pi.field();
    const ExtensionField l(pi);
    const LocalAlgebra local(l.generator(), n, m);
    const auto lv = local_values(local.a(), n, m);
    const Poly modulus = pow(substitute_power_of_two(pi, n), m);
    const auto dim = static_cast<std::size_t>(modulus.degree());
    std::vector<Scalar> values;
    values.reserve(dim);
    Poly r = Poly::one(l.field());
    for (std::size_t i = 0; i < dim; ++i) {
        values.push_back(l.trace(apply_values(r, lv, l.field())));
        r = times_x_mod(r, local.modulus());
    }
    return {k, {{modulus, std::move(values), BlockClaim::Unit}}};
}

// Shared high-power formulas; power(e) is a^e for local forms and Tr(a^e) for power forms.
Scalar closed_form(unsigned n, unsigned m, std::uint64_t i, const Field& k, const std::function<Scalar(std::uint64_t)>& power) {
    if (m < 1) throw Error(ErrorCode::BadMultiplicity, "multiplicity must be >= 1");
    if (n == 0) {
        if (i < m) throw Error(ErrorCode::OutOfRange, "closed form needs i >= m");
        Scalar s = k.zero();
        for (std::uint64_t j = 0; j < m; ++j)
            if (binom_parity(i, j)) s += power(i - j);
        return s;
    }
    if (m < 2) throw Error(ErrorCode::BadMultiplicity, "inseparable local form needs m >= 2");
    if (n > 20) throw Error(ErrorCode::OutOfRange, "depth too large");
    const std::uint64_t q = std::uint64_t{1} << n;
    if (i < q * m) throw Error(ErrorCode::OutOfRange, "closed form needs i >= 2^n m");
    if ((i + 1) % q == 0) {
        const std::uint64_t u = (i + 1) / q;
        return binom_parity(q * u - 1, q * m - 1) ? power(u - m) : k.zero();
    }
    if (i % q == 0 && (i / q) % 2 == 1) {
        const std::uint64_t u = (i / q - 1) / 2;
        int eps = 0;
        for (std::uint64_t j = 0; j < q * (m - 1); ++j) eps ^= binom_parity(2 * q * u, j);
        return eps ? power(2 * u) : k.zero();
    }
    return k.zero();
}

Poly frobenius_poly(const ExtensionField& l, const Poly& p) {
    std::vector<Scalar> c;
    for (const auto& x : p.coeffs()) c.push_back(l.frobenius_q(x));
    return Poly(l.field(), std::move(c));
}

}  // namespace

std::string_view to_string(BlockClaim c) { return c == BlockClaim::Unit ? "unit" : "hyperbolic"; }

std::size_t TransferForm::dimension() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += static_cast<std::size_t>(b.modulus.degree());
    return n;
}

Poly TransferForm::modulus() const {
    Poly p = Poly::one(field);
    for (const auto& b : blocks) p *= b.modulus;
    return p;
}

TransferForm even_form(const Poly& g) {
    if (!g.is_monic() || g.degree() < 2 || !in_k_of_X2(g))
        throw Error(ErrorCode::NotEvenPolynomial, g.to_string() + " is not a monic polynomial in X^2 of degree >= 2");
    const Field& k = g.field();
    std::vector<Scalar> v(static_cast<std::size_t>(g.degree()), k.zero());
    v.back() = k.one();
    return {k, {{g, std::move(v), BlockClaim::Hyperbolic}}};
}

TransferForm sep_local_form(const Scalar& a, unsigned m) {
    if (m < 1) throw Error(ErrorCode::BadMultiplicity, "multiplicity must be >= 1");
    const Field& f = a.field();
    const Poly modulus = pow(Poly::x(f) - Poly::constant(a), m);
    return {f, {{modulus, local_values(a, 0, m), BlockClaim::Unit}}};
}

TransferForm sep_power_form(const Poly& pi, unsigned m) {
    if (m < 1) throw Error(ErrorCode::BadMultiplicity, "multiplicity must be >= 1");
    return power_form(pi, 0, m);
}

TransferForm insep_local_form(const Scalar& a, unsigned n, unsigned m) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "inseparable local form needs n >= 1");
    if (m < 2) throw Error(ErrorCode::BadMultiplicity, "inseparable local form needs m >= 2");
    if (is_square(a)) throw Error(ErrorCode::SquareParameter, a.to_string() + " is a square");
    const LocalAlgebra local(a, n, m);
    return {a.field(), {{local.modulus(), local_values(a, n, m), BlockClaim::Unit}}};
}

TransferForm insep_power_form(const Poly& pi, unsigned n, unsigned m) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "inseparable power form needs n >= 1");
    if (m < 2) throw Error(ErrorCode::BadMultiplicity, "inseparable power form needs m >= 2");
    return power_form(pi, n, m);
}

TransferForm square_block_form(const Poly& g) {
    if (!g.is_monic() || g.degree() < 2 || !is_square(g))
        throw Error(ErrorCode::NotSquareShape, g.to_string() + " is not the square of a monic polynomial");
    if (g.coeff(0).is_zero()) throw Error(ErrorCode::ZeroConstantTerm, g.to_string() + " has zero constant term");
    const Field& k = g.field();
    std::vector<Scalar> v(static_cast<std::size_t>(g.degree()), k.zero());
    v.front() = k.one();
    return {k, {{g, std::move(v), BlockClaim::Unit}}};
}

TransferForm point_form(const Field& k) { return {k, {{Poly::x(k), {k.one()}, BlockClaim::Unit}}}; }

TransferForm direct_sum(const std::vector<TransferForm>& forms) {
    if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "direct sum of no forms");
    TransferForm out{forms.front().field, {}};
    for (const auto& f : forms) {
        if (!(f.field == out.field)) throw Error(ErrorCode::DescriptorMismatch, "forms over different fields");
        for (const auto& b : f.blocks) {
            for (const auto& prev : out.blocks)
                if (!gcd(prev.modulus, b.modulus).is_one())
                    throw Error(ErrorCode::NotCoprimeBlocks,
                                prev.modulus.to_string() + " and " + b.modulus.to_string() + " are not coprime");
            out.blocks.push_back(b);
        }
    }
    return out;
}

Scalar evaluate(const FormBlock& block, const Poly& p) {
    return apply_values(p % block.modulus, block.values, block.modulus.field());
}

Matrix gram(const FormBlock& block) {
    const Field& k = block.modulus.field();
    const auto n = static_cast<std::size_t>(block.modulus.degree());
    std::vector<Scalar> s;
    Poly r = Poly::one(k) % block.modulus;
    for (std::size_t e = 0; e + 1 < 2 * n; ++e) {
        s.push_back(apply_values(r, block.values, k));
        r = times_x_mod(r, block.modulus);
    }
    Matrix g(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = s[i + j];
    return g;
}

Matrix gram(const TransferForm& form) {
    std::vector<Matrix> blocks;
    for (const auto& b : form.blocks) blocks.push_back(gram(b));
    return Matrix::block_diagonal(form.field, blocks);
}

std::vector<bool> check_claims(const TransferForm& form) {
    std::vector<bool> ok;
    for (const auto& b : form.blocks) {
        const Matrix g = gram(b);
        if (b.claim == BlockClaim::Unit) {
            ok.push_back(is_unit_certifiable(g));
        } else {
            const FormClass c = classify(g);
            ok.push_back(c.alternating && c.nondegenerate);
        }
    }
    return ok;
}

bool claims_unit_certifiable(const TransferForm& form) {
    bool any_unit = false;
    for (const auto& b : form.blocks) any_unit = any_unit || b.claim == BlockClaim::Unit;
    if (!any_unit) return false;
    for (bool ok : check_claims(form))
        if (!ok) return false;
    return true;
}

Scalar closed_form_value(const LocalParams& p, std::uint64_t i) {
    return closed_form(p.n, p.m, i, p.a.field(), [&](std::uint64_t e) { return p.a.pow(static_cast<long long>(e)); });
}

Scalar closed_form_value(const PowerParams& p, std::uint64_t i) {
    require_separable(p.pi);
    const ExtensionField l(p.pi);
    const Scalar a = l.generator();
    return closed_form(p.n, p.m, i, p.pi.field(), [&](std::uint64_t e) { return l.trace(a.pow(static_cast<long long>(e))); });
}

std::vector<Poly> crt_orthonormal_basis(const Poly& pi, unsigned n, unsigned m) {
    const Field& k = pi.field();
    if (!k.is_finite() || k.kind() != FieldKind::Binary)
        throw Error(ErrorCode::UnsupportedField, "CRT lifting needs a finite base field, not " + k.name());
    require_separable(pi);
    if (m < 1 || (n >= 1 && m < 2)) throw Error(ErrorCode::BadMultiplicity, "invalid multiplicity " + std::to_string(m));

    const ExtensionField l(pi);
    const Field& lf = l.field();
    const auto gammas = trace_orthonormal_basis(l);
    const unsigned d = l.degree();
    const Scalar a = l.generator();
    const LocalAlgebra local(a, n, m);
    const std::size_t dim = local.dimension();

    // Orthonormal basis Q_j of the local algebra; for n = 0 reduce in the (gamma - a)^j basis.
    std::vector<Poly> qs;
    if (n == 0) {
        Matrix g(lf, dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) g(i, j) = i + j < m ? lf.one() : lf.zero();
        const ReductionResult red = gauss_reduce(g);
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<Scalar> c;
            for (std::size_t i = 0; i < dim; ++i) c.push_back(red.P(i, j));
            qs.push_back(from_shifted_basis(c, a));
        }
    } else {
        const FormBlock block{local.modulus(), local_values(a, n, m), BlockClaim::Unit};
        const ReductionResult red = gauss_reduce(gram(block));
        if (red.rank != dim) throw Error(ErrorCode::ReductionFailed, "local form is degenerate");
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<Scalar> c;
            for (std::size_t i = 0; i < dim; ++i) c.push_back(red.P(i, j));
            qs.push_back(Poly(lf, std::move(c)));
        }
    }

    // CRT idempotents for the moduli (X^(2^n) - sigma^l(a))^m, l = 0..d-1.
    std::vector<Poly> moduli;
    Poly total = Poly::one(lf);
    Scalar conj = a;
    for (unsigned i = 0; i < d; ++i) {
        moduli.push_back(LocalAlgebra(conj, n, m).modulus());
        total *= moduli.back();
        conj = l.frobenius_q(conj);
    }
    std::vector<Poly> idempotents;
    for (const auto& mod : moduli) {
        const Poly rest = exact_div(total, mod);
        const ExtGcd eg = ext_gcd(rest % mod, mod);
        if (!eg.g.is_one()) throw Error(ErrorCode::NotCoprime, "conjugate local moduli are not coprime");
        idempotents.push_back((rest * eg.s) % total);
    }

    std::vector<Poly> out;
    for (const auto& q : qs) {
        for (const auto& g : gammas) {
            Poly target = q * g;
            Poly lift(lf);
            for (unsigned i = 0; i < d; ++i) {
                lift += (target % moduli[i]) * idempotents[i];
                target = frobenius_poly(l, target);
            }
            out.push_back(l.to_base(lift % total));
        }
    }
    return out;
}

}  // namespace symchar2
