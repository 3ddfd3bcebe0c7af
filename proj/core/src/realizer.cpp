#include "symchar2/realizer.hpp"

#include "symchar2/bilinear.hpp"
#include "symchar2/matrix_poly.hpp"

namespace symchar2 {

namespace {

UnitBlock make_unit(UnitKind kind, const Poly& pi, unsigned n, unsigned m) {
    Poly modulus = kind == UnitKind::SepPower || kind == UnitKind::InsepPower ? pow(substitute_power_of_two(pi, n), m) : pi;
    return {kind, pi, n, m, std::move(modulus)};
}

TransferForm unit_form(const UnitBlock& u) {
    switch (u.kind) {
        case UnitKind::SepPower:
            return sep_power_form(u.pi, u.m);
        case UnitKind::InsepPower:
            return insep_power_form(u.pi, u.n, u.m);
        case UnitKind::SquareBlock:
            return square_block_form(u.modulus);
        case UnitKind::Point:
            return point_form(u.modulus.field());
    }
    throw Error(ErrorCode::PlanInvariantViolated, "unknown unit block kind");
}

TransferForm assemble(const RealizationPlan& p) {
    std::vector<TransferForm> parts;
    for (const auto& u : p.units) parts.push_back(unit_form(u));
    if (p.even) parts.push_back(even_form(*p.even));
    return direct_sum(parts);
}

Matrix orthonormalize(const TransferForm& form, const Matrix& s, bool block_pairing) {
    const Field& k = form.field;
    const std::size_t n = form.dimension();
    if (!block_pairing || form.blocks.size() == 1) {
        ReductionResult red = gauss_reduce(s);
        if (red.rank != n)
            throw Error(ErrorCode::CertificateFailure, "transfer form has rank " + std::to_string(red.rank) + " < " + std::to_string(n));
        return std::move(red.Q);
    }
    // Unit blocks one at a time; the last unit block is reduced together with a trailing hyperbolic block.
    std::vector<std::vector<FormBlock>> groups;
    for (const auto& b : form.blocks) {
        if (b.claim == BlockClaim::Hyperbolic && !groups.empty()) {
            groups.back().push_back(b);
        } else {
            groups.push_back({b});
        }
    }
    std::vector<Matrix> qs;
    for (auto& g : groups) {
        const TransferForm part{k, std::move(g)};
        ReductionResult red = gauss_reduce(gram(part));
        if (red.rank != part.dimension())
            throw Error(ErrorCode::CertificateFailure, "block group of dimension " + std::to_string(part.dimension()) + " is degenerate");
        qs.push_back(std::move(red.Q));
    }
    return Matrix::block_diagonal(k, qs);
}

Realization finish(const Poly& f, const Poly& target, RealizationPlan p, const RealizeOptions& options) {
    TransferForm form = assemble(p);
    if (!(form.modulus() == target))
        throw Error(ErrorCode::PlanInvariantViolated, "block moduli multiply to " + form.modulus().to_string());
    Matrix s = gram(form);
    Matrix q = orthonormalize(form, s, options.block_pairing);
    Matrix c = block_companion(p.moduli());
    Matrix m = q * c * inverse(q);

    Certificate cert;
    cert.symmetric = m.is_symmetric();
    cert.min_poly_ok = min_poly(m) == target;
    cert.char_poly_ok = char_poly(m) == target;
    cert.gram_ok = q.transpose() * q == s;
    if (!cert.passed())
        throw Error(ErrorCode::CertificateFailure,
                    "realization of " + f.to_string() + " failed verification (symmetric=" + std::to_string(cert.symmetric) +
                        ", min_poly=" + std::to_string(cert.min_poly_ok) + ", char_poly=" + std::to_string(cert.char_poly_ok) +
                        ", gram=" + std::to_string(cert.gram_ok) + ")");
    return {f, target, std::move(p), std::move(form), std::move(s), std::move(c), std::move(q), std::move(m), cert, false};
}

void require_consistent(const Poly& f, const FactorDecomposition& fd) {
    if (!f.is_monic() || f.degree() < 1) throw Error(ErrorCode::NotMonic, f.to_string() + " is not monic of degree >= 1");
    if (fd.entries.empty() || !(fd.product() == f))
        throw Error(ErrorCode::ProductMismatch, "factorization does not multiply to " + f.to_string());
}

}  // namespace

std::string_view to_string(PlanCase c) {
    switch (c) {
        case PlanCase::SeparablePresent:
            return "separable-present";
        case PlanCase::AllInseparable:
            return "all-inseparable";
        case PlanCase::NotRealizable:
            return "not-realizable";
    }
    return "?";
}

std::string_view to_string(UnitKind k) {
    switch (k) {
        case UnitKind::SepPower:
            return "separable-power";
        case UnitKind::InsepPower:
            return "inseparable-power";
        case UnitKind::SquareBlock:
            return "square";
        case UnitKind::Point:
            return "point";
    }
    return "?";
}

std::vector<Poly> RealizationPlan::moduli() const {
    std::vector<Poly> out;
    for (const auto& u : units) out.push_back(u.modulus);
    if (even) out.push_back(*even);
    return out;
}

Decision decide(const FactorDecomposition& fd) {
    for (const auto& e : fd.entries)
        if (e.separable() || e.multiplicity >= 2) return Decision::Realizable;
    return fd.entries.empty() ? Decision::Realizable : Decision::NotRealizable;
}

RealizationPlan plan(const FactorDecomposition& fd, const RealizeOptions& options) {
    RealizationPlan p;
    if (fd.entries.empty()) throw Error(ErrorCode::PlanInvariantViolated, "empty factorization");
    if (decide(fd) == Decision::NotRealizable) return p;
    const Field& k = fd.entries.front().pi.field();

    std::vector<bool> used(fd.entries.size(), false);
    bool any_separable = false;
    for (const auto& e : fd.entries) any_separable = any_separable || e.separable();

    if (any_separable) {
        p.kind = PlanCase::SeparablePresent;
        for (std::size_t i = 0; i < fd.entries.size(); ++i) {
            const auto& e = fd.entries[i];
            if (e.separable() && e.multiplicity % 2 == 1) {
                p.units.push_back(make_unit(UnitKind::SepPower, e.pi, 0, e.multiplicity));
                used[i] = true;
            }
        }
        if (p.units.empty()) {
            for (std::size_t i = 0; i < fd.entries.size() && p.units.empty(); ++i)
                if (fd.entries[i].separable()) {
                    p.units.push_back(make_unit(UnitKind::SepPower, fd.entries[i].pi, 0, fd.entries[i].multiplicity));
                    used[i] = true;
                }
        }
    } else {
        p.kind = PlanCase::AllInseparable;
        for (std::size_t i = 0; i < fd.entries.size(); ++i) {
            const auto& e = fd.entries[i];
            if (e.multiplicity >= 2) {
                p.units.push_back(make_unit(UnitKind::InsepPower, e.pi, e.depth, e.multiplicity));
                used[i] = true;
                break;
            }
        }
    }

    Poly g = Poly::one(k);
    for (std::size_t i = 0; i < fd.entries.size(); ++i)
        if (!used[i]) g *= pow(fd.entries[i].rho(), fd.entries[i].multiplicity);
    if (!g.is_one()) {
        if (!in_k_of_X2(g)) throw Error(ErrorCode::PlanInvariantViolated, "remaining factor " + g.to_string() + " is not in k[X^2]");
        if (options.square_block && is_square(g) && !g.coeff(0).is_zero()) {
            p.units.push_back(make_unit(UnitKind::SquareBlock, g, 0, 1));
        } else {
            p.even = std::move(g);
        }
    }
    return p;
}

Realization realize(const Poly& f, const FactorDecomposition& fd, const RealizeOptions& options) {
    require_consistent(f, fd);
    RealizationPlan p = plan(fd, options);
    if (p.kind == PlanCase::NotRealizable)
        throw Error(ErrorCode::NotRealizable,
                    f.to_string() + " is a product of distinct inseparable irreducible polynomials");
    return finish(f, f, std::move(p), options);
}

Realization realize_eigen(const Poly& f, const FactorDecomposition& fd, const RealizeOptions& options) {
    require_consistent(f, fd);
    if (fd.entries.size() != 1 || fd.entries.front().multiplicity != 1)
        throw Error(ErrorCode::NotIrreducible, f.to_string() + " is not irreducible");
    if (fd.entries.front().separable()) return realize(f, fd, options);

    const Field& k = f.field();
    RealizationPlan p;
    p.kind = PlanCase::AllInseparable;
    p.units.push_back(make_unit(UnitKind::Point, Poly::x(k), 0, 1));
    p.even = f;
    Realization r = finish(f, Poly::x(k) * f, std::move(p), options);
    r.smaller_size_impossible = true;
    return r;
}

VerifyReport verify(const Matrix& m, const Poly& f, VerifyMode mode) {
    VerifyReport r;
    if (!m.is_square()) {
        r.failures.push_back("matrix is not square");
        return r;
    }
    if (!(m.field() == f.field())) {
        r.failures.push_back("matrix and polynomial live over different fields");
        return r;
    }
    r.symmetric = m.is_symmetric();
    if (!r.symmetric) r.failures.push_back("matrix is not symmetric");
    r.min_poly = min_poly(m);
    r.char_poly = char_poly(m);
    r.min_poly_ok = *r.min_poly == f;
    r.char_poly_ok = *r.char_poly == f;
    r.eigen_ok = f.degree() >= 1 && (*r.char_poly % f).is_zero();
    bool mode_ok = false;
    switch (mode) {
        case VerifyMode::MinPoly:
            mode_ok = r.min_poly_ok;
            if (!mode_ok) r.failures.push_back("minimal polynomial is " + r.min_poly->to_string());
            break;
        case VerifyMode::CharPoly:
            mode_ok = r.char_poly_ok;
            if (!mode_ok) r.failures.push_back("characteristic polynomial is " + r.char_poly->to_string());
            break;
        case VerifyMode::Eigen:
            mode_ok = r.eigen_ok;
            if (!mode_ok) r.failures.push_back(f.to_string() + " does not divide " + r.char_poly->to_string());
            break;
    }
    r.passed = r.symmetric && mode_ok;
    return r;
}

}  // namespace symchar2
