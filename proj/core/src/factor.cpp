#include "symchar2/factor.hpp"

#include <algorithm>
#include <random>

namespace symchar2 {

namespace {

struct PolyPower {
    Poly p;
    unsigned e;
};

// Yun-style squarefree decomposition adapted to characteristic two: f' = 0 means f = h^2.
std::vector<PolyPower> squarefree_decomposition(const Poly& f) {
    std::vector<PolyPower> out;
    const Poly df = derivative(f);
    Poly c = gcd(f, df);
    Poly w = exact_div(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly fac = exact_div(w, y);
        if (!fac.is_one()) out.push_back({fac, i});
        w = std::move(y);
        c = exact_div(c, w);
        ++i;
    }
    if (!c.is_one()) {
        for (auto& [g, e] : squarefree_decomposition(sqrt(c))) out.push_back({g, 2 * e});
    }
    return out;
}

// a^(2^m) mod h, i.e. the q-power Frobenius for q = 2^m.
Poly frobenius_mod(const Poly& a, unsigned m, const Poly& h) {
    Poly r = a % h;
    for (unsigned i = 0; i < m; ++i) r = mulmod(r, r, h);
    return r;
}

std::vector<PolyPower> distinct_degree(Poly a, unsigned m) {
    std::vector<PolyPower> out;
    const Field& k = a.field();
    const Poly x = Poly::x(k);
    Poly h = x % a;
    for (unsigned d = 1; a.degree() >= 2 * static_cast<int>(d); ++d) {
        h = frobenius_mod(h, m, a);
        Poly g = gcd(a, h - x);
        if (!g.is_one()) {
            out.push_back({g, d});
            a = exact_div(a, g);
            h = h % a;
        }
    }
    if (a.degree() > 0) out.push_back({a, static_cast<unsigned>(a.degree())});
    return out;
}

void equal_degree(const Poly& g, unsigned d, unsigned m, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    const Field& k = g.field();
    const std::uint32_t mask = (m >= 32) ? 0xffffffffu : ((std::uint32_t{1} << m) - 1);
    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Scalar> coeffs;
        for (int i = 0; i < g.degree(); ++i) coeffs.push_back(k.from_bits(static_cast<std::uint32_t>(rng()) & mask));
        Poly u(k, std::move(coeffs));
        if (u.degree() < 1) continue;
        // absolute trace u + u^2 + ... + u^(2^(md-1)) mod g
        Poly term = u % g;
        Poly trace = term;
        for (unsigned j = 1; j < m * d; ++j) {
            term = mulmod(term, term, g);
            trace += term;
        }
        Poly split = gcd(g, trace);
        if (split.degree() > 0 && split.degree() < g.degree()) {
            equal_degree(split, d, m, rng, out);
            equal_degree(exact_div(g, split), d, m, rng, out);
            return;
        }
    }
    throw Error(ErrorCode::FactorizationFailed, "equal-degree split of " + g.to_string() + " did not succeed");
}

void sort_entries(std::vector<FactorEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const FactorEntry& a, const FactorEntry& b) {
        const int c = compare(a.rho(), b.rho());
        return c != 0 ? c < 0 : a.multiplicity < b.multiplicity;
    });
}

}  // namespace

Poly FactorDecomposition::product() const {
    Poly p = Poly::constant(unit);
    for (const auto& e : entries) p *= pow(e.rho(), e.multiplicity);
    return p;
}

bool is_separable(const Poly& p) {
    const Poly dp = derivative(p);
    return !dp.is_zero() && gcd(p, dp).is_one();
}

SeparableCore inseparability_depth(const Poly& rho) {
    if (!rho.is_monic() || rho.degree() < 1)
        throw Error(ErrorCode::NotMonic, "expected a monic non-constant polynomial, got " + rho.to_string());
    Poly pi = rho;
    unsigned depth = 0;
    while (pi.degree() >= 2 && in_k_of_X2(pi)) {
        std::vector<Scalar> halved;
        for (std::size_t i = 0; i < pi.coeffs().size(); i += 2) halved.push_back(pi.coeffs()[i]);
        pi = Poly(pi.field(), std::move(halved));
        ++depth;
    }
    if (!is_separable(pi))
        throw Error(ErrorCode::NotIrreducibleHint, "core " + pi.to_string() + " of " + rho.to_string() + " is inseparable");
    if (depth > 0 && is_square(rho))
        throw Error(ErrorCode::NotIrreducibleHint, rho.to_string() + " is a square");
    if (rho.field().kind() == FieldKind::Binary) {
        const auto fd = factor(rho);
        if (fd.entries.size() != 1 || fd.entries.front().multiplicity != 1)
            throw Error(ErrorCode::NotIrreducibleHint, rho.to_string() + " is reducible");
    }
    return {pi, depth};
}

FactorDecomposition factor(const Poly& f, std::uint64_t seed) {
    const Field& k = f.field();
    if (k.kind() != FieldKind::Binary)
        throw Error(ErrorCode::UnsupportedField, "factorization is only available over GF(2^m), not " + k.name());
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "factor of a constant polynomial");
    const unsigned m = k.binary_degree();
    std::mt19937_64 rng(seed);
    FactorDecomposition out{f.leading(), {}};
    for (const auto& [sf, e] : squarefree_decomposition(monic(f))) {
        for (const auto& [g, d] : distinct_degree(sf, m)) {
            std::vector<Poly> irreducibles;
            equal_degree(g, d, m, rng, irreducibles);
            for (auto& p : irreducibles) out.entries.push_back({std::move(p), 0, e});
        }
    }
    sort_entries(out.entries);
    return out;
}

FactorDecomposition validate_factored_input(const Poly& f, const std::vector<ClaimedFactor>& claimed) {
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, f.to_string() + " is not monic");
    if (claimed.empty()) throw Error(ErrorCode::ProductMismatch, "empty factorization for " + f.to_string());
    FactorDecomposition out{f.field().one(), {}};
    for (const auto& c : claimed) {
        if (!(c.factor.field() == f.field()))
            throw Error(ErrorCode::DescriptorMismatch, "factor over " + c.factor.field().name());
        if (!c.factor.is_monic() || c.factor.degree() < 1)
            throw Error(ErrorCode::NotMonic, "claimed factor " + c.factor.to_string() + " is not monic");
        if (c.multiplicity < 1) throw Error(ErrorCode::InvalidArgument, "multiplicity must be >= 1");
    }
    for (std::size_t i = 0; i < claimed.size(); ++i)
        for (std::size_t j = i + 1; j < claimed.size(); ++j)
            if (!gcd(claimed[i].factor, claimed[j].factor).is_one())
                throw Error(ErrorCode::NotCoprime,
                            claimed[i].factor.to_string() + " and " + claimed[j].factor.to_string() + " share a factor");
    Poly product = Poly::one(f.field());
    for (const auto& c : claimed) product *= pow(c.factor, c.multiplicity);
    if (!(product == f))
        throw Error(ErrorCode::ProductMismatch, "claimed factors multiply to " + product.to_string() + ", not " + f.to_string());
    for (const auto& c : claimed) {
        auto core = inseparability_depth(c.factor);
        out.entries.push_back({std::move(core.pi), core.depth, c.multiplicity});
    }
    sort_entries(out.entries);
    return out;
}

FactorDecomposition validate_factored_input(const Poly& f, const FactorDecomposition& claimed) {
    std::vector<ClaimedFactor> list;
    for (const auto& e : claimed.entries) list.push_back({e.rho(), e.multiplicity});
    return validate_factored_input(f, list);
}

}  // namespace symchar2
