#include <doctest.h>

#include "support.hpp"
#include "symchar2/extension.hpp"
#include "symchar2/matrix_poly.hpp"

using namespace symchar2;

namespace {

Scalar conjugate_sum(const ExtensionField& l, const Scalar& x) {
    Scalar acc = x;
    Scalar y = x;
    for (unsigned i = 1; i < l.degree(); ++i) {
        y = l.frobenius_q(y);
        acc += y;
    }
    return acc;
}

Scalar random_element(const ExtensionField& l, std::mt19937_64& rng) {
    std::vector<Scalar> c;
    for (unsigned i = 0; i < l.degree(); ++i) c.push_back(test::random_scalar(l.base(), rng, 1));
    return l.from_coefficients(std::move(c));
}

// Schoolbook long division of X^i by the local modulus, built without LocalAlgebra.
Poly long_division_power(const Scalar& a, unsigned n, unsigned m, std::uint64_t i) {
    const Field& k = a.field();
    const Poly base = Poly::monomial(k.one(), std::size_t{1} << n) + Poly::constant(a);
    const Poly mod = pow(base, m);
    return divrem(Poly::monomial(k.one(), i), mod).remainder;
}

}  // namespace

TEST_SUITE("extension") {
    TEST_CASE("arithmetic in F2(t)[a]/(a^2+a+t)") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+x+t"));
        const Scalar a = l.generator();
        CHECK(a * a == a + l.embed(k.t()));
        CHECK((a + a).is_zero());
        CHECK(a.inv() == (a + l.embed(k.one())) * l.embed(k.t().inv()));
        CHECK(l.degree() == 2);
        CHECK(ExtensionField::of(l.field()).modulus() == l.modulus());
    }

    TEST_CASE("trace values on a quadratic function field extension") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+x+t"));
        const Scalar a = l.generator();
        const Scalar one = l.embed(k.one());
        CHECK(l.trace(one).is_zero());
        CHECK(l.trace(a).is_one());
        CHECK(l.trace(a * a).is_one());
        CHECK(l.trace(a * (one + a)).is_zero());
        CHECK(l.trace(a * a * a) == k.t() + k.one());
    }

    TEST_CASE("trace is additive and commutes with squaring") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^3+t*x+t"));
        std::mt19937_64 rng(41);
        for (int i = 0; i < 30; ++i) {
            const Scalar x = random_element(l, rng);
            const Scalar y = random_element(l, rng);
            CHECK(l.trace(x + y) == l.trace(x) + l.trace(y));
            CHECK(l.trace(x * x) == l.trace(x) * l.trace(x));
        }
        const ExtensionField line(parse_poly(k, "x+t"));
        CHECK(line.trace(line.generator()) == k.t());
    }

    TEST_CASE("trace over a finite base is the sum of Frobenius conjugates") {
        for (const auto& [spec, pi] : {std::pair{"gf2", "x^3+x+1"}, std::pair{"gf(2^2)", "x^2+x+2"},
                                       std::pair{"gf(2^3)", "x^4+x+1"}}) {
            const Field k = Field::parse(spec);
            const ExtensionField l(parse_poly(k, pi));
            std::mt19937_64 rng(42);
            for (int i = 0; i < 20; ++i) {
                const Scalar x = random_element(l, rng);
                const Scalar s = conjugate_sum(l, x);
                CHECK(l.in_base(s));
                CHECK(l.embed(l.trace(x)) == s);
            }
        }
    }

    TEST_CASE("reducible moduli are rejected or fail to invert") {
        CHECK_THROWS_AS(ExtensionField(parse_poly(Field::gf2(), "x^2+1")), Error);
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+t^2"));
        const Scalar z = l.generator() + l.embed(k.t());
        try {
            (void)z.inv();
            FAIL("expected NotInvertible");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotInvertible);
        }
    }

    TEST_CASE("descent to the base field") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+x+t"));
        CHECK(l.to_base(l.embed(k.t())) == k.t());
        CHECK_THROWS_AS(l.to_base(l.generator()), Error);
        const Poly p = parse_poly(k, "x^2+t*x+1");
        CHECK(l.to_base(l.embed(p)) == p);
    }

    TEST_CASE("squares in a separable extension of F2(t)") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+x+t"));
        std::mt19937_64 rng(43);
        for (int i = 0; i < 10; ++i) {
            const Scalar x = random_element(l, rng);
            CHECK(is_square(x * x));
            CHECK(sqrt(x * x) == x);
        }
        CHECK_FALSE(is_square(l.embed(k.t())));
    }

    TEST_CASE("trace-orthonormal bases") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+x+t"));
        const auto basis = trace_orthonormal_basis(l);
        REQUIRE(basis.size() == 2);
        CHECK(basis[0] == l.generator());
        CHECK(basis[1] == l.generator() + l.embed(k.one()));

        for (const auto& [spec, pi] : {std::pair{"gf2", "x^2+x+1"}, std::pair{"gf2", "x^3+x+1"},
                                       std::pair{"f2(t)", "x+t"}, std::pair{"f2(t)", "x^3+t*x+t"}}) {
            const ExtensionField e(parse_poly(Field::parse(spec), pi));
            const auto b = trace_orthonormal_basis(e);
            REQUIRE(b.size() == e.degree());
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j)
                    CHECK(e.trace(b[i] * b[j]) == (i == j ? e.base().one() : e.base().zero()));
        }
    }

    TEST_CASE("Taylor shift matches the binomial expansion") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+x+t"));
        const Scalar a = l.generator();
        for (std::uint64_t i = 0; i < 12; ++i) {
            const auto c = to_shifted_basis(Poly::monomial(l.field().one(), i), a);
            for (std::uint64_t j = 0; j <= i; ++j) {
                const Scalar expected = binom_parity(i, j) ? a.pow(static_cast<long long>(i - j)) : l.field().zero();
                CHECK(c[j] == expected);
            }
            CHECK(from_shifted_basis(c, a) == Poly::monomial(l.field().one(), i));
        }
    }

    TEST_CASE("local algebra powers agree with long division") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+x+t"));
        const std::vector<std::tuple<Scalar, unsigned, unsigned>> cases = {
            {l.generator(), 0, 3}, {k.t(), 1, 2}, {k.t(), 2, 2}, {k.t() + k.one(), 1, 4}, {l.generator(), 1, 2}};
        for (const auto& [a, n, m] : cases) {
            const LocalAlgebra alg(a, n, m);
            CHECK(alg.dimension() == (std::size_t{1} << n) * m);
            for (std::uint64_t i = 0; i <= 4 * alg.dimension(); ++i) CHECK(alg.power(i) == long_division_power(a, n, m, i));
        }
        const LocalAlgebra alg(k.t(), 1, 2);
        CHECK(alg.power(4) == Poly::constant(k.t() * k.t()));
    }

    TEST_CASE("gamma^3 in the shifted basis") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+x+t"));
        const Scalar a = l.generator();
        const LocalAlgebra alg(a, 0, 3);
        const auto c = to_shifted_basis(alg.power(3), a);
        CHECK(c[0] == a * a * a);
        CHECK(c[1] == a * a);
        CHECK(c[2] == a);
    }
}
