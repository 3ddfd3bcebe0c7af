#include <doctest.h>

#include <functional>

#include "support.hpp"
#include "symchar2/bilinear.hpp"
#include "symchar2/transfer.hpp"

using namespace symchar2;

namespace {

ErrorCode error_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

// X^i mod (X^(2^n) - a)^m by plain long division, then the local values of the form.
Scalar direct_local_value(const Scalar& a, unsigned n, unsigned m, std::uint64_t i) {
    const Field& k = a.field();
    const std::size_t q = std::size_t{1} << n;
    const Poly mod = pow(Poly::monomial(k.one(), q) + Poly::constant(a), m);
    const Poly r = divrem(Poly::monomial(k.one(), i), mod).remainder;
    Scalar v = k.zero();
    if (n == 0) {
        // s((X - a)^j) = 1 for j < m: sum the shifted coordinates
        Poly shift = Poly::one(k);
        const Poly lin = Poly::x(k) + Poly::constant(a);
        std::vector<Poly> shifts;
        for (unsigned j = 0; j < m; ++j) {
            shifts.push_back(shift);
            shift = shift * lin;
        }
        Poly rest = r;
        for (unsigned j = m; j-- > 0;) {
            const Scalar c = rest.coeff(j);
            if (!c.is_zero()) {
                v += c;
                rest = rest + shifts[j] * c;
            }
        }
        return v;
    }
    return r.coeff(q) + r.coeff(q * m - 1);
}

Scalar direct_power_value(const Poly& pi, unsigned n, unsigned m, std::uint64_t i) {
    if (pi.degree() == 1) return direct_local_value(pi.coeff(0), n, m, i);
    const ExtensionField l(pi);
    return l.trace(direct_local_value(l.generator(), n, m, i));
}

std::uint64_t threshold(unsigned n, unsigned m) { return n == 0 ? m : (std::uint64_t{1} << n) * m; }

}  // namespace

TEST_SUITE("transfer") {
    TEST_CASE("separable power form on (x^2+x+t)^3") {
        const Field k = Field::parse("f2(t)");
        const TransferForm s = sep_power_form(parse_poly(k, "x^2+x+t"), 3);
        const std::vector<std::string> expected = {"0", "1", "1", "t+1", "1", "t^2+t", "t^2", "t^3+1", "1", "t^4+t^2+t",
                                                   "t^4+t^2"};
        const Poly x = Poly::x(k);
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(evaluate(s.blocks[0], pow(x, static_cast<unsigned>(i))) == parse_scalar(k, expected[i]));
        CHECK(gram(s) == test::fixture_matrix("sep_cube_S.json"));
        CHECK(claims_unit_certifiable(s));
    }

    TEST_CASE("inseparable forms on (x^2+t)^3") {
        const Field k = Field::parse("f2(t)");
        const Matrix s2 = test::fixture_matrix("insep_cube_S.json");
        CHECK(gram(insep_local_form(k.t(), 1, 3)) == s2);
        const TransferForm s = insep_power_form(parse_poly(k, "x+t"), 1, 3);
        CHECK(gram(s) == s2);
        CHECK(claims_unit_certifiable(s));
        const TransferForm two = insep_local_form(k.t(), 1, 2);
        const std::vector<std::string> v = {"0", "0", "1", "1"};
        for (std::size_t i = 0; i < 4; ++i) CHECK(two.blocks[0].values[i] == parse_scalar(k, v[i]));
    }

    TEST_CASE("separable local form has the anti-triangular shifted Gram") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+x+t"));
        const Scalar a = l.generator();
        const TransferForm s = sep_local_form(a, 3);
        const Poly lin = Poly::x(l.field()) + Poly::constant(a);
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j)
                CHECK(evaluate(s.blocks[0], pow(lin, i + j)) == (i + j < 3 ? l.field().one() : l.field().zero()));
        const TransferForm one = sep_local_form(a, 1);
        for (unsigned i = 0; i < 6; ++i) CHECK(evaluate(one.blocks[0], pow(Poly::x(l.field()), i)) == a.pow(i));
        const TransferForm two = sep_local_form(a, 2);
        CHECK(evaluate(two.blocks[0], pow(Poly::x(l.field()), 2)) == a * a);
    }

    TEST_CASE("even forms are hyperbolic") {
        const Field k = Field::parse("f2(t)");
        CHECK(gram(even_form(parse_poly(k, "x^2+t"))) == test::matrix_of(k, {{"0", "1"}, {"1", "0"}}));
        CHECK(gram(even_form(parse_poly(k, "x^2"))) == test::matrix_of(k, {{"0", "1"}, {"1", "0"}}));
        const FormClass c = classify(gram(even_form(parse_poly(k, "(x^2+t)^2"))));
        CHECK(c.alternating);
        CHECK(c.nondegenerate);
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 20; ++trial) {
            const int half = 1 + trial % 6;
            const Poly g = substitute_power_of_two(test::random_monic(k, rng, half), 1);
            const TransferForm e = even_form(g);
            const FormClass ce = classify(gram(e));
            CHECK(ce.alternating);
            CHECK(ce.nondegenerate);
            CHECK(check_claims(e) == std::vector<bool>{true});
        }
        CHECK(error_of([&] { (void)even_form(parse_poly(k, "x^2+x")); }) == ErrorCode::NotEvenPolynomial);
    }

    TEST_CASE("square blocks and the point block") {
        const Field k2 = Field::gf2();
        CHECK(gram(square_block_form(parse_poly(k2, "x^2+1"))) == Matrix::identity(k2, 2));
        const Field k = Field::parse("f2(t)");
        CHECK(is_unit_certifiable(gram(square_block_form(parse_poly(k, "(x^2+t)^2")))));
        CHECK(error_of([&] { (void)square_block_form(parse_poly(k, "x^2")); }) == ErrorCode::ZeroConstantTerm);
        CHECK(error_of([&] { (void)square_block_form(parse_poly(k, "x^2+t")); }) == ErrorCode::NotSquareShape);
        CHECK(gram(point_form(k)) == Matrix::identity(k, 1));
        const TransferForm sum = direct_sum({point_form(k), even_form(parse_poly(k, "x^2+t"))});
        CHECK(gram(sum) == test::matrix_of(k, {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}}));
        CHECK(claims_unit_certifiable(sum));
        CHECK(sum.modulus() == parse_poly(k, "x^3+t*x"));
    }

    TEST_CASE("direct sums") {
        const Field k = Field::parse("f2(t)");
        const TransferForm h = direct_sum({even_form(parse_poly(k, "x^2+t")), even_form(parse_poly(k, "x^2+t+1"))});
        CHECK_FALSE(claims_unit_certifiable(h));
        CHECK(classify(gram(h)).alternating);
        CHECK(error_of([&] { (void)direct_sum({point_form(k), point_form(k)}); }) == ErrorCode::NotCoprimeBlocks);
        const TransferForm u = sep_power_form(parse_poly(k, "x+1"), 1);
        CHECK(gram(direct_sum({u})) == Matrix::identity(k, 1));
    }

    TEST_CASE("constructor preconditions") {
        const Field k = Field::parse("f2(t)");
        CHECK(error_of([&] { (void)insep_local_form(k.t() * k.t(), 1, 2); }) == ErrorCode::SquareParameter);
        CHECK(error_of([&] { (void)insep_local_form(k.t(), 1, 1); }) == ErrorCode::BadMultiplicity);
        CHECK(error_of([&] { (void)insep_power_form(parse_poly(k, "x+t"), 1, 1); }) == ErrorCode::BadMultiplicity);
        CHECK(error_of([&] { (void)sep_power_form(parse_poly(k, "x^2+t"), 1); }) == ErrorCode::InseparableCore);
    }

    TEST_CASE("closed forms on worked values") {
        const Field k = Field::parse("f2(t)");
        const LocalParams p{k.t(), 1, 2};
        CHECK(closed_form_value(p, 5).is_zero());
        CHECK(closed_form_value(p, 6) == k.t() * k.t());
        CHECK(closed_form_value(p, 7) == k.t() * k.t());
        CHECK(error_of([&] { (void)closed_form_value(p, 3); }) == ErrorCode::OutOfRange);
        for (std::uint64_t i = 1; i < 10; ++i) CHECK(closed_form_value(LocalParams{k.t(), 0, 1}, i) == k.t().pow(i));
    }

    TEST_CASE("closed forms agree with long division") {
        for (const auto& [spec, pis] :
             {std::pair<const char*, std::vector<const char*>>{"gf2", {"x+1", "x^2+x+1", "x^3+x+1"}},
              std::pair<const char*, std::vector<const char*>>{"f2(t)", {"x+t", "x^2+x+t", "x^3+x+t"}}}) {
            const Field k = Field::parse(spec);
            for (const char* text : pis) {
                const Poly pi = parse_poly(k, text);
                for (unsigned n = 0; n <= 2; ++n)
                    for (unsigned m = (n == 0 ? 1 : 2); m <= 4; ++m) {
                        const PowerParams p{pi, n, m};
                        const std::uint64_t deg = static_cast<std::uint64_t>(pi.degree()) * (std::uint64_t{1} << n) * m;
                        for (std::uint64_t i = threshold(n, m); i <= 4 * deg; ++i)
                            CHECK(closed_form_value(p, i) == direct_power_value(pi, n, m, i));
                    }
            }
        }
    }

    TEST_CASE("stored values match the direct composition") {
        const Field k = Field::parse("f2(t)");
        const Poly pi = parse_poly(k, "x^2+x+t");
        const TransferForm s = insep_power_form(pi, 1, 2);
        const Poly x = Poly::x(k);
        for (unsigned i = 0; i < 16; ++i) CHECK(evaluate(s.blocks[0], pow(x, i)) == direct_power_value(pi, 1, 2, i));
        CHECK(is_unit_certifiable(gram(s)));
    }

    TEST_CASE("CRT orthonormal bases over finite fields") {
        const Field k = Field::gf2();
        for (const auto& [pi_text, n, m] :
             {std::tuple{"x^2+x+1", 0u, 1u}, std::tuple{"x^2+x+1", 0u, 3u}, std::tuple{"x^3+x+1", 0u, 2u}, std::tuple{"x+1", 0u, 4u}}) {
            const Poly pi = parse_poly(k, pi_text);
            const TransferForm s = n == 0 ? sep_power_form(pi, m) : insep_power_form(pi, n, m);
            const auto basis = crt_orthonormal_basis(pi, n, m);
            REQUIRE(basis.size() == s.dimension());
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < basis.size(); ++j)
                    CHECK(evaluate(s.blocks[0], basis[i] * basis[j]) == (i == j ? k.one() : k.zero()));
        }
        const Field k4 = Field::binary(2);
        const Poly pi = parse_poly(k4, "x^2+x+2");
        const auto basis = crt_orthonormal_basis(pi, 0, 2);
        const TransferForm s = sep_power_form(pi, 2);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                CHECK(evaluate(s.blocks[0], basis[i] * basis[j]) == (i == j ? k4.one() : k4.zero()));
    }

    TEST_CASE("CRT lifting is unavailable over function fields") {
        const Field k = Field::parse("f2(t)");
        CHECK(error_of([&] { (void)crt_orthonormal_basis(parse_poly(k, "x^2+x+t"), 0, 3); }) == ErrorCode::UnsupportedField);
    }

    TEST_CASE("shipped lifts over F2(t) reduce to gamma_i Q_j locally") {
        const Field k = Field::parse("f2(t)");
        const ExtensionField l(parse_poly(k, "x^2+x+t"));
        const Field& lf = l.field();
        const Scalar a = l.generator();
        const Poly lin = Poly::x(lf) + Poly::constant(a);
        const Poly local = pow(lin, 3);
        const std::vector<Poly> q = {Poly::one(lf), Poly::one(lf) + lin * lin, lin + lin * lin};
        const std::vector<Scalar> g = {a, a + lf.one()};
        const Matrix p = test::fixture_matrix("sep_cube_lifts_P.json");
        const TransferForm s = sep_power_form(parse_poly(k, "x^2+x+t"), 3);
        std::vector<Poly> lifts;
        for (std::size_t c = 0; c < 6; ++c) {
            std::vector<Scalar> coeffs;
            for (std::size_t r = 0; r < 6; ++r) coeffs.push_back(p(r, c));
            lifts.emplace_back(k, std::move(coeffs));
        }
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t i = 0; i < 2; ++i)
                CHECK(l.embed(lifts[2 * j + i]) % local == (q[j] * g[i]) % local);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                CHECK(evaluate(s.blocks[0], lifts[i] * lifts[j]) == (i == j ? k.one() : k.zero()));
    }
}
