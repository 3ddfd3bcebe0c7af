#include <doctest.h>

#include "support.hpp"
#include "symchar2/matrix_poly.hpp"
#include "symchar2/realizer.hpp"

using namespace symchar2;

namespace {

struct Input {
    Poly f;
    FactorDecomposition fd;
};

Input function_field_input(const Field& k, const char* factored) {
    const auto claimed = parse_factored(k, factored);
    Poly f = Poly::one(k);
    for (const auto& c : claimed) f = f * pow(c.factor, c.multiplicity);
    return {f, validate_factored_input(f, claimed)};
}

Input finite_input(const Field& k, const char* text) {
    const Poly f = parse_poly(k, text);
    return {f, factor(f)};
}

// M = Q C Q^-1 and the certificate re-derived with plain matrix arithmetic.
void check_realization(const Realization& r) {
    CHECK(r.certificate.passed());
    CHECK(r.M.is_symmetric());
    CHECK(r.Q.transpose() * r.Q == r.S);
    CHECK(r.Q * r.C == r.M * r.Q);
    CHECK(min_poly(r.M) == r.target);
    CHECK(char_poly(r.M) == r.target);
}

}  // namespace

TEST_SUITE("realizer") {
    TEST_CASE("decision rule") {
        const Field k = Field::parse("f2(t)");
        CHECK(decide(function_field_input(k, "(x^2+t)").fd) == Decision::NotRealizable);
        CHECK(decide(function_field_input(k, "(x^2+t)*(x^4+t)").fd) == Decision::NotRealizable);
        CHECK(decide(function_field_input(k, "(x^2+t)^3").fd) == Decision::Realizable);
        CHECK(decide(function_field_input(k, "(x^2+t)*(x+1)").fd) == Decision::Realizable);
        const Field k2 = Field::gf2();
        for (const char* f : {"x^2+1", "x^4+x+1", "x^3"}) CHECK(decide(finite_input(k2, f).fd) == Decision::Realizable);
    }

    TEST_CASE("plans for the worked inputs") {
        const Field k = Field::parse("f2(t)");
        RealizationPlan p = plan(function_field_input(k, "(x^2+x+t)^3").fd);
        CHECK(p.kind == PlanCase::SeparablePresent);
        REQUIRE(p.units.size() == 1);
        CHECK(p.units[0].kind == UnitKind::SepPower);
        CHECK(p.units[0].pi == parse_poly(k, "x^2+x+t"));
        CHECK(p.units[0].m == 3);
        CHECK_FALSE(p.even.has_value());

        p = plan(function_field_input(k, "(x^2+t)^3").fd);
        CHECK(p.kind == PlanCase::AllInseparable);
        REQUIRE(p.units.size() == 1);
        CHECK(p.units[0].kind == UnitKind::InsepPower);
        CHECK(p.units[0].pi == parse_poly(k, "x+t"));
        CHECK(p.units[0].n == 1);
        CHECK(p.units[0].m == 3);
        CHECK_FALSE(p.even.has_value());

        const Field k2 = Field::gf2();
        p = plan(finite_input(k2, "(x+1)^2*(x^2+x+1)").fd);
        CHECK(p.kind == PlanCase::SeparablePresent);
        REQUIRE(p.units.size() == 1);
        CHECK(p.units[0].pi == parse_poly(k2, "x^2+x+1"));
        REQUIRE(p.even.has_value());
        CHECK(*p.even == parse_poly(k2, "x^2+1"));
    }

    TEST_CASE("case (b) picks the smallest inseparable factor with multiplicity at least two") {
        const Field k = Field::parse("f2(t)");
        const RealizationPlan p = plan(function_field_input(k, "(x^4+t)^2*(x^2+t+1)^2*(x^2+t)").fd);
        REQUIRE(p.units.size() == 1);
        CHECK(p.units[0].pi == parse_poly(k, "x+t+1"));
        REQUIRE(p.even.has_value());
        CHECK(*p.even == parse_poly(k, "(x^4+t)^2*(x^2+t)"));
    }

    TEST_CASE("square block option") {
        const Field k = Field::parse("f2(t)");
        const Input in = function_field_input(k, "(x^2+x+t)*(x+1)^2");
        const RealizationPlan p = plan(in.fd, {false, true});
        REQUIRE(p.units.size() == 2);
        CHECK(p.units[1].kind == UnitKind::SquareBlock);
        CHECK_FALSE(p.even.has_value());
        check_realization(realize(in.f, in.fd, {false, true}));
    }

    TEST_CASE("worked inputs realize with a passing certificate") {
        const Field k = Field::parse("f2(t)");
        for (const char* text : {"(x^2+x+t)^3", "(x^2+t)^3", "(x^2+t)^2*(x^4+t)", "(x+1)^2*(x^2+t)", "(x^2+x+t)^2*(x+t)"}) {
            const Input in = function_field_input(k, text);
            for (bool pairing : {false, true})
                for (bool square : {false, true}) {
                    const Realization r = realize(in.f, in.fd, {pairing, square});
                    CHECK(r.target == in.f);
                    check_realization(r);
                }
        }
    }

    TEST_CASE("first worked input reproduces the shipped Gram and factor") {
        const Field k = Field::parse("f2(t)");
        const Input in = function_field_input(k, "(x^2+x+t)^3");
        const Realization r = realize(in.f, in.fd);
        CHECK(r.S == test::fixture_matrix("sep_cube_S.json"));
        CHECK(r.Q == test::fixture_matrix("sep_cube_Q.json"));
        CHECK(r.M == test::fixture_matrix("sep_cube_M.json"));
    }

    TEST_CASE("linear polynomials give 1x1 matrices") {
        const Field k = Field::binary(3);
        for (std::uint32_t c = 0; c < 8; ++c) {
            const Poly f = Poly::x(k) + Poly::constant(k.from_bits(c));
            const Realization r = realize(f, factor(f));
            REQUIRE(r.M.rows() == 1);
            CHECK(r.M(0, 0) == k.from_bits(c));
        }
    }

    TEST_CASE("all polynomials over GF(2) up to degree 4") {
        const Field k = Field::gf2();
        for (int d = 1; d <= 4; ++d)
            for (std::uint32_t code = 0; code < (1u << d); ++code) {
                std::vector<Scalar> c;
                for (int i = 0; i < d; ++i) c.push_back(k.from_bits((code >> i) & 1u));
                c.push_back(k.one());
                const Poly f(k, std::move(c));
                const Realization r = realize(f, factor(f));
                CHECK(r.M.rows() == static_cast<std::size_t>(d));
                check_realization(r);
            }
    }

    TEST_CASE("not realizable inputs throw") {
        const Field k = Field::parse("f2(t)");
        const Input in = function_field_input(k, "(x^2+t)*(x^4+t+1)");
        try {
            (void)realize(in.f, in.fd);
            FAIL("expected NotRealizable");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotRealizable);
        }
    }

    TEST_CASE("eigenvalue mode") {
        const Field k = Field::parse("f2(t)");
        Input in = function_field_input(k, "(x^2+t)");
        Realization r = realize_eigen(in.f, in.fd);
        CHECK(r.M.rows() == 3);
        CHECK(r.target == parse_poly(k, "x^3+t*x"));
        CHECK(r.smaller_size_impossible);
        check_realization(r);
        CHECK(verify(r.M, in.f, VerifyMode::Eigen).passed);

        in = function_field_input(k, "(x^2+x+t)");
        r = realize_eigen(in.f, in.fd);
        CHECK(r.M.rows() == 2);
        CHECK_FALSE(r.smaller_size_impossible);
        check_realization(r);

        in = function_field_input(k, "(x^2+t)^2");
        CHECK_THROWS_AS(realize_eigen(in.f, in.fd), Error);
    }

    TEST_CASE("verification of shipped matrices") {
        const Field k = Field::parse("f2(t)");
        const Poly f1 = parse_poly(k, "(x^2+x+t)^3");
        const VerifyReport r1 = verify(test::fixture_matrix("sep_cube_M.json"), f1, VerifyMode::MinPoly);
        CHECK(r1.passed);
        CHECK(verify(test::fixture_matrix("sep_cube_M.json"), f1, VerifyMode::CharPoly).passed);
    }

    TEST_CASE("verification reports failures") {
        const Field k = Field::parse("f2(t)");
        const Poly f = parse_poly(k, "x^3+t*x+1");
        const VerifyReport r = verify(companion(f), f, VerifyMode::MinPoly);
        CHECK_FALSE(r.symmetric);
        CHECK(r.min_poly_ok);
        CHECK_FALSE(r.passed);
        CHECK_FALSE(r.failures.empty());
        const VerifyReport wrong = verify(Matrix::identity(k, 3), f, VerifyMode::CharPoly);
        CHECK(wrong.symmetric);
        CHECK_FALSE(wrong.char_poly_ok);
        CHECK_FALSE(wrong.passed);
    }
}
