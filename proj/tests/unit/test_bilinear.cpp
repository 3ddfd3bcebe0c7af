#include <doctest.h>

#include "support.hpp"
#include "symchar2/bilinear.hpp"

using namespace symchar2;

namespace {

ErrorCode reduction_error(const Matrix& s) {
    try {
        (void)gauss_reduce(s);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

Matrix random_square(const Field& k, std::size_t n, std::mt19937_64& rng) {
    Matrix a(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = test::random_scalar(k, rng);
    return a;
}

}  // namespace

TEST_SUITE("bilinear") {
    TEST_CASE("classification of the separable power Gram") {
        const Matrix s = test::fixture_matrix("sep_cube_S.json");
        const FormClass c = classify(s);
        CHECK_FALSE(c.alternating);
        CHECK(c.nondegenerate);
        CHECK(c.diagonal_all_squares);
        CHECK(is_unit_certifiable(s));
    }

    TEST_CASE("classification edge cases") {
        const Field k = Field::parse("f2(t)");
        const Matrix h = test::matrix_of(k, {{"0", "1"}, {"1", "0"}});
        CHECK(classify(h).alternating);
        CHECK_FALSE(is_unit_certifiable(h));
        const Matrix nonsquare = test::matrix_of(k, {{"t"}});
        CHECK_FALSE(classify(nonsquare).diagonal_all_squares);
        CHECK_FALSE(is_unit_certifiable(nonsquare));
        CHECK_FALSE(is_unit_certifiable(test::matrix_of(k, {{"1", "1"}, {"1", "1"}})));
        CHECK_THROWS_AS(classify(test::matrix_of(k, {{"1", "t"}, {"0", "1"}})), Error);
    }

    TEST_CASE("reduction of the separable power Gram reproduces the shipped factor") {
        const Matrix s = test::fixture_matrix("sep_cube_S.json");
        const ReductionResult r = gauss_reduce(s);
        CHECK(r.rank == 6);
        CHECK(r.U.transpose() * r.U == s);
        CHECK(r.U == test::fixture_matrix("sep_cube_Q.json"));
        CHECK(congruence_check(s, r.P, CongruenceMode::ToIdentity));
        CHECK(congruence_check(s, r.U, CongruenceMode::Factorization));
    }

    TEST_CASE("shipped factors satisfy Q^T Q = S") {
        CHECK(congruence_check(test::fixture_matrix("sep_cube_S.json"), test::fixture_matrix("sep_cube_Q.json"),
                               CongruenceMode::Factorization));
        const Matrix s2 = test::fixture_matrix("insep_cube_S.json");
        const ReductionResult r = gauss_reduce(s2);
        CHECK(r.rank == 6);
        CHECK(congruence_check(s2, r.U, CongruenceMode::Factorization));
    }

    TEST_CASE("unit plus hyperbolic plane is congruent to the identity") {
        const Matrix b = test::fixture_matrix("hyperbolic_B.json");
        const Matrix p = test::fixture_matrix("hyperbolic_P.json");
        CHECK(congruence_check(b, p, CongruenceMode::ToIdentity));
        const ReductionResult r = gauss_reduce(b);
        CHECK(r.rank == 3);
        CHECK(congruence_check(b, r.P, CongruenceMode::ToIdentity));
    }

    TEST_CASE("hyperbolic pairs are absorbed regardless of their position") {
        const Field k = Field::parse("f2(t)");
        const Matrix s = test::matrix_of(k, {{"0", "1", "0", "0", "0"},
                                             {"1", "0", "0", "0", "0"},
                                             {"0", "0", "0", "t", "0"},
                                             {"0", "0", "t", "0", "0"},
                                             {"0", "0", "0", "0", "t^2"}});
        const ReductionResult r = gauss_reduce(s);
        CHECK(r.rank == 5);
        CHECK(r.U.transpose() * r.U == s);
        CHECK(congruence_check(s, r.P, CongruenceMode::ToIdentity));
    }

    TEST_CASE("failure modes") {
        const Field k = Field::parse("f2(t)");
        CHECK(reduction_error(test::matrix_of(k, {{"0", "1"}, {"1", "0"}})) == ErrorCode::ReductionFailed);
        CHECK(reduction_error(test::matrix_of(k, {{"t", "0"}, {"0", "1"}})) == ErrorCode::NonSquarePivot);
        CHECK(reduction_error(test::matrix_of(k, {{"1", "1"}, {"0", "1"}})) == ErrorCode::NotSymmetric);
    }

    TEST_CASE("degenerate forms report their rank") {
        const Field k = Field::parse("f2(t)");
        const Matrix s = test::matrix_of(k, {{"1", "t", "0"}, {"t", "t^2", "0"}, {"0", "0", "0"}});
        const ReductionResult r = gauss_reduce(s);
        CHECK(r.rank == 1);
        CHECK(r.U.transpose() * r.U == s);
        const Matrix d = r.P.transpose() * s * r.P;
        CHECK(d(0, 0).is_one());
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i + j > 0) CHECK(d(i, j).is_zero());
    }

    TEST_CASE("random Gram matrices A^T A over GF(4) and F2(t)") {
        for (const char* spec : {"gf(2^2)", "f2(t)"}) {
            const Field k = Field::parse(spec);
            std::mt19937_64 rng(51);
            for (int trial = 0; trial < 40; ++trial) {
                const std::size_t n = 1 + trial % 6;
                const Matrix a = random_square(k, n, rng);
                if (rank(a) < n) continue;
                const Matrix s = a.transpose() * a;
                const ReductionResult r = gauss_reduce(s);
                CHECK(r.rank == n);
                CHECK(r.U.transpose() * r.U == s);
                CHECK(r.P.transpose() * s * r.P == Matrix::identity(k, n));
            }
        }
    }
}
