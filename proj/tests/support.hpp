#ifndef SYMCHAR2_TESTS_SUPPORT_HPP
#define SYMCHAR2_TESTS_SUPPORT_HPP

#include <fstream>
#include <random>
#include <string>

#include "json_io.hpp"
#include "symchar2/parse.hpp"

namespace symchar2::test {

inline io::json load_fixture(const std::string& name) {
    std::ifstream in(std::string(SYMCHAR2_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    return io::json::parse(in);
}

inline Matrix fixture_matrix(const std::string& name) {
    const auto j = load_fixture(name);
    return io::matrix_from_json(Field::parse(j.at("field").get<std::string>()), j);
}

inline Matrix matrix_of(const Field& k, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (const auto& s : r) row.push_back(parse_scalar(k, s));
        out.push_back(std::move(row));
    }
    return Matrix(k, out);
}

/// Random element of GF(2^m), or of a function field over it with numerator and denominator degree <= deg.
inline Scalar random_scalar(const Field& k, std::mt19937_64& rng, int deg = 2) {
    const unsigned m = k.binary_degree();
    const std::uint32_t mask = (std::uint32_t{1} << m) - 1;
    if (k.kind() == FieldKind::Binary) return k.from_bits(static_cast<std::uint32_t>(rng()) & mask);
    const auto poly = [&](bool monic) {
        BinPoly p;
        for (int i = 0; i <= deg; ++i) p.push_back(static_cast<std::uint32_t>(rng()) & mask);
        if (monic) p.push_back(1);
        return p;
    };
    return k.fraction(poly(false), poly(true));
}

inline Poly random_monic(const Field& k, std::mt19937_64& rng, int degree) {
    std::vector<Scalar> c;
    for (int i = 0; i < degree; ++i) c.push_back(random_scalar(k, rng, 1));
    c.push_back(k.one());
    return Poly(k, std::move(c));
}

}  // namespace symchar2::test

#endif
