#include "symchar2/matrix_poly.hpp"

#include <algorithm>

namespace symchar2 {

Matrix companion(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw Error(ErrorCode::NotMonic, "companion matrix needs a monic polynomial of degree >= 1, got " + f.to_string());
    const auto n = static_cast<std::size_t>(f.degree());
    Matrix c(f.field(), n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = f.field().one();
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeffs()[i];
    return c;
}

Matrix block_companion(const std::vector<Poly>& moduli) {
    if (moduli.empty()) throw Error(ErrorCode::InvalidArgument, "block_companion of an empty list");
    std::vector<Matrix> blocks;
    blocks.reserve(moduli.size());
    for (const auto& f : moduli) blocks.push_back(companion(f));
    return Matrix::block_diagonal(moduli.front().field(), blocks);
}

Poly min_poly(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "min_poly of a non-square matrix");
    const Field& k = m.field();
    const std::size_t n = m.rows();
    Poly result = Poly::one(k);
    for (std::size_t start = 0; start < n && result.degree() < static_cast<int>(n); ++start) {
        // Echelon basis of the Krylov space of e_start, each vector tagged with the polynomial producing it.
        std::vector<std::vector<Scalar>> basis;
        std::vector<std::size_t> pivots;
        std::vector<Poly> reps;
        std::vector<Scalar> v(n, k.zero());
        v[start] = k.one();
        for (std::size_t power = 0;; ++power) {
            std::vector<Scalar> w = v;
            Poly rep = Poly::monomial(k.one(), power);
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const Scalar& c = w[pivots[b]];
                if (c.is_zero()) continue;
                const Scalar factor = c / basis[b][pivots[b]];
                for (std::size_t j = 0; j < n; ++j)
                    if (!basis[b][j].is_zero()) w[j] -= factor * basis[b][j];
                rep = rep - reps[b] * factor;
            }
            std::size_t pivot = 0;
            while (pivot < n && w[pivot].is_zero()) ++pivot;
            if (pivot == n) {
                result = lcm(result, rep);
                break;
            }
            basis.push_back(std::move(w));
            pivots.push_back(pivot);
            reps.push_back(std::move(rep));
            v = m * std::span<const Scalar>(v);
        }
    }
    return result;
}

Poly char_poly(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "char_poly of a non-square matrix");
    const Field& k = m.field();
    const std::size_t n = m.rows();
    // coefficients of the leading principal minor's characteristic polynomial, highest degree first
    std::vector<Scalar> v{k.one()};
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Scalar> toeplitz{k.one(), -m(r, r)};
        std::vector<Scalar> w(r, k.zero());
        for (std::size_t i = 0; i < r; ++i) w[i] = m(i, r);
        for (std::size_t power = 0; power < r; ++power) {
            Scalar dot = k.zero();
            for (std::size_t i = 0; i < r; ++i)
                if (!w[i].is_zero() && !m(r, i).is_zero()) dot += m(r, i) * w[i];
            toeplitz.push_back(-dot);
            if (power + 1 < r) {
                std::vector<Scalar> next(r, k.zero());
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (!w[j].is_zero() && !m(i, j).is_zero()) next[i] += m(i, j) * w[j];
                w = std::move(next);
            }
        }
        std::vector<Scalar> next(r + 2, k.zero());
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += toeplitz[i - j] * v[j];
        v = std::move(next);
    }
    return Poly(k, std::vector<Scalar>(v.rbegin(), v.rend()));
}

}  // namespace symchar2
