#include "symchar2/bilinear.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace symchar2 {

namespace {

using Row = std::vector<Scalar>;

void require_symmetric(const Matrix& s) {
    if (!s.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
}

Row add(const Row& a, const Row& b) {
    Row r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

// B += a^T b + b^T a (or a^T a when b is null)
void rank_update(Matrix& b, const Row& x, const Row& y) {
    const std::size_t n = b.rows();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            if (!x[k].is_zero() && !y[l].is_zero()) b(k, l) += x[k] * y[l];
            if (!y[k].is_zero() && !x[l].is_zero()) b(k, l) += y[k] * x[l];
        }
}

void square_update(Matrix& b, const Row& x) {
    const std::size_t n = b.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (x[k].is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l)
            if (!x[l].is_zero()) b(k, l) += x[k] * x[l];
    }
}

// phi1.phi1 + psi2.psi3 + psi3.psi2 = (phi1+psi2)^2 + (phi1+psi3)^2 + (phi1+psi2+psi3)^2
void absorb_pair(std::vector<Row>& phis, const Row& psi2, const Row& psi3) {
    const Row phi1 = phis.back();
    phis.back() = add(phi1, psi2);
    phis.push_back(add(phi1, psi3));
    phis.push_back(add(add(phi1, psi2), psi3));
}

}  // namespace

FormClass classify(const Matrix& gram) {
    require_symmetric(gram);
    FormClass c;
    c.alternating = true;
    c.diagonal_all_squares = true;
    for (std::size_t i = 0; i < gram.rows(); ++i) {
        if (!gram(i, i).is_zero()) c.alternating = false;
        if (!is_square(gram(i, i))) c.diagonal_all_squares = false;
    }
    c.nondegenerate = rank(gram) == gram.rows();
    return c;
}

bool is_unit_certifiable(const Matrix& gram) {
    if (gram.rows() == 0 || gram.is_zero()) return false;
    const FormClass c = classify(gram);
    return c.nondegenerate && !c.alternating && c.diagonal_all_squares;
}

ReductionResult gauss_reduce(const Matrix& gram) {
    require_symmetric(gram);
    const Field& k = gram.field();
    const std::size_t n = gram.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (!is_square(gram(i, i)))
            throw Error(ErrorCode::NonSquarePivot, "diagonal entry " + gram(i, i).to_string() + " is not a square");

    Matrix b = gram;
    std::vector<Row> phis;
    std::vector<std::pair<Row, Row>> pending;

    while (!b.is_zero()) {
        std::optional<std::size_t> pivot;
        for (std::size_t i = 0; i < n && !pivot; ++i)
            if (!b(i, i).is_zero()) pivot = i;

        if (pivot) {
            // Step 1: b = phi.phi + b1 with phi = row_i / sqrt(b_ii)
            const std::size_t i = *pivot;
            const Scalar u_inv = sqrt(b(i, i)).inv();
            Row phi(b.row(i).begin(), b.row(i).end());
            for (auto& x : phi) x *= u_inv;
            square_update(b, phi);
            phis.push_back(std::move(phi));
            while (!pending.empty()) {
                absorb_pair(phis, pending.back().first, pending.back().second);
                pending.pop_back();
            }
            continue;
        }

        // Step 2: alternating residue, split off psi2.psi3 + psi3.psi2 at the first nonzero b_ij
        std::size_t pi = 0, pj = 0;
        bool found = false;
        for (std::size_t i = 0; i < n && !found; ++i)
            for (std::size_t j = i + 1; j < n && !found; ++j)
                if (!b(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        const Scalar c_inv = b(pi, pj).inv();
        Row psi2(b.row(pj).begin(), b.row(pj).end());
        Row psi3(b.row(pi).begin(), b.row(pi).end());
        for (auto& x : psi3) x *= c_inv;
        rank_update(b, psi2, psi3);
        if (phis.empty()) {
            pending.emplace_back(std::move(psi2), std::move(psi3));
        } else {
            absorb_pair(phis, psi2, psi3);
        }
    }
    if (!pending.empty())
        throw Error(ErrorCode::ReductionFailed, "form is alternating and has no orthonormal decomposition");

    const std::size_t r = phis.size();
    Matrix u(k, phis);
    if (r == 0) u = Matrix(k, 0, n);
    if (rank(u) != r) throw Error(ErrorCode::ReductionFailed, "reduction produced dependent linear forms");

    // Step 3: complete U greedily with standard basis rows
    std::vector<Row> rows = phis;
    std::size_t current = r;
    for (std::size_t j = 0; j < n && rows.size() < n; ++j) {
        Row e(n, k.zero());
        e[j] = k.one();
        rows.push_back(e);
        if (rank(Matrix(k, rows)) == current + 1) {
            ++current;
        } else {
            rows.pop_back();
        }
    }
    Matrix q = n == 0 ? Matrix(k, 0, 0) : Matrix(k, rows);
    Matrix p = inverse(q);
    return {std::move(u), std::move(q), std::move(p), r};
}

bool congruence_check(const Matrix& gram, const Matrix& q, CongruenceMode mode) {
    if (!gram.is_square() || q.rows() != gram.rows() || q.cols() != gram.cols()) return false;
    switch (mode) {
        case CongruenceMode::ToIdentity:
            return q.transpose() * gram * q == Matrix::identity(gram.field(), gram.rows());
        case CongruenceMode::Factorization:
            return q.transpose() * q == gram;
    }
    return false;
}

}  // namespace symchar2
