#include <algorithm>
#include <bit>

#include "symchar2/detail/field_impl.hpp"

namespace symchar2::detail {

std::uint32_t Gf2m::mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1u) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int bit = 2 * static_cast<int>(m) - 2; bit >= static_cast<int>(m); --bit) {
        if (acc & (std::uint64_t{1} << bit)) acc ^= std::uint64_t{modulus} << (bit - static_cast<int>(m));
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t Gf2m::inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(2^" + std::to_string(m) + ")");
    // a^(2^m - 2)
    std::uint32_t result = 1;
    std::uint32_t base = a;
    std::uint64_t e = (std::uint64_t{1} << m) - 2;
    while (e) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t Gf2m::sqrt(std::uint32_t a) const {
    for (unsigned i = 1; i < m; ++i) a = mul(a, a);
    return a;
}

namespace binpoly {

void trim(BinPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const BinPoly& p) { return static_cast<int>(p.size()) - 1; }

BinPoly add(const BinPoly& a, const BinPoly& b) {
    BinPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] ^= a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
    trim(r);
    return r;
}

BinPoly mul(const Gf2m& f, const BinPoly& a, const BinPoly& b) {
    if (a.empty() || b.empty()) return {};
    BinPoly r(a.size() + b.size() - 1, 0);
    const bool prime = f.m == 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!b[j]) continue;
            r[i + j] ^= prime ? 1u : f.mul(a[i], b[j]);
        }
    }
    trim(r);
    return r;
}

BinPoly scale(const Gf2m& f, const BinPoly& a, std::uint32_t c) {
    if (c == 0) return {};
    if (c == 1) return a;
    BinPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
    return r;
}

void divrem(const Gf2m& f, const BinPoly& a, const BinPoly& b, BinPoly& q, BinPoly& r) {
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    r = a;
    trim(r);
    const int db = degree(b);
    if (degree(r) < db) {
        q.clear();
        return;
    }
    q.assign(static_cast<std::size_t>(degree(r) - db + 1), 0);
    const std::uint32_t lead_inv = f.inv(b.back());
    while (!r.empty() && degree(r) >= db) {
        const int shift = degree(r) - db;
        const std::uint32_t c = f.mul(r.back(), lead_inv);
        q[static_cast<std::size_t>(shift)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[j + static_cast<std::size_t>(shift)] ^= f.mul(c, b[j]);
        trim(r);
    }
    trim(q);
}

BinPoly gcd(const Gf2m& f, BinPoly a, BinPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        BinPoly q, r;
        divrem(f, a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = scale(f, a, f.inv(a.back()));
    return a;
}

int compare(const BinPoly& a, const BinPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace binpoly
}  // namespace symchar2::detail
