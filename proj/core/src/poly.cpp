#include "symchar2/poly.hpp"

#include <algorithm>
#include <ostream>

namespace symchar2 {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field()))
        throw Error(ErrorCode::DescriptorMismatch, "polynomials over " + a.field().name() + " and " + b.field().name());
}

bool needs_parens(const std::string& s) {
    return s.find_first_of("+/") != std::string::npos;
}

}  // namespace

Poly::Poly(Field field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!(c.field() == field_))
            throw Error(ErrorCode::DescriptorMismatch, "coefficient in " + c.field().name() + ", expected " + field_.name());
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t k) {
    std::vector<Scalar> v(k + 1, c.field().zero());
    v[k] = c;
    return Poly(c.field(), std::move(v));
}

Scalar Poly::leading() const { return c_.empty() ? field_.zero() : c_.back(); }

Poly Poly::operator+(const Poly& rhs) const {
    require_same_field(*this, rhs);
    std::vector<Scalar> r = c_.size() >= rhs.c_.size() ? c_ : rhs.c_;
    const auto& other = c_.size() >= rhs.c_.size() ? rhs.c_ : c_;
    for (std::size_t i = 0; i < other.size(); ++i) r[i] += other[i];
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& rhs) const {
    require_same_field(*this, rhs);
    if (c_.empty() || rhs.c_.empty()) return Poly(field_);
    std::vector<Scalar> r(c_.size() + rhs.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            if (rhs.c_[j].is_zero()) continue;
            r[i + j] += c_[i] * rhs.c_[j];
        }
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Scalar& rhs) const {
    std::vector<Scalar> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * rhs);
    return Poly(field_, std::move(r));
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += '+';
        std::string coeff = c_[i].to_string();
        if (needs_parens(coeff)) coeff = "(" + coeff + ")";
        if (i == 0) {
            out += coeff;
            continue;
        }
        if (!c_[i].is_one()) out += coeff + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_) || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

DivRem divrem(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Scalar> r = a.coeffs();
    std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), f.zero());
    const Scalar lead_inv = b.leading().inv();
    const auto db = static_cast<std::size_t>(b.degree());
    const auto& bc = b.coeffs();
    for (std::size_t top = r.size(); top-- > db;) {
        if (r[top].is_zero()) continue;
        const Scalar c = r[top] * lead_inv;
        const std::size_t shift = top - db;
        q[shift] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            if (!bc[j].is_zero()) r[j + shift] -= c * bc[j];
        }
    }
    r.resize(db, f.zero());
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, b.to_string() + " does not divide " + a.to_string());
    return q;
}

Poly monic(const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return a * a.leading().inv();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(f), s1(f);
    Poly t0(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Scalar li = r0.leading().inv();
    return {r0 * li, s0 * li, t0 * li};
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return monic(exact_div(a, gcd(a, b)) * b);
}

Poly derivative(const Poly& a) {
    const Field& f = a.field();
    if (a.degree() < 1) return Poly(f);
    std::vector<Scalar> r(static_cast<std::size_t>(a.degree()), f.zero());
    // characteristic two: i * c vanishes for even i
    for (std::size_t i = 1; i < a.coeffs().size(); i += 2) r[i - 1] = a.coeffs()[i];
    return Poly(f, std::move(r));
}

Scalar eval(const Poly& a, const Scalar& x) {
    Scalar acc = x.field().zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = acc * x + a.coeffs()[i];
    return acc;
}

Poly pow(const Poly& a, unsigned e) {
    Poly result = Poly::one(a.field());
    Poly base = a;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f) { return (a * b) % f; }

Poly reduce_power(std::uint64_t i, const Poly& f) {
    if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "reduce_power modulo zero");
    const Field& k = f.field();
    Poly result = Poly::one(k) % f;
    Poly base = Poly::x(k) % f;
    while (i) {
        if (i & 1u) result = mulmod(result, base, f);
        i >>= 1;
        if (i) base = mulmod(base, base, f);
    }
    return result;
}

bool in_k_of_X2(const Poly& f) {
    for (std::size_t i = 1; i < f.coeffs().size(); i += 2)
        if (!f.coeffs()[i].is_zero()) return false;
    return true;
}

Poly substitute_power_of_two(const Poly& f, unsigned n) {
    if (f.is_zero() || n == 0) return f;
    const std::size_t step = std::size_t{1} << n;
    std::vector<Scalar> r(static_cast<std::size_t>(f.degree()) * step + 1, f.field().zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) r[i * step] = f.coeffs()[i];
    return Poly(f.field(), std::move(r));
}

bool is_square(const Poly& f) {
    if (!in_k_of_X2(f)) return false;
    for (std::size_t i = 0; i < f.coeffs().size(); i += 2)
        if (!symchar2::is_square(f.coeffs()[i])) return false;
    return true;
}

Poly sqrt(const Poly& f) {
    if (!in_k_of_X2(f)) throw Error(ErrorCode::NotASquare, f.to_string() + " has odd-degree terms");
    std::vector<Scalar> r;
    r.reserve(f.coeffs().size() / 2 + 1);
    for (std::size_t i = 0; i < f.coeffs().size(); i += 2) r.push_back(symchar2::sqrt(f.coeffs()[i]));
    return Poly(f.field(), std::move(r));
}

int compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        const int c = compare(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace symchar2
