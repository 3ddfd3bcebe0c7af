#include "symchar2/field.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <ostream>
#include <sstream>

#include "symchar2/detail/field_impl.hpp"

namespace symchar2 {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NotASquare: return "NotASquare";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotIrreducibleHint: return "NotIrreducibleHint";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::ProductMismatch: return "ProductMismatch";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::FactorizationFailed: return "FactorizationFailed";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NonSquarePivot: return "NonSquarePivot";
        case ErrorCode::ReductionFailed: return "ReductionFailed";
        case ErrorCode::NotEvenPolynomial: return "NotEvenPolynomial";
        case ErrorCode::InseparableCore: return "InseparableCore";
        case ErrorCode::SquareParameter: return "SquareParameter";
        case ErrorCode::BadMultiplicity: return "BadMultiplicity";
        case ErrorCode::NotSquareShape: return "NotSquareShape";
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::NotCoprimeBlocks: return "NotCoprimeBlocks";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::DescentFailure: return "DescentFailure";
        case ErrorCode::PlanInvariantViolated: return "PlanInvariantViolated";
        case ErrorCode::NotRealizable: return "NotRealizable";
        case ErrorCode::CertificateFailure: return "CertificateFailure";
    }
    return "Unknown";
}

namespace detail {
namespace {

constexpr std::array<std::uint32_t, 17> kDefaultModuli = {
    0,      0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,   0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

std::string render_tpoly(const BinPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        if (!out.empty()) out += '+';
        const bool unit = p[i] == 1;
        if (i == 0) {
            out += std::to_string(p[i]);
            continue;
        }
        if (!unit) out += std::to_string(p[i]) + "*";
        out += 't';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

class BinaryFieldImpl final : public FieldImpl {
public:
    explicit BinaryFieldImpl(Gf2m gf) : gf_(gf) {}

    FieldKind kind() const override { return FieldKind::Binary; }
    std::string name() const override {
        if (gf_.m == 1) return "gf2";
        return "gf(2^" + std::to_string(gf_.m) + "):" + std::to_string(gf_.modulus);
    }
    bool equals(const FieldImpl& other) const override {
        const auto* o = other.binary();
        return other.kind() == FieldKind::Binary && o->m == gf_.m && o->modulus == gf_.modulus;
    }
    bool is_finite() const override { return true; }
    unsigned absolute_degree() const override { return gf_.m; }
    const Gf2m* binary() const override { return &gf_; }

    ScalarRep zero() const override { return std::uint32_t{0}; }
    ScalarRep one() const override { return std::uint32_t{1}; }
    bool is_zero(const ScalarRep& x) const override { return bits(x) == 0; }
    ScalarRep add(const ScalarRep& a, const ScalarRep& b) const override { return bits(a) ^ bits(b); }
    ScalarRep mul(const ScalarRep& a, const ScalarRep& b) const override { return gf_.mul(bits(a), bits(b)); }
    ScalarRep inv(const ScalarRep& a) const override { return gf_.inv(bits(a)); }
    bool is_square(const ScalarRep&) const override { return true; }
    ScalarRep sqrt(const ScalarRep& a) const override { return gf_.sqrt(bits(a)); }
    std::string render(const ScalarRep& a) const override { return std::to_string(bits(a)); }
    int compare(const ScalarRep& a, const ScalarRep& b) const override {
        return bits(a) == bits(b) ? 0 : (bits(a) < bits(b) ? -1 : 1);
    }

private:
    static std::uint32_t bits(const ScalarRep& x) { return std::get<std::uint32_t>(x); }
    Gf2m gf_;
};

class RationalFunctionImpl final : public FieldImpl {
public:
    explicit RationalFunctionImpl(Field base) : base_(std::move(base)), gf_(*base_.impl().binary()) {}

    FieldKind kind() const override { return FieldKind::RationalFunction; }
    std::string name() const override {
        if (gf_.m == 1) return "f2(t)";
        return base_.name() + "(t)";
    }
    bool equals(const FieldImpl& other) const override {
        return other.kind() == FieldKind::RationalFunction && *other.base_field() == base_;
    }
    bool is_finite() const override { return false; }
    unsigned absolute_degree() const override { return 0; }
    const Field* base_field() const override { return &base_; }
    const Gf2m* binary() const override { return &gf_; }

    ScalarRep zero() const override { return Fraction{{}, {1}}; }
    ScalarRep one() const override { return Fraction{{1}, {1}}; }
    bool is_zero(const ScalarRep& x) const override { return frac(x).num.empty(); }

    ScalarRep add(const ScalarRep& a, const ScalarRep& b) const override {
        const auto& x = frac(a);
        const auto& y = frac(b);
        if (x.den == y.den) return normalize(binpoly::add(x.num, y.num), x.den);
        return normalize(binpoly::add(binpoly::mul(gf_, x.num, y.den), binpoly::mul(gf_, y.num, x.den)),
                         binpoly::mul(gf_, x.den, y.den));
    }
    ScalarRep mul(const ScalarRep& a, const ScalarRep& b) const override {
        const auto& x = frac(a);
        const auto& y = frac(b);
        if (x.num.empty() || y.num.empty()) return zero();
        // cross-cancel before multiplying to keep intermediate degrees small
        BinPoly g1 = binpoly::gcd(gf_, x.num, y.den);
        BinPoly g2 = binpoly::gcd(gf_, y.num, x.den);
        BinPoly q, r, xn, yd, yn, xd;
        binpoly::divrem(gf_, x.num, g1, xn, r);
        binpoly::divrem(gf_, y.den, g1, yd, r);
        binpoly::divrem(gf_, y.num, g2, yn, r);
        binpoly::divrem(gf_, x.den, g2, xd, r);
        return normalize(binpoly::mul(gf_, xn, yn), binpoly::mul(gf_, xd, yd));
    }
    ScalarRep inv(const ScalarRep& a) const override {
        const auto& x = frac(a);
        if (x.num.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
        return normalize(x.den, x.num);
    }
    ScalarRep square(const ScalarRep& a) const override {
        const auto& x = frac(a);
        return Fraction{square_poly(x.num), square_poly(x.den)};
    }
    bool is_square(const ScalarRep& a) const override {
        const auto& x = frac(a);
        return only_even(x.num) && only_even(x.den);
    }
    ScalarRep sqrt(const ScalarRep& a) const override {
        if (!is_square(a)) throw Error(ErrorCode::NotASquare, render(a) + " is not a square in " + name());
        const auto& x = frac(a);
        return Fraction{sqrt_poly(x.num), sqrt_poly(x.den)};
    }
    std::string render(const ScalarRep& a) const override {
        const auto& x = frac(a);
        if (x.den.size() == 1) return render_tpoly(x.num);
        std::string num = render_tpoly(x.num);
        std::string den = render_tpoly(x.den);
        if (num.find('+') != std::string::npos) num = "(" + num + ")";
        if (den.find_first_of("+*") != std::string::npos) den = "(" + den + ")";
        return num + "/" + den;
    }
    int compare(const ScalarRep& a, const ScalarRep& b) const override {
        const int c = binpoly::compare(frac(a).num, frac(b).num);
        return c != 0 ? c : binpoly::compare(frac(a).den, frac(b).den);
    }

    ScalarRep normalize(BinPoly num, BinPoly den) const {
        binpoly::trim(num);
        binpoly::trim(den);
        if (den.empty()) throw Error(ErrorCode::DivisionByZero, "zero denominator in " + name());
        if (num.empty()) return zero();
        BinPoly g = binpoly::gcd(gf_, num, den);
        BinPoly q, r;
        if (g.size() > 1) {
            binpoly::divrem(gf_, num, g, q, r);
            num = std::move(q);
            binpoly::divrem(gf_, den, g, q, r);
            den = std::move(q);
        }
        const std::uint32_t lead = den.back();
        if (lead != 1) {
            const std::uint32_t li = gf_.inv(lead);
            num = binpoly::scale(gf_, num, li);
            den = binpoly::scale(gf_, den, li);
        }
        return Fraction{std::move(num), std::move(den)};
    }

private:
    static const Fraction& frac(const ScalarRep& x) { return std::get<Fraction>(x); }
    static bool only_even(const BinPoly& p) {
        for (std::size_t i = 1; i < p.size(); i += 2)
            if (p[i] != 0) return false;
        return true;
    }
    BinPoly square_poly(const BinPoly& p) const {
        if (p.empty()) return {};
        BinPoly r(2 * p.size() - 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i) r[2 * i] = gf_.square(p[i]);
        return r;
    }
    BinPoly sqrt_poly(const BinPoly& p) const {
        BinPoly r((p.size() + 1) / 2, 0);
        for (std::size_t i = 0; i < p.size(); i += 2) r[i / 2] = gf_.sqrt(p[i]);
        binpoly::trim(r);
        return r;
    }

    Field base_;
    Gf2m gf_;
};

const RationalFunctionImpl& as_rf(const Field& f) {
    if (f.kind() != FieldKind::RationalFunction)
        throw Error(ErrorCode::UnsupportedField, f.name() + " is not a rational function field");
    return static_cast<const RationalFunctionImpl&>(f.impl());
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------------------------------------------------

bool Field::is_irreducible_binary(std::uint32_t poly) {
    const int d = static_cast<int>(std::bit_width(poly)) - 1;
    if (d < 1) return false;
    for (std::uint32_t q = 2; static_cast<int>(std::bit_width(q)) - 1 <= d / 2; ++q) {
        std::uint32_t r = poly;
        const int dq = static_cast<int>(std::bit_width(q)) - 1;
        while (r != 0 && static_cast<int>(std::bit_width(r)) - 1 >= dq) r ^= q << (std::bit_width(r) - 1 - dq);
        if (r == 0) return false;
    }
    return true;
}

std::uint32_t Field::default_modulus(unsigned m) {
    if (m < 1 || m > 16) throw Error(ErrorCode::InvalidArgument, "binary field degree must lie in [1, 16]");
    return detail::kDefaultModuli[m];
}

Field Field::gf2() { return binary(1); }

Field Field::binary(unsigned m) { return binary(m, default_modulus(m)); }

Field Field::binary(unsigned m, std::uint32_t modulus) {
    if (m < 1 || m > 16) throw Error(ErrorCode::InvalidArgument, "binary field degree must lie in [1, 16]");
    if (static_cast<unsigned>(std::bit_width(modulus)) != m + 1)
        throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(modulus) + " does not have degree " +
                                                    std::to_string(m));
    if (!is_irreducible_binary(modulus))
        throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(modulus) + " is reducible over GF(2)");
    return Field(std::make_shared<detail::BinaryFieldImpl>(detail::Gf2m{m, modulus}));
}

Field Field::rational_function(const Field& base) {
    if (base.kind() != FieldKind::Binary)
        throw Error(ErrorCode::UnsupportedField, "function fields are built over GF(2^m) only");
    return Field(std::make_shared<detail::RationalFunctionImpl>(base));
}

namespace {

std::string lowercase_compact(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

unsigned parse_unsigned(const std::string& s, std::size_t& pos, std::string_view spec) {
    const std::size_t start = pos;
    unsigned long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        value = value * 10 + static_cast<unsigned long>(s[pos] - '0');
        if (value > 0xffffffffUL) throw Error(ErrorCode::ParseError, "number too large in field spec '" + std::string(spec) + "'");
        ++pos;
    }
    if (pos == start) throw Error(ErrorCode::ParseError, "expected a number in field spec '" + std::string(spec) + "'");
    return static_cast<unsigned>(value);
}

}  // namespace

Field Field::parse(std::string_view spec) {
    std::string s = lowercase_compact(spec);
    bool function_field = false;
    if (s.size() >= 3 && s.ends_with("(t)")) {
        function_field = true;
        s.resize(s.size() - 3);
    }
    Field base = gf2();
    if (s == "f2" || s == "gf2" || s == "gf(2)") {
        base = gf2();
    } else if (s.starts_with("gf(2^")) {
        std::size_t pos = 5;
        const unsigned m = parse_unsigned(s, pos, spec);
        if (pos >= s.size() || s[pos] != ')') throw Error(ErrorCode::ParseError, "expected ')' in field spec '" + std::string(spec) + "'");
        ++pos;
        if (pos == s.size()) {
            base = binary(m);
        } else if (s[pos] == ':') {
            ++pos;
            const unsigned bits = parse_unsigned(s, pos, spec);
            if (pos != s.size()) throw Error(ErrorCode::ParseError, "trailing characters in field spec '" + std::string(spec) + "'");
            base = binary(m, bits);
        } else {
            throw Error(ErrorCode::ParseError, "trailing characters in field spec '" + std::string(spec) + "'");
        }
    } else {
        throw Error(ErrorCode::ParseError, "unrecognized field spec '" + std::string(spec) + "'");
    }
    return function_field ? rational_function(base) : base;
}

FieldKind Field::kind() const { return impl_->kind(); }
std::string Field::name() const { return impl_->name(); }
bool Field::is_finite() const { return impl_->is_finite(); }
unsigned Field::absolute_degree() const { return impl_->absolute_degree(); }

Field Field::base() const {
    const Field* b = impl_->base_field();
    return b ? *b : *this;
}

unsigned Field::binary_degree() const {
    const auto* gf = impl_->binary();
    if (!gf) throw Error(ErrorCode::UnsupportedField, name() + " has no binary base");
    return gf->m;
}

std::uint32_t Field::binary_modulus() const {
    const auto* gf = impl_->binary();
    if (!gf) throw Error(ErrorCode::UnsupportedField, name() + " has no binary base");
    return gf->modulus;
}

Scalar Field::zero() const { return Scalar(*this, impl_->zero()); }
Scalar Field::one() const { return Scalar(*this, impl_->one()); }

Scalar Field::from_bits(std::uint32_t bits) const {
    const unsigned m = binary_degree();
    if (m < 32 && bits >= (std::uint32_t{1} << m))
        throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(bits) + " out of range for " + name());
    if (kind() == FieldKind::Binary) return Scalar(*this, bits);
    if (kind() == FieldKind::RationalFunction) return fraction(bits ? BinPoly{bits} : BinPoly{}, {1});
    throw Error(ErrorCode::UnsupportedField, "from_bits on " + name());
}

Scalar Field::t() const { return fraction({0, 1}, {1}); }

Scalar Field::fraction(BinPoly num, BinPoly den) const {
    const auto& rf = detail::as_rf(*this);
    for (auto c : num)
        if (binary_degree() < 32 && c >= (std::uint32_t{1} << binary_degree()))
            throw Error(ErrorCode::InvalidArgument, "coefficient out of range for " + name());
    return Scalar(*this, rf.normalize(std::move(num), std::move(den)));
}

bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ || a.impl_->equals(*b.impl_);
}

// ---------------------------------------------------------------------------------------------------------------------

void Scalar::require_same_field(const Scalar& rhs) const {
    if (!(field_ == rhs.field_))
        throw Error(ErrorCode::DescriptorMismatch, "operands live in " + field_.name() + " and " + rhs.field_.name());
}

bool Scalar::is_zero() const { return field_.impl().is_zero(rep_); }

bool Scalar::is_one() const { return *this == field_.one(); }

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    return Scalar(field_, field_.impl().add(rep_, rhs.rep_));
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    return Scalar(field_, field_.impl().mul(rep_, rhs.rep_));
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inv(); }

Scalar Scalar::inv() const { return Scalar(field_, field_.impl().inv(rep_)); }

Scalar Scalar::pow(long long e) const {
    Scalar base = e < 0 ? inv() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Scalar result = field_.one();
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k) base = frobenius(base);
    }
    return result;
}

std::string Scalar::to_string() const { return field_.impl().render(rep_); }

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.field_.impl().compare(a.rep_, b.rep_) == 0;
}

Scalar frobenius(const Scalar& x) { return Scalar(x.field(), x.field().impl().square(x.rep())); }

bool is_square(const Scalar& x) { return x.field().impl().is_square(x.rep()); }

Scalar sqrt(const Scalar& x) { return Scalar(x.field(), x.field().impl().sqrt(x.rep())); }

int compare(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field()))
        throw Error(ErrorCode::DescriptorMismatch, "compare across " + a.field().name() + " and " + b.field().name());
    return a.field().impl().compare(a.rep(), b.rep());
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace symchar2
