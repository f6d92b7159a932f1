#include "lei/field.hpp"

namespace lei {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; requires gcd(a, p) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r; r = t;
        t = old_s - q * s;
        old_s = s; s = t;
    }
    return mod_pos(old_s, p);
}

}  // namespace

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
        throw BadField("not a prime modulus: " + std::to_string(p));
    return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::str() const {
    return kind_ == Kind::Rationals ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::from_int(const FieldSpec& f, std::int64_t n) {
    Scalar s(f);
    if (f.is_finite())
        s.v_ = mod_pos(n, f.p());
    else
        s.q_ = n;
    return s;
}

Scalar Scalar::from_rational(Rational q) {
    Scalar s(FieldSpec::rationals());
    s.q_ = std::move(q);
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_finite() ? v_ == 0 : q_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_finite() ? v_ == 1 : q_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("scalars from different fields: " + field_.str() +
                            " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_);
    if (field_.is_finite())
        r.v_ = mod_pos(v_ + o.v_, field_.p());
    else
        r.q_ = q_ + o.q_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_);
    if (field_.is_finite())
        r.v_ = mod_pos(v_ - o.v_, field_.p());
    else
        r.q_ = q_ - o.q_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_);
    if (field_.is_finite())
        r.v_ = mod_pos(v_ * o.v_, field_.p());
    else
        r.q_ = q_ * o.q_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.str());
    Scalar r(field_);
    if (field_.is_finite())
        r.v_ = mod_inverse(v_, field_.p());
    else
        r.q_ = 1 / q_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r(field_);
    if (field_.is_finite())
        r.v_ = mod_pos(-v_, field_.p());
    else
        r.q_ = -q_;
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_finite() ? v_ == o.v_ : q_ == o.q_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    return field_.is_finite() ? v_ < o.v_ : q_ < o.q_;
}

std::string Scalar::str() const {
    if (field_.is_finite()) return std::to_string(v_);
    std::string s = numerator(q_).str();
    if (denominator(q_) != 1) s += "/" + denominator(q_).str();
    return s;
}

FieldSpec parse_field_spec(const std::string& s) {
    if (s == "Q") return FieldSpec::rationals();
    if (s.size() >= 2 && s[0] == 'F') {
        std::int64_t p = 0;
        try {
            std::size_t pos = 0;
            p = std::stoll(s.substr(1), &pos);
            if (pos != s.size() - 1) throw BadField("bad field spec: " + s);
        } catch (const std::logic_error&) {
            throw BadField("bad field spec: " + s);
        }
        return FieldSpec::prime(p);
    }
    throw BadField("bad field spec: " + s);
}

Scalar parse_scalar(const FieldSpec& f, const std::string& s) {
    auto parse_int = [&](const std::string& t) {
        std::size_t pos = 0;
        BigInt n;
        try {
            n = BigInt(t);
        } catch (const std::exception&) {
            throw BadField("bad scalar: " + s);
        }
        (void)pos;
        return n;
    };
    auto slash = s.find('/');
    BigInt num = parse_int(slash == std::string::npos ? s : s.substr(0, slash));
    BigInt den = slash == std::string::npos ? BigInt(1) : parse_int(s.substr(slash + 1));
    if (den == 0) throw BadField("zero denominator in scalar: " + s);
    if (f.is_finite()) {
        BigInt p(f.p());
        BigInt n = num % p;
        if (n < 0) n += p;
        Scalar r = Scalar::from_int(f, n.convert_to<std::int64_t>());
        if (slash != std::string::npos) {
            BigInt d = den % p;
            if (d < 0) d += p;
            if (d == 0) throw BadField("denominator not invertible mod p: " + s);
            r = r / Scalar::from_int(f, d.convert_to<std::int64_t>());
        }
        return r;
    }
    if (den < 0) {  // the two-argument Rational ctor rejects negative denominators
        num = -num;
        den = -den;
    }
    return Scalar::from_rational(Rational(num, den));
}

}  // namespace lei
