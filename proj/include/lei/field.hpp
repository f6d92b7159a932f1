#ifndef LEI_FIELD_HPP
#define LEI_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lei {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct LeiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : LeiError { using LeiError::LeiError; };
struct FieldMismatch : LeiError { using LeiError::LeiError; };
struct DivisionByZero : LeiError { using LeiError::LeiError; };
struct SingularMatrix : LeiError { using LeiError::LeiError; };
struct NotLeibniz : LeiError { using LeiError::LeiError; };
struct NotFiniteField : LeiError { using LeiError::LeiError; };
struct BudgetExceeded : LeiError { using LeiError::LeiError; };
struct InadmissibleParams : LeiError { using LeiError::LeiError; };
struct NotInFamily : LeiError { using LeiError::LeiError; };
struct NotInvariant : LeiError { using LeiError::LeiError; };
struct BadField : LeiError { using LeiError::LeiError; };

struct ParseError : LeiError {
    int line;
    ParseError(int line_no, const std::string& msg)
        : LeiError("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

/// The coefficient field: either the rationals or a prime field F_p.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
    static FieldSpec prime(std::int64_t p);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::PrimeField; }
    std::int64_t p() const { return p_; }

    bool operator==(const FieldSpec&) const = default;

    std::string str() const;

private:
    FieldSpec(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::int64_t p_;
};

/// Exact field element in canonical form: an integer in [0,p) for F_p,
/// a reduced fraction for Q. Equality is representational.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()) {}

    static Scalar from_int(const FieldSpec& f, std::int64_t n);
    static Scalar from_rational(Rational q);

    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;

    /// Representative in [0,p); only meaningful for prime fields.
    std::int64_t fp_value() const { return v_; }
    const Rational& rational_value() const { return q_; }

    std::string str() const;

private:
    explicit Scalar(const FieldSpec& f) : field_(f) {}
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    std::int64_t v_ = 0;  // PrimeField representative
    Rational q_;          // Rationals value
};

/// Parse "Q" or "F<p>".
FieldSpec parse_field_spec(const std::string& s);

/// Parse "n" or "n/d" in the given field.
Scalar parse_scalar(const FieldSpec& f, const std::string& s);

}  // namespace lei

#endif
