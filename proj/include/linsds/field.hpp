#pragma once

// Exact scalar arithmetic over prime fields F_p and the rationals Q, behind
// one runtime field descriptor. No floating point anywhere: prime residues
// live in uint64 (p < 2^31 so products fit 64 bits), rationals are
// arbitrary-precision and kept in lowest terms with positive denominator.

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "linsds/errors.hpp"

namespace linsds {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Scalar;

class FieldSpec {
public:
    // Prime field F_p. p must pass trial-division primality and be < 2^31;
    // non-prime moduli are rejected rather than silently forming a ring.
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rational();

    bool is_prime_field() const { return modulus_ != 0; }
    bool is_rational() const { return modulus_ == 0; }

    // Modulus of a prime field; invalid_field on Q.
    std::uint64_t modulus() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t value) const;
    // Accepts an optionally signed integer literal or "num/den".
    Scalar parse(const std::string& text) const;

    std::string to_string() const;
    bool operator==(const FieldSpec& other) const = default;

private:
    explicit FieldSpec(std::uint64_t modulus) : modulus_(modulus) {}
    std::uint64_t modulus_ = 0; // 0 encodes Q
};

// Immutable exact field element tagged with its field. Canonical form is
// unique: residues reduced into [0, p), fractions reduced with positive
// denominator. Mixing fields throws field_mismatch.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rational()), value_(BigRational(0)) {}

    const FieldSpec& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const; // division_by_zero on 0 divisor
    Scalar operator-() const;
    Scalar inv() const;                          // division_by_zero on 0

    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    // Residue in [0, p); only valid on prime fields.
    std::uint64_t residue() const;
    // Reduced fraction; only valid on Q.
    const BigRational& rational_value() const;

    // Canonical text form: residue, or "num" / "num/den".
    std::string to_string() const;

private:
    friend class FieldSpec;
    Scalar(FieldSpec field, std::uint64_t residue) : field_(field), value_(residue) {}
    Scalar(FieldSpec field, BigRational value) : field_(field), value_(std::move(value)) {}

    FieldSpec field_;
    std::variant<std::uint64_t, BigRational> value_;
};

bool is_prime_modulus(std::uint64_t p);

} // namespace linsds
