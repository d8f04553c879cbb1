#include "linsds/field.hpp"

#include <utility>

namespace linsds {

namespace {

constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

std::uint64_t checked_modulus(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) {
        throw Error(errc::field_mismatch,
                    "operands belong to different fields: " + a.to_string() + " vs " + b.to_string());
    }
    return a.is_prime_field() ? a.modulus() : 0;
}

// Extended Euclid; p prime and 0 < a < p, so the inverse exists.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

bool is_prime_modulus(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p > kMaxModulus) {
        throw Error(errc::invalid_field, "prime modulus must be < 2^31, got " + std::to_string(p));
    }
    if (!is_prime_modulus(p)) {
        throw Error(errc::invalid_field, std::to_string(p) + " is not prime");
    }
    return FieldSpec(p);
}

FieldSpec FieldSpec::rational() { return FieldSpec(0); }

std::uint64_t FieldSpec::modulus() const {
    if (!is_prime_field()) {
        throw Error(errc::invalid_field, "the rational field has no modulus");
    }
    return modulus_;
}

Scalar FieldSpec::zero() const { return from_int(0); }

Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(std::int64_t value) const {
    if (is_prime_field()) {
        std::int64_t p = static_cast<std::int64_t>(modulus_);
        std::int64_t r = value % p;
        if (r < 0) r += p;
        return Scalar(*this, static_cast<std::uint64_t>(r));
    }
    return Scalar(*this, BigRational(value));
}

Scalar FieldSpec::parse(const std::string& text) const {
    auto fail = [&] {
        return Error(errc::invalid_input, "cannot parse scalar literal '" + text + "'");
    };
    auto parse_int = [&](const std::string& part) -> BigInt {
        if (part.empty()) throw fail();
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw fail();
        for (std::size_t i = start; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw fail();
        }
        return BigInt(part);
    };

    BigInt num, den = 1;
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        num = parse_int(text);
    } else {
        num = parse_int(text.substr(0, slash));
        den = parse_int(text.substr(slash + 1));
        if (den == 0) {
            throw Error(errc::division_by_zero, "scalar literal '" + text + "' has zero denominator");
        }
    }

    if (is_rational()) {
        return Scalar(*this, BigRational(num, den));
    }
    BigInt p(modulus_);
    BigInt n = num % p;
    if (n < 0) n += p;
    BigInt d = den % p;
    if (d < 0) d += p;
    Scalar sn(*this, n.convert_to<std::uint64_t>());
    Scalar sd(*this, d.convert_to<std::uint64_t>());
    return slash == std::string::npos ? sn : sn / sd;
}

std::string FieldSpec::to_string() const {
    return is_rational() ? "Q" : "F_" + std::to_string(modulus_);
}

bool Scalar::is_zero() const {
    if (field_.is_prime_field()) return std::get<std::uint64_t>(value_) == 0;
    return std::get<BigRational>(value_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_prime_field()) return std::get<std::uint64_t>(value_) == 1;
    return std::get<BigRational>(value_) == 1;
}

Scalar Scalar::operator+(const Scalar& other) const {
    if (std::uint64_t p = checked_modulus(field_, other.field_)) {
        return Scalar(field_, (residue() + other.residue()) % p);
    }
    return Scalar(field_, rational_value() + other.rational_value());
}

Scalar Scalar::operator-(const Scalar& other) const {
    if (std::uint64_t p = checked_modulus(field_, other.field_)) {
        return Scalar(field_, (residue() + p - other.residue()) % p);
    }
    return Scalar(field_, rational_value() - other.rational_value());
}

Scalar Scalar::operator*(const Scalar& other) const {
    if (std::uint64_t p = checked_modulus(field_, other.field_)) {
        return Scalar(field_, (residue() * other.residue()) % p);
    }
    return Scalar(field_, rational_value() * other.rational_value());
}

Scalar Scalar::operator/(const Scalar& other) const {
    return *this * other.inv();
}

Scalar Scalar::operator-() const {
    if (field_.is_prime_field()) {
        std::uint64_t r = residue();
        return Scalar(field_, r == 0 ? 0 : field_.modulus() - r);
    }
    return Scalar(field_, -rational_value());
}

Scalar Scalar::inv() const {
    if (is_zero()) {
        throw Error(errc::division_by_zero, "inverse of zero in " + field_.to_string());
    }
    if (field_.is_prime_field()) {
        return Scalar(field_, mod_inverse(residue(), field_.modulus()));
    }
    return Scalar(field_, 1 / rational_value());
}

bool Scalar::operator==(const Scalar& other) const {
    if (field_ != other.field_) return false;
    if (field_.is_prime_field()) return residue() == other.residue();
    return rational_value() == other.rational_value();
}

std::uint64_t Scalar::residue() const {
    return std::get<std::uint64_t>(value_);
}

const BigRational& Scalar::rational_value() const {
    return std::get<BigRational>(value_);
}

std::string Scalar::to_string() const {
    if (field_.is_prime_field()) return std::to_string(residue());
    const BigRational& q = rational_value();
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

} // namespace linsds
