#ifndef LAGMUL_FIELD_HPP
#define LAGMUL_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "lagmul/errors.hpp"

namespace lagmul {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime_u64(std::uint64_t n);

/// Coefficient field: Q when characteristic is 0, otherwise F_p for a
/// machine-word prime p < 2^61.
class Field {
public:
    explicit Field(std::uint64_t characteristic);

    std::uint64_t characteristic() const { return p_; }
    bool is_prime_field() const { return p_ != 0; }

    bool operator==(const Field&) const = default;

private:
    std::uint64_t p_;
};

/// Immutable field element in canonical form: residue in [0, p) for F_p,
/// reduced fraction with positive denominator for Q.
class FieldElement {
public:
    FieldElement() = default;  // zero of Q

    FieldElement(const Field& field, std::int64_t value);
    FieldElement(const Field& field, const Rational& value);

    std::uint64_t characteristic() const { return p_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue for F_p elements.
    std::uint64_t residue() const { return res_; }
    /// Reduced fraction for Q elements.
    const Rational& rational() const { return rat_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_same(const FieldElement& o) const;

    std::uint64_t p_ = 0;
    std::uint64_t res_ = 0;  // valid iff p_ > 0
    Rational rat_;           // valid iff p_ == 0
};

}  // namespace lagmul

#endif
