#include "lagmul/field.hpp"

#include <array>

namespace lagmul {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field::Field(std::uint64_t characteristic) : p_(characteristic) {
    if (p_ == 0) return;
    if (p_ >= (1ull << 61))
        throw Error("prime characteristic must be below 2^61");
    if (!is_prime_u64(p_))
        throw Error("characteristic " + std::to_string(p_) + " is not prime");
}

FieldElement::FieldElement(const Field& field, std::int64_t value)
    : p_(field.characteristic()) {
    if (p_ == 0) {
        rat_ = value;
    } else {
        std::int64_t r = value % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        res_ = static_cast<std::uint64_t>(r);
    }
}

FieldElement::FieldElement(const Field& field, const Rational& value)
    : p_(field.characteristic()) {
    if (p_ == 0) {
        rat_ = value;
        return;
    }
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    BigInt pr = p_;
    BigInt nm = num % pr;
    if (nm < 0) nm += pr;
    BigInt dm = den % pr;
    if (dm < 0) dm += pr;
    FieldElement n;
    n.p_ = p_;
    n.res_ = static_cast<std::uint64_t>(nm);
    FieldElement d;
    d.p_ = p_;
    d.res_ = static_cast<std::uint64_t>(dm);
    *this = n / d;
}

bool FieldElement::is_zero() const {
    return p_ == 0 ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
    return p_ == 0 ? rat_ == 1 : res_ == 1;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (p_ != o.p_) throw MixedFields();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement r;
    r.p_ = p_;
    if (p_ == 0) {
        r.rat_ = rat_ + o.rat_;
    } else {
        std::uint64_t s = res_ + o.res_;
        if (s >= p_) s -= p_;
        r.res_ = s;
    }
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    FieldElement r;
    r.p_ = p_;
    if (p_ == 0) {
        r.rat_ = rat_ - o.rat_;
    } else {
        r.res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + p_ - o.res_;
    }
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement r;
    r.p_ = p_;
    if (p_ == 0) {
        r.rat_ = rat_ * o.rat_;
    } else {
        r.res_ = mulmod(res_, o.res_, p_);
    }
    return r;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZero();
    FieldElement r;
    r.p_ = p_;
    if (p_ == 0) {
        r.rat_ = 1 / rat_;
        return r;
    }
    // extended Euclid on (res_, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t rr = static_cast<std::int64_t>(p_);
    std::int64_t newr = static_cast<std::int64_t>(res_);
    while (newr != 0) {
        std::int64_t q = rr / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = rr - q * newr;
        rr = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    r.res_ = static_cast<std::uint64_t>(t);
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return *this * o.inv();
}

FieldElement FieldElement::operator-() const {
    FieldElement r;
    r.p_ = p_;
    if (p_ == 0) {
        r.rat_ = -rat_;
    } else {
        r.res_ = res_ == 0 ? 0 : p_ - res_;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

std::string FieldElement::to_string() const {
    if (p_ == 0) {
        BigInt den = boost::multiprecision::denominator(rat_);
        if (den == 1)
            return boost::multiprecision::numerator(rat_).str();
        return boost::multiprecision::numerator(rat_).str() + "/" + den.str();
    }
    return std::to_string(res_);
}

}  // namespace lagmul
