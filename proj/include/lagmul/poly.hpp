#ifndef LAGMUL_POLY_HPP
#define LAGMUL_POLY_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lagmul/field.hpp"

namespace lagmul {

/// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t exp(std::size_t i) const { return e_[i]; }
    std::uint32_t total_degree() const { return deg_; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Exact quotient o / this must exist (callers check divides first).
    Monomial divide_into(const Monomial& numerator) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_ = 0;
};

enum class OrderKind { degrevlex, grlex, lex };

struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;

    /// -1, 0, +1 with +1 meaning a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) < 0;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) > 0;
    }
    bool operator==(const MonomialOrder&) const = default;
};

OrderKind order_kind_from_string(const std::string& s);
std::string to_string(OrderKind k);

struct Ring {
    Field field;
    std::vector<std::string> vars;
    MonomialOrder order;

    std::size_t nvars() const { return vars.size(); }
    /// Same field and variables; order may differ.
    bool same_ambient(const Ring& o) const {
        return field == o.field && vars == o.vars;
    }
    bool operator==(const Ring& o) const {
        return same_ambient(o) && order == o.order;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> vars,
                  MonomialOrder order = {});
/// New ring with `x0` prepended (for homogenization).
RingPtr prepend_x0(const RingPtr& ring);
/// New ring with extra variables appended (for Lagrange multipliers).
RingPtr append_vars(const RingPtr& ring, const std::vector<std::string>& extra);
/// Same ambient ring under a different monomial order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

struct Term {
    Monomial mono;
    FieldElement coeff;
};

/// Sparse multivariate polynomial; term list sorted strictly descending in
/// the ring's monomial order, no zero coefficients, no repeated monomials.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(const RingPtr& ring);
    static Polynomial constant(const RingPtr& ring, std::int64_t c);
    static Polynomial constant(const RingPtr& ring, const FieldElement& c);
    static Polynomial variable(const RingPtr& ring, std::size_t index);
    static Polynomial monomial_term(const RingPtr& ring, Monomial m,
                                    FieldElement c);
    /// Normalizes: merges repeated monomials, drops zeros, sorts.
    static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Throws ZeroPolynomial.
    std::uint32_t total_degree() const;
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial pow(std::uint32_t e) const;
    Polynomial times_term(const Monomial& m, const FieldElement& c) const;

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(std::size_t var) const;
    bool is_homogeneous() const;
    Polynomial homogeneous_component(std::uint32_t d) const;
    /// Top-degree homogeneous part. Throws ZeroPolynomial.
    Polynomial leading_form() const;
    /// Homogenization with a prepended x0. Throws ZeroPolynomial.
    Polynomial homogenize() const;

    FieldElement coefficient_of(const Monomial& m) const;
    /// Make leading coefficient 1 (nonzero input).
    Polynomial monic() const;

    /// Re-embed into a ring with the same field: variable i of this ring maps
    /// to variable i + offset of the target ring.
    Polynomial in_ring(const RingPtr& target, std::size_t offset = 0) const;

    /// Substitute images[i] for variable i (images live in one common ring).
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    FieldElement evaluate(std::span<const FieldElement> point) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// True iff sum_j x_j dg/dx_j == deg(g) * g. Throws NotHomogeneous.
bool euler_check(const Polynomial& g);

/// All monomials of total degree d in nvars variables, deterministic order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

/// Parser for the CLI polynomial syntax: integer literals, identifiers,
/// + - * ^, parentheses; no implicit multiplication.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                            int line = 1);

}  // namespace lagmul

#endif
