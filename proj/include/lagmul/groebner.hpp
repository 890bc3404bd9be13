#ifndef LAGMUL_GROEBNER_HPP
#define LAGMUL_GROEBNER_HPP

#include <optional>
#include <vector>

#include "lagmul/poly.hpp"

namespace lagmul {

/// Loud-failure guards for runaway basis computations.
struct GroebnerLimits {
    std::size_t max_terms = 50000;  // per polynomial
    std::size_t max_basis = 5000;   // basis elements
};

GroebnerLimits& groebner_limits();

/// Generator list with a lazily computed, cached reduced Groebner basis.
class IdealWithBasis {
public:
    IdealWithBasis(const RingPtr& ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    /// Unique reduced basis: monic, auto-reduced, sorted by leading monomial.
    const std::vector<Polynomial>& reduced_basis() const;

    bool is_unit() const;
    bool is_zero_ideal() const { return reduced_basis().empty(); }
    bool contains(const Polynomial& f) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::optional<std::vector<Polynomial>> gb_;
};

/// Remainder of f on division by the reduced basis: no term of the result is
/// divisible by any basis leading monomial, and f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const IdealWithBasis& ideal);

/// Buchberger with the normal pair-selection strategy and the coprime/chain
/// elimination criteria. Generators are re-sorted into `order`.
IdealWithBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order);

bool quotient_is_finite(const IdealWithBasis& ideal);

/// K-dimension of ring/ideal. Throws InfiniteDimensional.
std::size_t quotient_dimension(const IdealWithBasis& ideal);

/// Monomials outside the leading-term ideal. Throws InfiniteDimensional.
std::vector<Monomial> standard_monomials(const IdealWithBasis& ideal);

/// Krull dimension of ring/ideal from the leading-term ideal; -1 for the
/// unit ideal (empty scheme convention).
int krull_dimension(const IdealWithBasis& ideal);

/// Numerator N(t) with HS(ring/ideal) = N(t)/(1-t)^n, for homogeneous
/// ideals. Coefficient of t^k at index k. Throws NotHomogeneous.
std::vector<long long> hilbert_numerator(const IdealWithBasis& ideal);

/// Count of standard monomials of exact degree d (per-degree oracle).
std::size_t standard_monomial_count(const IdealWithBasis& ideal,
                                    std::uint32_t d);

}  // namespace lagmul

#endif
