#ifndef LAGMUL_SERIES_HPP
#define LAGMUL_SERIES_HPP

#include <cstdint>
#include <vector>

#include "lagmul/field.hpp"

namespace lagmul {

/// Dense integer polynomial in t, coefficient of t^k at index k.
using IntSeries = std::vector<BigInt>;

IntSeries int_poly_mul(const IntSeries& a, const IntSeries& b);
/// (1-t)^n expanded.
IntSeries one_minus_t_pow(unsigned n);
/// prod_i (1 - t^{d_i}) expanded.
IntSeries product_one_minus_t_d(const std::vector<std::uint32_t>& ds);

/// Rational generating function kept in factored form:
/// numerator / ((1-t)^{pow} * prod (1 - d t)).
struct RationalGF {
    IntSeries numerator;
    std::vector<std::uint64_t> linear_factors;  // the d of each (1 - d t)
    unsigned one_minus_t_power = 0;
};

/// Coefficients 0..k of the power-series expansion at t = 0.
IntSeries series_prefix(const RationalGF& g, std::size_t k);
BigInt series_coefficient(const RationalGF& g, std::size_t k);

/// Multiply the numerator by an integer polynomial in t.
RationalGF gf_multiply(RationalGF g, const IntSeries& p);

/// d_1...d_r (1-t)^n / prod_{i=1}^{r+1} (1 - d_i t); its coefficient at
/// t^{n-r} is the predicted Milnor-number sum.
RationalGF milnor_gf(std::size_t n, const std::vector<std::uint32_t>& degrees);

/// Per-degree dimensions 0..k of a graded quotient with Hilbert numerator
/// N(t) over (1-t)^n.
IntSeries quotient_degree_dims(const std::vector<long long>& numerator,
                               std::size_t nvars, std::size_t k);

}  // namespace lagmul

#endif
