#include "lagmul/series.hpp"

#include "lagmul/errors.hpp"

namespace lagmul {

IntSeries int_poly_mul(const IntSeries& a, const IntSeries& b) {
    if (a.empty() || b.empty()) return {};
    IntSeries r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

IntSeries one_minus_t_pow(unsigned n) {
    IntSeries r{1};
    IntSeries f{1, -1};
    for (unsigned i = 0; i < n; ++i) r = int_poly_mul(r, f);
    return r;
}

IntSeries product_one_minus_t_d(const std::vector<std::uint32_t>& ds) {
    IntSeries r{1};
    for (std::uint32_t d : ds) {
        IntSeries f(d + 1, 0);
        f[0] = 1;
        f[d] = -1;
        r = int_poly_mul(r, f);
    }
    return r;
}

IntSeries series_prefix(const RationalGF& g, std::size_t k) {
    IntSeries r(k + 1, 0);
    for (std::size_t i = 0; i < g.numerator.size() && i <= k; ++i)
        r[i] = g.numerator[i];
    // multiply by (1 - d t)^{-1} = sum d^j t^j, truncated
    auto expand = [&](std::uint64_t d) {
        IntSeries out(k + 1, 0);
        BigInt dd = d;
        // convolution with the geometric series: out[i] = sum r[j] d^{i-j}
        for (std::size_t i = 0; i <= k; ++i) {
            BigInt acc = 0;
            BigInt p = 1;
            for (std::size_t j = i + 1; j-- > 0;) {
                acc += r[j] * p;
                p *= dd;
            }
            out[i] = acc;
        }
        r = std::move(out);
    };
    for (unsigned i = 0; i < g.one_minus_t_power; ++i) expand(1);
    for (std::uint64_t d : g.linear_factors) expand(d);
    return r;
}

BigInt series_coefficient(const RationalGF& g, std::size_t k) {
    return series_prefix(g, k)[k];
}

RationalGF gf_multiply(RationalGF g, const IntSeries& p) {
    g.numerator = int_poly_mul(g.numerator, p);
    return g;
}

RationalGF milnor_gf(std::size_t n, const std::vector<std::uint32_t>& degrees) {
    if (degrees.size() < 2 || degrees.size() > n)
        throw Error("milnor_gf: need 1 <= r < n");
    RationalGF g;
    BigInt scale = 1;
    for (std::size_t i = 0; i + 1 < degrees.size(); ++i) scale *= degrees[i];
    g.numerator = one_minus_t_pow(static_cast<unsigned>(n));
    for (auto& c : g.numerator) c *= scale;
    for (std::uint32_t d : degrees) g.linear_factors.push_back(d);
    return g;
}

IntSeries quotient_degree_dims(const std::vector<long long>& numerator,
                               std::size_t nvars, std::size_t k) {
    RationalGF g;
    for (long long c : numerator) g.numerator.push_back(c);
    g.one_minus_t_power = static_cast<unsigned>(nvars);
    return series_prefix(g, k);
}

}  // namespace lagmul
