#include "lagmul/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace lagmul {

GroebnerLimits& groebner_limits() {
    static GroebnerLimits limits;
    return limits;
}

namespace {

void check_terms(const Polynomial& f) {
    if (f.term_count() > groebner_limits().max_terms)
        throw ResourceLimit("polynomial exceeded " +
                            std::to_string(groebner_limits().max_terms) +
                            " terms");
}

/// Scale to a canonical representative: monic over F_p, primitive with
/// positive leading coefficient over Q. Ideal membership is unchanged.
Polynomial normalize_scale(const Polynomial& f) {
    if (f.is_zero()) return f;
    if (f.ring()->field.is_prime_field()) return f.monic();
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& t : f.terms()) {
        BigInt n = boost::multiprecision::numerator(t.coeff.rational());
        BigInt d = boost::multiprecision::denominator(t.coeff.rational());
        num_gcd = boost::multiprecision::gcd(num_gcd, n);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    Rational scale(den_lcm, num_gcd);
    if (f.leading_term().coeff.rational() < 0) scale = -scale;
    return f.scaled(FieldElement(f.ring()->field, scale));
}

Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& basis) {
    const RingPtr ring = f.ring();
    std::vector<Term> remainder;
    while (!f.is_zero()) {
        check_terms(f);
        const Term& lt = f.leading_term();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.leading_monomial().divides(lt.mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            Monomial q = reducer->leading_monomial().divide_into(lt.mono);
            FieldElement c = lt.coeff / reducer->leading_term().coeff;
            f = f - reducer->times_term(q, c);
        } else {
            remainder.push_back(lt);
            f = f - Polynomial::monomial_term(ring, lt.mono, lt.coeff);
        }
    }
    return Polynomial::from_terms(ring, std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_term(f.leading_monomial().divide_into(l),
                                f.leading_term().coeff.inv());
    Polynomial b = g.times_term(g.leading_monomial().divide_into(l),
                                g.leading_term().coeff.inv());
    return a - b;
}

std::vector<Polynomial> buchberger_basis(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(normalize_scale(g));
    if (basis.empty()) return {};

    const MonomialOrder& ord = ring->order;
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm.total_degree() != b.lcm.total_degree())
            return a.lcm.total_degree() < b.lcm.total_degree();
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            pending.push_back({i, j,
                               Monomial::lcm(basis[i].leading_monomial(),
                                             basis[j].leading_monomial())});
            pending_keys.insert({i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair pr = *it;
        pending.erase(it);
        pending_keys.erase({pr.i, pr.j});

        const Monomial& lmi = basis[pr.i].leading_monomial();
        const Monomial& lmj = basis[pr.j].leading_monomial();
        if (lmi.coprime_with(lmj)) continue;  // first criterion
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (!pending_keys.count({key_ik.first, key_ik.second}) &&
                !pending_keys.count({key_jk.first, key_jk.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = s_polynomial(basis[pr.i], basis[pr.j]);
        Polynomial h = reduce_full(std::move(s), basis);
        if (h.is_zero()) continue;
        basis.push_back(normalize_scale(h));
        if (basis.size() > groebner_limits().max_basis)
            throw ResourceLimit("basis exceeded " +
                                std::to_string(groebner_limits().max_basis) +
                                " elements");
        add_pairs_for(basis.size() - 1);
    }

    // minimalize
    std::vector<Polynomial> minimal;
    std::sort(basis.begin(), basis.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return ord.less(a.leading_monomial(), b.leading_monomial());
              });
    for (const auto& g : basis) {
        bool redundant = false;
        for (const auto& m : minimal) {
            if (m.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g);
    }
    // auto-reduce tails and make monic
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(reduce_full(minimal[i], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return ord.less(a.leading_monomial(), b.leading_monomial());
              });
    return reduced;
}

}  // namespace

IdealWithBasis::IdealWithBasis(const RingPtr& ring,
                               std::vector<Polynomial> generators)
    : ring_(ring) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (!g.ring()->same_ambient(*ring_)) throw MixedRings();
        if (g.ring()->order == ring_->order && g.ring() == ring) {
            gens_.push_back(std::move(g));
        } else {
            // re-sort into this ring's order
            gens_.push_back(
                Polynomial::from_terms(ring_, std::vector<Term>(g.terms())));
        }
    }
}

const std::vector<Polynomial>& IdealWithBasis::reduced_basis() const {
    if (!gb_) gb_ = buchberger_basis(ring_, gens_);
    return *gb_;
}

bool IdealWithBasis::is_unit() const {
    const auto& gb = reduced_basis();
    return gb.size() == 1 && gb.front().leading_monomial().is_one();
}

bool IdealWithBasis::contains(const Polynomial& f) const {
    return normal_form(f, *this).is_zero();
}

Polynomial normal_form(const Polynomial& f, const IdealWithBasis& ideal) {
    if (!f.ring()->same_ambient(*ideal.ring())) throw MixedRings();
    Polynomial g = f.ring() == ideal.ring()
                       ? f
                       : Polynomial::from_terms(ideal.ring(),
                                                std::vector<Term>(f.terms()));
    return reduce_full(std::move(g), ideal.reduced_basis());
}

IdealWithBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order) {
    if (gens.empty()) throw Error("buchberger: no generators (ring unknown)");
    RingPtr ring = with_order(gens.front().ring(), order);
    return IdealWithBasis(ring, std::move(gens));
}

namespace {

/// Minimal pure-power exponent of variable v among the leading monomials,
/// or 0 when absent.
std::vector<std::uint32_t> pure_power_bounds(
    const std::vector<Polynomial>& gb, std::size_t nvars) {
    std::vector<std::uint32_t> bound(nvars, 0);
    for (const auto& g : gb) {
        const Monomial& m = g.leading_monomial();
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (m.exp(i) > 0) {
                ++support;
                var = i;
            }
        }
        if (support == 1) {
            std::uint32_t e = m.exp(var);
            if (bound[var] == 0 || e < bound[var]) bound[var] = e;
        }
    }
    return bound;
}

}  // namespace

bool quotient_is_finite(const IdealWithBasis& ideal) {
    const auto& gb = ideal.reduced_basis();
    if (gb.empty()) return ideal.ring()->nvars() == 0;
    if (ideal.is_unit()) return true;
    auto bound = pure_power_bounds(gb, ideal.ring()->nvars());
    return std::all_of(bound.begin(), bound.end(),
                       [](std::uint32_t b) { return b > 0; });
}

std::vector<Monomial> standard_monomials(const IdealWithBasis& ideal) {
    if (!quotient_is_finite(ideal)) throw InfiniteDimensional();
    const auto& gb = ideal.reduced_basis();
    std::size_t n = ideal.ring()->nvars();
    if (ideal.is_unit()) return {};
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.leading_monomial());
    auto bound = pure_power_bounds(gb, n);
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(n, 0);
    // enumerate the exponent box and keep monomials outside the LT ideal
    auto rec = [&](auto&& self, std::size_t var) -> void {
        if (var == n) {
            Monomial m{std::vector<std::uint32_t>(cur)};
            for (const auto& lm : lms)
                if (lm.divides(m)) return;
            out.push_back(std::move(m));
            return;
        }
        for (std::uint32_t e = 0; e < bound[var]; ++e) {
            cur[var] = e;
            self(self, var + 1);
        }
        cur[var] = 0;
    };
    rec(rec, 0);
    const MonomialOrder& ord = ideal.ring()->order;
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) {
                  return ord.less(a, b);
              });
    return out;
}

std::size_t quotient_dimension(const IdealWithBasis& ideal) {
    return standard_monomials(ideal).size();
}

int krull_dimension(const IdealWithBasis& ideal) {
    const auto& gb = ideal.reduced_basis();
    std::size_t n = ideal.ring()->nvars();
    if (n > 30) throw Error("krull_dimension: too many variables");
    std::vector<std::uint32_t> supports;
    for (const auto& g : gb) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g.leading_monomial().exp(i) > 0)
                s |= (1u << i);
        supports.push_back(s);
    }
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (std::uint32_t s : supports) {
            if ((s & ~mask) == 0) {  // support contained in the subset
                independent = false;
                break;
            }
        }
        if (independent)
            best = std::max(best, static_cast<int>(__builtin_popcount(mask)));
    }
    return best;
}

namespace {

using Coeffs = std::vector<long long>;

Coeffs poly_sub(const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Coeffs poly_shift(const Coeffs& a, std::uint32_t k) {
    if (a.empty()) return a;
    Coeffs r(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) {
                  return a.total_degree() < b.total_degree();
              });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out) {
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(m);
    }
    return out;
}

/// Numerator of HS(R/M) over (1-t)^n for a monomial ideal M, by pivoting on
/// a shared variable: N(M) = N(M + (x)) + t * N(M : x).
Coeffs monomial_hilbert_numerator(std::vector<Monomial> gens,
                                  std::size_t nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {};
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].coprime_with(gens[j])) {
                coprime = false;
                break;
            }
    if (coprime) {
        Coeffs r{1};
        for (const auto& m : gens)
            r = poly_sub(r, poly_shift(r, m.total_degree()));
        return r;
    }
    // pivot variable: most frequent among generator supports
    std::vector<std::size_t> freq(nvars, 0);
    for (const auto& m : gens)
        for (std::size_t i = 0; i < nvars; ++i)
            if (m.exp(i) > 0) ++freq[i];
    std::size_t pivot =
        std::max_element(freq.begin(), freq.end()) - freq.begin();

    std::vector<Monomial> plus, colon;
    std::vector<std::uint32_t> xv(nvars, 0);
    xv[pivot] = 1;
    plus.emplace_back(xv);
    for (const auto& m : gens) {
        if (m.exp(pivot) == 0) plus.push_back(m);
        auto e = m.exponents();
        if (e[pivot] > 0) --e[pivot];
        colon.emplace_back(std::move(e));
    }
    Coeffs a = monomial_hilbert_numerator(std::move(plus), nvars);
    Coeffs b = monomial_hilbert_numerator(std::move(colon), nvars);
    Coeffs r(std::max(a.size(), b.size() + 1), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

}  // namespace

std::vector<long long> hilbert_numerator(const IdealWithBasis& ideal) {
    for (const auto& g : ideal.generators())
        if (!g.is_homogeneous()) throw NotHomogeneous("hilbert_numerator");
    std::vector<Monomial> lms;
    for (const auto& g : ideal.reduced_basis())
        lms.push_back(g.leading_monomial());
    Coeffs r = monomial_hilbert_numerator(std::move(lms),
                                          ideal.ring()->nvars());
    if (r.empty()) r = {0};
    return r;
}

std::size_t standard_monomial_count(const IdealWithBasis& ideal,
                                    std::uint32_t d) {
    const auto& gb = ideal.reduced_basis();
    std::size_t count = 0;
    for (const auto& m : monomials_of_degree(ideal.ring()->nvars(), d)) {
        bool in_lt = false;
        for (const auto& g : gb) {
            if (g.leading_monomial().divides(m)) {
                in_lt = true;
                break;
            }
        }
        if (!in_lt) ++count;
    }
    return count;
}

}  // namespace lagmul
