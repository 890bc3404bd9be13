#include "lagmul/complexes.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "lagmul/series.hpp"

namespace lagmul {

bool GradedFreeComplex::composites_vanish() const {
    for (std::size_t p = 0; p + 1 < differentials.size(); ++p) {
        const PolyMatrix& outer = differentials[p];      // p+1 -> p
        const PolyMatrix& inner = differentials[p + 1];  // p+2 -> p+1
        for (std::size_t i = 0; i < outer.rows; ++i) {
            for (std::size_t j = 0; j < inner.cols; ++j) {
                Polynomial acc = Polynomial::zero(ring);
                for (std::size_t k = 0; k < outer.cols; ++k)
                    acc += outer.at(i, k) * inner.at(k, j);
                if (!acc.is_zero()) return false;
            }
        }
    }
    return true;
}

bool GradedFreeComplex::is_graded() const {
    for (std::size_t p = 0; p < differentials.size(); ++p) {
        const PolyMatrix& d = differentials[p];
        for (std::size_t i = 0; i < d.rows; ++i) {
            for (std::size_t j = 0; j < d.cols; ++j) {
                const Polynomial& e = d.at(i, j);
                if (e.is_zero()) continue;
                long want = modules[p + 1][j].degree - modules[p][i].degree;
                if (!e.is_homogeneous() || want < 0 ||
                    e.total_degree() != static_cast<std::uint32_t>(want))
                    return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<std::uint32_t>> compositions(std::uint32_t sum,
                                                     std::size_t parts) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(parts, 0);
    auto rec = [&](auto&& self, std::size_t idx,
                   std::uint32_t remaining) -> void {
        if (idx + 1 == parts) {
            cur[idx] = remaining;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = 0; v <= remaining; ++v) {
            cur[idx] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    if (parts == 0) {
        if (sum == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, sum);
    return out;
}

std::string subset_label(const char* sym,
                         const std::vector<std::size_t>& idx) {
    std::ostringstream os;
    if (idx.empty()) return "1";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << "*";
        os << sym << (idx[i] + 1);
    }
    return os.str();
}

}  // namespace

GradedFreeComplex koszul_complex(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw Error("koszul_complex: need at least one generator");
    const RingPtr& ring = gens.front().ring();
    std::size_t r = gens.size();
    std::vector<std::uint32_t> degs;
    for (const auto& g : gens) degs.push_back(g.total_degree());

    GradedFreeComplex c;
    c.ring = ring;
    std::vector<std::vector<std::vector<std::size_t>>> bases(r + 1);
    for (std::size_t q = 0; q <= r; ++q) {
        bases[q] = k_subsets(r, q);
        std::vector<BasisElement> mod;
        for (const auto& s : bases[q]) {
            long deg = 0;
            for (std::size_t k : s) deg += degs[k];
            mod.push_back({subset_label("zeta", s), deg});
        }
        c.modules.push_back(std::move(mod));
    }
    for (std::size_t q = 1; q <= r; ++q) {
        std::map<std::vector<std::size_t>, std::size_t> target_index;
        for (std::size_t i = 0; i < bases[q - 1].size(); ++i)
            target_index[bases[q - 1][i]] = i;
        PolyMatrix d = PolyMatrix::zero(ring, bases[q - 1].size(),
                                        bases[q].size());
        for (std::size_t j = 0; j < bases[q].size(); ++j) {
            const auto& s = bases[q][j];
            for (std::size_t l = 0; l < s.size(); ++l) {
                std::vector<std::size_t> t = s;
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(l));
                std::size_t i = target_index.at(t);
                Polynomial term = (l % 2 == 0) ? gens[s[l]] : -gens[s[l]];
                d.at(i, j) += term;
            }
        }
        c.differentials.push_back(std::move(d));
    }
    return c;
}

GradedFreeComplex eagon_northcott(const PolyMatrix& m,
                                  const std::vector<std::uint32_t>& degrees) {
    std::size_t rows = m.rows, n = m.cols;
    if (rows < 2 || rows > n)
        throw ShapeMismatch("eagon_northcott expects (r+1) x n with r+1 <= n");
    if (degrees.size() != rows)
        throw ShapeMismatch("one declared degree per matrix row");
    std::size_t r = rows - 1;
    const RingPtr& ring = m.at(0, 0).ring();

    GradedFreeComplex c;
    c.ring = ring;
    // basis bookkeeping per index: (xi index set, eta exponent vector)
    using Key = std::pair<std::vector<std::size_t>, std::vector<std::uint32_t>>;
    std::vector<std::vector<Key>> bases(n - r + 1);
    std::vector<std::map<Key, std::size_t>> index(n - r + 1);

    bases[0].push_back({{}, {}});
    index[0][bases[0][0]] = 0;
    c.modules.push_back({BasisElement{"1", 0}});
    for (std::size_t p = 1; p <= n - r; ++p) {
        auto sets = k_subsets(n, p + r);
        auto etas = compositions(static_cast<std::uint32_t>(p - 1), rows);
        std::vector<BasisElement> mod;
        for (const auto& s : sets) {
            for (const auto& j : etas) {
                Key key{s, j};
                index[p][key] = bases[p].size();
                bases[p].push_back(key);
                long deg = -static_cast<long>(p + r);
                for (std::size_t l = 0; l < rows; ++l)
                    deg += static_cast<long>((j[l] + 1)) *
                           static_cast<long>(degrees[l]);
                std::ostringstream os;
                os << subset_label("xi", s);
                for (std::size_t l = 0; l < rows; ++l)
                    if (j[l] > 0) os << "*eta" << (l + 1) << "^" << j[l];
                mod.push_back({os.str(), deg});
            }
        }
        c.modules.push_back(std::move(mod));
    }

    for (std::size_t p = 1; p <= n - r; ++p) {
        PolyMatrix d = PolyMatrix::zero(ring, bases[p - 1].size(),
                                        bases[p].size());
        for (std::size_t col = 0; col < bases[p].size(); ++col) {
            const auto& [s, j] = bases[p][col];
            if (p == 1) {
                // the full (r+1) x (r+1) minor on columns s
                PolyMatrix sub = PolyMatrix::zero(ring, rows, rows);
                for (std::size_t a = 0; a < rows; ++a)
                    for (std::size_t b = 0; b < rows; ++b)
                        sub.at(a, b) = m.at(a, s[b]);
                d.at(0, col) = poly_determinant(sub);
                continue;
            }
            for (std::size_t l = 0; l < rows; ++l) {
                if (j[l] == 0) continue;
                std::vector<std::uint32_t> j2 = j;
                --j2[l];
                for (std::size_t mm = 0; mm < s.size(); ++mm) {
                    std::vector<std::size_t> s2 = s;
                    s2.erase(s2.begin() + static_cast<std::ptrdiff_t>(mm));
                    std::size_t row = index[p - 1].at({s2, j2});
                    Polynomial entry = m.at(l, s[mm]);
                    if (mm % 2 == 1) entry = -entry;
                    d.at(row, col) += entry;
                }
            }
        }
        c.differentials.push_back(std::move(d));
    }
    return c;
}

GradedFreeComplex tensor_total(const GradedFreeComplex& c1,
                               const GradedFreeComplex& c2) {
    if (!c1.ring->same_ambient(*c2.ring)) throw MixedRings();
    const RingPtr& ring = c1.ring;
    std::size_t l1 = c1.length(), l2 = c2.length();
    GradedFreeComplex t;
    t.ring = ring;

    // global index of (p, q, i, j) within T_{p+q}; blocks ordered by p
    std::vector<std::vector<std::size_t>> block_offset(l1 + l2 + 1);
    for (std::size_t k = 0; k <= l1 + l2; ++k) {
        std::vector<BasisElement> mod;
        block_offset[k].assign(l1 + 1, 0);
        for (std::size_t p = 0; p <= l1; ++p) {
            block_offset[k][p] = mod.size();
            if (k < p || k - p > l2) continue;
            std::size_t q = k - p;
            for (const auto& a : c1.modules[p]) {
                for (const auto& b : c2.modules[q]) {
                    mod.push_back({"(" + a.label + ")*(" + b.label + ")",
                                   a.degree + b.degree});
                }
            }
        }
        t.modules.push_back(std::move(mod));
    }

    for (std::size_t k = 1; k <= l1 + l2; ++k) {
        PolyMatrix d = PolyMatrix::zero(ring, t.modules[k - 1].size(),
                                        t.modules[k].size());
        for (std::size_t p = 0; p <= l1 && p <= k; ++p) {
            std::size_t q = k - p;
            if (q > l2) continue;
            std::size_t n1 = c1.rank(p), n2 = c2.rank(q);
            std::size_t src_base = block_offset[k][p];
            for (std::size_t i = 0; i < n1; ++i) {
                for (std::size_t j = 0; j < n2; ++j) {
                    std::size_t col = src_base + i * n2 + j;
                    if (p >= 1) {  // d1 a (x) b lands in block (p-1, q)
                        const PolyMatrix& d1 = c1.differentials[p - 1];
                        std::size_t tgt_base = block_offset[k - 1][p - 1];
                        std::size_t m2 = c2.rank(q);
                        for (std::size_t ti = 0; ti < d1.rows; ++ti) {
                            if (d1.at(ti, i).is_zero()) continue;
                            d.at(tgt_base + ti * m2 + j, col) += d1.at(ti, i);
                        }
                    }
                    if (q >= 1) {  // (-1)^p a (x) d2 b in block (p, q-1)
                        const PolyMatrix& d2 = c2.differentials[q - 1];
                        std::size_t tgt_base = block_offset[k - 1][p];
                        std::size_t m2 = c2.rank(q - 1);
                        for (std::size_t tj = 0; tj < d2.rows; ++tj) {
                            if (d2.at(tj, j).is_zero()) continue;
                            Polynomial e = d2.at(tj, j);
                            if (p % 2 == 1) e = -e;
                            d.at(tgt_base + i * m2 + tj, col) += e;
                        }
                    }
                }
            }
        }
        t.differentials.push_back(std::move(d));
    }
    return t;
}

Strand graded_strand(const GradedFreeComplex& c, long deg) {
    if (!c.is_graded()) throw NotGraded("strand extraction");
    const RingPtr& ring = c.ring;
    std::size_t nv = ring->nvars();

    // strand basis per module: (basis element, monomial of the right degree)
    struct StrandBasis {
        std::vector<std::pair<std::size_t, Monomial>> elems;
        std::map<std::pair<std::size_t, std::vector<std::uint32_t>>,
                 std::size_t>
            index;
    };
    std::vector<StrandBasis> sb(c.modules.size());
    for (std::size_t p = 0; p < c.modules.size(); ++p) {
        for (std::size_t e = 0; e < c.modules[p].size(); ++e) {
            long md = deg - c.modules[p][e].degree;
            if (md < 0) continue;
            for (const auto& u :
                 monomials_of_degree(nv, static_cast<std::uint32_t>(md))) {
                sb[p].index[{e, u.exponents()}] = sb[p].elems.size();
                sb[p].elems.push_back({e, u});
            }
        }
    }

    Strand out;
    for (const auto& b : sb) out.dims.push_back(b.elems.size());
    for (std::size_t p = 1; p < c.modules.size(); ++p) {
        const PolyMatrix& d = c.differentials[p - 1];
        FieldMatrix fm(sb[p - 1].elems.size(), sb[p].elems.size(),
                       ring->field);
        for (std::size_t col = 0; col < sb[p].elems.size(); ++col) {
            const auto& [e, u] = sb[p].elems[col];
            for (std::size_t ti = 0; ti < d.rows; ++ti) {
                const Polynomial& g = d.at(ti, e);
                for (const auto& term : g.terms()) {
                    Monomial v = term.mono * u;
                    auto it = sb[p - 1].index.find({ti, v.exponents()});
                    if (it == sb[p - 1].index.end())
                        throw NotGraded("differential leaves the strand");
                    fm.at(it->second, col) += term.coeff;
                }
            }
        }
        out.maps.push_back(std::move(fm));
    }
    return out;
}

std::vector<std::size_t> strand_homology(const GradedFreeComplex& c,
                                         long deg) {
    Strand s = graded_strand(c, deg);
    std::vector<std::size_t> ranks(s.maps.size(), 0);
    for (std::size_t i = 0; i < s.maps.size(); ++i)
        ranks[i] = matrix_rank(s.maps[i]);
    std::vector<std::size_t> h(s.dims.size(), 0);
    for (std::size_t p = 0; p < s.dims.size(); ++p) {
        std::size_t out_rank = p >= 1 ? ranks[p - 1] : 0;
        std::size_t in_rank = p < ranks.size() ? ranks[p] : 0;
        h[p] = s.dims[p] - out_rank - in_rank;
    }
    return h;
}

std::vector<std::size_t> strand_h0_dims(const GradedFreeComplex& c,
                                        long truncation) {
    std::vector<std::size_t> out;
    for (long d = 0; d <= truncation; ++d) {
        Strand s = graded_strand(c, d);
        std::size_t rank1 = s.maps.empty() ? 0 : matrix_rank(s.maps[0]);
        out.push_back(s.dims[0] - rank1);
    }
    return out;
}

std::uint32_t default_truncation(const ConstrainedSystem& sys) {
    std::uint32_t bound = 1;
    for (std::uint32_t d : sys.degrees()) bound += d - 1;
    return std::max<std::uint32_t>(10, bound);
}

H0HilbertCheck h0_hilbert_check(const ConstrainedSystem& sys,
                                std::uint32_t truncation) {
    if (!check_hypotheses(sys).all_pass()) throw HypothesesFail();

    std::vector<std::uint32_t> degs = sys.degrees();
    std::vector<Polynomial> leading;
    for (const auto& c : sys.constraints) leading.push_back(c.leading_form());
    std::vector<Polynomial> leading_all = leading;
    leading_all.push_back(sys.objective.leading_form());
    PolyMatrix lf_jac = jacobian_matrix(leading_all);

    std::vector<Polynomial> jp_gens = minor_ideal(lf_jac, sys.r() + 1);
    std::vector<Polynomial> ij_gens = leading;
    ij_gens.insert(ij_gens.end(), jp_gens.begin(), jp_gens.end());

    IdealWithBasis ij(sys.ring, ij_gens);
    IdealWithBasis jprime(sys.ring, jp_gens);

    H0HilbertCheck res;
    res.total_dimension = quotient_dimension(ij);
    res.milnor = milnor_sum(sys);

    IntSeries graded_dims =
        quotient_degree_dims(hilbert_numerator(ij), sys.n(), truncation);
    if (graded_dims[truncation] != 0)
        throw TruncationTooSmall(static_cast<int>(truncation));

    GradedFreeComplex en = eagon_northcott(lf_jac, degs);
    GradedFreeComplex kos = koszul_complex(leading);
    GradedFreeComplex total = tensor_total(en, kos);
    auto h0 = strand_h0_dims(total, truncation);
    res.per_degree_match = true;
    for (std::uint32_t d = 0; d <= truncation; ++d) {
        if (graded_dims[d] != BigInt(h0[d])) {
            res.per_degree_match = false;
            break;
        }
    }

    res.totals_match = res.total_dimension == res.milnor;

    // prod(1-t^{d_i}) * HS(K[x]/J') == HS(K[x]/(I'+J')) per degree
    std::vector<std::uint32_t> constraint_degs(degs.begin(),
                                               degs.end() - 1);
    RationalGF lhs;
    for (long long c : hilbert_numerator(jprime)) lhs.numerator.push_back(c);
    lhs.one_minus_t_power = static_cast<unsigned>(sys.n());
    lhs = gf_multiply(lhs, product_one_minus_t_d(constraint_degs));
    res.series_identity =
        series_prefix(lhs, truncation) ==
        quotient_degree_dims(hilbert_numerator(ij), sys.n(), truncation);

    res.ok = res.per_degree_match && res.totals_match && res.series_identity;
    return res;
}

void dump_complex(const GradedFreeComplex& c, std::ostream& os) {
    for (std::size_t p = 0; p < c.modules.size(); ++p) {
        os << "module " << p << " rank " << c.rank(p) << "\n";
        for (const auto& b : c.modules[p])
            os << "  basis " << b.label << " degree " << b.degree << "\n";
    }
    for (std::size_t p = 0; p < c.differentials.size(); ++p) {
        const PolyMatrix& d = c.differentials[p];
        os << "differential d" << (p + 1) << " (" << d.rows << " x " << d.cols
           << ")\n";
        for (std::size_t i = 0; i < d.rows; ++i) {
            os << "  [";
            for (std::size_t j = 0; j < d.cols; ++j) {
                if (j) os << ", ";
                os << d.at(i, j).to_string();
            }
            os << "]\n";
        }
    }
}

}  // namespace lagmul
