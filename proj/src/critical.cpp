#include "lagmul/critical.hpp"

#include <algorithm>
#include <sstream>

#include "lagmul/linalg.hpp"
#include "lagmul/series.hpp"

namespace lagmul {

std::vector<std::uint32_t> ConstrainedSystem::degrees() const {
    std::vector<std::uint32_t> d;
    d.reserve(constraints.size() + 1);
    for (const auto& c : constraints) d.push_back(c.total_degree());
    d.push_back(objective.total_degree());
    return d;
}

ConstrainedSystem ConstrainedSystem::make(RingPtr ring, Polynomial objective,
                                          std::vector<Polynomial> constraints) {
    if (constraints.empty()) throw Error("need at least one constraint");
    if (constraints.size() >= ring->nvars()) throw TooManyConstraints();
    if (objective.is_zero()) throw ZeroPolynomial("objective");
    for (const auto& c : constraints)
        if (c.is_zero()) throw ZeroPolynomial("constraint");
    return ConstrainedSystem{std::move(ring), std::move(objective),
                             std::move(constraints)};
}

PolyMatrix PolyMatrix::zero(const RingPtr& ring, std::size_t rows,
                            std::size_t cols) {
    PolyMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.entries.assign(rows * cols, Polynomial::zero(ring));
    return m;
}

Polynomial poly_determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) throw ShapeMismatch("determinant of non-square");
    if (m.rows == 0) throw ShapeMismatch("determinant of empty matrix");
    if (m.rows == 1) return m.at(0, 0);
    const RingPtr& ring = m.at(0, 0).ring();
    Polynomial det = Polynomial::zero(ring);
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix sub = PolyMatrix::zero(ring, m.rows - 1, m.cols - 1);
        for (std::size_t i = 1; i < m.rows; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < m.cols; ++c) {
                if (c == j) continue;
                sub.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Polynomial cof = m.at(0, j) * poly_determinant(sub);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

PolyMatrix jacobian_matrix(const std::vector<Polynomial>& rows) {
    if (rows.empty()) throw ShapeMismatch("jacobian of empty list");
    const RingPtr& ring = rows.front().ring();
    PolyMatrix m = PolyMatrix::zero(ring, rows.size(), ring->nvars());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ring->nvars(); ++j)
            m.at(i, j) = rows[i].derivative(j);
    return m;
}

PolyMatrix augmented_jacobian(const ConstrainedSystem& sys) {
    std::vector<Polynomial> rows = sys.constraints;
    rows.push_back(sys.objective);
    return jacobian_matrix(rows);
}

namespace {

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
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

}  // namespace

std::vector<Polynomial> minor_ideal(const PolyMatrix& m, std::size_t k) {
    if (k > m.rows || k > m.cols) throw KTooLarge();
    if (k == 0) throw KTooLarge();
    const RingPtr& ring = m.at(0, 0).ring();
    std::vector<Polynomial> out;
    for (const auto& rs : subsets(m.rows, k)) {
        for (const auto& cs : subsets(m.cols, k)) {
            PolyMatrix sub = PolyMatrix::zero(ring, k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub.at(i, j) = m.at(rs[i], cs[j]);
            out.push_back(poly_determinant(sub));
        }
    }
    return out;
}

IdealWithBasis critical_ideal(const ConstrainedSystem& sys) {
    std::vector<Polynomial> gens = sys.constraints;
    PolyMatrix jac = augmented_jacobian(sys);
    for (auto& minor : minor_ideal(jac, sys.r() + 1))
        gens.push_back(std::move(minor));
    return IdealWithBasis(sys.ring, std::move(gens));
}

std::size_t milnor_sum(const ConstrainedSystem& sys) {
    IdealWithBasis ideal = critical_ideal(sys);
    if (ideal.is_unit()) return 0;  // empty critical locus
    if (!quotient_is_finite(ideal)) throw NonIsolatedCritical();
    return quotient_dimension(ideal);
}

IdealWithBasis lagrange_jacobian_ideal(const ConstrainedSystem& sys) {
    std::vector<std::string> ys;
    for (std::size_t i = 1; i <= sys.r(); ++i)
        ys.push_back("y" + std::to_string(i));
    RingPtr big = append_vars(sys.ring, ys);
    Polynomial F = sys.objective.in_ring(big);
    for (std::size_t i = 0; i < sys.r(); ++i)
        F += Polynomial::variable(big, sys.n() + i) *
             sys.constraints[i].in_ring(big);
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < sys.n(); ++j) gens.push_back(F.derivative(j));
    // dF/dy_i = f_i
    for (const auto& c : sys.constraints) gens.push_back(c.in_ring(big));
    return IdealWithBasis(big, std::move(gens));
}

std::size_t lagrange_jacobian_dimension(const ConstrainedSystem& sys) {
    IdealWithBasis ideal = lagrange_jacobian_ideal(sys);
    if (ideal.is_unit()) return 0;
    if (!quotient_is_finite(ideal)) throw NonIsolatedCritical();
    return quotient_dimension(ideal);
}

BigInt predicted_milnor_sum(std::size_t n,
                            const std::vector<std::uint32_t>& degrees) {
    RationalGF g = milnor_gf(n, degrees);
    return series_coefficient(g, n - (degrees.size() - 1));
}

bool proj_variety_empty(const std::vector<Polynomial>& homogeneous_gens) {
    if (homogeneous_gens.empty()) return false;
    for (const auto& g : homogeneous_gens)
        if (!g.is_homogeneous()) throw NotHomogeneous("proj_variety_empty");
    IdealWithBasis ideal(homogeneous_gens.front().ring(), homogeneous_gens);
    return quotient_is_finite(ideal);
}

SmoothCiResult proj_smooth_ci(
    const std::vector<Polynomial>& homogeneous_gens) {
    SmoothCiResult res;
    if (homogeneous_gens.empty()) {
        res.diagnostic = "no generators";
        return res;
    }
    for (const auto& g : homogeneous_gens)
        if (!g.is_homogeneous()) throw NotHomogeneous("proj_smooth_ci");
    const RingPtr& ring = homogeneous_gens.front().ring();
    std::size_t nv = ring->nvars();
    std::size_t k = homogeneous_gens.size();

    if (proj_variety_empty(homogeneous_gens)) {
        res.ok = true;
        res.empty_scheme = true;
        res.diagnostic = "empty projective scheme (vacuously smooth)";
        return res;
    }

    IdealWithBasis ideal(ring, homogeneous_gens);
    int dim = krull_dimension(ideal);
    if (dim != static_cast<int>(nv) - static_cast<int>(k)) {
        std::ostringstream os;
        os << "not a complete intersection: cone dimension " << dim
           << ", expected " << (static_cast<int>(nv) - static_cast<int>(k));
        res.diagnostic = os.str();
        return res;
    }

    std::vector<Polynomial> sing = homogeneous_gens;
    PolyMatrix jac = jacobian_matrix(homogeneous_gens);
    for (auto& minor : minor_ideal(jac, k)) sing.push_back(std::move(minor));
    if (!proj_variety_empty(sing)) {
        res.diagnostic = "singular locus nonempty";
        return res;
    }
    res.ok = true;
    res.diagnostic = "smooth complete intersection certified";
    return res;
}

HypothesisReport check_hypotheses(const ConstrainedSystem& sys) {
    HypothesisReport rep;

    std::vector<Polynomial> homogenized;
    for (const auto& c : sys.constraints)
        homogenized.push_back(c.homogenize());
    rep.h1 = proj_smooth_ci(homogenized);

    std::vector<Polynomial> leading;
    for (const auto& c : sys.constraints) leading.push_back(c.leading_form());
    rep.h2 = proj_smooth_ci(leading);

    std::vector<Polynomial> leading_all = leading;
    leading_all.push_back(sys.objective.leading_form());
    rep.h3 = proj_smooth_ci(leading_all);

    std::uint64_t p = sys.ring->field.characteristic();
    std::uint32_t d_obj = sys.objective.total_degree();
    if (p == 0 || d_obj % p != 0) {
        rep.h4 = true;
        rep.h4_diagnostic = "characteristic condition holds";
    } else {
        rep.h4 = false;
        rep.h4_diagnostic = "char " + std::to_string(p) +
                            " divides objective degree " +
                            std::to_string(d_obj);
    }
    return rep;
}

namespace {

void check_enumerable(const RingPtr& ring) {
    std::uint64_t p = ring->field.characteristic();
    if (p == 0) throw RationalFieldUnsupported();
    double total = 1;
    for (std::size_t i = 0; i < ring->nvars(); ++i) total *= double(p);
    if (total > 1e7) throw FieldTooLarge();
}

template <typename Keep>
std::vector<Point> scan_points(const RingPtr& ring, Keep&& keep) {
    check_enumerable(ring);
    std::uint64_t p = ring->field.characteristic();
    std::size_t n = ring->nvars();
    std::vector<Point> out;
    Point pt(n, 0);
    std::vector<FieldElement> fe(n, FieldElement(ring->field, 0));
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            fe[i] = FieldElement(ring->field,
                                 static_cast<std::int64_t>(pt[i]));
        if (keep(fe)) out.push_back(pt);
        std::size_t i = 0;
        while (i < n && ++pt[i] == p) pt[i++] = 0;
        if (i == n) break;
    }
    return out;
}

}  // namespace

std::vector<Point> brute_force_critical_points(const ConstrainedSystem& sys) {
    PolyMatrix jac = augmented_jacobian(sys);
    std::size_t r = sys.r();
    const Field& field = sys.ring->field;
    return scan_points(sys.ring, [&](const std::vector<FieldElement>& pt) {
        for (const auto& c : sys.constraints)
            if (!c.evaluate(pt).is_zero()) return false;
        FieldMatrix m(jac.rows, jac.cols, field);
        for (std::size_t i = 0; i < jac.rows; ++i)
            for (std::size_t j = 0; j < jac.cols; ++j)
                m.at(i, j) = jac.at(i, j).evaluate(pt);
        return matrix_rank(std::move(m)) <= r;
    });
}

std::vector<Point> scan_common_zeros(const std::vector<Polynomial>& polys) {
    if (polys.empty()) throw Error("scan_common_zeros: empty list");
    return scan_points(polys.front().ring(),
                       [&](const std::vector<FieldElement>& pt) {
                           for (const auto& g : polys)
                               if (!g.evaluate(pt).is_zero()) return false;
                           return true;
                       });
}

bool affine_smooth_complete_intersection(const ConstrainedSystem& sys) {
    std::vector<Polynomial> gens = sys.constraints;
    PolyMatrix jac = jacobian_matrix(sys.constraints);
    for (auto& minor : minor_ideal(jac, sys.r()))
        gens.push_back(std::move(minor));
    IdealWithBasis ideal(sys.ring, std::move(gens));
    return ideal.is_unit();
}

}  // namespace lagmul
