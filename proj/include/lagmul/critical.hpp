#ifndef LAGMUL_CRITICAL_HPP
#define LAGMUL_CRITICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lagmul/groebner.hpp"
#include "lagmul/poly.hpp"

namespace lagmul {

/// Objective f and constraints f_1..f_r in K[x_1..x_n], 1 <= r < n.
struct ConstrainedSystem {
    RingPtr ring;
    Polynomial objective;
    std::vector<Polynomial> constraints;

    std::size_t n() const { return ring->nvars(); }
    std::size_t r() const { return constraints.size(); }
    /// d_1..d_r, d_{r+1} = deg objective.
    std::vector<std::uint32_t> degrees() const;

    static ConstrainedSystem make(RingPtr ring, Polynomial objective,
                                  std::vector<Polynomial> constraints);
};

/// Dense rectangular matrix of polynomials over one ring.
struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Polynomial> entries;  // row-major

    const Polynomial& at(std::size_t i, std::size_t j) const {
        return entries[i * cols + j];
    }
    Polynomial& at(std::size_t i, std::size_t j) {
        return entries[i * cols + j];
    }
    static PolyMatrix zero(const RingPtr& ring, std::size_t rows,
                           std::size_t cols);
};

/// Cofactor-expansion determinant (small matrices).
Polynomial poly_determinant(const PolyMatrix& m);

/// Rows: the constraint gradients in order, then the objective gradient.
PolyMatrix augmented_jacobian(const ConstrainedSystem& sys);

/// Jacobian of arbitrary row polynomials (rows x nvars).
PolyMatrix jacobian_matrix(const std::vector<Polynomial>& rows);

/// All k x k minors, row subsets then column subsets, lexicographic.
std::vector<Polynomial> minor_ideal(const PolyMatrix& m, std::size_t k);

/// I + J: constraints plus the (r+1)x(r+1) minors of the augmented Jacobian.
IdealWithBasis critical_ideal(const ConstrainedSystem& sys);

/// dim_K K[x]/(I+J). Throws NonIsolatedCritical when infinite.
std::size_t milnor_sum(const ConstrainedSystem& sys);

/// dim_K K[x,y]/(dF/dx_1..dF/dx_n, f_1..f_r) for F = f + sum y_i f_i.
std::size_t lagrange_jacobian_dimension(const ConstrainedSystem& sys);

/// The ideal behind lagrange_jacobian_dimension (exposed for reporting).
IdealWithBasis lagrange_jacobian_ideal(const ConstrainedSystem& sys);

/// Coefficient of t^{n-r} in d_1..d_r (1-t)^n / prod (1 - d_i t).
BigInt predicted_milnor_sum(std::size_t n,
                            const std::vector<std::uint32_t>& degrees);

/// True iff the homogeneous ideal is irrelevant (empty projective scheme).
bool proj_variety_empty(const std::vector<Polynomial>& homogeneous_gens);

struct SmoothCiResult {
    bool ok = false;
    bool empty_scheme = false;  // vacuously smooth
    std::string diagnostic;
};

/// Jacobian-criterion smooth-complete-intersection certificate in projective
/// space P^{nvars-1}.
SmoothCiResult proj_smooth_ci(const std::vector<Polynomial>& homogeneous_gens);

struct HypothesisReport {
    SmoothCiResult h1;  // projective closures cut a smooth CI in P^n
    SmoothCiResult h2;  // leading forms of constraints: smooth CI in P^{n-1}
    SmoothCiResult h3;  // constraint + objective leading forms in P^{n-1}
    bool h4 = false;    // gcd(d_{r+1}, char K) = 1 when char > 0
    std::string h4_diagnostic;
    bool all_pass() const { return h1.ok && h2.ok && h3.ok && h4; }
};

HypothesisReport check_hypotheses(const ConstrainedSystem& sys);

using Point = std::vector<std::uint64_t>;

/// Exhaustive scan of F_p^n for constraint zeros where the augmented
/// Jacobian has rank <= r. Requires p^n <= 10^7.
std::vector<Point> brute_force_critical_points(const ConstrainedSystem& sys);

/// Common zeros in F_p^n of a polynomial list (oracle cross-check helper).
std::vector<Point> scan_common_zeros(const std::vector<Polynomial>& polys);

/// Affine smoothness certificate for Y: 1 in I + (r x r minors of the
/// constraint Jacobian).
bool affine_smooth_complete_intersection(const ConstrainedSystem& sys);

}  // namespace lagmul

#endif
