#ifndef LAGMUL_COMPLEXES_HPP
#define LAGMUL_COMPLEXES_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "lagmul/critical.hpp"
#include "lagmul/linalg.hpp"

namespace lagmul {

/// Labeled, degree-carrying free-module basis element.
struct BasisElement {
    std::string label;
    long degree = 0;
};

/// Finite complex of free modules with polynomial differentials.
/// differentials[p-1] maps modules[p] to modules[p-1]; entry (i, j) is the
/// coefficient of target basis i in the image of source basis j.
struct GradedFreeComplex {
    RingPtr ring;
    std::vector<std::vector<BasisElement>> modules;
    std::vector<PolyMatrix> differentials;

    std::size_t length() const { return modules.size() - 1; }
    std::size_t rank(std::size_t p) const { return modules[p].size(); }
    /// delta o delta == 0 as polynomial matrices.
    bool composites_vanish() const;
    /// Every nonzero differential entry homogeneous of degree
    /// (source basis degree - target basis degree).
    bool is_graded() const;
};

/// Koszul complex on g_1..g_r; basis zeta index sets, lexicographic.
GradedFreeComplex koszul_complex(const std::vector<Polynomial>& gens);

/// Eagon-Northcott complex of an (r+1) x n matrix whose rows carry declared
/// degrees d_1..d_{r+1}. Basis: xi index sets (lexicographic) crossed with
/// eta exponent vectors (lexicographic), graded by
/// (j_1+1)d_1 + ... + (j_{r+1}+1)d_{r+1} - (p+r).
GradedFreeComplex eagon_northcott(const PolyMatrix& m,
                                  const std::vector<std::uint32_t>& degrees);

/// Total complex of the tensor double complex, sign (-1)^p on the second
/// differential.
GradedFreeComplex tensor_total(const GradedFreeComplex& c1,
                               const GradedFreeComplex& c2);

/// Degree-deg strand: finite field matrices (and their dimensions).
struct Strand {
    std::vector<std::size_t> dims;   // per homological index
    std::vector<FieldMatrix> maps;   // maps[p-1] : strand_p -> strand_{p-1}
};

Strand graded_strand(const GradedFreeComplex& c, long deg);

/// Homology dimensions per homological index of the degree-deg strand.
std::vector<std::size_t> strand_homology(const GradedFreeComplex& c, long deg);

/// Per-degree H_0 dimensions of the strand complexes, degrees 0..truncation.
std::vector<std::size_t> strand_h0_dims(const GradedFreeComplex& c,
                                        long truncation);

struct H0HilbertCheck {
    bool ok = false;
    std::size_t total_dimension = 0;       // dim K[x]/(I'+J')
    std::size_t milnor = 0;                // dim K[x]/(I+J)
    bool per_degree_match = false;         // strand H0 of total vs Hilbert
    bool totals_match = false;             // graded total equals milnor sum
    bool series_identity = false;          // prod(1-t^{d_i}) * HS(K[x]/J')
                                           //   equals HS(K[x]/(I'+J'))
};

/// Dimension bookkeeping of the graded side against the affine side.
/// Throws HypothesesFail / TruncationTooSmall.
H0HilbertCheck h0_hilbert_check(const ConstrainedSystem& sys,
                                std::uint32_t truncation);

/// Default truncation: max(10, sum(d_i - 1) + 1).
std::uint32_t default_truncation(const ConstrainedSystem& sys);

/// Text serialization: per-index basis labels with degrees and differential
/// matrices in row-major polynomial syntax.
void dump_complex(const GradedFreeComplex& c, std::ostream& os);

}  // namespace lagmul

#endif
