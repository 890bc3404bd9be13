#ifndef LAGMUL_LINALG_HPP
#define LAGMUL_LINALG_HPP

#include <cstddef>
#include <vector>

#include "lagmul/field.hpp"

namespace lagmul {

/// Dense matrix over the coefficient field.
struct FieldMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<FieldElement> a;  // row-major

    FieldMatrix() = default;
    FieldMatrix(std::size_t r, std::size_t c, const Field& field)
        : rows(r), cols(c), a(r * c, FieldElement(field, 0)) {}

    const FieldElement& at(std::size_t i, std::size_t j) const {
        return a[i * cols + j];
    }
    FieldElement& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

/// Rank by Gaussian elimination (exact).
std::size_t matrix_rank(FieldMatrix m);

/// a * b.
FieldMatrix matrix_mul(const FieldMatrix& a, const FieldMatrix& b,
                       const Field& field);

bool matrix_is_zero(const FieldMatrix& m);

}  // namespace lagmul

#endif
