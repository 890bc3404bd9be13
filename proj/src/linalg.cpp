#include "lagmul/linalg.hpp"

namespace lagmul {

std::size_t matrix_rank(FieldMatrix m) {
    std::size_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != row) {
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(m.at(pivot, j), m.at(row, j));
        }
        FieldElement inv = m.at(row, col).inv();
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElement factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) -= factor * m.at(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

FieldMatrix matrix_mul(const FieldMatrix& a, const FieldMatrix& b,
                       const Field& field) {
    FieldMatrix r(a.rows, b.cols, field);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

bool matrix_is_zero(const FieldMatrix& m) {
    for (const auto& x : m.a)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace lagmul
