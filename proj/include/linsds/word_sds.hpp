#pragma once

// Word update schedules. A word is lifted to a permutation of one symbol per
// occurrence, the coefficient matrix is block-expanded to occurrence space,
// restricted by the lifted order, summed as a nilpotent geometric series, and
// block-compressed back: (G, A, w) = I + ^c((I - B_wbar)^{-1}, s)(A - I)
// with B = ^e(A - I, s).

#include <cstddef>
#include <vector>

#include "linsds/matrix.hpp"
#include "linsds/sds.hpp"

namespace linsds {

// The word rewritten over distinct occurrence symbols: the k-th appearance of
// vertex v_i becomes occurrence index (m_1 + ... + m_{i-1}) + k - 1, making
// bar_word a permutation of 0..m-1 grouped in contiguous per-vertex blocks.
struct LiftedWord {
    std::vector<std::size_t> bar_word;
    Schedule origin;
};

LiftedWord lift_word(const Schedule& w);

// Replace entry (i, j) by an m_i x m_j block of copies. Zero-size blocks are
// allowed (the row/column simply disappears).
Matrix block_expand(const Matrix& t, const std::vector<std::size_t>& sizes);
Matrix block_expand(const Matrix& t, const MultiplicityVector& s);

// Replace each m_i x m_j block by the sum of its entries. Zero-size blocks
// contribute empty sums, i.e. zero rows/columns.
Matrix block_compress(const Matrix& t, const std::vector<std::size_t>& sizes);
Matrix block_compress(const Matrix& t, const MultiplicityVector& s);

// Which matrix gets block-expanded into occurrence space. kCoefficientsMinusI
// is the formula that reproduces the sequential composition and is the only
// correct choice; kCoefficients does NOT reproduce it and exists solely to
// regenerate golden data recorded under that erroneous convention.
enum class ExpansionBase { kCoefficientsMinusI, kCoefficients };

// Every intermediate of the word closed form, for diagnostics, goldens and
// the CLI echo.
struct WordSystemReport {
    MultiplicityVector multiplicities;
    LiftedWord lifted;
    Matrix expanded;        // ^e(base, s)
    Matrix restricted;      // B_wbar
    Matrix series_inverse;  // (I - B_wbar)^{-1}
    Matrix compressed;      // ^c(series_inverse, s)
    Matrix system;          // I + compressed (A - I)
};

WordSystemReport word_system_report(const LinearSDS& sds,
                                    ExpansionBase base = ExpansionBase::kCoefficientsMinusI);

// Closed form for any word schedule; degenerates to system_matrix_perm on
// permutations.
Matrix system_matrix_word(const LinearSDS& sds);

// True iff the system map of the whole word equals the composition of the
// maps of its two halves (second half applied after the first). Both halves
// must contain every vertex.
bool split_compose_check(const LinearSDS& sds, std::size_t cut_at);

} // namespace linsds
