#pragma once

// Dense exact matrix algebra shared by every higher module: products,
// Gauss-Jordan inverses, kernels, schedule restriction, nilpotent geometric
// series, and LU/LUP decompositions. Dense row-major storage is deliberate;
// everything here runs at desk scale (n up to a few hundred).

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "linsds/field.hpp"

namespace linsds {

class Matrix {
public:
    // Zero matrix of the given shape.
    Matrix(FieldSpec field, std::size_t nrows, std::size_t ncols);

    static Matrix identity(const FieldSpec& field, std::size_t n);
    static Matrix from_rows(const FieldSpec& field,
                            const std::vector<std::vector<Scalar>>& rows);
    // Convenience for literals in tests and goldens.
    static Matrix from_ints(const FieldSpec& field,
                            std::initializer_list<std::initializer_list<std::int64_t>> rows);

    const FieldSpec& field() const { return field_; }
    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    bool is_square() const { return nrows_ == ncols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * ncols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar value);

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator-() const;
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    bool is_zero() const;
    bool is_identity() const;

    std::string to_string() const;

private:
    void check_same_shape(const Matrix& other) const;

    FieldSpec field_;
    std::size_t nrows_;
    std::size_t ncols_;
    std::vector<Scalar> data_;
};

// L unit lower triangular, U upper triangular, row_perm a permutation of row
// indices with (P t)[i] = t[row_perm[i]], so that P t = L U exactly.
// row_perm is the identity for pivot-free LU.
struct LUFactors {
    Matrix lower;
    Matrix upper;
    std::vector<std::size_t> row_perm;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);

// Exact inverse by Gauss-Jordan with first-nonzero pivot selection
// (deterministic: lowest row index). Throws singular.
Matrix mat_inv(const Matrix& a);

// Basis of the right kernel {x : a x = 0}, each vector of length ncols.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& a);

// Keep entry (i, j) iff element i appears strictly after element j in
// `order`; everything else, the diagonal included, becomes zero.
Matrix restrict_after(const Matrix& t, const std::vector<std::size_t>& order);

// I + N + N^2 + ... + N^{n-1} = (I - N)^{-1} for nilpotent N. Verifies
// N^n = 0 along the way and throws not_nilpotent otherwise.
Matrix nilpotent_inverse_series(const Matrix& n_mat);

// Pivot-free elimination: succeeds iff every pivot that must clear entries
// below it is nonzero (zero pivots over an already-zero column are skipped).
// "No LU" is a legitimate outcome, hence optional rather than an error.
std::optional<LUFactors> lu_decompose(const Matrix& t);

// Partial pivoting with first-nonzero row selection; always succeeds,
// including on singular input.
LUFactors lup_decompose(const Matrix& t);

// Rows of the result are t's rows reordered: result[i] = t[perm[i]].
Matrix apply_row_perm(const Matrix& t, const std::vector<std::size_t>& perm);

bool is_permutation_of_indices(const std::vector<std::size_t>& order, std::size_t n);

} // namespace linsds
