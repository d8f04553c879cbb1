#include "linsds/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace linsds {

namespace {

void check_square(const Matrix& m, const char* what) {
    if (!m.is_square()) {
        throw Error(errc::dimension_mismatch,
                    std::string(what) + " requires a square matrix, got " +
                        std::to_string(m.nrows()) + "x" + std::to_string(m.ncols()));
    }
}

void check_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) {
        throw Error(errc::field_mismatch, "matrices over different fields: " +
                                              a.field().to_string() + " vs " + b.field().to_string());
    }
}

std::vector<std::size_t> positions_of(const std::vector<std::size_t>& order, std::size_t n) {
    if (!is_permutation_of_indices(order, n)) {
        throw Error(errc::not_a_permutation,
                    "order is not a permutation of 0.." + std::to_string(n ? n - 1 : 0));
    }
    std::vector<std::size_t> pos(n);
    for (std::size_t t = 0; t < n; ++t) pos[order[t]] = t;
    return pos;
}

} // namespace

bool is_permutation_of_indices(const std::vector<std::size_t>& order, std::size_t n) {
    if (order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::size_t v : order) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Matrix::Matrix(FieldSpec field, std::size_t nrows, std::size_t ncols)
    : field_(field), nrows_(nrows), ncols_(ncols), data_(nrows * ncols, field.zero()) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t nrows = rows.size();
    std::size_t ncols = nrows ? rows[0].size() : 0;
    Matrix m(field, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        if (rows[i].size() != ncols) {
            throw Error(errc::dimension_mismatch, "ragged rows in matrix literal");
        }
        for (std::size_t j = 0; j < ncols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<Scalar>> converted;
    converted.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Scalar> r;
        r.reserve(row.size());
        for (std::int64_t v : row) r.push_back(field.from_int(v));
        converted.push_back(std::move(r));
    }
    return from_rows(field, converted);
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
    if (value.field() != field_) {
        throw Error(errc::field_mismatch, "entry field " + value.field().to_string() +
                                              " does not match matrix field " + field_.to_string());
    }
    data_[i * ncols_ + j] = std::move(value);
}

void Matrix::check_same_shape(const Matrix& other) const {
    check_field(*this, other);
    if (nrows_ != other.nrows_ || ncols_ != other.ncols_) {
        throw Error(errc::dimension_mismatch, "shape mismatch: " + std::to_string(nrows_) + "x" +
                                                  std::to_string(ncols_) + " vs " +
                                                  std::to_string(other.nrows_) + "x" +
                                                  std::to_string(other.ncols_));
    }
}

Matrix Matrix::operator+(const Matrix& other) const {
    check_same_shape(other);
    Matrix out(field_, nrows_, ncols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    check_same_shape(other);
    Matrix out(field_, nrows_, ncols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    check_field(*this, other);
    if (ncols_ != other.nrows_) {
        throw Error(errc::dimension_mismatch,
                    "cannot multiply " + std::to_string(nrows_) + "x" + std::to_string(ncols_) +
                        " by " + std::to_string(other.nrows_) + "x" + std::to_string(other.ncols_));
    }
    Matrix out(field_, nrows_, other.ncols_);
    for (std::size_t i = 0; i < nrows_; ++i) {
        for (std::size_t t = 0; t < ncols_; ++t) {
            const Scalar& a = at(i, t);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < other.ncols_; ++j) {
                const Scalar& b = other.at(t, j);
                if (b.is_zero()) continue;
                out.data_[i * other.ncols_ + j] += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(field_, nrows_, ncols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return field_ == other.field_ && nrows_ == other.nrows_ && ncols_ == other.ncols_ &&
           data_ == other.data_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < nrows_; ++i) {
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

std::string Matrix::to_string() const {
    std::vector<std::size_t> widths(ncols_, 0);
    for (std::size_t j = 0; j < ncols_; ++j) {
        for (std::size_t i = 0; i < nrows_; ++i) {
            widths[j] = std::max(widths[j], at(i, j).to_string().size());
        }
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < nrows_; ++i) {
        out << "[ ";
        for (std::size_t j = 0; j < ncols_; ++j) {
            std::string cell = at(i, j).to_string();
            out << std::string(widths[j] - cell.size(), ' ') << cell;
            out << (j + 1 < ncols_ ? "  " : " ");
        }
        out << "]";
        if (i + 1 < nrows_) out << '\n';
    }
    return out.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix mat_inv(const Matrix& a) {
    check_square(a, "mat_inv");
    std::size_t n = a.nrows();
    Matrix work = a;
    Matrix inv = Matrix::identity(a.field(), n);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) {
            throw Error(errc::singular, "matrix is singular (no pivot in column " +
                                            std::to_string(col) + ")");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                Scalar tmp = work.at(col, j);
                work.set(col, j, work.at(pivot, j));
                work.set(pivot, j, tmp);
                tmp = inv.at(col, j);
                inv.set(col, j, inv.at(pivot, j));
                inv.set(pivot, j, tmp);
            }
        }
        Scalar scale = work.at(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            work.set(col, j, work.at(col, j) * scale);
            inv.set(col, j, inv.at(col, j) * scale);
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || work.at(row, col).is_zero()) continue;
            Scalar factor = work.at(row, col);
            for (std::size_t j = 0; j < n; ++j) {
                work.set(row, j, work.at(row, j) - factor * work.at(col, j));
                inv.set(row, j, inv.at(row, j) - factor * inv.at(col, j));
            }
        }
    }
    return inv;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& a) {
    std::size_t nrows = a.nrows(), ncols = a.ncols();
    Matrix work = a;

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot = row;
        while (pivot < nrows && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == nrows) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < ncols; ++j) {
                Scalar tmp = work.at(row, j);
                work.set(row, j, work.at(pivot, j));
                work.set(pivot, j, tmp);
            }
        }
        Scalar scale = work.at(row, col).inv();
        for (std::size_t j = 0; j < ncols; ++j) work.set(row, j, work.at(row, j) * scale);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || work.at(r, col).is_zero()) continue;
            Scalar factor = work.at(r, col);
            for (std::size_t j = 0; j < ncols; ++j) {
                work.set(r, j, work.at(r, j) - factor * work.at(row, j));
            }
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot_col(ncols, false);
    for (std::size_t c : pivot_col_of_row) is_pivot_col[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        std::vector<Scalar> vec(ncols, a.field().zero());
        vec[free_col] = a.field().one();
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            vec[pivot_col_of_row[r]] = -work.at(r, free_col);
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

Matrix restrict_after(const Matrix& t, const std::vector<std::size_t>& order) {
    check_square(t, "restrict_after");
    std::vector<std::size_t> pos = positions_of(order, t.nrows());
    Matrix out(t.field(), t.nrows(), t.ncols());
    for (std::size_t i = 0; i < t.nrows(); ++i) {
        for (std::size_t j = 0; j < t.ncols(); ++j) {
            if (pos[i] > pos[j]) out.set(i, j, t.at(i, j));
        }
    }
    return out;
}

Matrix nilpotent_inverse_series(const Matrix& n_mat) {
    check_square(n_mat, "nilpotent_inverse_series");
    std::size_t n = n_mat.nrows();
    Matrix sum(n_mat.field(), n, n);
    Matrix power = Matrix::identity(n_mat.field(), n);
    for (std::size_t k = 0; k < n; ++k) {
        sum = sum + power;
        power = power * n_mat;
    }
    if (!power.is_zero()) {
        throw Error(errc::not_nilpotent, "matrix is not nilpotent: N^" + std::to_string(n) + " != 0");
    }
    return sum;
}

std::optional<LUFactors> lu_decompose(const Matrix& t) {
    check_square(t, "lu_decompose");
    std::size_t n = t.nrows();
    Matrix upper = t;
    Matrix lower = Matrix::identity(t.field(), n);

    for (std::size_t col = 0; col < n; ++col) {
        if (upper.at(col, col).is_zero()) {
            for (std::size_t row = col + 1; row < n; ++row) {
                if (!upper.at(row, col).is_zero()) return std::nullopt;
            }
            continue; // nothing below the zero pivot, no elimination needed
        }
        Scalar pivot_inv = upper.at(col, col).inv();
        for (std::size_t row = col + 1; row < n; ++row) {
            if (upper.at(row, col).is_zero()) continue;
            Scalar factor = upper.at(row, col) * pivot_inv;
            lower.set(row, col, factor);
            for (std::size_t j = col; j < n; ++j) {
                upper.set(row, j, upper.at(row, j) - factor * upper.at(col, j));
            }
        }
    }

    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    return LUFactors{std::move(lower), std::move(upper), std::move(id)};
}

LUFactors lup_decompose(const Matrix& t) {
    check_square(t, "lup_decompose");
    std::size_t n = t.nrows();
    Matrix upper = t;
    Matrix lower = Matrix::identity(t.field(), n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && upper.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) continue; // zero column tail; singular input is fine
        if (pivot != col) {
            std::swap(perm[col], perm[pivot]);
            for (std::size_t j = 0; j < n; ++j) {
                Scalar tmp = upper.at(col, j);
                upper.set(col, j, upper.at(pivot, j));
                upper.set(pivot, j, tmp);
            }
            // Already-computed multipliers move with their rows.
            for (std::size_t j = 0; j < col; ++j) {
                Scalar tmp = lower.at(col, j);
                lower.set(col, j, lower.at(pivot, j));
                lower.set(pivot, j, tmp);
            }
        }
        Scalar pivot_inv = upper.at(col, col).inv();
        for (std::size_t row = col + 1; row < n; ++row) {
            if (upper.at(row, col).is_zero()) continue;
            Scalar factor = upper.at(row, col) * pivot_inv;
            lower.set(row, col, factor);
            for (std::size_t j = col; j < n; ++j) {
                upper.set(row, j, upper.at(row, j) - factor * upper.at(col, j));
            }
        }
    }
    return LUFactors{std::move(lower), std::move(upper), std::move(perm)};
}

Matrix apply_row_perm(const Matrix& t, const std::vector<std::size_t>& perm) {
    if (!is_permutation_of_indices(perm, t.nrows())) {
        throw Error(errc::not_a_permutation, "row permutation does not match matrix height");
    }
    Matrix out(t.field(), t.nrows(), t.ncols());
    for (std::size_t i = 0; i < t.nrows(); ++i) {
        for (std::size_t j = 0; j < t.ncols(); ++j) out.set(i, j, t.at(perm[i], j));
    }
    return out;
}

} // namespace linsds
