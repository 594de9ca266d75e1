#include "mcode/linalg.hpp"

#include <stdexcept>

namespace mcode {

Matrix::Matrix(const Field& field, size_t rows, size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(const Field& field, size_t cols,
                         const std::vector<std::vector<FieldElem>>& rows) {
    Matrix m(field, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void Matrix::append_row(std::span<const FieldElem> row) {
    if (row.size() != cols_) throw std::invalid_argument("appended row has wrong length");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<FieldElem> Matrix::row(size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

Matrix Matrix::submatrix(size_t row_begin, size_t row_end, size_t col_begin,
                         size_t col_end) const {
    if (row_end > rows_ || col_end > cols_ || row_begin > row_end || col_begin > col_end)
        throw std::out_of_range("submatrix bounds");
    Matrix m(*field_, row_end - row_begin, col_end - col_begin);
    for (size_t i = row_begin; i < row_end; ++i)
        for (size_t j = col_begin; j < col_end; ++j) m(i - row_begin, j - col_begin) = (*this)(i, j);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(*field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool Matrix::is_zero() const {
    for (const FieldElem& x : data_)
        if (x != field_->zero()) return false;
    return true;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_ || !same_field(*lhs.field_, *rhs.field_))
        throw std::invalid_argument("matrix product shape mismatch");
    const Field& F = *lhs.field_;
    Matrix out(F, lhs.rows_, rhs.cols_);
    for (size_t i = 0; i < lhs.rows_; ++i)
        for (size_t k = 0; k < lhs.cols_; ++k) {
            const FieldElem a = lhs(i, k);
            if (a == F.zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = F.add(out(i, j), F.mul(a, rhs(k, j)));
        }
    return out;
}

size_t rref_in_place(Matrix& m) {
    const Field& F = m.field();
    size_t pivot_row = 0;
    for (size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        size_t sel = pivot_row;
        while (sel < m.rows() && m(sel, col) == F.zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pivot_row, j));
        const FieldElem inv = F.inverse(m(pivot_row, col));
        for (size_t j = col; j < m.cols(); ++j) m(pivot_row, j) = F.mul(m(pivot_row, j), inv);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row) continue;
            const FieldElem factor = m(i, col);
            if (factor == F.zero()) continue;
            for (size_t j = col; j < m.cols(); ++j)
                m(i, j) = F.sub(m(i, j), F.mul(factor, m(pivot_row, j)));
        }
        ++pivot_row;
    }
    return pivot_row;
}

Matrix row_space_basis(const Matrix& m) {
    Matrix work = m;
    const size_t r = rref_in_place(work);
    return work.submatrix(0, r, 0, work.cols());
}

size_t rank(const Matrix& m) {
    Matrix work = m;
    return rref_in_place(work);
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    return row_space_basis(a) == row_space_basis(b);
}

Matrix nullspace(const Matrix& m) {
    const Field& F = m.field();
    Matrix work = m;
    const size_t r = rref_in_place(work);

    std::vector<size_t> pivot_col_of_row(r);
    std::vector<bool> is_pivot(work.cols(), false);
    for (size_t i = 0; i < r; ++i) {
        size_t j = 0;
        while (work(i, j) == F.zero()) ++j;
        pivot_col_of_row[i] = j;
        is_pivot[j] = true;
    }

    Matrix basis(F, 0, work.cols());
    std::vector<FieldElem> v(work.cols());
    for (size_t free_col = 0; free_col < work.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::fill(v.begin(), v.end(), F.zero());
        v[free_col] = F.one();
        for (size_t i = 0; i < r; ++i) v[pivot_col_of_row[i]] = F.neg(work(i, free_col));
        basis.append_row(v);
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("only square matrices are invertible");
    if (rank(m) < m.rows()) throw std::domain_error("matrix is singular");
    const Field& F = m.field();
    const size_t n = m.rows();
    Matrix work(F, n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) work(i, j) = m(i, j);
        work(i, n + i) = F.one();
    }
    rref_in_place(work);
    return work.submatrix(0, n, n, 2 * n);
}

Matrix select_columns(const Matrix& m, std::span<const size_t> cols) {
    Matrix out(m.field(), m.rows(), cols.size());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= m.cols()) throw std::out_of_range("column selection");
            out(i, j) = m(i, cols[j]);
        }
    return out;
}

Matrix row_space_vanishing_on(const Matrix& m, std::span<const size_t> zero_cols) {
    // Coefficient vectors x with x * B restricted to the given columns being
    // zero form the kernel of the restricted basis, transposed.
    const Matrix basis = row_space_basis(m);
    const Matrix restricted = select_columns(basis, zero_cols);
    const Matrix coeffs = nullspace(restricted.transpose());
    return coeffs * basis;
}

}  // namespace mcode
