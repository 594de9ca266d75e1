#pragma once

#include <span>
#include <vector>

#include "mcode/field.hpp"

namespace mcode {

// Dense matrix over a finite field, row-major. Matrices with zero rows are
// legal and keep their column count (empty codes and empty parity checks
// flow through the same paths as everything else).
class Matrix {
  public:
    Matrix(const Field& field, size_t rows, size_t cols);
    static Matrix identity(const Field& field, size_t n);
    static Matrix from_rows(const Field& field, size_t cols,
                            const std::vector<std::vector<FieldElem>>& rows);

    const Field& field() const { return *field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElem operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    FieldElem& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }

    void append_row(std::span<const FieldElem> row);
    std::vector<FieldElem> row(size_t i) const;
    Matrix submatrix(size_t row_begin, size_t row_end, size_t col_begin, size_t col_end) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
        return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
    }

  private:
    const Field* field_;
    size_t rows_;
    size_t cols_;
    std::vector<FieldElem> data_;
};

// Reduced row echelon form in place; returns the rank.
size_t rref_in_place(Matrix& m);

// RREF with zero rows dropped: the canonical basis of the row space, so two
// matrices span the same space exactly when these agree.
Matrix row_space_basis(const Matrix& m);

size_t rank(const Matrix& m);

bool same_row_space(const Matrix& a, const Matrix& b);

// Canonical basis (as rows) of the right kernel {v : m v^T = 0}.
Matrix nullspace(const Matrix& m);

Matrix inverse(const Matrix& m);  // throws std::domain_error when singular

// Column projection: keep the listed columns, in the listed order.
Matrix select_columns(const Matrix& m, std::span<const size_t> cols);

// Basis of the subspace of the row space whose vectors vanish on the listed
// columns (the shortening of a code to those coordinates, before projection).
Matrix row_space_vanishing_on(const Matrix& m, std::span<const size_t> zero_cols);

}  // namespace mcode
