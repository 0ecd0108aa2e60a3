#pragma once

#include <vector>

#include "sflow/rational.hpp"

namespace sflow {

/// Sparse rational matrix in coordinate form.  Entries are kept sorted by
/// (row, col), duplicates are merged and exact zeros are dropped, so two
/// matrices are equal iff their entry lists are equal.
class SparseMatrix {
public:
    struct Entry {
        int row;
        int col;
        Rational value;

        bool operator==(const Entry& other) const = default;
    };

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}
    SparseMatrix(int rows, int cols, std::vector<Entry> entries);

    static SparseMatrix identity(int n);
    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    bool is_integral() const;

    /// Slow positional lookup, meant for tests and small matrices.
    Rational at(int row, int col) const;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    std::vector<Rational> apply_transpose(const std::vector<Rational>& x) const;

    SparseMatrix transpose() const;
    SparseMatrix multiply(const SparseMatrix& other) const;

    /// Submatrix given by the kept row/column indices (order preserved,
    /// indices re-numbered densely).
    SparseMatrix select(const std::vector<int>& keep_rows,
                        const std::vector<int>& keep_cols) const;
    SparseMatrix select_cols(const std::vector<int>& keep_cols) const;

    /// Copy with one extra column appended on the right.
    SparseMatrix with_appended_column(const std::vector<Rational>& column) const;

    std::vector<std::vector<Rational>> to_dense() const;

    bool operator==(const SparseMatrix& other) const = default;

private:
    void normalize();

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Entry> entries_;
};

}  // namespace sflow
