#include "sflow/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "sflow/errors.hpp"

namespace sflow {

SparseMatrix::SparseMatrix(int rows, int cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_) {
            throw ValidationError("matrix entry out of range");
        }
    }
    normalize();
}

void SparseMatrix::normalize() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (auto& e : entries_) {
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
            merged.back().value += e.value;
        } else {
            merged.push_back(std::move(e));
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Entry& e) { return e.value == 0; }),
                 merged.end());
    entries_ = std::move(merged);
}

SparseMatrix SparseMatrix::identity(int n) {
    std::vector<Entry> entries;
    entries.reserve(n);
    for (int i = 0; i < n; ++i) entries.push_back({i, i, Rational(1)});
    return SparseMatrix(n, n, std::move(entries));
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
    const int rows = static_cast<int>(dense.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(dense[0].size());
    std::vector<Entry> entries;
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(dense[i].size()) != cols) {
            throw ValidationError("ragged dense matrix");
        }
        for (int j = 0; j < cols; ++j) {
            if (dense[i][j] != 0) entries.push_back({i, j, dense[i][j]});
        }
    }
    return SparseMatrix(rows, cols, std::move(entries));
}

bool SparseMatrix::is_integral() const {
    for (const auto& e : entries_) {
        if (!is_integer(e.value)) return false;
    }
    return true;
}

Rational SparseMatrix::at(int row, int col) const {
    for (const auto& e : entries_) {
        if (e.row == row && e.col == col) return e.value;
    }
    return Rational(0);
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw ValidationError("matrix-vector shape mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (const auto& e : entries_) out[e.row] += e.value * x[e.col];
    return out;
}

std::vector<Rational> SparseMatrix::apply_transpose(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != rows_) throw ValidationError("matrix-vector shape mismatch");
    std::vector<Rational> out(cols_, Rational(0));
    for (const auto& e : entries_) out[e.col] += e.value * x[e.row];
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<Entry> entries;
    entries.reserve(entries_.size());
    for (const auto& e : entries_) entries.push_back({e.col, e.row, e.value});
    return SparseMatrix(cols_, rows_, std::move(entries));
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols_ != other.rows_) throw ValidationError("matrix product shape mismatch");
    std::map<std::pair<int, int>, Rational> acc;
    // Group the right factor's entries by row for the scan below.
    std::vector<std::vector<const Entry*>> by_row(other.rows_);
    for (const auto& e : other.entries_) by_row[e.row].push_back(&e);
    for (const auto& a : entries_) {
        for (const Entry* b : by_row[a.col]) {
            acc[{a.row, b->col}] += a.value * b->value;
        }
    }
    std::vector<Entry> entries;
    for (auto& [pos, value] : acc) {
        if (value != 0) entries.push_back({pos.first, pos.second, std::move(value)});
    }
    return SparseMatrix(rows_, other.cols_, std::move(entries));
}

SparseMatrix SparseMatrix::select(const std::vector<int>& keep_rows,
                                  const std::vector<int>& keep_cols) const {
    std::vector<int> row_map(rows_, -1), col_map(cols_, -1);
    for (size_t i = 0; i < keep_rows.size(); ++i) {
        if (keep_rows[i] < 0 || keep_rows[i] >= rows_) throw ValidationError("row index out of range");
        row_map[keep_rows[i]] = static_cast<int>(i);
    }
    for (size_t j = 0; j < keep_cols.size(); ++j) {
        if (keep_cols[j] < 0 || keep_cols[j] >= cols_) throw ValidationError("column index out of range");
        col_map[keep_cols[j]] = static_cast<int>(j);
    }
    std::vector<Entry> entries;
    for (const auto& e : entries_) {
        if (row_map[e.row] >= 0 && col_map[e.col] >= 0) {
            entries.push_back({row_map[e.row], col_map[e.col], e.value});
        }
    }
    return SparseMatrix(static_cast<int>(keep_rows.size()),
                        static_cast<int>(keep_cols.size()), std::move(entries));
}

SparseMatrix SparseMatrix::select_cols(const std::vector<int>& keep_cols) const {
    std::vector<int> all_rows(rows_);
    for (int i = 0; i < rows_; ++i) all_rows[i] = i;
    return select(all_rows, keep_cols);
}

SparseMatrix SparseMatrix::with_appended_column(const std::vector<Rational>& column) const {
    if (static_cast<int>(column.size()) != rows_) throw ValidationError("appended column length mismatch");
    std::vector<Entry> entries = entries_;
    for (int i = 0; i < rows_; ++i) {
        if (column[i] != 0) entries.push_back({i, cols_, column[i]});
    }
    return SparseMatrix(rows_, cols_ + 1, std::move(entries));
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
    std::vector<std::vector<Rational>> dense(rows_, std::vector<Rational>(cols_, Rational(0)));
    for (const auto& e : entries_) dense[e.row][e.col] = e.value;
    return dense;
}

}  // namespace sflow
