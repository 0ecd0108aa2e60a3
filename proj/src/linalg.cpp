#include "sflow/linalg.hpp"

#include "sflow/errors.hpp"

namespace sflow {

namespace {

struct Echelon {
    std::vector<std::vector<Rational>> mat;
    std::vector<int> pivot_cols;  // pivot column of row r, for r < rank
    int rank = 0;
};

// Reduced row echelon form over the first `ncols` columns.  Pivot choice is
// fixed: columns left to right, lowest-index remaining row with a nonzero.
Echelon reduce(std::vector<std::vector<Rational>> mat, int ncols) {
    Echelon ech;
    const int nrows = static_cast<int>(mat.size());
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int pivot = -1;
        for (int r = row; r < nrows; ++r) {
            if (mat[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(mat[row], mat[pivot]);
        const Rational inv = Rational(1) / mat[row][col];
        for (auto& v : mat[row]) v *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || mat[r][col] == 0) continue;
            const Rational factor = mat[r][col];
            for (size_t c = col; c < mat[r].size(); ++c) {
                mat[r][c] -= factor * mat[row][c];
            }
        }
        ech.pivot_cols.push_back(col);
        ++row;
    }
    ech.rank = row;
    ech.mat = std::move(mat);
    return ech;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear(const SparseMatrix& matrix,
                                                  const std::vector<Rational>& rhs) {
    if (static_cast<int>(rhs.size()) != matrix.rows()) {
        throw ValidationError("solve_linear shape mismatch");
    }
    const int n = matrix.cols();
    auto aug = matrix.to_dense();
    for (int i = 0; i < matrix.rows(); ++i) aug[i].push_back(rhs[i]);
    Echelon ech = reduce(std::move(aug), n);
    for (int r = ech.rank; r < matrix.rows(); ++r) {
        if (ech.mat[r][n] != 0) return std::nullopt;  // 0 = nonzero row
    }
    std::vector<Rational> solution(n, Rational(0));
    for (int r = 0; r < ech.rank; ++r) solution[ech.pivot_cols[r]] = ech.mat[r][n];
    return solution;
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& matrix) {
    const int n = matrix.cols();
    Echelon ech = reduce(matrix.to_dense(), n);
    std::vector<int> pivot_row_of_col(n, -1);
    for (int r = 0; r < ech.rank; ++r) pivot_row_of_col[ech.pivot_cols[r]] = r;
    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (pivot_row_of_col[free_col] >= 0) continue;
        std::vector<Rational> vec(n, Rational(0));
        vec[free_col] = 1;
        for (int r = 0; r < ech.rank; ++r) {
            vec[ech.pivot_cols[r]] = -ech.mat[r][free_col];
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

int rank(const SparseMatrix& matrix) {
    return reduce(matrix.to_dense(), matrix.cols()).rank;
}

}  // namespace sflow
