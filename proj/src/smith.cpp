#include "sflow/smith.hpp"

#include <algorithm>

#include "sflow/errors.hpp"

namespace sflow {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

Integer iabs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Position of the smallest nonzero |entry| in the trailing submatrix,
// lowest (row, col) on ties.
bool find_pivot(const IntMatrix& m, int k, int& pr, int& pc) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    bool found = false;
    Integer best;
    for (int i = k; i < rows; ++i) {
        for (int j = k; j < cols; ++j) {
            if (m[i][j] == 0) continue;
            Integer a = iabs(m[i][j]);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

}  // namespace

std::vector<Integer> smith_normal_form(const SparseMatrix& matrix) {
    if (!matrix.is_integral()) {
        throw ValidationError("smith normal form requires integer entries");
    }
    const int rows = matrix.rows();
    const int cols = matrix.cols();
    IntMatrix m(rows, std::vector<Integer>(cols, Integer(0)));
    for (const auto& e : matrix.entries()) m[e.row][e.col] = numerator(e.value);

    const int steps = std::min(rows, cols);
    std::vector<Integer> factors;
    for (int k = 0; k < steps; ++k) {
        int pr = 0, pc = 0;
        if (!find_pivot(m, k, pr, pc)) break;
        std::swap(m[k], m[pr]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pc]);

        // Clear row and column k by repeated division with remainder; each
        // pass shrinks the pivot, so this terminates.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = k + 1; i < rows; ++i) {
                if (m[i][k] == 0) continue;
                Integer q = m[i][k] / m[k][k];
                for (int j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
                if (m[i][k] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(m[k], m[i]);
                    dirty = true;
                }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (m[k][j] == 0) continue;
                Integer q = m[k][j] / m[k][k];
                for (int i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
                if (m[k][j] != 0) {
                    for (int i = k; i < rows; ++i) std::swap(m[i][k], m[i][j]);
                    dirty = true;
                }
            }
            if (!dirty) {
                // Divisibility fix-up: fold a non-divisible entry into row k.
                for (int i = k + 1; i < rows && !dirty; ++i) {
                    for (int j = k + 1; j < cols && !dirty; ++j) {
                        if (m[i][j] % m[k][k] != 0) {
                            for (int c = k; c < cols; ++c) m[k][c] += m[i][c];
                            dirty = true;
                        }
                    }
                }
            }
        }
        factors.push_back(iabs(m[k][k]));
    }
    return factors;
}

}  // namespace sflow
