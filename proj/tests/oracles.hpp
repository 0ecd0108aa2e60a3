#pragma once

// Test-only oracles.  Each one re-derives a quantity through a different
// route than the library (different pivot order, exhaustive enumeration,
// classical graph algorithms) so agreement is meaningful.

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "sflow/lp.hpp"
#include "sflow/simplicial_complex.hpp"
#include "sflow/sparse_matrix.hpp"

namespace sflow::testing {

// Rank by elimination scanning columns right to left, pivot row chosen from
// the bottom up (the library scans the other way).
inline int rank_oracle(const SparseMatrix& matrix) {
    auto m = matrix.to_dense();
    const int rows = matrix.rows();
    const int cols = matrix.cols();
    std::vector<bool> used(rows, false);
    int rank = 0;
    for (int col = cols - 1; col >= 0; --col) {
        int pivot = -1;
        for (int r = rows - 1; r >= 0; --r) {
            if (!used[r] && m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        used[pivot] = true;
        ++rank;
        for (int r = 0; r < rows; ++r) {
            if (r == pivot || m[r][col] == 0) continue;
            const Rational factor = m[r][col] / m[pivot][col];
            for (int c = 0; c <= col; ++c) m[r][c] -= factor * m[pivot][c];
        }
    }
    return rank;
}

inline SparseMatrix augment_column(const SparseMatrix& matrix, const std::vector<Rational>& col) {
    return matrix.with_appended_column(col);
}

// Determinant by cofactor expansion; fine for the <= 4x4 oracle sizes.
inline Rational determinant_oracle(const std::vector<std::vector<Rational>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational det(0);
    for (int j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rational>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (int c = 0; c < n; ++c) {
                if (c != j) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        const Rational term = m[0][j] * determinant_oracle(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// gcd of the absolute values of all r x r minors.
inline Integer minor_gcd_oracle(const SparseMatrix& matrix, int r) {
    const auto dense = matrix.to_dense();
    std::vector<int> row_pick(r), col_pick(r);
    Integer g(0);
    std::vector<int> rows_idx(matrix.rows()), cols_idx(matrix.cols());
    for (int i = 0; i < matrix.rows(); ++i) rows_idx[i] = i;
    for (int j = 0; j < matrix.cols(); ++j) cols_idx[j] = j;

    std::vector<int> rsel, csel;
    auto choose = [&](auto&& self, const std::vector<int>& pool, int need, std::vector<int>& out,
                      auto&& then) -> void {
        if (static_cast<int>(out.size()) == need) {
            then();
            return;
        }
        const int start = out.empty() ? 0 : out.back() + 1;
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            out.push_back(pool[i]);
            self(self, pool, need, out, then);
            out.pop_back();
        }
    };
    choose(choose, rows_idx, r, rsel, [&]() {
        choose(choose, cols_idx, r, csel, [&]() {
            std::vector<std::vector<Rational>> sub;
            for (int i : rsel) {
                std::vector<Rational> row;
                for (int j : csel) row.push_back(dense[i][j]);
                sub.push_back(std::move(row));
            }
            const Rational det = determinant_oracle(sub);
            Integer v = numerator(det);
            if (v < 0) v = -v;
            g = gcd(g, v);
        });
    });
    return g;
}

// Local Gaussian solver (partial scan from the last row) used by the brute
// vertex enumerator below.
inline std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = n - 1; r >= 0; --r) {
            bool used = false;
            for (int cc = 0; cc < c; ++cc) {
                if (perm[cc] == r) used = true;
            }
            if (!used && m[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        perm[c] = pivot;
        for (int r = 0; r < n; ++r) {
            if (r == pivot || m[r][c] == 0) continue;
            const Rational factor = m[r][c] / m[pivot][c];
            for (int cc = 0; cc < n; ++cc) m[r][cc] -= factor * m[pivot][cc];
            rhs[r] -= factor * rhs[pivot];
        }
    }
    std::vector<Rational> x(n);
    for (int c = 0; c < n; ++c) x[c] = rhs[perm[c]] / m[perm[c]][c];
    return x;
}

struct BruteLp {
    bool feasible = false;
    Rational value;  // best objective over vertices when feasible
};

// Exhaustive vertex enumeration for tiny LPs with a pointed bounded feasible
// region: every vertex is the solution of n tight constraints drawn from the
// rows and the finite bounds.
inline BruteLp lp_vertex_oracle(const LinearProgram& lp) {
    const int n = static_cast<int>(lp.objective.size());
    struct Row {
        std::vector<Rational> coeffs;
        Rational rhs;
        int kind;  // -1: <=, 0: ==, 1: >=
    };
    std::vector<Row> rows;
    for (const auto& con : lp.constraints) {
        rows.push_back({con.coefficients, con.rhs,
                        con.relation == Relation::LessEqual   ? -1
                        : con.relation == Relation::Equal     ? 0
                                                              : 1});
    }
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> unit(n, Rational(0));
        unit[j] = 1;
        if (lp.bounds[j].lower) rows.push_back({unit, *lp.bounds[j].lower, 1});
        if (lp.bounds[j].upper) rows.push_back({unit, *lp.bounds[j].upper, -1});
    }

    BruteLp best;
    const int total = static_cast<int>(rows.size());
    std::vector<int> pick;
    auto consider = [&](const std::vector<int>& subset) {
        std::vector<std::vector<Rational>> m;
        std::vector<Rational> rhs;
        for (int i : subset) {
            m.push_back(rows[i].coeffs);
            rhs.push_back(rows[i].rhs);
        }
        auto x = solve_square(std::move(m), std::move(rhs));
        if (!x) return;
        for (const auto& row : rows) {
            Rational lhs(0);
            for (int j = 0; j < n; ++j) lhs += row.coeffs[j] * (*x)[j];
            if (row.kind == 0 && lhs != row.rhs) return;
            if (row.kind < 0 && lhs > row.rhs) return;
            if (row.kind > 0 && lhs < row.rhs) return;
        }
        Rational value(0);
        for (int j = 0; j < n; ++j) value += lp.objective[j] * (*x)[j];
        if (!best.feasible) {
            best.feasible = true;
            best.value = value;
        } else if (lp.sense == Sense::Maximize ? value > best.value : value < best.value) {
            best.value = value;
        }
    };
    auto recurse = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == n) {
            consider(pick);
            return;
        }
        for (int i = start; i < total; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 0);
    return best;
}

// Classical max-flow / min-cut for directed graphs: minimum over all vertex
// partitions of the capacity leaving the source side.
inline Rational graph_max_flow_oracle(int n,
                                      const std::vector<std::tuple<int, int, Rational>>& arcs,
                                      int source, int sink) {
    Rational best(-1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << source)) || (mask & (1u << sink))) continue;
        Rational total(0);
        for (const auto& [a, b, cap] : arcs) {
            if ((mask & (1u << a)) && !(mask & (1u << b))) total += cap;
        }
        if (best < 0 || total < best) best = total;
    }
    return best;
}

// Minimum-weight arc set whose removal kills every directed source-sink path
// (BFS reachability; independent of any linear algebra).
inline Rational graph_min_directed_cut_oracle(
    int n, const std::vector<std::tuple<int, int, Rational>>& arcs, int source, int sink) {
    const int m = static_cast<int>(arcs.size());
    auto reachable = [&](std::uint32_t removed) -> bool {
        std::vector<bool> seen(n, false);
        std::vector<int> stack = {source};
        seen[source] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int e = 0; e < m; ++e) {
                if (removed & (1u << e)) continue;
                const auto& [a, b, cap] = arcs[e];
                if (a == u && !seen[b]) {
                    seen[b] = true;
                    stack.push_back(b);
                }
            }
        }
        return seen[sink];
    };
    Rational best(-1);
    for (std::uint32_t removed = 0; removed < (1u << m); ++removed) {
        if (reachable(removed)) continue;
        Rational total(0);
        for (int e = 0; e < m; ++e) {
            if (removed & (1u << e)) total += std::get<2>(arcs[e]);
        }
        if (best < 0 || total < best) best = total;
    }
    return best;
}

// Bellman-Ford distances from a source; nullopt marks unreachable vertices.
inline std::vector<std::optional<Rational>> bellman_ford(
    int n, const std::vector<std::tuple<int, int, Rational>>& arcs, int source) {
    std::vector<std::optional<Rational>> dist(n);
    dist[source] = Rational(0);
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (const auto& [a, b, w] : arcs) {
            if (!dist[a]) continue;
            const Rational candidate = *dist[a] + w;
            if (!dist[b] || candidate < *dist[b]) {
                dist[b] = candidate;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return dist;
}

// The 7-vertex triangulated torus (cyclic construction).
inline SimplicialComplex torus7() {
    std::vector<std::vector<int>> triangles;
    for (int i = 0; i < 7; ++i) {
        auto norm = [&](int v) { return v % 7; };
        std::vector<int> a = {norm(i), norm(i + 1), norm(i + 3)};
        std::vector<int> b = {norm(i), norm(i + 2), norm(i + 3)};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        triangles.push_back(a);
        triangles.push_back(b);
    }
    return SimplicialComplex::from_top_simplices(7, triangles);
}

}  // namespace sflow::testing
