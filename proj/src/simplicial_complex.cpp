#include "sflow/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include "sflow/errors.hpp"

namespace sflow {

namespace {

void check_tuple(const std::vector<int>& simplex, int vertex_count) {
    if (simplex.empty()) throw ValidationError("empty simplex");
    for (size_t i = 0; i < simplex.size(); ++i) {
        if (simplex[i] < 0 || simplex[i] >= vertex_count) {
            throw ValidationError("vertex index out of range in " +
                                  SimplicialComplex::simplex_label(simplex));
        }
        if (i > 0 && simplex[i - 1] >= simplex[i]) {
            throw ValidationError("simplex vertices must be strictly increasing: " +
                                  SimplicialComplex::simplex_label(simplex));
        }
    }
}

}  // namespace

SimplicialComplex::SimplicialComplex(
    int vertex_count, std::vector<std::vector<std::vector<int>>> simplices_by_dim)
    : vertex_count_(vertex_count), simplices_(std::move(simplices_by_dim)) {
    if (vertex_count_ < 0) throw ValidationError("negative vertex count");
    const bool has_vertex_level =
        !simplices_.empty() && !simplices_[0].empty() && simplices_[0][0].size() == 1;
    if (!has_vertex_level) {
        // Dimension zero may be omitted; it is always one 0-simplex per vertex.
        std::vector<std::vector<int>> verts;
        verts.reserve(vertex_count_);
        for (int v = 0; v < vertex_count_; ++v) verts.push_back({v});
        simplices_.insert(simplices_.begin(), std::move(verts));
    } else if (static_cast<int>(simplices_[0].size()) != vertex_count_) {
        throw ValidationError("the vertex level must list every vertex");
    }
    for (int dim = 0; dim < static_cast<int>(simplices_.size()); ++dim) {
        std::set<std::vector<int>> seen;
        for (const auto& s : simplices_[dim]) {
            if (static_cast<int>(s.size()) != dim + 1) {
                throw ValidationError("simplex " + simplex_label(s) +
                                      " listed under wrong dimension");
            }
            check_tuple(s, vertex_count_);
            if (!seen.insert(s).second) {
                throw ValidationError("duplicate simplex " + simplex_label(s));
            }
        }
    }
}

SimplicialComplex SimplicialComplex::from_top_simplices(
    int vertex_count, const std::vector<std::vector<int>>& top_simplices) {
    std::vector<std::set<std::vector<int>>> faces;
    for (auto simplex : top_simplices) {
        std::sort(simplex.begin(), simplex.end());
        check_tuple(simplex, vertex_count);
        // All nonempty subsets via bitmask.
        const int n = static_cast<int>(simplex.size());
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < n; ++i) {
                if (mask & (1 << i)) face.push_back(simplex[i]);
            }
            const int dim = static_cast<int>(face.size()) - 1;
            if (dim >= static_cast<int>(faces.size())) faces.resize(dim + 1);
            faces[dim].insert(std::move(face));
        }
    }
    std::vector<std::vector<std::vector<int>>> by_dim;
    for (int v = 0; v < vertex_count; ++v) {
        if (faces.empty()) faces.resize(1);
        faces[0].insert({v});
    }
    for (auto& level : faces) {
        by_dim.emplace_back(level.begin(), level.end());  // set order = lexicographic
    }
    return SimplicialComplex(vertex_count, std::move(by_dim));
}

const std::vector<std::vector<int>>& SimplicialComplex::simplices(int dim) const {
    if (dim < 0 || dim > dimension()) throw ValidationError("dimension out of range");
    return simplices_[dim];
}

int SimplicialComplex::count(int dim) const {
    return static_cast<int>(simplices(dim).size());
}

int SimplicialComplex::index_of(int dim, const std::vector<int>& simplex) const {
    if (dim < 0 || dim > dimension()) return -1;
    const auto& list = simplices_[dim];
    for (int i = 0; i < static_cast<int>(list.size()); ++i) {
        if (list[i] == simplex) return i;
    }
    return -1;
}

void SimplicialComplex::set_orientation(int dim, int index, int orientation_sign) {
    if (orientation_sign != 1 && orientation_sign != -1) {
        throw ValidationError("orientation sign must be +1 or -1");
    }
    if (dim < 0 || dim > dimension() || index < 0 || index >= count(dim)) {
        throw ValidationError("orientation override target out of range");
    }
    if (orientation_sign == 1) {
        orientation_overrides_.erase({dim, index});
    } else {
        orientation_overrides_[{dim, index}] = -1;
    }
}

int SimplicialComplex::orientation(int dim, int index) const {
    auto it = orientation_overrides_.find({dim, index});
    return it == orientation_overrides_.end() ? 1 : it->second;
}

SparseMatrix SimplicialComplex::boundary_matrix(int k) const {
    if (k < 1 || k > dimension()) throw ValidationError("boundary dimension out of range");
    const auto& cells = simplices_[k];
    const auto& faces = simplices_[k - 1];
    std::map<std::vector<int>, int> face_index;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) face_index[faces[i]] = i;

    std::vector<SparseMatrix::Entry> entries;
    for (int j = 0; j < static_cast<int>(cells.size()); ++j) {
        const auto& cell = cells[j];
        const int col_sign = orientation(k, j);
        for (int m = 0; m <= k; ++m) {
            std::vector<int> face;
            face.reserve(k);
            for (int i = 0; i <= k; ++i) {
                if (i != m) face.push_back(cell[i]);
            }
            auto it = face_index.find(face);
            if (it == face_index.end()) {
                throw ValidationError("complex is not closed: " + simplex_label(cell) +
                                      " is missing face " + simplex_label(face));
            }
            const int row_sign = orientation(k - 1, it->second);
            const int parity = (m % 2 == 0) ? 1 : -1;
            entries.push_back({it->second, j, Rational(parity * col_sign * row_sign)});
        }
    }
    return SparseMatrix(static_cast<int>(faces.size()), static_cast<int>(cells.size()),
                        std::move(entries));
}

ChainComplexData SimplicialComplex::compile() const {
    const int d = dimension();
    std::vector<int> sizes;
    std::vector<std::vector<std::string>> labels;
    for (int k = 0; k <= d; ++k) {
        sizes.push_back(count(k));
        std::vector<std::string> level;
        level.reserve(count(k));
        for (const auto& s : simplices_[k]) level.push_back(simplex_label(s));
        labels.push_back(std::move(level));
    }
    std::vector<SparseMatrix> boundaries;
    for (int k = 1; k <= d; ++k) boundaries.push_back(boundary_matrix(k));
    return make_chain_complex(d, std::move(sizes), std::move(boundaries), std::move(labels));
}

std::string SimplicialComplex::simplex_label(const std::vector<int>& simplex) {
    std::string out = "[";
    for (size_t i = 0; i < simplex.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(simplex[i]);
    }
    out += "]";
    return out;
}

}  // namespace sflow
