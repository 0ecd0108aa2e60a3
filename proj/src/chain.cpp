#include "sflow/chain.hpp"

#include "sflow/errors.hpp"

namespace sflow {

namespace {

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& c : v) {
        if (c != 0) return false;
    }
    return true;
}

std::vector<int> nonzero_indices(const std::vector<Rational>& v) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (v[i] != 0) out.push_back(i);
    }
    return out;
}

Rational dot(int dim_a, const std::vector<Rational>& a, int dim_b,
             const std::vector<Rational>& b) {
    if (dim_a != dim_b) throw ValidationError("inner product dimension mismatch");
    if (a.size() != b.size()) throw ValidationError("inner product length mismatch");
    Rational out(0);
    for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

}  // namespace

bool Chain::is_zero() const { return all_zero(coefficients); }
bool Cochain::is_zero() const { return all_zero(coefficients); }

std::vector<int> Chain::support() const { return nonzero_indices(coefficients); }
std::vector<int> Cochain::support() const { return nonzero_indices(coefficients); }

Chain add(const Chain& a, const Chain& b) {
    if (a.dimension != b.dimension || a.coefficients.size() != b.coefficients.size()) {
        throw ValidationError("chain addition shape mismatch");
    }
    Chain out = a;
    for (size_t i = 0; i < b.coefficients.size(); ++i) out.coefficients[i] += b.coefficients[i];
    return out;
}

Chain scale(const Chain& a, const Rational& factor) {
    Chain out = a;
    for (auto& c : out.coefficients) c *= factor;
    return out;
}

Rational inner_product(const Chain& a, const Chain& b) {
    return dot(a.dimension, a.coefficients, b.dimension, b.coefficients);
}
Rational inner_product(const Cochain& a, const Cochain& b) {
    return dot(a.dimension, a.coefficients, b.dimension, b.coefficients);
}
Rational inner_product(const Chain& a, const Cochain& b) {
    return dot(a.dimension, a.coefficients, b.dimension, b.coefficients);
}
Rational inner_product(const Cochain& a, const Chain& b) {
    return dot(a.dimension, a.coefficients, b.dimension, b.coefficients);
}

}  // namespace sflow
