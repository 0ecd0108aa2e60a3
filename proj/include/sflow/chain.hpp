#pragma once

#include <vector>

#include "sflow/rational.hpp"

namespace sflow {

/// Formal rational combination of the k-simplices of a complex, stored as a
/// dense coefficient vector in the complex's basis order.
struct Chain {
    int dimension = 0;
    std::vector<Rational> coefficients;

    Chain() = default;
    Chain(int dim, std::vector<Rational> coeffs)
        : dimension(dim), coefficients(std::move(coeffs)) {}
    static Chain zero(int dim, int size) {
        return Chain(dim, std::vector<Rational>(size, Rational(0)));
    }

    bool is_zero() const;
    std::vector<int> support() const;
    bool operator==(const Chain& other) const = default;
};

/// Linear functional on k-chains; same storage, dual role.
struct Cochain {
    int dimension = 0;
    std::vector<Rational> coefficients;

    Cochain() = default;
    Cochain(int dim, std::vector<Rational> coeffs)
        : dimension(dim), coefficients(std::move(coeffs)) {}
    static Cochain zero(int dim, int size) {
        return Cochain(dim, std::vector<Rational>(size, Rational(0)));
    }

    bool is_zero() const;
    std::vector<int> support() const;
    bool operator==(const Cochain& other) const = default;
};

Chain add(const Chain& a, const Chain& b);
Chain scale(const Chain& a, const Rational& factor);

/// Exact dot product; requires matching dimension and length.
Rational inner_product(const Chain& a, const Chain& b);
Rational inner_product(const Cochain& a, const Cochain& b);
Rational inner_product(const Chain& a, const Cochain& b);
Rational inner_product(const Cochain& a, const Chain& b);

}  // namespace sflow
