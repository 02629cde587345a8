#pragma once

#include <optional>

#include "znz/matrix.hpp"

namespace znz {

/// Multiplicative order of a unimodular matrix: Finite(d) with d
/// minimal, or Infinite.
struct OrderResult {
    std::optional<Int> finite;

    static OrderResult infinite() { return OrderResult{std::nullopt}; }
    static OrderResult finite_order(Int d) { return OrderResult{std::move(d)}; }

    bool is_finite() const { return finite.has_value(); }
    const Int& order() const {
        if (!finite) throw UsageError("order() on an infinite-order result");
        return *finite;
    }
};

/// Decides finiteness through the minimal polynomial: the matrix has
/// finite order exactly when that polynomial is a squarefree product
/// of cyclotomics, and then the order is the lcm of their indices.
/// phi^s for large s is never formed.
OrderResult matrix_order(const IntMatrix& phi);

}  // namespace znz
