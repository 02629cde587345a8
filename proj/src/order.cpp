#include "znz/order.hpp"

#include "znz/minpoly.hpp"
#include "znz/polynomial.hpp"

namespace znz {

OrderResult matrix_order(const IntMatrix& phi) {
    Int det = determinant(phi);
    if (det != 1 && det != -1) {
        throw DomainError("matrix_order requires a unimodular matrix, determinant is " +
                          to_string(det));
    }
    IntPolynomial m = minimal_polynomial(phi);
    if (m.degree() < 1) return OrderResult::finite_order(1);  // 0x0 matrix
    CyclotomicSplit split = cyclotomic_cofactor(m);
    if (!split.squarefree_cyclotomic()) return OrderResult::infinite();
    Int d = 1;
    for (const auto& f : split.factors) {
        mpz_lcm_ui(d.get_mpz_t(), d.get_mpz_t(), f.index);
    }
    if (!mat_pow(phi, d).is_identity()) {
        throw std::logic_error("finite-order certificate failed the power check");
    }
    return OrderResult::finite_order(std::move(d));
}

}  // namespace znz
