#pragma once

#include <optional>
#include <string>
#include <vector>

#include "znz/deadline.hpp"
#include "znz/matrix.hpp"
#include "znz/polynomial.hpp"

namespace znz {

/// Answer to the orbit problem: some e in Z with A^e x = y, or proof
/// that none exists.
struct OrbitOutcome {
    std::optional<Int> exponent;

    bool found() const { return exponent.has_value(); }
    static OrbitOutcome none() { return OrbitOutcome{std::nullopt}; }
    static OrbitOutcome at(Int e) { return OrbitOutcome{std::move(e)}; }
};

/// Diagnostic record of the decision path, filled when tracing is on.
struct OrbitCertificateTrace {
    long krylov_dim = -1;
    std::optional<RatPolynomial> residue_poly;  // q with y = q(A)x
    std::string case_tag;  // zero-vector | fast-path | not-in-span | finite-order | magnitude | derivative
    std::vector<Int> candidates;  // exponents examined by the numeric stage
};

struct OrbitOptions {
    long precision = 256;                     // starting bits for root evaluation
    OrbitCertificateTrace* trace = nullptr;   // optional diagnostics sink
    const Deadline* deadline = nullptr;       // optional time budget
};

/// Decides whether A^e x = y for some e in Z (either sign) and returns
/// such an e.  Requires |det A| = 1.  The returned exponent is the
/// valid candidate of smallest absolute value, ties broken toward the
/// nonnegative.  Numerics only propose candidates; every returned
/// exponent is verified exactly before it leaves this function.
OrbitOutcome orbit(const IntMatrix& a, const IntVector& x, const IntVector& y,
                   const OrbitOptions& opts = {});

/// The unique q with deg q < dim(Krylov space of x) and y = q(A)x, or
/// nullopt when y lies outside the Krylov span (an exact rank
/// certificate of non-membership).
std::optional<RatPolynomial> krylov_express(const IntMatrix& a, const IntVector& x,
                                            const IntVector& y);

/// Finite candidate list guaranteed to contain every e with
/// z^e = q mod m, for monic m with m(0) != 0 that is not a squarefree
/// product of cyclotomics.  Candidates come from the magnitude
/// equation at a root off the unit circle, or from the derivative
/// equation at a repeated cyclotomic root; an exact gcd check disposes
/// of the q(root) = 0 obstruction without floating point.
std::vector<Int> candidate_exponents(const IntPolynomial& m, const RatPolynomial& q,
                                     long precision);

/// Exact check A^e x = y.
bool verify_exponent(const IntMatrix& a, const IntVector& x, const IntVector& y, const Int& e);

}  // namespace znz
