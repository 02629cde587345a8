#pragma once

#include <optional>

#include "znz/deadline.hpp"
#include "znz/group.hpp"
#include "znz/smith.hpp"

namespace znz {

/// Result of the conjugacy decision: NotConjugate, or Conjugate with a
/// witness c satisfying c·u·c^{-1} = v exactly.
struct ConjugacyOutcome {
    std::optional<GroupElement> witness;

    bool conjugate() const { return witness.has_value(); }
    static ConjugacyOutcome not_conjugate() { return ConjugacyOutcome{std::nullopt}; }
    static ConjugacyOutcome with_witness(GroupElement c) { return ConjugacyOutcome{std::move(c)}; }
};

/// Solver for (Id - psi)·b = rhs over Z with the factorization of
/// Id - psi computed once.  When Id - psi is invertible over Q the
/// solve goes through the integer adjugate (the exact-inverse
/// shortcut); the Smith decomposition is the general route and the
/// reference implementation.  Both give the same b where both apply:
/// the invertible case has a unique solution.
class TwistedSolver {
public:
    explicit TwistedSolver(const IntMatrix& psi);

    std::optional<IntVector> solve(const IntVector& rhs) const;

    bool invertible_route() const { return det_ != 0; }

private:
    std::size_t n_;
    Int det_;                                 // det(Id - psi)
    IntMatrix adjugate_;                      // det * (Id - psi)^{-1}, invertible route
    std::optional<SmithDecomposition> snf_;   // general route
};

/// b with x = b + w - psi(b) when one exists.  The caller passes w
/// already transported, i.e. w plays the role of phi^e(w).
std::optional<IntVector> solve_twisted_abelian(const IntMatrix& psi, const IntVector& w,
                                               const IntVector& x);

/// True iff phi^s = Id, decided through the cached finite-order test
/// and a divisibility check; phi^s is never formed, so enormous |s|
/// costs nothing.
bool is_power_identity(const AbcGroup& g, const Int& s);

/// Conjugacy decision and search for u = w t^s, v = x t^r:
///   (1) s != r: not conjugate.
///   (2) phi^s = Id: reduce to the orbit problem (s = 0) or to direct
///       enumeration of e in {0..d-1} for finite order d (s != 0);
///       witness t^e.
///   (3) otherwise: for e in {0..|s|-1} solve
///       x - phi^e(w) = (Id - phi^s)·b over Z; first solvable e gives
///       witness b t^e.
/// Every returned witness is verified exactly before it is returned.
ConjugacyOutcome conjugacy(const AbcGroup& g, const GroupElement& u, const GroupElement& v,
                           const Deadline* deadline = nullptr);

}  // namespace znz
