#include "znz/conjugacy.hpp"

#include "znz/orbit.hpp"

namespace znz {

TwistedSolver::TwistedSolver(const IntMatrix& psi) : n_(psi.rows()) {
    if (!psi.is_square()) throw UsageError("TwistedSolver requires a square matrix");
    IntMatrix m = IntMatrix::identity(n_) - psi;
    det_ = determinant(m);
    if (det_ != 0) {
        // adjugate column j solves m·z = det·e_j over Z
        adjugate_ = IntMatrix(n_, n_);
        for (std::size_t j = 0; j < n_; ++j) {
            auto col = solve_rational(m, IntVector::unit(n_, j));
            for (std::size_t i = 0; i < n_; ++i) {
                Rat scaled = (*col)[i] * Rat(det_);
                if (!is_integral(scaled)) throw std::logic_error("adjugate entry not integral");
                adjugate_(i, j) = scaled.get_num();
            }
        }
    } else {
        snf_ = smith_normal_form(m);
    }
}

std::optional<IntVector> TwistedSolver::solve(const IntVector& rhs) const {
    if (rhs.size() != n_) throw UsageError("TwistedSolver dimension mismatch");
    if (det_ != 0) {
        IntVector num = adjugate_.apply(rhs);
        IntVector b(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (!mpz_divisible_p(num[i].get_mpz_t(), det_.get_mpz_t())) return std::nullopt;
            b[i] = num[i] / det_;
        }
        return b;
    }
    return solve_integer(*snf_, rhs);
}

std::optional<IntVector> solve_twisted_abelian(const IntMatrix& psi, const IntVector& w,
                                               const IntVector& x) {
    if (!psi.is_square()) throw UsageError("solve_twisted_abelian requires a square matrix");
    if (w.size() != psi.rows() || x.size() != psi.rows()) {
        throw UsageError("solve_twisted_abelian dimension mismatch");
    }
    // x = b + w - psi(b)  <=>  (Id - psi)·b = x - w
    return TwistedSolver(psi).solve(x - w);
}

bool is_power_identity(const AbcGroup& g, const Int& s) {
    if (s == 0) return true;
    const OrderResult& ord = g.order();
    if (!ord.is_finite()) return false;
    return mpz_divisible_p(s.get_mpz_t(), ord.order().get_mpz_t()) != 0;
}

namespace {

GroupElement checked_witness(const AbcGroup& g, GroupElement c, const GroupElement& u,
                             const GroupElement& v) {
    if (!(conjugate(g, c, u) == v)) {
        throw std::logic_error("conjugacy witness failed exact verification");
    }
    return c;
}

}  // namespace

ConjugacyOutcome conjugacy(const AbcGroup& g, const GroupElement& u, const GroupElement& v,
                           const Deadline* deadline) {
    if (u.w.size() != g.n() || v.w.size() != g.n()) {
        throw UsageError("element dimension does not match the group");
    }
    if (u.k != v.k) return ConjugacyOutcome::not_conjugate();
    const Int& s = u.k;

    if (is_power_identity(g, s)) {
        if (s == 0) {
            // conjugation by b t^e sends w t^0 to phi^e(w) t^0: the
            // orbit problem decides everything
            OrbitOptions opts;
            opts.deadline = deadline;
            OrbitOutcome res = orbit(g.phi(), u.w, v.w, opts);
            if (!res.found()) return ConjugacyOutcome::not_conjugate();
            GroupElement c{IntVector(g.n()), *res.exponent};
            return ConjugacyOutcome::with_witness(checked_witness(g, std::move(c), u, v));
        }
        // phi has finite order d dividing s: phi^e ranges over a cycle
        // of length d, so enumeration replaces the general orbit call
        const Int& d = g.order().order();
        IntVector w = u.w;
        for (Int e = 0; e < d; ++e) {
            if (deadline) deadline->check("conjugacy identity-power scan, e = " + to_string(e));
            if (w == v.w) {
                GroupElement c{IntVector(g.n()), e};
                return ConjugacyOutcome::with_witness(checked_witness(g, std::move(c), u, v));
            }
            w = g.phi().apply(w);
        }
        return ConjugacyOutcome::not_conjugate();
    }

    // general case: factor Id - phi^s once, then walk the exponent
    // window with one application of phi per step
    IntMatrix psi = mat_pow(g.phi(), s);
    TwistedSolver solver(psi);
    const Int window = abs(s);
    IntVector w = u.w;  // phi^e(w)
    for (Int e = 0; e < window; ++e) {
        if (deadline) deadline->check("conjugacy window scan, e = " + to_string(e) + " of " +
                                      to_string(window));
        if (auto b = solver.solve(v.w - w)) {
            GroupElement c{std::move(*b), e};
            return ConjugacyOutcome::with_witness(checked_witness(g, std::move(c), u, v));
        }
        w = g.phi().apply(w);
    }
    return ConjugacyOutcome::not_conjugate();
}

}  // namespace znz
