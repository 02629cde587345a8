#include "znz/orbit.hpp"

#include <algorithm>

#include "znz/bigfloat.hpp"
#include "znz/minpoly.hpp"

namespace znz {

namespace {

constexpr long kFastPathSteps = 64;
constexpr long kMaxPrecision = 4096;
constexpr long kCandidateWindow = 2;

void require_unimodular(const IntMatrix& a, const char* who) {
    Int det = determinant(a);
    if (det != 1 && det != -1) {
        throw DomainError(std::string(who) + " requires a unimodular matrix, determinant is " +
                          to_string(det));
    }
}

// smallest |e| first, nonnegative before negative on ties
void sort_candidates(std::vector<Int>& cands) {
    std::sort(cands.begin(), cands.end(), [](const Int& a, const Int& b) {
        Int aa = abs(a), ab = abs(b);
        if (aa != ab) return aa < ab;
        return a > b;
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
}

}  // namespace

bool verify_exponent(const IntMatrix& a, const IntVector& x, const IntVector& y, const Int& e) {
    require_unimodular(a, "verify_exponent");
    if (x.size() != a.rows() || y.size() != a.rows()) {
        throw UsageError("verify_exponent dimension mismatch");
    }
    return mat_pow(a, e).apply(x) == y;
}

std::optional<RatPolynomial> krylov_express(const IntMatrix& a, const IntVector& x,
                                            const IntVector& y) {
    if (!a.is_square()) throw UsageError("krylov_express requires a square matrix");
    if (x.size() != a.rows() || y.size() != a.rows()) {
        throw UsageError("krylov_express dimension mismatch");
    }
    if (x.is_zero()) throw DomainError("krylov_express is undefined for the zero vector");
    const long d = minimal_polynomial_rel(a, x).degree();
    IntMatrix k = krylov_matrix(a, x, static_cast<std::size_t>(d));
    auto sol = solve_rational(k, y);
    if (!sol) return std::nullopt;
    return RatPolynomial(std::move(*sol));
}

std::vector<Int> candidate_exponents(const IntPolynomial& m, const RatPolynomial& q,
                                     long precision) {
    if (precision <= 0) throw UsageError("precision must be positive");
    if (!m.is_monic() || m.degree() < 1) throw DomainError("modulus must be monic of degree >= 1");
    if (m.coeff(0) == 0) throw DomainError("modulus must have a nonzero constant term");
    CyclotomicSplit split = cyclotomic_cofactor(m);
    if (split.squarefree_cyclotomic()) {
        throw UsageError("squarefree cyclotomic modulus belongs to the finite-order enumeration");
    }
    if (q.is_zero()) return {};  // z^e is a unit mod m, never zero

    // exact obstruction: if q vanishes at any root of m, no exponent
    // can satisfy root^e = q(root) = 0
    IntPolynomial q_int = q.primitive_int();
    if (poly_gcd(RatPolynomial(m), RatPolynomial(q_int)).degree() >= 1) return {};

    const long cap = std::max(kMaxPrecision, precision);
    std::vector<Int> cands;

    if (split.remainder.degree() >= 1) {
        // magnitude equation at the largest root of the non-cyclotomic
        // part: |root| > 1 exists (Kronecker), and e = log|q| / log|root|
        IntPolynomial h = squarefree_radical(split.remainder);
        for (long prec = precision;; prec *= 2) {
            std::vector<BigComplex> roots = aberth_roots(h, prec);
            BigFloat best = roots[0].abs();
            std::size_t best_i = 0;
            for (std::size_t i = 1; i < roots.size(); ++i) {
                BigFloat aabs = roots[i].abs();
                if (aabs > best) {
                    best = aabs;
                    best_i = i;
                }
            }
            BigFloat one_plus = BigFloat::from(1.0, prec) + BigFloat::pow2(-24, prec);
            if (!(best > one_plus)) {
                if (prec >= cap) throw PrecisionError("no expanding root isolated at maximum precision");
                continue;
            }
            BigFloat qv = eval_at(q, roots[best_i], prec).abs();
            if (qv.is_zero()) {
                if (prec >= cap) throw PrecisionError("candidate magnitude vanished at maximum precision");
                continue;
            }
            BigFloat estar = qv.log() / best.log();
            BigFloat quarter = BigFloat::from(0.25, prec);
            if (estar.dist_to_int() > quarter && prec < cap) continue;
            Int center = estar.round_to_int();
            for (long w = -kCandidateWindow; w <= kCandidateWindow; ++w) cands.push_back(center + w);
            break;
        }
    } else {
        // all-cyclotomic with a repeated factor: derivative equation
        // e·root^{e-1} = q'(root) at a repeated root on the unit circle
        // pins |e| = |q'(root)|
        unsigned long k = 0;
        for (const auto& f : split.factors) {
            if (f.multiplicity >= 2) {
                k = f.index;
                break;
            }
        }
        if (k == 0) throw std::logic_error("non-squarefree split without a repeated factor");
        RatPolynomial dq = q.derivative();
        for (long prec = precision;; prec *= 2) {
            BigFloat angle = BigFloat::pi(prec) * BigFloat::from(2.0, prec) /
                             BigFloat::from(Int(static_cast<long>(k)), prec);
            BigComplex root{angle.cos(), angle.sin()};
            BigFloat mag = eval_at(dq, root, prec).abs();
            BigFloat quarter = BigFloat::from(0.25, prec);
            if (mag.dist_to_int() > quarter && prec < cap) continue;
            Int center = mag.round_to_int();
            for (long w = -kCandidateWindow; w <= kCandidateWindow; ++w) {
                cands.push_back(center + w);
                cands.push_back(-center + w);
            }
            break;
        }
    }
    sort_candidates(cands);
    return cands;
}

OrbitOutcome orbit(const IntMatrix& a, const IntVector& x, const IntVector& y,
                   const OrbitOptions& opts) {
    require_unimodular(a, "orbit");
    if (x.size() != a.rows() || y.size() != a.rows()) throw UsageError("orbit dimension mismatch");
    auto tag = [&](const std::string& t) {
        if (opts.trace) opts.trace->case_tag = t;
    };

    if (x.is_zero() || y.is_zero()) {
        tag("zero-vector");
        // A is invertible, so the orbit of a nonzero vector avoids zero
        return (x.is_zero() && y.is_zero()) ? OrbitOutcome::at(0) : OrbitOutcome::none();
    }

    // fast path: scan e = 0, 1, -1, 2, -2, ... with period detection;
    // complete whenever the orbit closes within the scan
    if (x == y) {
        tag("fast-path");
        return OrbitOutcome::at(0);
    }
    {
        IntMatrix a_inv = inverse_unimodular(a);
        IntVector fwd = x, bwd = x;
        for (long e = 1; e <= kFastPathSteps; ++e) {
            if (opts.deadline) opts.deadline->check("orbit fast path, step " + std::to_string(e));
            fwd = a.apply(fwd);
            if (fwd == y) {
                tag("fast-path");
                return OrbitOutcome::at(e);
            }
            if (fwd == x) {
                // orbit is periodic with period e and fully scanned
                tag("fast-path");
                return OrbitOutcome::none();
            }
            bwd = a_inv.apply(bwd);
            if (bwd == y) {
                tag("fast-path");
                return OrbitOutcome::at(-e);
            }
        }
    }

    IntPolynomial m = minimal_polynomial_rel(a, x);
    if (opts.trace) opts.trace->krylov_dim = m.degree();
    std::optional<RatPolynomial> q = krylov_express(a, x, y);
    if (opts.trace) opts.trace->residue_poly = q;
    if (!q) {
        tag("not-in-span");  // exact rank certificate: A^e x stays in the span
        return OrbitOutcome::none();
    }

    CyclotomicSplit split = cyclotomic_cofactor(m);
    if (split.squarefree_cyclotomic()) {
        // A restricted to the Krylov space has finite order N
        Int n_order = 1;
        for (const auto& f : split.factors) {
            mpz_lcm_ui(n_order.get_mpz_t(), n_order.get_mpz_t(), f.index);
        }
        tag("finite-order");
        std::optional<Int> first_hit;
        std::optional<Int> period;
        IntVector w = x;
        for (Int e = 1; e <= n_order && (!first_hit || !period); ++e) {
            if (opts.deadline) opts.deadline->check("orbit finite-order scan, step " + to_string(e));
            w = a.apply(w);
            if (!first_hit && w == y) first_hit = e;
            if (!period && w == x) period = e;
        }
        if (!period) throw std::logic_error("finite-order orbit did not close within its order");
        if (!first_hit) return OrbitOutcome::none();
        // solutions are first_hit mod period; pick the smallest |e|
        Int pos = *first_hit;
        Int neg = *first_hit - *period;
        Int best = abs(neg) < abs(pos) ? neg : pos;
        if (!verify_exponent(a, x, y, best)) {
            throw std::logic_error("finite-order exponent failed exact verification");
        }
        return OrbitOutcome::at(std::move(best));
    }

    tag(split.remainder.degree() >= 1 ? "magnitude" : "derivative");
    std::vector<Int> cands = candidate_exponents(m, *q, opts.precision);
    if (opts.trace) opts.trace->candidates = cands;
    for (const Int& e : cands) {
        if (opts.deadline) opts.deadline->check("orbit candidate verification, e = " + to_string(e));
        if (verify_exponent(a, x, y, e)) return OrbitOutcome::at(e);
    }
    return OrbitOutcome::none();
}

}  // namespace znz
