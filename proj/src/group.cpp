#include "znz/group.hpp"

#include "znz/rng.hpp"

namespace znz {

AbcGroup::AbcGroup(std::size_t n, IntMatrix phi) : n_(n), phi_(std::move(phi)) {
    if (n == 0) throw UsageError("group dimension must be positive");
    if (phi_.rows() != n || phi_.cols() != n) {
        throw UsageError("phi must be n x n");
    }
    Int det = determinant(phi_);
    if (det != 1 && det != -1) {
        throw DomainError("phi is not an automorphism of Z^n: determinant is " + to_string(det));
    }
    phi_inv_ = inverse_unimodular(phi_);
    order_cell_ = std::make_shared<OrderCell>();
}

AbcGroup make_group(std::size_t n, IntMatrix phi) { return AbcGroup(n, std::move(phi)); }

IntVector AbcGroup::phi_power(const Int& e, const IntVector& w) const {
    if (w.size() != n_) throw UsageError("phi_power dimension mismatch");
    if (e == 0 || w.is_zero()) return w;  // never form phi^e just to move the origin
    const IntMatrix& base = (e > 0) ? phi_ : phi_inv_;
    Int steps = abs(e);
    // for small exponents repeated application beats forming phi^e
    if (steps <= 8) {
        IntVector v = w;
        for (Int i = 0; i < steps; ++i) v = base.apply(v);
        return v;
    }
    return mat_pow(base, steps).apply(w);
}

const OrderResult& AbcGroup::order() const {
    std::call_once(order_cell_->flag, [this] { order_cell_->value = matrix_order(phi_); });
    return order_cell_->value;
}

GroupElement multiply(const AbcGroup& g, const GroupElement& a, const GroupElement& b) {
    if (a.w.size() != g.n() || b.w.size() != g.n()) {
        throw UsageError("element dimension does not match the group");
    }
    // w t^k · w' t^k' = w + phi^k(w') t^{k+k'}
    return GroupElement{a.w + g.phi_power(a.k, b.w), a.k + b.k};
}

GroupElement inverse(const AbcGroup& g, const GroupElement& a) {
    if (a.w.size() != g.n()) throw UsageError("element dimension does not match the group");
    return GroupElement{-g.phi_power(-a.k, a.w), -a.k};
}

GroupElement conjugate(const AbcGroup& g, const GroupElement& a, const GroupElement& u) {
    if (a.w.size() != g.n() || u.w.size() != g.n()) {
        throw UsageError("element dimension does not match the group");
    }
    IntVector moved = g.phi_power(a.k, u.w);          // phi^e(w)
    IntVector twisted = g.phi_power(u.k, a.w);        // phi^s(b)
    return GroupElement{a.w + moved - twisted, u.k};
}

GroupElement power(const AbcGroup& g, const GroupElement& a, const Int& m) {
    GroupElement base = (m < 0) ? inverse(g, a) : a;
    Int e = abs(m);
    GroupElement acc = g.identity();
    if (e == 0) return acc;
    const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        acc = multiply(g, acc, acc);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = multiply(g, acc, base);
    }
    return acc;
}

GroupElement collect(const AbcGroup& g, const GroupWord& word) {
    GroupElement acc = g.identity();
    for (const Letter& l : word.letters) {
        if (l.generator == Letter::kT) {
            acc.k += l.exponent;
        } else if (l.generator >= 1 && static_cast<std::size_t>(l.generator) <= g.n()) {
            IntVector v = IntVector::unit(g.n(), static_cast<std::size_t>(l.generator - 1));
            acc.w = acc.w + g.phi_power(acc.k, v * l.exponent);
        } else {
            throw UsageError("generator index " + std::to_string(l.generator) +
                             " out of range for dimension " + std::to_string(g.n()));
        }
    }
    return acc;
}

Int length(const AbcGroup& g, const GroupElement& a) {
    if (a.w.size() != g.n()) throw UsageError("element dimension does not match the group");
    return a.w.l1_norm() + abs(a.k);
}

GroupElement random_element(const AbcGroup& g, std::int64_t coord_bound, std::int64_t exp_bound,
                            std::uint64_t seed) {
    if (coord_bound < 0 || exp_bound < 0) throw UsageError("random_element bounds must be nonnegative");
    Rng rng(seed);
    IntVector w(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) w[i] = rng.uniform(-coord_bound, coord_bound);
    return GroupElement{std::move(w), Int(rng.uniform(-exp_bound, exp_bound))};
}

}  // namespace znz
