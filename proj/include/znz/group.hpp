#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "znz/matrix.hpp"
#include "znz/order.hpp"

namespace znz {

/// Normal form w·t^k of a group element: w is the free-abelian part
/// (coordinates are exponents of g_1..g_n), k the t-exponent.  The
/// normal form of an element is unique, so equality is componentwise.
struct GroupElement {
    IntVector w;
    Int k;

    bool operator==(const GroupElement& o) const { return w == o.w && k == o.k; }
};

/// One letter of a free word: generator 0 stands for t, 1..n for g_i.
struct Letter {
    int generator;
    Int exponent;

    static constexpr int kT = 0;
    static Letter t(Int e) { return Letter{kT, std::move(e)}; }
    static Letter g(int i, Int e) { return Letter{i, std::move(e)}; }
};

struct GroupWord {
    std::vector<Letter> letters;
};

/// The group Z^n x|_phi Z with phi in GL_n(Z): generators g_1..g_n
/// (standard basis of Z^n) and t acting by t g t^{-1} = phi(g).
class AbcGroup {
public:
    /// Validates |det phi| = 1 and precomputes phi^{-1}.
    AbcGroup(std::size_t n, IntMatrix phi);

    std::size_t n() const { return n_; }
    const IntMatrix& phi() const { return phi_; }
    const IntMatrix& phi_inv() const { return phi_inv_; }

    GroupElement identity() const { return GroupElement{IntVector(n_), Int(0)}; }

    /// phi^e(w) for any sign of e; negative powers go through phi_inv.
    IntVector phi_power(const Int& e, const IntVector& w) const;

    /// Order of phi, computed once on first use (race-safe fill).
    const OrderResult& order() const;

private:
    struct OrderCell {
        std::once_flag flag;
        OrderResult value;
    };

    std::size_t n_;
    IntMatrix phi_, phi_inv_;
    std::shared_ptr<OrderCell> order_cell_;  // shared across copies of the group
};

AbcGroup make_group(std::size_t n, IntMatrix phi);

GroupElement multiply(const AbcGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const AbcGroup& g, const GroupElement& a);

/// a·u·a^{-1}, computed directly as (b + phi^e(w) - phi^s(b))·t^s for
/// a = b t^e, u = w t^s.
GroupElement conjugate(const AbcGroup& g, const GroupElement& a, const GroupElement& u);

GroupElement power(const AbcGroup& g, const GroupElement& a, const Int& m);

/// Unique normal form of a free word, folding the product rule left
/// to right.
GroupElement collect(const AbcGroup& g, const GroupWord& word);

/// |w t^k| = |w|_1 + |k|.
Int length(const AbcGroup& g, const GroupElement& a);

/// Uniform coordinates in [-coord_bound, coord_bound] and exponent in
/// [-exp_bound, exp_bound]; deterministic per seed.
GroupElement random_element(const AbcGroup& g, std::int64_t coord_bound, std::int64_t exp_bound,
                            std::uint64_t seed);

}  // namespace znz
