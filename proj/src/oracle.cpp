#include "znz/oracle.hpp"

#include "znz/rng.hpp"

namespace znz {

namespace {

// Lexicographic walk over the box [-r, r]^n restricted to the shell
// ||b||_inf = r.  Returns false when the box is exhausted.
bool next_in_box(std::vector<std::int64_t>& b, std::int64_t r) {
    for (std::size_t i = b.size(); i-- > 0;) {
        if (b[i] < r) {
            ++b[i];
            for (std::size_t j = i + 1; j < b.size(); ++j) b[j] = -r;
            return true;
        }
    }
    return false;
}

bool on_shell(const std::vector<std::int64_t>& b, std::int64_t r) {
    if (r == 0) return true;
    for (std::int64_t x : b) {
        if (x == r || x == -r) return true;
    }
    return false;
}

}  // namespace

std::optional<GroupElement> brute_conjugacy(const AbcGroup& g, const GroupElement& u,
                                            const GroupElement& v, std::int64_t coord_bound,
                                            std::int64_t exp_bound) {
    if (coord_bound < 0 || exp_bound < 0) throw UsageError("brute_conjugacy bounds must be nonnegative");
    const std::size_t n = g.n();
    auto try_exponent = [&](std::int64_t e) -> std::optional<GroupElement> {
        for (std::int64_t r = 0; r <= coord_bound; ++r) {
            std::vector<std::int64_t> b(n, -r);
            do {
                if (!on_shell(b, r)) continue;
                IntVector bv(n);
                for (std::size_t i = 0; i < n; ++i) bv[i] = b[i];
                GroupElement a{std::move(bv), Int(e)};
                if (conjugate(g, a, u) == v) return a;
            } while (next_in_box(b, r));
        }
        return std::nullopt;
    };
    for (std::int64_t e = 0; e <= exp_bound; ++e) {
        if (auto found = try_exponent(e)) return found;
        if (e > 0) {
            if (auto found = try_exponent(-e)) return found;
        }
    }
    return std::nullopt;
}

std::optional<Int> brute_orbit(const IntMatrix& a, const IntVector& x, const IntVector& y,
                               std::int64_t exp_bound) {
    Int det = determinant(a);
    if (det != 1 && det != -1) {
        throw DomainError("brute_orbit requires a unimodular matrix, determinant is " + to_string(det));
    }
    if (exp_bound < 0) throw UsageError("brute_orbit bound must be nonnegative");
    IntMatrix a_inv = inverse_unimodular(a);
    if (x == y) return Int(0);
    IntVector fwd = x, bwd = x;
    for (std::int64_t e = 1; e <= exp_bound; ++e) {
        fwd = a.apply(fwd);
        if (fwd == y) return Int(e);
        bwd = a_inv.apply(bwd);
        if (bwd == y) return Int(-e);
    }
    return std::nullopt;
}

Int fibonacci(long n) {
    if (n < 1) throw UsageError("fibonacci index must be >= 1");
    Int a = 1, b = 1;  // F(1), F(2)
    for (long i = 3; i <= n; ++i) {
        Int c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return n == 1 ? a : b;
}

InstanceBundle random_conjugate_pair(const AbcGroup& g, std::uint64_t seed,
                                     std::int64_t coord_bound, std::int64_t exp_bound) {
    GroupElement u = random_element(g, coord_bound, exp_bound, Rng::mix(seed, 0x75));
    GroupElement a = random_element(g, coord_bound, exp_bound, Rng::mix(seed, 0xA0));
    GroupElement v = conjugate(g, a, u);
    return InstanceBundle{g, std::move(u), std::move(v), std::move(a), seed};
}

IntMatrix random_unimodular(std::size_t n, long ops, std::uint64_t seed) {
    if (n < 1) throw UsageError("dimension must be positive");
    if (ops < 0) throw UsageError("operation count must be nonnegative");
    Rng rng(seed);
    IntMatrix m = IntMatrix::identity(n);
    auto pick_row = [&] { return static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1)); };
    auto pick_other = [&](std::size_t i) {
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
        return j >= i ? j + 1 : j;
    };
    for (long t = 0; t < ops; ++t) {
        const int kind = n > 1 ? static_cast<int>(rng.uniform(0, 2)) : 1;
        if (kind == 0) {
            // transvection: row_i += c * row_j
            std::size_t i = pick_row(), j = pick_other(i);
            std::int64_t c = rng.uniform(1, 2) * (rng.coin() ? 1 : -1);
            for (std::size_t col = 0; col < n; ++col) m(i, col) += Int(c) * m(j, col);
        } else if (kind == 1) {
            std::size_t i = pick_row();
            for (std::size_t col = 0; col < n; ++col) m(i, col) = -m(i, col);
        } else {
            std::size_t i = pick_row(), j = pick_other(i);
            for (std::size_t col = 0; col < n; ++col) swap(m(i, col), m(j, col));
        }
    }
    return m;
}

}  // namespace znz
