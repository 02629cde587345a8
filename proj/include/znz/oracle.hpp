#pragma once

#include <cstdint>
#include <optional>

#include "znz/group.hpp"

namespace znz {

/// A generated conjugacy instance.  When planted_conjugator = a is
/// present, conjugate(group, a, u) = v by construction.
struct InstanceBundle {
    AbcGroup group;
    GroupElement u, v;
    std::optional<GroupElement> planted_conjugator;
    std::uint64_t seed;
};

/// Brute-force conjugator search over a = b t^e with ||b||_inf <=
/// coord_bound and |e| <= exp_bound, enumerated by increasing |e|
/// (nonnegative first), then by increasing ||b||_inf shell, then
/// lexicographically within each shell.  Absence is NOT a proof of
/// non-conjugacy; only a found conjugator is meaningful.
std::optional<GroupElement> brute_conjugacy(const AbcGroup& g, const GroupElement& u,
                                            const GroupElement& v, std::int64_t coord_bound,
                                            std::int64_t exp_bound);

/// Smallest-|e| solution of A^e x = y within |e| <= exp_bound, ties
/// broken toward the nonnegative.
std::optional<Int> brute_orbit(const IntMatrix& a, const IntVector& x, const IntVector& y,
                               std::int64_t exp_bound);

/// F(1) = F(2) = 1, F(n) = F(n-1) + F(n-2).
Int fibonacci(long n);

/// u random, a random, v = a·u·a^{-1}; deterministic per seed.
InstanceBundle random_conjugate_pair(const AbcGroup& g, std::uint64_t seed,
                                     std::int64_t coord_bound, std::int64_t exp_bound);

/// Product of `ops` random elementary row operations (transvections,
/// swaps, sign flips) applied to the identity; |det| = 1 by
/// construction.
IntMatrix random_unimodular(std::size_t n, long ops, std::uint64_t seed);

}  // namespace znz
