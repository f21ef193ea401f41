#ifndef QUADINDEX_MODFACTOR_HPP
#define QUADINDEX_MODFACTOR_HPP

#include <cstdint>

#include "quadindex/modpoly.hpp"

namespace quadindex::fppoly {

/// Complete factorization over F_p: unit * prod(factors[i]^exp[i]) equals
/// the input; factors are monic irreducible, pairwise distinct, in
/// canonical order (degree, then coefficient-lexicographic).
struct ModFactorization {
    BigInt p;
    BigInt unit = 1;
    std::vector<std::pair<ModPoly, unsigned>> factors;

    ModPoly reassemble() const;
    bool squarefree() const;
};

/// Squarefree decomposition (with p-th power extraction), distinct-degree
/// splitting, then seeded Cantor-Zassenhaus equal-degree splitting (the
/// trace-map variant for p = 2). Deterministic for a fixed seed; the factor
/// multiset is independent of the seed. f must be nonzero.
ModFactorization factorize(const ModPoly& f, arith::Rng& rng);
ModFactorization factorize(const ModPoly& f, std::uint64_t seed);

}  // namespace quadindex::fppoly

#endif
