#ifndef QUADINDEX_DEDEKIND_HPP
#define QUADINDEX_DEDEKIND_HPP

#include <cstdint>
#include <optional>

#include "quadindex/modfactor.hpp"

namespace quadindex::dedekind {

using fppoly::ModFactorization;
using fppoly::ModPoly;
using zpoly::IntPoly;

/// M(x) = (f(x) - prod G_i(x)^e_i) / p, where the G_i are the canonical
/// lifts (coefficients in [0, p)) of the factorization of f mod p. The
/// difference is asserted to be coefficient-wise divisible by p.
IntPoly m_polynomial(const IntPoly& f, const BigInt& p, const ModFactorization& fact);

/// Evidence about one repeated factor of f mod p.
struct RepeatedFactorEvidence {
    ModPoly factor;
    unsigned exponent;
    bool divides_m;
    ModPoly remainder;  // M mod factor; nonzero exactly when !divides_m
};

/// Everything the criterion looked at, for audit. `divides` is the verdict
/// "p divides the index": true iff some factor with exponent >= 2 divides
/// M mod p.
struct DedekindCertificate {
    BigInt p;
    bool divides = false;
    bool via_disc_shortcut = false;  // p^2 does not divide the known disc
    ModFactorization factorization;
    IntPoly m_poly;
    ModPoly m_bar;
    std::vector<RepeatedFactorEvidence> repeated;
};

/// The index-divisibility test for monic f. When `known_disc` is given and
/// p^2 does not divide it, factorization is skipped (index^2 divides the
/// discriminant). The computation itself never requires irreducibility of
/// f over Q; number-field conclusions do.
DedekindCertificate index_divides(const IntPoly& f, const BigInt& p, std::uint64_t seed,
                                  const std::optional<BigInt>& known_disc = std::nullopt);

/// Verdict recomputation from parts (used by lift-independence tests):
/// applies the criterion to a given factorization and a given M mod p.
bool divides_from_parts(const ModFactorization& fact, const ModPoly& m_bar);

/// (residue degree, ramification exponent) pairs of the primes above p,
/// valid when p does not divide the index. Sum of deg*exp equals deg f.
struct SplittingType {
    std::vector<std::pair<unsigned, unsigned>> parts;
};

/// Splitting type of p, or nullopt (a refusal, not an error) when p divides
/// the index and the factorization of f mod p does not describe it.
std::optional<SplittingType> splitting_type(const IntPoly& f, const BigInt& p,
                                            std::uint64_t seed);
std::optional<SplittingType> splitting_of(const DedekindCertificate& cert);

}  // namespace quadindex::dedekind

#endif
