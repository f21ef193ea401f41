#include "quadindex/dedekind.hpp"

namespace quadindex::dedekind {

IntPoly m_polynomial(const IntPoly& f, const BigInt& p, const ModFactorization& fact) {
    if (!f.is_monic()) throw invalid_argument("m_polynomial: polynomial must be monic");
    IntPoly lifted = IntPoly::constant(1);
    for (const auto& [g, e] : fact.factors) {
        IntPoly gl = g.lift();
        for (unsigned i = 0; i < e; ++i) lifted = lifted * gl;
    }
    IntPoly diff = f - lifted;
    return diff.exact_div_scalar(p);  // divisibility is the content of the construction
}

bool divides_from_parts(const ModFactorization& fact, const ModPoly& m_bar) {
    for (const auto& [g, e] : fact.factors)
        if (e >= 2 && fppoly::divides(g, m_bar)) return true;
    return false;
}

DedekindCertificate index_divides(const IntPoly& f, const BigInt& p, std::uint64_t seed,
                                  const std::optional<BigInt>& known_disc) {
    if (!f.is_monic()) throw invalid_argument("index_divides: polynomial must be monic");
    DedekindCertificate cert;
    cert.p = p;
    cert.factorization.p = p;
    cert.m_bar = ModPoly(p);

    if (known_disc && *known_disc != 0) {
        BigInt p2 = p * p;
        if (!mpz_divisible_p(known_disc->get_mpz_t(), p2.get_mpz_t())) {
            // index^2 divides disc, so v_p(disc) <= 1 forces v_p(index) = 0
            cert.divides = false;
            cert.via_disc_shortcut = true;
            return cert;
        }
    }

    ModPoly fbar = fppoly::reduce(f, p);
    cert.factorization = fppoly::factorize(fbar, arith::derive_seed(seed, p));
    cert.m_poly = m_polynomial(f, p, cert.factorization);
    cert.m_bar = ModPoly(p, cert.m_poly.coeffs());

    for (const auto& [g, e] : cert.factorization.factors) {
        if (e < 2) continue;
        ModPoly r = fppoly::rem(cert.m_bar, g);
        cert.repeated.push_back({g, e, r.is_zero(), r});
        if (r.is_zero()) cert.divides = true;
    }
    return cert;
}

std::optional<SplittingType> splitting_of(const DedekindCertificate& cert) {
    if (cert.divides || cert.via_disc_shortcut) return std::nullopt;
    SplittingType st;
    unsigned long total = 0;
    for (const auto& [g, e] : cert.factorization.factors) {
        st.parts.emplace_back(static_cast<unsigned>(g.degree()), e);
        total += static_cast<unsigned long>(g.degree()) * e;
    }
    BigInt assembled_deg = cert.factorization.reassemble().degree();
    internal_check(BigInt(total) == assembled_deg, "splitting_type: degree sum mismatch");
    return st;
}

std::optional<SplittingType> splitting_type(const IntPoly& f, const BigInt& p,
                                            std::uint64_t seed) {
    DedekindCertificate cert = index_divides(f, p, seed);
    auto st = splitting_of(cert);
    if (st)
        internal_check(
            [&] {
                unsigned long s = 0;
                for (auto& [d, e] : st->parts) s += static_cast<unsigned long>(d) * e;
                return s == static_cast<unsigned long>(f.degree());
            }(),
            "splitting_type: parts do not sum to deg f");
    return st;
}

}  // namespace quadindex::dedekind
