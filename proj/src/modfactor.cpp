#include "quadindex/modfactor.hpp"

#include <algorithm>
#include <map>

namespace quadindex::fppoly {

ModPoly ModFactorization::reassemble() const {
    ModPoly acc = ModPoly::constant(p, unit);
    for (const auto& [g, e] : factors)
        for (unsigned i = 0; i < e; ++i) acc = acc * g;
    return acc;
}

bool ModFactorization::squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& fe) { return fe.second == 1; });
}

namespace {

struct CanonicalCmp {
    bool operator()(const ModPoly& a, const ModPoly& b) const { return canonical_less(a, b); }
};

// f monic with f' == 0, i.e. f = g(x^p); over the prime field the p-th root
// has the same coefficients: g[i] = f[i*p].
ModPoly pth_root(const ModPoly& f) {
    const BigInt& p = f.modulus();
    internal_check(p.fits_ulong_p(), "pth_root: modulus too large for a p-th power");
    unsigned long pi = p.get_ui();
    std::size_t deg = static_cast<std::size_t>(f.degree());
    internal_check(deg % pi == 0, "pth_root: degree not a multiple of p");
    std::vector<BigInt> g(deg / pi + 1, BigInt(0));
    for (std::size_t i = 0; i * pi <= deg; ++i) g[i] = f.coeff(i * pi);
    return ModPoly(p, std::move(g));
}

// f = prod g_m^m with each g_m squarefree, monic, pairwise coprime.
void squarefree_decompose(const ModPoly& f, unsigned mult,
                          std::map<ModPoly, unsigned, CanonicalCmp>& out) {
    if (f.degree() < 1) return;
    ModPoly df = f.derivative();
    if (df.is_zero()) {
        internal_check(f.modulus().fits_ulong_p(),
                       "squarefree_decompose: inseparable with huge modulus");
        squarefree_decompose(pth_root(f), mult * f.modulus().get_ui(), out);
        return;
    }
    ModPoly c = gcd(f, df);
    ModPoly w = divmod(f, c).first;
    unsigned i = 1;
    while (!w.is_one()) {
        ModPoly y = gcd(w, c);
        ModPoly z = divmod(w, y).first;
        if (z.degree() >= 1) {
            auto [it, fresh] = out.emplace(z, mult * i);
            internal_check(fresh, "squarefree_decompose: duplicate factor");
        }
        w = std::move(y);
        c = divmod(c, w).first;
        ++i;
    }
    if (c.degree() >= 1) squarefree_decompose(c, mult, out);
}

// f squarefree monic: split into (product of irreducibles of degree d, d).
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(ModPoly f) {
    const BigInt& p = f.modulus();
    std::vector<std::pair<ModPoly, unsigned>> out;
    ModPoly h = ModPoly::x(p);
    unsigned d = 0;
    while (f.degree() > 0 && 2 * static_cast<int>(d + 1) <= f.degree()) {
        ++d;
        h = pow_mod(h, p, f);  // h = x^(p^d) mod f
        ModPoly g = gcd(h - ModPoly::x(p), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divmod(f, g).first;
            h = rem(h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

ModPoly random_poly_below(const BigInt& p, int deg_bound, arith::Rng& rng) {
    std::vector<BigInt> c(static_cast<std::size_t>(deg_bound));
    for (auto& v : c) v = rng.below(p);
    return ModPoly(p, std::move(c));
}

// f = product of distinct monic irreducibles, all of degree d.
void equal_degree_split(const ModPoly& f, unsigned d, arith::Rng& rng,
                        std::vector<ModPoly>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    const BigInt& p = f.modulus();
    while (true) {
        ModPoly u = random_poly_below(p, f.degree(), rng);
        if (u.degree() < 1) continue;
        ModPoly g = gcd(u, f);
        if (g.degree() == 0) {
            if (p == 2) {
                // trace map over F_2: u + u^2 + ... + u^(2^(d-1))
                ModPoly t = u, sq = u;
                for (unsigned i = 1; i < d; ++i) {
                    sq = rem(sq * sq, f);
                    t = t + sq;
                }
                g = gcd(t, f);
            } else {
                BigInt e;
                mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), d);
                e = (e - 1) / 2;
                ModPoly w = pow_mod(u, e, f);
                g = gcd(w - ModPoly::constant(p, 1), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

ModFactorization factorize(const ModPoly& f, arith::Rng& rng) {
    if (f.is_zero()) throw invalid_argument("factorize: zero polynomial");
    ModFactorization out;
    out.p = f.modulus();
    out.unit = f.is_zero() ? BigInt(1) : f.leading();
    if (f.degree() < 1) return out;

    std::map<ModPoly, unsigned, CanonicalCmp> sqf;
    squarefree_decompose(f.monic(), 1, sqf);

    std::map<ModPoly, unsigned, CanonicalCmp> collected;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<ModPoly> irreducibles;
            equal_degree_split(block, d, rng, irreducibles);
            for (auto& g : irreducibles) {
                auto [it, fresh] = collected.emplace(std::move(g), mult);
                internal_check(fresh, "factorize: repeated irreducible across parts");
            }
        }
    }
    out.factors.assign(collected.begin(), collected.end());
    internal_check(out.reassemble() == f, "factorize: reassembly mismatch");
    return out;
}

ModFactorization factorize(const ModPoly& f, std::uint64_t seed) {
    arith::Rng rng(seed);
    return factorize(f, rng);
}

}  // namespace quadindex::fppoly
