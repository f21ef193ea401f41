#include "quadindex/arith.hpp"

#include <algorithm>
#include <map>

namespace quadindex::arith {

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
    if (modulus < 2) throw invalid_argument("mod_pow: modulus must be >= 2");
    if (exp < 0) throw invalid_argument("mod_pow: exponent must be nonnegative");
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m < 2) throw invalid_argument("mod_inverse: modulus must be >= 2");
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw invalid_argument("mod_inverse: argument not invertible");
    return r;
}

namespace {

// true when a witnesses compositeness of n; n - 1 = d * 2^s with d odd
bool mr_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned long s) {
    BigInt x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

const unsigned long kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

}  // namespace

bool is_prime(const BigInt& n, Rng* rng) {
    if (n < 0) throw invalid_argument("is_prime: input must be nonnegative");
    if (n < 2) return false;
    for (unsigned long q : kMrBases) {
        if (n == q) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
    }
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long a : kMrBases)
        if (mr_witness(n, BigInt(a), d, s)) return false;

    // 13 prime bases are deterministic below the Sorenson-Webster bound.
    static const BigInt kDeterministicBound("3317044064679887385961981");
    if (n < kDeterministicBound) return true;

    Rng fallback(0);
    Rng& r = rng ? *rng : fallback;
    for (int i = 0; i < 64; ++i) {
        BigInt a = 2 + r.below(n - 3);
        if (mr_witness(n, a, d, s)) return false;
    }
    return true;
}

unsigned long valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw invalid_argument("valuation: n must be nonzero");
    if (p < 2) throw invalid_argument("valuation: p must be >= 2");
    BigInt rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::optional<BigInt> sqrt_mod(const BigInt& a, const BigInt& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
        throw invalid_argument("sqrt_mod: modulus must be an odd prime");
    if (a < 0 || a >= p) throw invalid_argument("sqrt_mod: residue out of [0, p)");
    if (a == 0) return BigInt(0);
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;

    BigInt r;
    if (p % 4 == 3) {
        r = mod_pow(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks: p - 1 = q * 2^s, q odd
        BigInt q = p - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
        BigInt z = 2;
        while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
        BigInt c = mod_pow(z, q, p);
        BigInt t = mod_pow(a, q, p);
        r = mod_pow(a, (q + 1) / 2, p);
        unsigned long m = s;
        while (t != 1) {
            BigInt t2 = t;
            unsigned long i = 0;
            while (t2 != 1) {
                t2 = (t2 * t2) % p;
                ++i;
                internal_check(i < m, "sqrt_mod: order overflow");
            }
            BigInt b = c;
            for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
            m = i;
            c = (b * b) % p;
            t = (t * c) % p;
            r = (r * b) % p;
        }
    }
    internal_check((r * r) % p == a, "sqrt_mod: result check failed");
    BigInt other = p - r;
    return std::min(r, other);
}

BigInt PrimeFactorization::reassemble() const {
    BigInt m = cofactor;
    for (const auto& [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) m *= p;
    return m;
}

namespace {

// Pollard-Brent cycle; returns a nontrivial factor of odd composite n, or 0
// when the step budget runs out. `steps` is decremented as it is consumed.
BigInt rho_brent(const BigInt& n, Rng& rng, unsigned long& steps) {
    while (steps > 0) {
        BigInt y = 1 + rng.below(n - 1);
        BigInt c = 1 + rng.below(n - 1);
        BigInt x, q = 1, g = 1, ys = y;
        const unsigned long batch = 128;
        unsigned long r = 1;
        while (g == 1 && steps > 0) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1 && steps > 0; k += batch) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                steps = steps > lim ? steps - lim : 0;
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            // batch overshot; replay one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n && g > 1) return g;
        // cycle degenerated; retry with fresh parameters
    }
    return 0;
}

// If n = r^e for some e >= 2, return (r, e); else nullopt.
std::optional<std::pair<BigInt, unsigned>> perfect_power(const BigInt& n) {
    if (n < 4 || mpz_perfect_power_p(n.get_mpz_t()) == 0) return std::nullopt;
    unsigned long maxe = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long e = 2; e <= maxe; ++e) {
        BigInt r;
        if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), e) != 0)
            return std::make_pair(r, static_cast<unsigned>(e));
    }
    return std::nullopt;
}

}  // namespace

PrimeFactorization factor(const BigInt& n, const FactorBudget& budget) {
    if (n == 0) throw invalid_argument("factor: n must be nonzero");
    BigInt m = abs(n);
    std::map<BigInt, unsigned> found;
    PrimeFactorization out;
    if (m == 1) return out;

    auto strip = [&](unsigned long d) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            found[BigInt(d)] += 1;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        }
    };
    strip(2);
    strip(3);
    for (unsigned long d = 5; d <= budget.trial_bound && m > 1; d += 6) {
        if (BigInt(d) * d > m) break;
        strip(d);
        strip(d + 2);
    }

    Rng rng(budget.rho_seed);
    unsigned long steps = budget.rho_iterations;
    std::vector<std::pair<BigInt, unsigned>> pending;
    if (m > 1) pending.emplace_back(m, 1u);
    while (!pending.empty()) {
        auto [t, mult] = pending.back();
        pending.pop_back();
        if (t == 1) continue;
        if (is_prime(t, &rng)) {
            found[t] += mult;
            continue;
        }
        if (auto pp = perfect_power(t)) {
            pending.emplace_back(pp->first, mult * pp->second);
            continue;
        }
        BigInt g = steps > 0 ? rho_brent(t, rng, steps) : BigInt(0);
        if (g == 0) {
            for (unsigned i = 0; i < mult; ++i) out.cofactor *= t;
            continue;
        }
        pending.emplace_back(g, mult);
        pending.emplace_back(t / g, mult);
    }
    out.factors.assign(found.begin(), found.end());
    internal_check(out.reassemble() == abs(n), "factor: reassembly mismatch");
    return out;
}

std::uint64_t derive_seed(std::uint64_t seed, const BigInt& label) {
    std::uint64_t h = mpz_fdiv_ui(label.get_mpz_t(), 0xFFFFFFFFFFFFFFC5ull);
    if (sgn(label) < 0) h = ~h;
    std::uint64_t z = seed ^ (h + 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace quadindex::arith
