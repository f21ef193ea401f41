#include "quadindex/discriminant.hpp"

namespace quadindex::zpoly {

namespace {

BigInt pow_bi(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

BigInt binom(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt exact_shift_right(const BigInt& v, unsigned long bits, const char* what) {
    internal_check(mpz_divisible_2exp_p(v.get_mpz_t(), bits) != 0, what);
    BigInt r;
    mpz_tdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
    return r;
}

}  // namespace

// With W = (n-2)ab + cn, E = -W and Delta = W^2 - 4abc(n-1)^2:
//
//   disc = sigma * [ (n-1)^(n-1) a^n c^(n-2) + (n-1)^(n-1) b^n
//                    + n * S1 / 2^(n-2) + (n-1)^2 ab * S2 / 2^(n-3) ]
//
// where S1 = sum C(n-1,2i) E^(n-1-2i) Delta^i, S2 = sum C(n-2,2i)
// E^(n-2-2i) Delta^i and sigma = (-1)^((n+2)(n-1)/2). The S2 binomials are
// evaluated as C(n-3,2i)(n-2)/(n-2-2i), an integer for 2i <= n-3; for even
// n the top index 2i = n-2 contributes Delta^((n-2)/2) separately. S1 and
// S2 equal 2^(n-2) resp. 2^(n-3) times Lucas-type integer sequences, so the
// 2-power divisions are exact; both facts are asserted at runtime.
BigInt discriminant_formula(const Quadrinomial& q, unsigned long degree_cap) {
    if (!q.shape_valid())
        throw invalid_argument("discriminant_formula: need n > 4 and nonzero a, b, c");
    if (!q.n.fits_ulong_p() || q.n.get_ui() > degree_cap)
        throw invalid_argument("discriminant_formula: degree exceeds cap");
    unsigned long n = q.n.get_ui();
    const BigInt &a = q.a, &b = q.b, &c = q.c;

    BigInt W = BigInt(n - 2) * a * b + c * BigInt(n);
    BigInt E = -W;
    BigInt Delta = W * W - 4 * a * b * c * pow_bi(BigInt(n - 1), 2);

    std::vector<BigInt> Ep(n, BigInt(1)), Dp(n / 2 + 1, BigInt(1));
    for (unsigned long i = 1; i < n; ++i) Ep[i] = Ep[i - 1] * E;
    for (unsigned long i = 1; i <= n / 2; ++i) Dp[i] = Dp[i - 1] * Delta;

    BigInt S1 = 0;
    for (unsigned long i = 0; 2 * i <= n - 1; ++i)
        S1 += binom(n - 1, 2 * i) * Ep[n - 1 - 2 * i] * Dp[i];

    BigInt S2 = 0;
    for (unsigned long i = 0; 2 * i <= n - 3; ++i) {
        BigInt num = binom(n - 3, 2 * i) * BigInt(n - 2);
        BigInt den = n - 2 - 2 * i;
        internal_check(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()),
                       "discriminant_formula: binomial quotient not integral");
        BigInt coeff;
        mpz_divexact(coeff.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        S2 += coeff * Ep[n - 2 - 2 * i] * Dp[i];
    }
    if (n % 2 == 0) S2 += Dp[(n - 2) / 2];

    BigInt part1 = BigInt(n) * exact_shift_right(S1, n - 2, "discriminant_formula: S1 odd part");
    BigInt part2 = pow_bi(BigInt(n - 1), 2) * a * b *
                   exact_shift_right(S2, n - 3, "discriminant_formula: S2 odd part");

    BigInt lead = pow_bi(BigInt(n - 1), n - 1) * (pow_bi(a, n) * pow_bi(c, n - 2) + pow_bi(b, n));
    BigInt bracket = lead + part1 + part2;
    bool negative = ((n + 2) * (n - 1) / 2) % 2 == 1;
    return negative ? -bracket : bracket;
}

BigInt discriminant_resultant(const IntPoly& f) {
    if (!f.is_monic()) throw invalid_argument("discriminant_resultant: polynomial must be monic");
    unsigned long n = static_cast<unsigned long>(f.degree());
    BigInt r = resultant(f, f.derivative());
    return (n * (n - 1) / 2) % 2 == 1 ? -r : r;
}

BigInt discriminant(const Quadrinomial& q, unsigned long degree_cap) {
    BigInt d = discriminant_formula(q, degree_cap);
    if (q.n <= 12) {
        BigInt via_res = discriminant_resultant(expand(q, degree_cap));
        internal_check(d == via_res, "discriminant: closed form and resultant disagree");
    }
    return d;
}

namespace {

BigInt residue(const BigInt& v, const BigInt& p) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
}

// (L_k, L_{k-1}) mod p for the sequence L_0 = 2, L_1 = E,
// L_j = E L_{j-1} - Q L_{j-2}, via powers of [[E, -Q], [1, 0]].
std::pair<BigInt, BigInt> lucas_pair_mod(const BigInt& E, const BigInt& Q, const BigInt& k,
                                         const BigInt& p) {
    internal_check(k >= 1, "lucas_pair_mod: k must be >= 1");
    // m = [[a, b], [c, d]] acting on column vectors
    BigInt a = 1, b = 0, c = 0, d = 1;                      // identity
    BigInt ma = residue(E, p), mb = residue(-Q, p), mc = 1, md = 0;
    BigInt e = k - 1;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            BigInt na = residue(a * ma + b * mc, p), nb = residue(a * mb + b * md, p);
            BigInt nc = residue(c * ma + d * mc, p), nd = residue(c * mb + d * md, p);
            a = na; b = nb; c = nc; d = nd;
        }
        BigInt sa = residue(ma * ma + mb * mc, p), sb = residue(ma * mb + mb * md, p);
        BigInt sc = residue(mc * ma + md * mc, p), sd = residue(mc * mb + md * md, p);
        ma = sa; mb = sb; mc = sc; md = sd;
        e >>= 1;
    }
    BigInt L1 = residue(E, p), L0 = residue(BigInt(2), p);
    return {residue(a * L1 + b * L0, p), residue(c * L1 + d * L0, p)};
}

}  // namespace

BigInt discriminant_mod_p(const Quadrinomial& q, const BigInt& p) {
    if (!q.shape_valid())
        throw invalid_argument("discriminant_mod_p: need n > 4 and nonzero a, b, c");
    if (!arith::is_prime(p)) throw invalid_argument("discriminant_mod_p: p must be prime");
    const BigInt &n = q.n, &a = q.a, &b = q.b, &c = q.c;
    BigInt E = residue(-((n - 2) * a * b + c * n), p);
    BigInt Q = residue((n - 1) * (n - 1) * a * b * c, p);
    auto [L_n1, L_n2] = lucas_pair_mod(E, Q, n - 1, p);
    BigInt lead = residue(arith::mod_pow(n - 1, n - 1, p) *
                              (arith::mod_pow(a, n, p) * arith::mod_pow(c, n - 2, p) +
                               arith::mod_pow(b, n, p)),
                          p);
    BigInt bracket = residue(lead + n * L_n1 + (n - 1) * (n - 1) * a * b * L_n2, p);
    unsigned long m = mpz_fdiv_ui(n.get_mpz_t(), 4);  // sign parity from n mod 4
    bool negative = (m == 0 || m == 3);
    return negative ? residue(-bracket, p) : bracket;
}

}  // namespace quadindex::zpoly
