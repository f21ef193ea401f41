#include "quadindex/quadrinomial.hpp"

namespace quadindex::zpoly {

std::string to_string(ScopeFailure f) {
    switch (f) {
        case ScopeFailure::none: return "none";
        case ScopeFailure::degree_too_small: return "degree_too_small";
        case ScopeFailure::zero_coefficient: return "zero_coefficient";
        case ScopeFailure::a_nonpositive: return "a_nonpositive";
        case ScopeFailure::a_not_dividing_n_squared: return "a_not_dividing_n_squared";
        case ScopeFailure::gcd_a_k_not_one: return "gcd_a_k_not_one";
    }
    return "?";
}

TheoremScope check_scope(const Quadrinomial& q) {
    TheoremScope s;
    if (q.n <= 4) {
        s.failure = ScopeFailure::degree_too_small;
        return s;
    }
    if (q.a == 0 || q.b == 0 || q.c == 0) {
        s.failure = ScopeFailure::zero_coefficient;
        return s;
    }
    if (q.a < 1) {
        s.failure = ScopeFailure::a_nonpositive;
        return s;
    }
    BigInt n2 = q.n * q.n;
    if (!mpz_divisible_p(n2.get_mpz_t(), q.a.get_mpz_t())) {
        s.failure = ScopeFailure::a_not_dividing_n_squared;
        return s;
    }
    BigInt k = n2 / q.a;
    if (gcd(q.a, k) != 1) {
        s.failure = ScopeFailure::gcd_a_k_not_one;
        return s;
    }
    s.applicable = true;
    s.k = k;
    // In scope every prime of a divides n, hence appears squared in a = n^2/k.
    if (q.a <= 1000000000) {
        BigInt m = q.a;
        for (unsigned long d = 2; BigInt(d) * d <= m; ++d) {
            if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
                unsigned e = 0;
                while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
                    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
                    ++e;
                }
                internal_check(e >= 2, "check_scope: prime of a with exponent 1");
            }
        }
        internal_check(m == 1, "check_scope: unexpected residual prime in a");
    }
    return s;
}

IntPoly expand(const Quadrinomial& q, unsigned long degree_cap) {
    if (!q.shape_valid())
        throw invalid_argument("expand: need n > 4 and nonzero a, b, c");
    if (!q.n.fits_ulong_p() || q.n.get_ui() > degree_cap)
        throw invalid_argument("expand: degree exceeds cap");
    unsigned long n = q.n.get_ui();
    std::vector<BigInt> c(n + 1, BigInt(0));
    c[0] = q.c;
    c[1] = q.b;
    c[n - 1] = q.a;
    c[n] = 1;
    return IntPoly(std::move(c));
}

}  // namespace quadindex::zpoly
