#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "quadindex/arith.hpp"

using namespace quadindex;
using namespace quadindex::arith;

namespace {

BigInt naive_pow_mod(BigInt base, unsigned long e, const BigInt& m) {
    BigInt r = 1 % m;
    base %= m;
    for (unsigned long i = 0; i < e; ++i) r = (r * base) % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

TEST_CASE("mod_pow basics") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(12345, 0, 7) == 1);
    CHECK(mod_pow(BigInt(-5), 0, 7) == 1);
    CHECK(mod_pow(BigInt(-3), 3, 9) == 0);
    CHECK_THROWS_AS(mod_pow(2, 3, 1), invalid_argument);
    CHECK_THROWS_AS(mod_pow(2, BigInt(-1), 7), invalid_argument);
}

TEST_CASE("mod_pow agrees with repeated multiplication") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        BigInt m = 2 + rng.below(BigInt(1) << 32);
        BigInt b = rng.below(m * 2) - m;  // include negatives
        unsigned long e = mpz_get_ui(BigInt(rng.below(1 << 14)).get_mpz_t());
        CHECK(mod_pow(b, BigInt(e), m) == naive_pow_mod(b, e, m));
    }
}

TEST_CASE("mod_pow matches direct power for small exponents") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        BigInt m = 2 + rng.below(10000);
        BigInt b = rng.below(200) - 100;
        unsigned long e = 1 + mpz_get_ui(BigInt(rng.below(10000)).get_mpz_t());
        CHECK(mod_pow(b, BigInt(e), m) == naive_pow_mod(b, e, m));
    }
}

TEST_CASE("is_prime on known values") {
    CHECK(is_prime(7561));
    CHECK(is_prime(15269));
    CHECK(is_prime(18691));
    CHECK(is_prime(7507));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(BigInt("1039040181")));
    CHECK(is_prime(BigInt("2305843009213693951")));   // 2^61 - 1
    CHECK_FALSE(is_prime(BigInt("2305843009213693953")));
    CHECK_THROWS_AS(is_prime(BigInt(-3)), invalid_argument);
}

TEST_CASE("is_prime agrees with a sieve up to 10^6") {
    const unsigned long N = 1000000;
    std::vector<bool> composite(N + 1, false);
    for (unsigned long i = 2; i * i <= N; ++i)
        if (!composite[i])
            for (unsigned long j = i * i; j <= N; j += i) composite[j] = true;
    unsigned long mismatches = 0, first_bad = 0;
    for (unsigned long n = 0; n <= N; ++n) {
        bool expect = n >= 2 && !composite[n];
        if (is_prime(BigInt(n)) != expect) {
            if (!mismatches) first_bad = n;
            ++mismatches;
        }
    }
    CAPTURE(first_bad);
    CHECK(mismatches == 0);
}

TEST_CASE("is_prime beyond the deterministic bound uses the caller stream") {
    // the first prime above 2^300 and a composite neighbor
    BigInt p("2037035976334486086268445688409378161051468393665936250636140449354381299763336706183397533");
    Rng rng(99);
    CHECK(is_prime(p, &rng));
    CHECK_FALSE(is_prime(p + 2, &rng));
}

TEST_CASE("factor on known discriminant magnitudes") {
    auto f = factor(BigInt("1039040181"));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<BigInt, unsigned>{3, 2});
    CHECK(f.factors[1] == std::pair<BigInt, unsigned>{7561, 1});
    CHECK(f.factors[2] == std::pair<BigInt, unsigned>{15269, 1});
    CHECK(f.cofactor == 1);

    auto g = factor(BigInt("2523285"));
    REQUIRE(g.factors.size() == 3);
    CHECK(g.factors[0] == std::pair<BigInt, unsigned>{3, 3});
    CHECK(g.factors[1] == std::pair<BigInt, unsigned>{5, 1});
    CHECK(g.factors[2] == std::pair<BigInt, unsigned>{18691, 1});
    CHECK(g.complete());

    auto one = factor(1);
    CHECK(one.factors.empty());
    CHECK(one.cofactor == 1);

    CHECK_THROWS_AS(factor(0), invalid_argument);
}

TEST_CASE("factor handles negatives, powers and budget exhaustion") {
    auto f = factor(BigInt(-720));
    CHECK(f.reassemble() == 720);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<BigInt, unsigned>{2, 4});

    // square of a 25-digit prime
    BigInt p("1000000000000000000000007");
    auto sq = factor(p * p);
    CHECK(sq.reassemble() == p * p);

    // two 20-digit primes with a budget far too small to split them
    BigInt q1("10000000000000000051"), q2("10000000000000000609");
    FactorBudget tiny;
    tiny.trial_bound = 100;
    tiny.rho_iterations = 10;
    auto hard = factor(q1 * q2, tiny);
    CHECK_FALSE(hard.complete());
    CHECK(hard.reassemble() == q1 * q2);

    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        BigInt n = 1 + rng.below(BigInt(1) << 48);
        auto r = factor(n);
        CHECK(r.reassemble() == n);
        for (std::size_t j = 0; j + 1 < r.factors.size(); ++j)
            CHECK(r.factors[j].first < r.factors[j + 1].first);
        for (const auto& [pp, e] : r.factors) CHECK(is_prime(pp));
    }
}

TEST_CASE("sqrt_mod basics") {
    CHECK(sqrt_mod(0, 7) == BigInt(0));
    CHECK(sqrt_mod(4, 7) == BigInt(2));
    CHECK_FALSE(sqrt_mod(3, 7).has_value());
    CHECK_THROWS_AS(sqrt_mod(1, 9), invalid_argument);
    CHECK_THROWS_AS(sqrt_mod(1, 2), invalid_argument);
    CHECK_THROWS_AS(sqrt_mod(9, 7), invalid_argument);
}

TEST_CASE("sqrt_mod agrees with exhaustive search") {
    std::vector<unsigned long> primes;
    for (unsigned long p = 3; p < 10000; p += 2)
        if (is_prime(BigInt(p))) primes.push_back(p);
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        BigInt p(primes[mpz_get_ui(BigInt(rng.below(primes.size())).get_mpz_t())]);
        BigInt a = rng.below(p);
        auto r = sqrt_mod(a, p);
        bool found = false;
        BigInt smallest = 0;
        for (BigInt x = 0; x < p; ++x)
            if ((x * x) % p == a) {
                found = true;
                smallest = x;
                break;
            }
        CHECK(r.has_value() == found);
        if (r) {
            CHECK((*r * *r) % p == a);
            CHECK(*r == smallest);  // the smaller of the pair comes first
        }
    }
}

TEST_CASE("sqrt_mod counts non-residues exactly") {
    for (unsigned long pl = 3; pl < 500; pl += 2) {
        if (!is_prime(BigInt(pl))) continue;
        BigInt p(pl);
        unsigned long none_count = 0;
        for (BigInt a = 0; a < p; ++a) {
            auto r = sqrt_mod(a, p);
            if (!r)
                ++none_count;
            else {
                CHECK((*r * *r) % p == a);
                CHECK(*r <= p - *r);
            }
        }
        CHECK(none_count == (pl - 1) / 2);
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(30030, 2) == 1);
    CHECK(valuation(18, 3) == 2);
    CHECK(valuation(7, 5) == 0);
    CHECK_THROWS_AS(valuation(0, 3), invalid_argument);

    Rng rng(17);
    const unsigned long ps[] = {2, 3, 5, 7, 11, 13};
    for (int i = 0; i < 500; ++i) {
        BigInt n = 1 + rng.below(BigInt(1) << 40);
        if (rng.below(2) == 1) n = -n;
        BigInt p(ps[mpz_get_ui(BigInt(rng.below(6)).get_mpz_t())]);
        unsigned long e = 0;
        BigInt m = abs(n);
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        CHECK(valuation(n, p) == e);
    }
}

TEST_CASE("derive_seed is deterministic and label-sensitive") {
    CHECK(derive_seed(1, 3) == derive_seed(1, 3));
    CHECK(derive_seed(1, 3) != derive_seed(1, 5));
    CHECK(derive_seed(1, 3) != derive_seed(2, 3));
    CHECK(derive_seed(0, BigInt(3)) != derive_seed(0, BigInt(-3)));
}
