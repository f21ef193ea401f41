#ifndef QUADINDEX_ARITH_HPP
#define QUADINDEX_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quadindex/errors.hpp"

namespace quadindex {

using BigInt = mpz_class;

namespace arith {

/// Deterministic random stream (GMP Mersenne twister). All randomized
/// routines take one of these explicitly; there is no hidden global state.
class Rng {
   public:
    explicit Rng(std::uint64_t seed = 0) : state_(gmp_randinit_mt) {
        state_.seed(static_cast<unsigned long>(seed));
    }

    /// Uniform in [0, bound), bound >= 1.
    BigInt below(const BigInt& bound) { return state_.get_z_range(bound); }

    /// Uniform k-bit value in [0, 2^k).
    BigInt bits(unsigned long k) { return state_.get_z_bits(k); }

   private:
    gmp_randclass state_;
};

/// base^exp mod modulus, exp >= 0, modulus >= 2. Result in [0, modulus).
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus);

/// Primality test: deterministic Miller-Rabin over the first 13 prime bases
/// for n below the Sorenson-Webster bound 3.317e24; beyond that, 64 extra
/// random bases (error < 2^-128) drawn from `rng` or a fixed-seed stream.
bool is_prime(const BigInt& n, Rng* rng = nullptr);

/// Largest e with p^e | n. Requires n != 0 and p prime.
unsigned long valuation(const BigInt& n, const BigInt& p);

/// Square root in F_p (Tonelli-Shanks): the root r with r <= p - r, or
/// nullopt when a is a non-residue. Requires odd prime p and 0 <= a < p.
std::optional<BigInt> sqrt_mod(const BigInt& a, const BigInt& p);

/// a^-1 mod m for gcd(a, m) = 1; a == 0 (mod m) is invalid.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

struct FactorBudget {
    unsigned long trial_bound = 100000;     // trial division up to this value
    unsigned long rho_iterations = 400000;  // total Pollard-Brent steps
    std::uint64_t rho_seed = 1;
};

/// Factorization of |n| into primes, possibly aborted: the `cofactor` holds
/// whatever composite part the budget did not crack (1 when complete).
struct PrimeFactorization {
    std::vector<std::pair<BigInt, unsigned>> factors;  // primes ascending
    BigInt cofactor = 1;

    bool complete() const { return cofactor == 1; }
    BigInt reassemble() const;
};

/// Trial division then Pollard-Brent within `budget`. n != 0.
PrimeFactorization factor(const BigInt& n, const FactorBudget& budget = {});

/// Mixes a seed with a BigInt label into a fresh 64-bit seed (splitmix64).
/// Used to derive independent deterministic streams per prime.
std::uint64_t derive_seed(std::uint64_t seed, const BigInt& label);

}  // namespace arith
}  // namespace quadindex

#endif
