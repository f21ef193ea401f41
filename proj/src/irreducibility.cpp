#include "quadindex/irreducibility.hpp"

#include "quadindex/modfactor.hpp"

namespace quadindex::zpoly {

std::string to_string(IrredStatus s) {
    switch (s) {
        case IrredStatus::Certified: return "certified";
        case IrredStatus::Assumed: return "assumed";
        case IrredStatus::Refuted: return "refuted";
    }
    return "?";
}

namespace {

const unsigned long kWitnessPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                        43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Integer roots of monic f divide the constant term; search divisors found
// within a small factoring budget.
std::optional<BigInt> find_rational_root(const IntPoly& f) {
    if (f.coeff(0) == 0) return BigInt(0);
    arith::FactorBudget tiny;
    tiny.trial_bound = 10000;
    tiny.rho_iterations = 20000;
    auto fact = arith::factor(f.coeff(0), tiny);
    std::vector<BigInt> divisors{1};
    for (const auto& [p, e] : fact.factors) {
        std::size_t m = divisors.size();
        BigInt pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < m; ++j) {
                if (divisors.size() > 4096) break;
                divisors.push_back(divisors[j] * pk);
            }
        }
    }
    for (const BigInt& d : divisors) {
        if (f.eval(d) == 0) return d;
        if (f.eval(-d) == 0) return -d;
    }
    return std::nullopt;
}

std::optional<BigInt> eisenstein_prime(const IntPoly& f) {
    BigInt g = 0;
    for (int i = 0; i < f.degree(); ++i) g = gcd(g, f.coeff(static_cast<std::size_t>(i)));
    if (g == 0) return std::nullopt;
    g = abs(g);
    arith::FactorBudget tiny;
    tiny.trial_bound = 10000;
    tiny.rho_iterations = 20000;
    auto fact = arith::factor(g, tiny);
    for (const auto& [p, e] : fact.factors) {
        BigInt p2 = p * p;
        if (!mpz_divisible_p(f.coeff(0).get_mpz_t(), p2.get_mpz_t())) return p;
    }
    return std::nullopt;
}

}  // namespace

IrreducibilityResult check_irreducible(const IntPoly& f, std::uint64_t seed) {
    if (!f.is_monic()) throw invalid_argument("check_irreducible: polynomial must be monic");
    if (f.degree() == 1) return {IrredStatus::Certified, "degree 1"};

    if (auto root = find_rational_root(f))
        return {IrredStatus::Refuted, "rational root " + root->get_str()};

    if (auto p = eisenstein_prime(f))
        return {IrredStatus::Certified, "eisenstein at " + p->get_str()};

    for (unsigned long wp : kWitnessPrimes) {
        BigInt p(wp);
        fppoly::ModPoly fbar(p, f.coeffs());
        if (fbar.degree() != f.degree()) continue;  // monic, cannot happen
        auto fact = fppoly::factorize(fbar, arith::derive_seed(seed, p));
        if (fact.factors.size() == 1 && fact.factors[0].second == 1)
            return {IrredStatus::Certified, "irreducible mod " + std::to_string(wp)};
    }
    return {IrredStatus::Assumed, "no certificate found"};
}

}  // namespace quadindex::zpoly
