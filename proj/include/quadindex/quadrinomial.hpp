#ifndef QUADINDEX_QUADRINOMIAL_HPP
#define QUADINDEX_QUADRINOMIAL_HPP

#include <string>

#include "quadindex/intpoly.hpp"

namespace quadindex::zpoly {

/// Degree bound for every operation that must materialize a degree-n object
/// (expansion, reduction mod p, the closed-form discriminant). Predicate
/// operations work on the coefficients alone and accept any n.
inline constexpr unsigned long kDefaultDegreeCap = 2000;

/// x^n + a*x^(n-1) + b*x + c. Valid when n > 4 and a, b, c are all nonzero;
/// validity is checked by the operations, not the constructor.
struct Quadrinomial {
    BigInt n, a, b, c;

    bool shape_valid() const { return n > 4 && a != 0 && b != 0 && c != 0; }
    bool operator==(const Quadrinomial&) const = default;
};

enum class ScopeFailure {
    none,
    degree_too_small,
    zero_coefficient,
    a_nonpositive,
    a_not_dividing_n_squared,
    gcd_a_k_not_one,
};

std::string to_string(ScopeFailure f);

/// Hypotheses under which the specialized classifier applies:
/// n > 4, abc != 0, a >= 1, n^2 = a*k with gcd(a, k) = 1.
struct TheoremScope {
    bool applicable = false;
    BigInt k = 0;  // n^2 / a when applicable
    ScopeFailure failure = ScopeFailure::none;
};

TheoremScope check_scope(const Quadrinomial& q);

/// The monic degree-n integer polynomial with the four prescribed terms.
/// Requires shape validity and n <= degree_cap.
IntPoly expand(const Quadrinomial& q, unsigned long degree_cap = kDefaultDegreeCap);

}  // namespace quadindex::zpoly

#endif
