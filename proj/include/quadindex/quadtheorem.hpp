#ifndef QUADINDEX_QUADTHEOREM_HPP
#define QUADINDEX_QUADTHEOREM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadindex/dedekind.hpp"
#include "quadindex/discriminant.hpp"

namespace quadindex::quadtheorem {

using zpoly::Quadrinomial;
using zpoly::TheoremScope;

enum class Verdict { Divides, DoesNotDivide, Inapplicable };
std::string to_string(Verdict v);

/// The eight divisibility patterns of (a, b, c) by p:
///   1: p|a p|b p|c      2: p|a p|b p∤c     3: p∤a p|b p|c    4: p∤a p∤b p|c
///   5: p∤a p|b p∤c      6: p∤a p∤b p∤c    7: p|a p∤b p|c    8: p|a p∤b p∤c
enum class PrimeCase : int { C1 = 1, C2, C3, C4, C5, C6, C7, C8 };

enum class Subcase { None, S2i, S2ii, S4i, S4ii, S5i, S5ii, S611, S612, S613, S621, S622 };
std::string to_string(Subcase s);

/// Which rule family decided: the six-condition classification ("main"),
/// the odd-prime a-divisor rule, or its characteristic-2 counterpart.
enum class RuleSource { Main, OddADivisorRule, CharTwoADivisorRule };
std::string to_string(RuleSource s);

struct CaseLabel {
    PrimeCase pattern;
    Subcase sub = Subcase::None;
    RuleSource source = RuleSource::Main;
    bool operator==(const CaseLabel&) const = default;
};

/// Ordered key/value pairs; values are decimal strings or polynomial text.
using Witness = std::vector<std::pair<std::string, std::string>>;

struct CaseVerdict {
    BigInt p;
    CaseLabel label;
    Verdict verdict = Verdict::Inapplicable;
    Witness witness;
};

struct ClassifyOptions {
    std::uint64_t seed = 0;
    unsigned long degree_cap = zpoly::kDefaultDegreeCap;
    /// Re-derive the verdict with the general criterion and require agreement.
    bool cross_check = false;
};

/// The divisibility pattern of (a, b, c) by p plus the structural subcase.
CaseLabel case_of(const Quadrinomial& q, const BigInt& p);

/// Per-prime index-divisibility verdict from the closed-form case analysis.
/// p need not divide the discriminant (then the verdict is DoesNotDivide).
/// Out-of-scope inputs get an Inapplicable verdict, not an error.
CaseVerdict classify_prime(const Quadrinomial& q, const BigInt& p,
                           const ClassifyOptions& opts = {});

/// The index test of the all-coefficients-divisible pattern for a general
/// monic polynomial: with p | every non-leading coefficient and deg >= 2,
/// p does not divide the index iff p^2 does not divide the constant term.
Verdict all_coeffs_divisible_case(const zpoly::IntPoly& f, const BigInt& p);

/// Sum C(n-3, 2i) * (n-2)/(n-2-2i) over 0 <= 2i <= n-3, every quotient an
/// asserted exact division. n >= 5, capped (the sum has Theta(n) terms).
BigInt binomial_sum(const BigInt& n, unsigned long cap = zpoly::kDefaultDegreeCap);

/// Field-discriminant divisibility under the hypotheses p odd, p∤a, p∤b,
/// p|c, p|(n-1), scope applicable: p | d_K iff binomial_sum(n) is 1 mod p
/// (n even) resp. 0 mod p (n odd). Hypothesis violations are errors.
bool dK_divides(const Quadrinomial& q, const BigInt& p);

enum class ExclusionReason { DividesANotB, DividesBAndN, DividesCAndNMinus2 };
std::string to_string(ExclusionReason r);

/// Conditions under which p divides neither the discriminant nor the index,
/// checkable for arbitrarily large n:
///   - p | a, p ∤ b                      (any p)
///   - p ∤ a, p ∤ c, p | b, p | n        (odd p)
///   - p ∤ a, p ∤ b, p | c, p | (n-2)    (odd p)
std::optional<ExclusionReason> exclusion_check(const Quadrinomial& q, const BigInt& p);

/// The odd-prime exclusion predicate; requires odd prime p and scope.
bool excluded_prime(const Quadrinomial& q, const BigInt& p);

enum class Monogenicity { Monogenic, NotMonogenic, Unknown };
std::string to_string(Monogenicity m);

struct MonogenicityOptions {
    arith::FactorBudget budget;
    std::uint64_t seed = 0;
    unsigned long degree_cap = zpoly::kDefaultDegreeCap;
    bool cross_check = true;
};

struct MonogenicityReport {
    Quadrinomial q;
    TheoremScope scope;
    BigInt D = 0;
    arith::PrimeFactorization d_factors;
    std::vector<CaseVerdict> per_prime;  // primes ascending
    Monogenicity verdict = Monogenicity::Unknown;
    std::vector<BigInt> index_divisors;   // primes with verdict Divides
    std::optional<BigInt> index_exact;    // when v_p(D) <= 3 pins every exponent
    std::uint64_t seed = 0;
};

/// Computes D, factors it within budget, classifies every prime with
/// p^2 | D (valuation-1 primes cannot divide the index), and aggregates.
/// Requires scope applicability.
MonogenicityReport is_monogenic(const Quadrinomial& q, const MonogenicityOptions& opts = {});

}  // namespace quadindex::quadtheorem

#endif
