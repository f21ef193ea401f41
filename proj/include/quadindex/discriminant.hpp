#ifndef QUADINDEX_DISCRIMINANT_HPP
#define QUADINDEX_DISCRIMINANT_HPP

#include "quadindex/quadrinomial.hpp"

namespace quadindex::zpoly {

/// Closed-form discriminant of x^n + a*x^(n-1) + b*x + c, exact. Every
/// division (the binomial quotients and the 2-power quotients of the two
/// even-part sums) is asserted exact. Requires shape validity and
/// n <= degree_cap.
BigInt discriminant_formula(const Quadrinomial& q,
                            unsigned long degree_cap = kDefaultDegreeCap);

/// Discriminant via the resultant identity disc = (-1)^(n(n-1)/2) Res(f, f')
/// for monic f.
BigInt discriminant_resultant(const IntPoly& f);

/// Discriminant of the expanded quadrinomial. For n <= 12 both the closed
/// form and the resultant route run and must agree exactly.
BigInt discriminant(const Quadrinomial& q, unsigned long degree_cap = kDefaultDegreeCap);

/// disc mod p for any degree, in O(log n) arithmetic: the two power sums of
/// the closed form satisfy a two-term recurrence evaluated by 2x2 matrix
/// powering mod p. Requires shape validity; p prime.
BigInt discriminant_mod_p(const Quadrinomial& q, const BigInt& p);

}  // namespace quadindex::zpoly

#endif
