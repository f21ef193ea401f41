#ifndef QUADINDEX_INTPOLY_HPP
#define QUADINDEX_INTPOLY_HPP

#include <string>
#include <vector>

#include "quadindex/arith.hpp"

namespace quadindex::zpoly {

/// Dense polynomial over Z; coeff(i) multiplies x^i. The zero polynomial
/// has empty storage and degree -1.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

    static IntPoly constant(const BigInt& v);
    /// x^k with unit coefficient
    static IntPoly monomial(std::size_t k, const BigInt& coeff = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly pow(unsigned long e) const;
    IntPoly derivative() const;
    BigInt eval(const BigInt& x) const;

    /// Divides every coefficient by d, asserting exactness.
    IntPoly exact_div_scalar(const BigInt& d) const;

   private:
    std::vector<BigInt> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Text format shared with the CLI: comma-separated coefficients from
/// leading to constant ("1,4,0,0,0,1,3" is x^6+4x^5+x+3). Whitespace ignored.
IntPoly parse_poly(const std::string& text);
std::string format_poly(const IntPoly& p);

/// Human-readable form, e.g. "x^4 + 2*x^2 + 2*x + 1".
std::string pretty_poly(const IntPoly& p);

/// Exact resultant. Fraction-free Sylvester determinant (Bareiss) when both
/// degrees are at most 12, subresultant PRS beyond. Zero inputs are invalid.
BigInt resultant(const IntPoly& p, const IntPoly& q);

namespace detail {
// the two routes individually, so tests can compare them
BigInt resultant_bareiss(const IntPoly& p, const IntPoly& q);
BigInt resultant_prs(IntPoly p, IntPoly q);
}  // namespace detail

}  // namespace quadindex::zpoly

#endif
