#ifndef QUADINDEX_MODPOLY_HPP
#define QUADINDEX_MODPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "quadindex/intpoly.hpp"

namespace quadindex::fppoly {

using zpoly::IntPoly;

/// Dense polynomial over F_p; coefficients kept reduced in [0, p).
/// The modulus is carried by value and must match across binary operations.
class ModPoly {
   public:
    ModPoly() : p_(2) {}         // zero polynomial mod 2
    explicit ModPoly(BigInt p);  // zero polynomial
    ModPoly(BigInt p, std::vector<BigInt> ascending);

    static ModPoly constant(const BigInt& p, const BigInt& v);
    static ModPoly x(const BigInt& p);
    static ModPoly monomial(const BigInt& p, std::size_t k, const BigInt& coeff = 1);

    const BigInt& modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const BigInt& coeff(std::size_t i) const;
    const BigInt& leading() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly scaled(const BigInt& s) const;
    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    ModPoly monic() const;
    ModPoly derivative() const;
    BigInt eval(const BigInt& x) const;

    /// Lift to Z[x] with coefficients in [0, p) (the canonical lift).
    IntPoly lift() const;

   private:
    BigInt p_;
    std::vector<BigInt> c_;
    void reduce_inplace();
    friend std::pair<ModPoly, ModPoly> divmod(const ModPoly&, const ModPoly&);
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den);
ModPoly rem(const ModPoly& num, const ModPoly& den);
bool divides(const ModPoly& d, const ModPoly& f);

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
ModPoly gcd(ModPoly f, ModPoly g);

/// base^e mod f (polynomial exponentiation), e >= 0.
ModPoly pow_mod(const ModPoly& base, const BigInt& e, const ModPoly& f);

/// Coefficient-wise reduction of an integer polynomial; `prime` is verified.
ModPoly reduce(const IntPoly& p, const BigInt& prime);

/// gcd(f, f') == 1. f must be nonzero.
bool is_separable(const ModPoly& f);

/// a^-1 in F_p; a == 0 (mod p) signals a violated case precondition.
BigInt mod_inverse(const BigInt& a, const BigInt& p);

/// Comma-separated leading-to-constant coefficients (shared text format).
std::string format_poly(const ModPoly& f);
/// Human-readable form, e.g. "x^4 + 2*x^2 + 2*x + 1".
std::string pretty_poly(const ModPoly& f);

/// Canonical order: by degree, then lexicographic on the coefficient
/// sequence from the constant term up.
bool canonical_less(const ModPoly& a, const ModPoly& b);

}  // namespace quadindex::fppoly

#endif
