#include "quadindex/modpoly.hpp"

#include <algorithm>

namespace quadindex::fppoly {

namespace {
const BigInt kZero = 0;

BigInt mod_of(const BigInt& v, const BigInt& p) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
}
}  // namespace

ModPoly::ModPoly(BigInt p) : p_(std::move(p)) {
    if (p_ < 2) throw invalid_argument("ModPoly: modulus must be >= 2");
}

ModPoly::ModPoly(BigInt p, std::vector<BigInt> ascending)
    : p_(std::move(p)), c_(std::move(ascending)) {
    if (p_ < 2) throw invalid_argument("ModPoly: modulus must be >= 2");
    reduce_inplace();
}

void ModPoly::reduce_inplace() {
    for (auto& v : c_) v = mod_of(v, p_);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::constant(const BigInt& p, const BigInt& v) {
    return ModPoly(p, std::vector<BigInt>{v});
}

ModPoly ModPoly::x(const BigInt& p) {
    return ModPoly(p, std::vector<BigInt>{0, 1});
}

ModPoly ModPoly::monomial(const BigInt& p, std::size_t k, const BigInt& coeff) {
    std::vector<BigInt> c(k + 1, BigInt(0));
    c[k] = coeff;
    return ModPoly(p, std::move(c));
}

const BigInt& ModPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const BigInt& ModPoly::leading() const {
    if (c_.empty()) throw invalid_argument("ModPoly::leading: zero polynomial");
    return c_.back();
}

namespace {
void check_same_modulus(const ModPoly& a, const ModPoly& b) {
    if (a.modulus() != b.modulus())
        throw invalid_argument("ModPoly: modulus mismatch");
}
}  // namespace

ModPoly ModPoly::operator+(const ModPoly& o) const {
    check_same_modulus(*this, o);
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    check_same_modulus(*this, o);
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    check_same_modulus(*this, o);
    if (is_zero() || o.is_zero()) return ModPoly(p_);
    std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::scaled(const BigInt& s) const {
    std::vector<BigInt> c = c_;
    for (auto& v : c) v *= s;
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    if (leading() == 1) return *this;
    return scaled(mod_inverse(leading(), p_));
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_);
    std::vector<BigInt> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * BigInt(i);
    return ModPoly(p_, std::move(c));
}

BigInt ModPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_of(acc * x + *it, p_);
    return acc;
}

IntPoly ModPoly::lift() const {
    return IntPoly(c_);
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den) {
    check_same_modulus(num, den);
    if (den.is_zero()) throw invalid_argument("divmod: division by zero polynomial");
    const BigInt& p = num.modulus();
    if (num.degree() < den.degree()) return {ModPoly(p), num};
    BigInt inv = mod_inverse(den.leading(), p);
    std::vector<BigInt> r = num.c_;
    std::size_t dn = den.c_.size();
    std::vector<BigInt> q(r.size() - dn + 1, BigInt(0));
    for (std::size_t i = r.size(); i-- >= dn;) {
        BigInt t = mod_of(r[i] * inv, p);
        if (t != 0) {
            q[i - dn + 1] = t;
            for (std::size_t j = 0; j < dn; ++j)
                r[i - dn + 1 + j] = mod_of(r[i - dn + 1 + j] - t * den.c_[j], p);
        }
        if (i == dn - 1) break;
    }
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly rem(const ModPoly& num, const ModPoly& den) {
    return divmod(num, den).second;
}

bool divides(const ModPoly& d, const ModPoly& f) {
    return rem(f, d).is_zero();
}

ModPoly gcd(ModPoly f, ModPoly g) {
    check_same_modulus(f, g);
    while (!g.is_zero()) {
        ModPoly r = rem(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

ModPoly pow_mod(const ModPoly& base, const BigInt& e, const ModPoly& f) {
    if (e < 0) throw invalid_argument("pow_mod: negative exponent");
    ModPoly acc = ModPoly::constant(base.modulus(), 1);
    ModPoly b = rem(base, f);
    unsigned long nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (unsigned long i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = rem(acc * b, f);
        if (i + 1 < nbits) b = rem(b * b, f);
    }
    return acc;
}

ModPoly reduce(const IntPoly& p, const BigInt& prime) {
    if (!arith::is_prime(prime)) throw invalid_argument("reduce: modulus must be prime");
    return ModPoly(prime, p.coeffs());
}

bool is_separable(const ModPoly& f) {
    if (f.is_zero()) throw invalid_argument("is_separable: zero polynomial");
    return gcd(f, f.derivative()).is_one();
}

BigInt mod_inverse(const BigInt& a, const BigInt& p) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw invalid_argument("mod_inverse: residue not invertible");
    return r;
}

std::string format_poly(const ModPoly& f) {
    return zpoly::format_poly(f.lift());
}

std::string pretty_poly(const ModPoly& f) {
    return zpoly::pretty_poly(f.lift());
}

bool canonical_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        int c = cmp(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace quadindex::fppoly
