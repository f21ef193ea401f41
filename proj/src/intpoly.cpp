#include "quadindex/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quadindex::zpoly {

namespace {
const BigInt kZero = 0;

BigInt pow_bi(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}
}  // namespace

IntPoly IntPoly::constant(const BigInt& v) {
    return IntPoly(std::vector<BigInt>{v});
}

IntPoly IntPoly::monomial(std::size_t k, const BigInt& coeff) {
    std::vector<BigInt> c(k + 1, BigInt(0));
    c[k] = coeff;
    return IntPoly(std::move(c));
}

const BigInt& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw invalid_argument("IntPoly::leading: zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    IntPoly r = *this;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
}

IntPoly IntPoly::pow(unsigned long e) const {
    IntPoly acc = IntPoly::constant(1);
    IntPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<BigInt> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * BigInt(i);
    return IntPoly(std::move(c));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::exact_div_scalar(const BigInt& d) const {
    internal_check(d != 0, "exact_div_scalar: zero divisor");
    IntPoly r = *this;
    for (auto& v : r.c_) {
        internal_check(mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()),
                       "exact_div_scalar: non-exact division");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

IntPoly parse_poly(const std::string& text) {
    std::string clean;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) clean.push_back(ch);
    if (clean.empty()) throw invalid_argument("parse_poly: empty input");
    std::vector<BigInt> desc;
    std::stringstream ss(clean);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw invalid_argument("parse_poly: empty coefficient");
        try {
            desc.emplace_back(tok);
        } catch (const std::exception&) {
            throw invalid_argument("parse_poly: bad integer '" + tok + "'");
        }
    }
    std::reverse(desc.begin(), desc.end());
    return IntPoly(std::move(desc));
}

std::string format_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        out += p.coeff(i).get_str();
        if (i) out += ',';
    }
    return out;
}

std::string pretty_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const BigInt& v = p.coeff(i);
        if (v == 0) continue;
        BigInt mag = abs(v);
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        bool unit = mag == 1 && i > 0;
        if (!unit) out += mag.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace detail {

// Fraction-free Gaussian elimination on the Sylvester matrix.
BigInt resultant_bareiss(const IntPoly& p, const IntPoly& q) {
    int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0) return 1;
    std::size_t dim = static_cast<std::size_t>(m + n);
    std::vector<std::vector<BigInt>> M(dim, std::vector<BigInt>(dim, BigInt(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) M[row][row + j] = p.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) M[n + row][row + j] = q.coeff(n - j);

    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (M[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < dim && M[piv][k] == 0) ++piv;
            if (piv == dim) return 0;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < dim; ++i) {
            for (std::size_t j = k + 1; j < dim; ++j) {
                BigInt t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = t;
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[dim - 1][dim - 1] : -M[dim - 1][dim - 1];
}

namespace {

BigInt content_of(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& v : p.coeffs()) g = gcd(g, v);
    return g == 0 ? BigInt(1) : g;
}

// prem(A, B) = lc(B)^(deg A - deg B + 1) * A  mod  B. The full power of
// lc(B) is restored even when the degree drops by more than one per step.
IntPoly pseudo_rem(IntPoly A, const IntPoly& B) {
    int db = B.degree();
    const BigInt& lb = B.leading();
    unsigned long want = A.degree() >= db ? static_cast<unsigned long>(A.degree() - db + 1) : 0;
    unsigned long steps = 0;
    while (!A.is_zero() && A.degree() >= db) {
        int da = A.degree();
        IntPoly shifted = IntPoly::monomial(static_cast<std::size_t>(da - db), A.leading()) * B;
        A = A * lb - shifted;
        ++steps;
        internal_check(A.is_zero() || A.degree() < da, "pseudo_rem: degree did not drop");
    }
    if (steps < want) A = A * pow_bi(lb, want - steps);
    return A;
}

}  // namespace

// Subresultant PRS resultant (Cohen, "A Course in Computational Algebraic
// Number Theory", alg. 3.3.7).
BigInt resultant_prs(IntPoly A, IntPoly B) {
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        // Res(A, const) = const^(deg A)
        return BigInt(s) * pow_bi(B.leading(), static_cast<unsigned long>(A.degree()));
    }
    BigInt ca = content_of(A), cb = content_of(B);
    A = A.exact_div_scalar(ca);
    B = B.exact_div_scalar(cb);
    BigInt t = pow_bi(ca, static_cast<unsigned long>(B.degree())) *
               pow_bi(cb, static_cast<unsigned long>(A.degree()));
    BigInt g = 1, h = 1;
    while (true) {
        int da = A.degree(), db = B.degree();
        unsigned long delta = static_cast<unsigned long>(da - db);
        if ((da & 1) && (db & 1)) s = -s;
        IntPoly R = pseudo_rem(A, B);
        A = B;
        BigInt divisor = g * pow_bi(h, delta);
        B = R.exact_div_scalar(divisor);
        g = A.leading();
        // h = h^(1-delta) * g^delta
        if (delta == 0) {
            // h unchanged
        } else {
            BigInt num = pow_bi(g, delta);
            BigInt den = pow_bi(h, delta - 1);
            internal_check(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()),
                           "resultant: h update not exact");
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.is_zero()) return 0;
        if (B.degree() == 0) {
            unsigned long da2 = static_cast<unsigned long>(A.degree());
            BigInt num = pow_bi(B.leading(), da2);
            BigInt den = da2 == 0 ? BigInt(1) : pow_bi(h, da2 - 1);
            internal_check(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()),
                           "resultant: final division not exact");
            BigInt hh;
            mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return BigInt(s) * t * hh;
        }
    }
}

}  // namespace detail

BigInt resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw invalid_argument("resultant: zero polynomial");
    if (p.degree() == 0 && q.degree() == 0) return 1;
    if (p.degree() == 0) return pow_bi(p.leading(), static_cast<unsigned long>(q.degree()));
    if (q.degree() == 0) return pow_bi(q.leading(), static_cast<unsigned long>(p.degree()));
    if (p.degree() <= 12 && q.degree() <= 12) return detail::resultant_bareiss(p, q);
    return detail::resultant_prs(p, q);
}

}  // namespace quadindex::zpoly
