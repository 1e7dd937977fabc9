#include "plaus/eps_rational.hpp"

#include <sstream>
#include <vector>

#include "plaus/error.hpp"

namespace plaus {

namespace {

// Scales num and den by one rational factor so that both get integer
// coefficients with combined content 1 and den's lowest coefficient is
// positive.
void make_primitive(EpsPolynomial& num, EpsPolynomial& den) {
    BigInteger lcm_den(1);
    BigInteger content(0);
    auto scan_den = [&](const EpsPolynomial& p) {
        for (const auto& c : p.coeffs())
            if (c != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    };
    scan_den(num);
    scan_den(den);
    auto scan_num = [&](const EpsPolynomial& p) {
        for (const auto& c : p.coeffs()) {
            if (c == 0) continue;
            BigInteger scaled = c.get_num() * (lcm_den / c.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        }
    };
    scan_num(num);
    scan_num(den);
    BigRational factor(lcm_den, content);
    factor.canonicalize();
    if (sgn(den.lowest()) < 0) factor = -factor;
    if (factor != 1) {
        num = num * factor;
        den = den * factor;
    }
}

}  // namespace

EpsRational::EpsRational(const BigRational& c)
    : num_(EpsPolynomial::constant(BigRational(c.get_num()))), den_(EpsPolynomial::constant(BigRational(c.get_den()))) {}

EpsRational EpsRational::eps() {
    return EpsRational(EpsPolynomial::monomial(BigRational(1), 1), EpsPolynomial::constant(BigRational(1)), true);
}

EpsRational EpsRational::normalize(EpsPolynomial num, EpsPolynomial den) {
    if (den.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
    if (num.is_zero()) return EpsRational();
    if (!num.is_constant() && !den.is_constant()) {
        EpsPolynomial g = gcd(num, den);
        if (g.degree() > 0) {
            num = exact_quotient(num, g);
            den = exact_quotient(den, g);
        }
    }
    make_primitive(num, den);
    return EpsRational(std::move(num), std::move(den), true);
}

BigRational EpsRational::eval(const BigRational& t) const {
    BigRational d = den_.eval(t);
    if (d == 0) throw Error(Errc::division_by_zero, "division by zero");
    return num_.eval(t) / d;
}

EpsRational EpsRational::operator-() const { return EpsRational(-num_, den_, true); }

EpsRational operator+(const EpsRational& a, const EpsRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return EpsRational::normalize(a.num_ + b.num_, a.den_);
    return EpsRational::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

EpsRational operator-(const EpsRational& a, const EpsRational& b) { return a + (-b); }

EpsRational operator*(const EpsRational& a, const EpsRational& b) {
    if (a.is_zero() || b.is_zero()) return EpsRational();
    return EpsRational::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

EpsRational operator/(const EpsRational& a, const EpsRational& b) {
    if (b.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
    if (a.is_zero()) return EpsRational();
    return EpsRational::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const EpsRational& a, const EpsRational& b) {
    // Both denominators are positive near 0+, so the sign of a - b is the
    // sign of the lowest nonzero coefficient of a.num*b.den - b.num*a.den.
    const auto& an = a.num_;
    const auto& ad = a.den_;
    const auto& bn = b.num_;
    const auto& bd = b.den_;
    const int top = std::max(an.degree() + bd.degree(), bn.degree() + ad.degree());
    BigRational coeff;
    for (int k = 0; k <= top; ++k) {
        coeff = 0;
        for (int i = 0; i <= k; ++i) {
            const auto& x = an[static_cast<std::size_t>(i)];
            const auto& y = bn[static_cast<std::size_t>(i)];
            if (x != 0) coeff += x * bd[static_cast<std::size_t>(k - i)];
            if (y != 0) coeff -= y * ad[static_cast<std::size_t>(k - i)];
        }
        if (int s = sgn(coeff); s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Ordering compare(const EpsRational& a, const EpsRational& b) {
    auto c = a <=> b;
    if (c < 0) return Ordering::LT;
    if (c > 0) return Ordering::GT;
    return Ordering::EQ;
}

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::LT: return "LT";
        case Ordering::EQ: return "EQ";
        case Ordering::GT: return "GT";
    }
    return "?";
}

BigRational standard_part(const EpsRational& a) {
    if (!a.is_finite()) throw Error(Errc::infinite, "infinite");
    if (a.is_zero() || a.num().valuation() > 0) return BigRational(0);
    return a.num()[0] / a.den()[0];
}

bool is_infinitesimal(const EpsRational& a) { return !a.is_zero() && a.num().valuation() > a.den().valuation(); }

BigRational sign_stable_bound(const EpsRational& a, const EpsRational& b) {
    EpsPolynomial diff = a.num() * b.den() - b.num() * a.den();
    return root_free_radius(diff * a.den() * b.den());
}

EpsRational abs(const EpsRational& a) { return a.sign() < 0 ? -a : a; }

EpsRational pow(const EpsRational& a, unsigned n) {
    EpsRational result(1);
    EpsRational base = a;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

std::string to_string(const EpsPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const BigRational& c = p.coeffs()[i];
        if (c == 0) continue;
        const BigRational mag = abs(c);
        std::string mono = i == 0 ? "" : (i == 1 ? "eps" : "eps^" + std::to_string(i));
        std::string term;
        if (i == 0) {
            term = to_string(mag);
        } else if (mag == 1) {
            term = first && c < 0 ? "1*" + mono : mono;
        } else {
            term = to_string(mag) + "*" + mono;
        }
        if (first) {
            out = (c < 0 ? "-" : "") + term;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
        first = false;
    }
    return out;
}

std::string to_string(const EpsRational& a) {
    if (a.den().is_constant()) return to_string(a.num() * (1 / a.den()[0]));
    return "(" + to_string(a.num()) + ")/(" + to_string(a.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const EpsRational& a) { return os << to_string(a); }

}  // namespace plaus
