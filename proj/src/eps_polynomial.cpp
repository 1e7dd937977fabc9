#include "plaus/eps_polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "plaus/error.hpp"

namespace plaus {

namespace {

const BigRational& zero_coefficient() {
    static const BigRational zero(0);
    return zero;
}

}  // namespace

EpsPolynomial::EpsPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

EpsPolynomial EpsPolynomial::constant(const BigRational& c) { return EpsPolynomial({c}); }

EpsPolynomial EpsPolynomial::monomial(const BigRational& c, std::size_t power) {
    if (c == 0) return {};
    std::vector<BigRational> coeffs(power + 1);
    coeffs[power] = c;
    return EpsPolynomial(std::move(coeffs));
}

void EpsPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t EpsPolynomial::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return 0;
}

const BigRational& EpsPolynomial::operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : zero_coefficient();
}

BigRational EpsPolynomial::eval(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

EpsPolynomial EpsPolynomial::shift_down(std::size_t k) const {
    assert(is_zero() || k <= valuation());
    if (k >= coeffs_.size()) return {};
    return EpsPolynomial(std::vector<BigRational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

EpsPolynomial EpsPolynomial::monic() const {
    if (is_zero()) return {};
    BigRational inv = 1 / leading();
    return *this * inv;
}

EpsPolynomial EpsPolynomial::operator-() const {
    EpsPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

EpsPolynomial operator+(const EpsPolynomial& a, const EpsPolynomial& b) {
    std::vector<BigRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return EpsPolynomial(std::move(out));
}

EpsPolynomial operator-(const EpsPolynomial& a, const EpsPolynomial& b) {
    std::vector<BigRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return EpsPolynomial(std::move(out));
}

EpsPolynomial operator*(const EpsPolynomial& a, const EpsPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return EpsPolynomial(std::move(out));
}

EpsPolynomial operator*(const EpsPolynomial& a, const BigRational& c) {
    if (c == 0) return {};
    EpsPolynomial r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::pair<EpsPolynomial, EpsPolynomial> EpsPolynomial::divmod(const EpsPolynomial& a, const EpsPolynomial& b) {
    if (b.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
    if (a.degree() < b.degree()) return {EpsPolynomial{}, a};
    std::vector<BigRational> rem(a.coeffs_);
    std::vector<BigRational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
    const BigRational inv_lead = 1 / b.leading();
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigRational q = rem[k + db] * inv_lead;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs_[j];
        quot[k] = std::move(q);
    }
    rem.resize(db);
    return {EpsPolynomial(std::move(quot)), EpsPolynomial(std::move(rem))};
}

EpsPolynomial gcd(const EpsPolynomial& a, const EpsPolynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Common eps-power factor first; the remaining parts have nonzero
    // constant terms, which keeps the Euclidean loop short for the
    // monomial-heavy inputs this library sees.
    const std::size_t shift = std::min(a.valuation(), b.valuation());
    EpsPolynomial x = a.shift_down(a.valuation()).monic();
    EpsPolynomial y = b.shift_down(b.valuation()).monic();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero() && y.degree() > 0) {
        EpsPolynomial r = EpsPolynomial::divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    EpsPolynomial core = y.is_zero() ? x : EpsPolynomial::constant(BigRational(1));
    return core * EpsPolynomial::monomial(BigRational(1), shift);
}

EpsPolynomial exact_quotient(const EpsPolynomial& a, const EpsPolynomial& b) {
    auto [q, r] = EpsPolynomial::divmod(a, b);
    assert(r.is_zero());
    return q;
}

BigRational root_free_radius(const EpsPolynomial& p) {
    if (p.is_zero()) return BigRational(1);
    const EpsPolynomial q = p.shift_down(p.valuation());
    if (q.degree() <= 0) return BigRational(1);
    BigRational max_ratio(0);
    const BigRational q0 = abs(q[0]);
    for (std::size_t i = 1; i < q.coeffs().size(); ++i) {
        BigRational ratio = abs(q[i]) / q0;
        if (ratio > max_ratio) max_ratio = ratio;
    }
    return 1 / (1 + max_ratio);
}

}  // namespace plaus
