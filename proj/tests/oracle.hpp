#pragma once

// Reference computations used by the tests. Nothing here calls the
// library's order, gcd or evaluation code: values are taken apart into
// raw coefficient vectors and recomputed with plain GMP arithmetic.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "plaus/eps_rational.hpp"
#include "plaus/evidence.hpp"

namespace oracle {

using Poly = std::vector<mpq_class>;

inline Poly coeffs(const plaus::EpsPolynomial& p) { return Poly(p.coeffs().begin(), p.coeffs().end()); }

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline mpq_class horner(const Poly& p, const mpq_class& t) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

/// Exact value of a at eps = t, from the raw coefficients.
inline mpq_class value_at(const plaus::EpsRational& a, const mpq_class& t) {
    return horner(coeffs(a.num()), t) / horner(coeffs(a.den()), t);
}

/// r > 0 with every nonzero root z of p satisfying |z| > r: for the lowest
/// nonzero coefficient q0, |z| >= |q0| / (|q0| + max |q_i|).
inline mpq_class root_free_radius(const Poly& p) {
    std::size_t v = 0;
    while (v < p.size() && p[v] == 0) ++v;
    if (v + 1 >= p.size()) return 1;
    mpq_class m = 0;
    for (std::size_t i = v + 1; i < p.size(); ++i) m = std::max(m, mpq_class(abs(p[i])));
    const mpq_class q0 = abs(p[v]);
    return q0 / (q0 + m) / 2;
}

/// Smallest k with 2^-k below the root-free radius of (a - b) num * den.
inline unsigned stable_exponent(const plaus::EpsRational& a, const plaus::EpsRational& b) {
    const Poly na = coeffs(a.num()), da = coeffs(a.den()), nb = coeffs(b.num()), db = coeffs(b.den());
    const Poly p = mul(mul(sub(mul(na, db), mul(nb, da)), da), db);
    const mpq_class r = root_free_radius(p);
    unsigned k = 1;
    mpq_class t(1, 2);
    while (t >= r) {
        t /= 2;
        ++k;
    }
    return k;
}

inline mpq_class pow2_inv(unsigned k) {
    mpz_class d = 1;
    d <<= k;
    return mpq_class(mpz_class(1), d);
}

/// Sign of a - b decided by exact evaluation at eps = 2^-k, k past the
/// root threshold.
inline int sign_by_evaluation(const plaus::EpsRational& a, const plaus::EpsRational& b, unsigned extra = 0) {
    const mpq_class t = pow2_inv(stable_exponent(a, b) + extra);
    return sgn(value_at(a, t) - value_at(b, t));
}

inline mpq_class random_rational(std::mt19937_64& rng, long bound, bool allow_negative = true) {
    std::uniform_int_distribution<long> den(1, bound);
    std::uniform_int_distribution<long> num(allow_negative ? -bound : 0, bound);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline plaus::EpsPolynomial random_poly(std::mt19937_64& rng, int max_degree, long bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<mpq_class> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = random_rational(rng, bound);
    return plaus::EpsPolynomial(std::move(c));
}

/// Random element num/den with both degrees <= max_degree and coefficient
/// numerators and denominators bounded by `bound`.
inline plaus::EpsRational random_eps(std::mt19937_64& rng, int max_degree = 6, long bound = 100) {
    plaus::EpsPolynomial num = random_poly(rng, max_degree, bound);
    plaus::EpsPolynomial den;
    while (den.is_zero()) den = random_poly(rng, max_degree, bound);
    return plaus::EpsRational::normalize(std::move(num), std::move(den));
}

/// Random probability vector in Q(eps) over n atoms: nonnegative terms
/// q + r*eps normalized to total 1.
inline std::vector<plaus::EpsRational> random_dist(std::mt19937_64& rng, std::size_t n) {
    std::vector<plaus::EpsRational> w(n);
    plaus::EpsRational total;
    while (total.is_zero()) {
        total = plaus::EpsRational();
        for (auto& x : w) {
            x = plaus::EpsRational(random_rational(rng, 6, false)) +
                plaus::EpsRational(random_rational(rng, 6, false)) * plaus::EpsRational::eps();
            if (std::bernoulli_distribution(0.25)(rng)) x = plaus::EpsRational();
            total += x;
        }
    }
    for (auto& x : w) x /= total;
    return w;
}

/// Vector of n random elements of low degree.
inline plaus::PlausVector random_vector(std::mt19937_64& rng, std::size_t n) {
    plaus::PlausVector v;
    for (std::size_t i = 0; i < n; ++i) v.components.push_back(random_eps(rng, 2, 10));
    return v;
}

/// Frame of one to four atoms named p, q, r, s.
inline plaus::Frame random_frame(std::mt19937_64& rng) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('p' + i)));
    return plaus::Frame(atoms);
}

/// Random body of evidence: up to four distinct focal sets, positive
/// rational masses summing to one.
inline plaus::MassFunction random_mass(std::mt19937_64& rng, const plaus::Frame& frame, bool bayesian = false) {
    const std::uint64_t full = frame.full().bits();
    std::set<std::uint64_t> sets;
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int tries = 0; static_cast<int>(sets.size()) < n && tries < 50; ++tries) {
        sets.insert(bayesian ? std::uint64_t{1} << std::uniform_int_distribution<std::size_t>(0, frame.size() - 1)(rng)
                             : std::uniform_int_distribution<std::uint64_t>(1, full)(rng));
    }
    std::vector<mpq_class> w;
    mpq_class total = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        w.emplace_back(std::uniform_int_distribution<long>(1, 9)(rng));
        total += w.back();
    }
    std::vector<plaus::FocalElement> focal;
    std::size_t i = 0;
    for (auto s : sets) focal.push_back({plaus::AtomSet(s), plaus::EpsRational(mpq_class(w[i++] / total))});
    return plaus::MassFunction(frame, std::move(focal));
}

/// Bel and Pl straight from the definitions, summing over every subset.
inline std::pair<plaus::EpsRational, plaus::EpsRational> bel_pl_oracle(const plaus::MassFunction& m, plaus::AtomSet e) {
    plaus::EpsRational bel, pl;
    const std::uint64_t full = m.frame().full().bits();
    for (std::uint64_t s = 1; s <= full; ++s) {
        const auto v = m.mass(plaus::AtomSet(s));
        if ((s & ~e.bits()) == 0) bel += v;
        if ((s & e.bits()) != 0) pl += v;
    }
    return {bel, pl};
}

}  // namespace oracle
