#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"
#include "plaus/eps_parser.hpp"
#include "plaus/eps_rational.hpp"

using plaus::BigRational;
using plaus::EpsPolynomial;
using plaus::EpsRational;
using plaus::Errc;
using plaus::Ordering;

namespace {

EpsPolynomial poly(std::vector<BigRational> c) { return EpsPolynomial(std::move(c)); }
EpsRational q(long n, long d = 1) { return EpsRational(BigRational(n, d)); }
const EpsRational eps = EpsRational::eps();

}  // namespace

TEST_CASE("polynomials trim trailing zeros") {
    CHECK(poly({1, 0, 0}).degree() == 0);
    CHECK(poly({0, 0}).is_zero());
    CHECK(poly({0, 0, 3}).valuation() == 2);
    CHECK(EpsPolynomial().degree() == -1);
}

TEST_CASE("polynomial gcd is monic") {
    // (1 + eps)(2 - eps) and (1 + eps) eps
    const auto a = poly({2, 1, -1});
    const auto b = poly({0, 1, 1});
    CHECK(plaus::gcd(a, b) == poly({1, 1}));
    CHECK(plaus::gcd(EpsPolynomial(), EpsPolynomial()).is_zero());
}

TEST_CASE("normalize") {
    SUBCASE("common factor eps cancels") {
        const auto r = EpsRational::normalize(poly({0, 0, 1, -1}), poly({0, 1}));
        CHECK(r == eps - eps * eps);
        CHECK(r.den() == poly({1}));
    }
    SUBCASE("zero numerator") {
        const auto r = EpsRational::normalize(EpsPolynomial(), poly({5}));
        CHECK(r.is_zero());
        CHECK(r.den() == poly({1}));
    }
    SUBCASE("content reduction") {
        const auto r = EpsRational::normalize(poly({0, 2}), poly({4}));
        CHECK(r.num() == poly({0, 1}));
        CHECK(r.den() == poly({2}));
        const BigRational t(1, 16);
        CHECK(oracle::value_at(r, t) == BigRational(2) * t / 4);
    }
    SUBCASE("denominator sign fixed at the lowest term") {
        const auto r = EpsRational::normalize(poly({1}), poly({0, -1, 1}));
        CHECK(r.den().lowest() > 0);
        CHECK(r.sign() < 0);
    }
    SUBCASE("idempotent") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 50; ++i) {
            const auto r = oracle::random_eps(rng);
            CHECK(EpsRational::normalize(r.num(), r.den()) == r);
        }
    }
    SUBCASE("zero denominator") {
        CHECK(code_of([] { EpsRational::normalize(poly({1}), EpsPolynomial()); }) == Errc::division_by_zero);
    }
}

TEST_CASE("arithmetic") {
    CHECK(eps + (q(1) - eps) == q(1));
    CHECK(q(1, 2) * q(2, 3) == q(1, 3));
    const auto inv = q(1) / eps;
    CHECK(inv.num() == poly({1}));
    CHECK(inv.den() == poly({0, 1}));
    CHECK_FALSE(inv.is_finite());

    const auto d = q(1) / (q(1) - eps) - (q(1) + eps);
    CHECK(d == eps * eps / (q(1) - eps));
    const BigRational t(1, 8);
    CHECK(oracle::value_at(d, t) == BigRational(1) / (1 - t) - (1 + t));

    CHECK(code_of([] { (void)(q(1) / EpsRational()); }) == Errc::division_by_zero);
}

TEST_CASE("compare") {
    CHECK(plaus::compare(eps, q(1, 1000000)) == Ordering::LT);
    const auto x = (q(1) + q(2) * eps) / (q(2) + eps);
    CHECK(plaus::compare(x, x) == Ordering::EQ);

    const auto a = q(1) / (q(1) - eps);
    const auto b = q(1) + eps;
    CHECK(plaus::compare(a, b) == Ordering::GT);
    for (unsigned k = 10; k <= 20; ++k) {
        const auto t = oracle::pow2_inv(k);
        CHECK(oracle::value_at(a, t) > oracle::value_at(b, t));
    }
    CHECK(std::string(plaus::to_string(Ordering::LT)) == "LT");
}

TEST_CASE("standard part and infinitesimals") {
    CHECK(plaus::standard_part((q(1) + q(2) * eps) / (q(2) + eps)) == BigRational(1, 2));
    CHECK(plaus::standard_part(eps * eps) == 0);
    CHECK(code_of([] { plaus::standard_part(q(1) / eps); }) == Errc::infinite);

    CHECK(plaus::is_infinitesimal(eps * eps / (q(1) + eps)));
    CHECK_FALSE(plaus::is_infinitesimal(EpsRational()));
    CHECK_FALSE(plaus::is_infinitesimal(q(1, 2) + eps));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(11);
    const BigRational t(1, 7);
    for (int i = 0; i < 60; ++i) {
        const auto a = oracle::random_eps(rng);
        const auto b = oracle::random_eps(rng);
        const auto c = oracle::random_eps(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + -a).is_zero());
        if (!a.is_zero()) CHECK(a * (q(1) / a) == q(1));
        // Independent check at a point where no denominator vanishes.
        const auto p = a * b + c;
        bool defined = true;
        for (const auto* v : {&a, &b, &c, &p})
            if (oracle::horner(oracle::coeffs(v->den()), t) == 0) defined = false;
        if (defined) CHECK(oracle::value_at(p, t) == oracle::value_at(a, t) * oracle::value_at(b, t) + oracle::value_at(c, t));
    }
}

TEST_CASE("total order properties") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 60; ++i) {
        const auto a = oracle::random_eps(rng, 4, 20);
        const auto b = oracle::random_eps(rng, 4, 20);
        const auto c = oracle::random_eps(rng, 4, 20);
        const int trich = (a < b) + (a == b) + (a > b);
        CHECK(trich == 1);
        if (a <= b && b <= a) CHECK(a == b);
        if (a < b && b < c) CHECK(a < c);
        if (a < b) {
            CHECK(a + c < b + c);
            if (c.sign() > 0) CHECK(a * c < b * c);
        }
        CHECK(plaus::sign(BigRational((a > b) - (a < b))) == oracle::sign_by_evaluation(a, b));
        // One more halving past the threshold must not change the sign.
        CHECK(oracle::sign_by_evaluation(a, b) == oracle::sign_by_evaluation(a, b, 3));
    }
}

TEST_CASE("sign stable bound agrees with the oracle") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        const auto a = oracle::random_eps(rng, 3, 30);
        const auto b = oracle::random_eps(rng, 3, 30);
        const BigRational t = plaus::sign_stable_bound(a, b);
        CHECK(t > 0);
        const int expected = (a > b) - (a < b);
        CHECK(sgn(oracle::value_at(a, t) - oracle::value_at(b, t)) == expected);
    }
}

TEST_CASE("standard part is a ring homomorphism on finite elements") {
    std::mt19937_64 rng(14);
    int checked = 0;
    while (checked < 40) {
        const auto a = oracle::random_eps(rng, 4, 30);
        const auto b = oracle::random_eps(rng, 4, 30);
        if (!a.is_finite() || !b.is_finite()) continue;
        ++checked;
        CHECK(plaus::standard_part(a + b) == plaus::standard_part(a) + plaus::standard_part(b));
        CHECK(plaus::standard_part(a * b) == plaus::standard_part(a) * plaus::standard_part(b));
    }
}

TEST_CASE("eps is positive and below every positive rational") {
    std::mt19937_64 rng(15);
    CHECK(eps.sign() > 0);
    for (int i = 0; i < 100; ++i) {
        BigRational r = oracle::random_rational(rng, 1000000, false);
        if (r == 0) r = BigRational(1, 1000001);
        CHECK(eps < EpsRational(r));
    }
}

TEST_CASE("display form") {
    CHECK(plaus::to_string((q(1) + q(2) * eps) / (q(2) + eps)) == "(1 + 2*eps)/(2 + eps)");
    CHECK(plaus::to_string(q(1, 2) + eps) == "1/2 + eps");
    CHECK(plaus::to_string(EpsRational()) == "0");
    CHECK(plaus::to_string(q(-3, 4)) == "-3/4");
}

TEST_CASE("parser") {
    CHECK(plaus::parse_eps_expr("1/2 + eps") == q(1, 2) + eps);
    CHECK(plaus::parse_eps_expr("(1+eps)/(2-eps)") == (q(1) + eps) / (q(2) - eps));
    CHECK(plaus::parse_eps_expr("eps^2/3") == eps * eps / q(3));
    CHECK(plaus::parse_eps_expr("2/3^2") == q(4, 9));
    CHECK(plaus::parse_eps_expr("2 / 3^2") == q(2, 9));
    CHECK(plaus::parse_eps_expr("-1/2*eps") == q(-1, 2) * eps);
    CHECK(plaus::parse_eps_expr("-(eps)") == -eps);
    CHECK(plaus::parse_eps_expr(" eps ^ 0 ") == q(1));

    SUBCASE("syntax errors carry a position") {
        try {
            plaus::parse_eps_expr("eps +");
            FAIL("expected a syntax error");
        } catch (const plaus::SyntaxError& e) {
            CHECK(e.position() == 5);
            CHECK(std::string(e.what()).find("position 5") != std::string::npos);
        }
        for (const char* bad : {"", "(1", "1 2", "eps^", "eps^-1", "abc", "1/+2"}) {
            CAPTURE(bad);
            CHECK(code_of([&] { plaus::parse_eps_expr(bad); }) == Errc::parse);
        }
    }
    SUBCASE("zero denominators") {
        CHECK(code_of([] { plaus::parse_eps_expr("1/0"); }) == Errc::division_by_zero);
        CHECK(code_of([] { plaus::parse_eps_expr("1/(eps - eps)"); }) == Errc::division_by_zero);
    }
}

TEST_CASE("print then parse round trip") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 100; ++i) {
        const auto a = oracle::random_eps(rng);
        const auto text = plaus::to_string(a);
        CAPTURE(text);
        CHECK(plaus::parse_eps_expr(text) == a);
    }
}
