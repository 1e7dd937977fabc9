// Acceptance suite: one PASS/FAIL line per criterion, each timed against
// its runtime limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "plaus/axioms.hpp"
#include "plaus/cli.hpp"
#include "plaus/credal.hpp"
#include "plaus/embedding.hpp"
#include "plaus/evidence.hpp"
#include "plaus/kernel.hpp"
#include "plaus/refinement.hpp"

using namespace plaus;

namespace {

using Q = BigRational;

/// Collects expectation outcomes; keeps the first few failure messages.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (ok) return;
        ++failed_;
        if (messages_.size() < 5) messages_.push_back(what);
    }
    std::size_t count() const { return count_; }
    std::size_t failed() const { return failed_; }
    const std::vector<std::string>& messages() const { return messages_; }

private:
    std::size_t count_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> messages_;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Checks&)> body;
};

EpsRational q(long n, long d = 1) { return EpsRational(Q(n, d)); }

int run_cli(std::vector<std::string> args, std::string* output = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (output) *output = out.str();
    return code;
}

void gelman(Checks& c) {
    const GelmanReport r = run_gelman();
    const Frame& f = r.frame;
    const AtomSet bc = f.set({"BC"}), nbnc = f.set({"nBnC"});
    c.expect(r.dempster == MassFunction(f, {{bc, q(1, 2)}, {nbnc, q(1, 2)}}), "dempster result " + r.dempster.format());
    c.expect(r.robust_masses.size() == 1 && r.robust_masses[0].first == f.set({"BC", "nBnC"}) &&
                 r.robust_masses[0].second == q(1),
             "robust mass not all on {BC, nBnC}");
    c.expect(r.robust_b == std::pair<Q, Q>(0, 1), "robust envelopes for B");
    c.expect(r.dempster_c == std::pair<EpsRational, EpsRational>(q(1, 2), q(1, 2)), "dempster bel/pl for C");
    std::string out;
    c.expect(run_cli({"gelman"}, &out) == 0, "gelman command exit code");
    c.expect(out.find("dempster: {BC}: 1/2; {nBnC}: 1/2\n") != std::string::npos, "gelman dempster line");
    c.expect(out.find("robust: {BC, nBnC}: 1\n") != std::string::npos, "gelman robust line");
}

void field_axioms(Checks& c) {
    std::mt19937_64 rng(2001);
    std::vector<EpsRational> v;
    for (int i = 0; i < 1000; ++i) v.push_back(oracle::random_eps(rng));
    const EpsRational zero, one(1);
    const Q t(1, 7);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const EpsRational& a = v[i];
        const EpsRational& b = v[(i + 1) % v.size()];
        const EpsRational& d = v[(i + 2) % v.size()];
        const std::string at = "element " + std::to_string(i);
        c.expect((a + b) + d == a + (b + d), "additive associativity at " + at);
        c.expect((a * b) * d == a * (b * d), "multiplicative associativity at " + at);
        c.expect(a + b == b + a, "additive commutativity at " + at);
        c.expect(a * b == b * a, "multiplicative commutativity at " + at);
        c.expect(a * (b + d) == a * b + a * d, "distributivity at " + at);
        c.expect(a + zero == a && a * one == a, "identities at " + at);
        c.expect(a + (-a) == zero && a - a == zero, "additive inverse at " + at);
        if (!a.is_zero()) c.expect(a * (one / a) == one && a / a == one, "multiplicative inverse at " + at);
        // Independent check of the product by evaluation of raw coefficients.
        const Q da = oracle::horner(oracle::coeffs(a.den()), t), db = oracle::horner(oracle::coeffs(b.den()), t);
        if (da != 0 && db != 0)
            c.expect(oracle::value_at(a * b, t) == oracle::value_at(a, t) * oracle::value_at(b, t),
                     "product evaluation at " + at);
    }
}

void order_soundness(Checks& c) {
    std::mt19937_64 rng(3001);
    const EpsRational eps = EpsRational::eps();
    for (int i = 0; i < 500; ++i) {
        const EpsRational a = oracle::random_eps(rng);
        EpsRational b;
        switch (i % 5) {
        case 0: b = a; break;
        case 1: b = a + pow(eps, 1 + static_cast<unsigned>(i % 7)); break;
        default: b = oracle::random_eps(rng);
        }
        const Ordering o = compare(a, b);
        const int expected = oracle::sign_by_evaluation(a, b);
        const int got = o == Ordering::LT ? -1 : o == Ordering::EQ ? 0 : 1;
        c.expect(got == expected, "compare disagrees with evaluation on pair " + std::to_string(i));

        // Below the library's own bound, evaluation must agree as well.
        const Q bound = sign_stable_bound(a, b);
        for (const Q& s : {Q(bound), Q(bound / 3)}) {
            const Q diff = oracle::value_at(a, s) - oracle::value_at(b, s);
            c.expect(sgn(diff) == got, "sign at the stable bound on pair " + std::to_string(i));
        }
    }
    for (int i = 0; i < 100; ++i) {
        Q r = oracle::random_rational(rng, 1000, false);
        if (r == 0) r = 1;
        if (i % 4 == 0) r /= Q(mpz_class(10) * mpz_class(1'000'000'000) * mpz_class(1'000'000'000));
        c.expect(compare(eps, EpsRational(r)) == Ordering::LT, "eps not below " + r.get_str());
    }
}

template <class K>
void expect_axioms(Checks& c, const K& k, const char* name) {
    const AxiomReport r = check_axioms(k, 500, 4001);
    for (const auto& a : r.results) c.expect(a.passed, std::string(name) + " fails " + a.name);
    c.expect(r.all_passed(), std::string(name) + " report");
}

void kernel_axioms(Checks& c) {
    expect_axioms(c, RationalKernel{}, "rat");
    expect_axioms(c, EpsKernel{}, "eps");
    expect_axioms(c, BoolKernel{}, "bool");
    const AxiomReport broken = check_axioms(BrokenComplementKernel{}, 500, 4001);
    c.expect(!broken.all_passed(), "broken kernel passes");
    const AxiomResult* inv = broken.find("S involution");
    c.expect(inv && !inv->passed && !inv->witness.empty(), "broken kernel has no involution witness");
    if (inv && !inv->witness.empty()) {
        // Recompute the witness independently: S(S(x)) with S(x) = (1 - x)^2.
        const Q x(inv->witness[0].substr(2));
        const Q sx = (1 - x) * (1 - x);
        c.expect((1 - sx) * (1 - sx) != x, "witness " + inv->witness[0] + " is not a counterexample");
    }
}

template <class K>
void expect_embedding(Checks& c, const K& k, const char* name) {
    const AxiomReport r = verify_embedding(k, 200, 5001);
    for (const char* law : {"F homomorphism", "G homomorphism", "order preservation", "injectivity",
                            "two-thirds identification"})
        c.expect(r.find(law) != nullptr, std::string(name) + " lacks " + law);
    for (const auto& a : r.results) c.expect(a.passed, std::string(name) + " fails " + a.name);
}

void embedding(Checks& c) {
    expect_embedding(c, RationalKernel{}, "rat");
    expect_embedding(c, EpsKernel{}, "eps");
    // 2/3 and [x+x, x+x+x] name the same fraction: 2/3 * 3x = 1 * 2x.
    Embedding<RationalKernel> emb{RationalKernel{}};
    for (const Q& x : {Q(1, 8), Q(1, 5), Q(1, 1000)}) {
        const auto f = emb.frac(x + x, x + x + x);
        c.expect(Q(2, 3) * f.b == Q(1) * f.a, "cross-multiplication for x = " + x.get_str());
        c.expect(emb.frac_eq(emb.frac(Q(2, 3), 1), f), "frac_eq for x = " + x.get_str());
    }
    std::string out;
    c.expect(run_cli({"embed", "--kernel", "rat", "--samples", "200"}, &out) == 0, "embed command exit code");
}

template <class K>
void expect_laws(Checks& c, const K& k, const char* name) {
    Rng rng(6001);
    for (Law law : {Law::assoc_F, Law::comm_F, Law::comm_G, Law::assoc_G, Law::distrib}) {
        int valid = 0;
        for (int tries = 0; valid < 500 && tries < 50'000; ++tries) {
            std::vector<typename K::value_type> v;
            for (std::size_t i = 0; i < arity(law); ++i) v.push_back(k.sample(rng));
            try {
                const auto [left, right] = two_path_eval(k, law, std::span<const typename K::value_type>(v));
                c.expect(k.equal(left, right), std::string(name) + " " + to_string(law) + " paths differ");
                ++valid;
            } catch (const Error& e) {
                if (e.code() != Errc::scenario_undefined) throw;
            }
        }
        c.expect(valid == 500, std::string(name) + " " + to_string(law) + ": only " + std::to_string(valid) + " valid tuples");
    }
}

void scenarios(Checks& c) {
    expect_laws(c, RationalKernel{}, "rat");
    expect_laws(c, EpsKernel{}, "eps");
}

/// Smallest (n, m) with x^n < c^m < y^n by direct powers.
std::optional<std::pair<std::size_t, std::size_t>> brute_separate(const Q& x, const Q& y, const Q& c, std::size_t bound) {
    Q xn = x, yn = y;
    for (std::size_t n = 1; n <= bound; ++n, xn *= x, yn *= y) {
        Q cm = c;
        for (std::size_t m = 1; m <= bound; ++m, cm *= c)
            if (xn < cm && cm < yn) return std::pair{n, m};
    }
    return std::nullopt;
}

void non_archimedean(Checks& c) {
    const EpsRational eps = EpsRational::eps();
    const ArchimedeanResult e = archimedean_check(EpsKernel{}, eps, 1'000'000);
    c.expect(!e.found && e.reason == "bound reached", "eps archimedean check found " + std::to_string(e.n));
    const ArchimedeanResult r = archimedean_check(RationalKernel{}, Q(1, 2), 1'000'000);
    c.expect(r.found && r.n == 2, "rat archimedean check for 1/2");

    RationalKernel rat;
    const struct {
        Q x, y, c;
    } cases[] = {{Q(1, 4), Q(1, 2), Q(1, 3)}, {Q(1, 8), Q(1, 2), Q(1, 2)}, {Q(2, 5), Q(3, 5), Q(9, 10)}};
    for (const auto& k : cases) {
        const SeparabilityResult got = separability_check(rat, k.x, k.y, k.c, 10);
        const auto want = brute_separate(k.x, k.y, k.c, 10);
        c.expect(got.found == want.has_value() && (!want || (got.n == want->first && got.m == want->second)),
                 "separability disagrees with brute force for x = " + k.x.get_str());
    }
    const SeparabilityResult first = separability_check(rat, Q(1, 4), Q(1, 2), Q(1, 3), 10);
    c.expect(first.found && first.n == 1 && first.m == 1, "rat separability example");
    const SeparabilityResult none = separability_check(EpsKernel{}, eps * eps, eps, EpsRational(Q(1, 2)), 1000);
    c.expect(!none.found, "eps separability found a witness");
}

void robust_engine(Checks& c) {
    std::mt19937_64 rng(8001);
    std::size_t interactive = 0;
    for (int i = 0; i < 500; ++i) {
        const PlausVector p = oracle::random_vector(rng, 1 + static_cast<std::size_t>(i % 5));
        const Decomposition d = zimmermann_decompose(p);
        const std::size_t n = p.size();
        if (!d.a) {
            c.expect(p.is_precise(), "missing interactive part for imprecise vector");
            continue;
        }
        c.expect(PlausVector::constant(n, d.s) + *d.a * PlausVector::constant(n, d.t) == p,
                 "reconstruction fails on vector " + to_string(p));
        if (interactive < 100) {
            Q k = oracle::random_rational(rng, 50, false);
            while (k <= 0 || k >= 1) k = oracle::random_rational(rng, 50, false);
            c.expect(incomparable(*d.a, PlausVector::constant(n, EpsRational(k))),
                     "interactive part comparable to constant " + k.get_str());
            ++interactive;
        }
    }
    c.expect(interactive == 100, "only " + std::to_string(interactive) + " interactivity checks");

    const PlausVector x{{q(2, 5), q(0)}}, y{{q(0), q(3, 7)}};
    c.expect(!x.is_zero() && !y.is_zero() && (x * y).is_zero(), "zero divisor witness");
    int nonzero = 0;
    while (nonzero < 500) {
        const PlausVector v = oracle::random_vector(rng, 3);
        if (v.is_zero()) continue;
        ++nonzero;
        c.expect(!(v * v).is_zero(), "nilpotent vector " + to_string(v));
    }
}

/// Dempster combination, or nullopt on total conflict.
std::optional<MassFunction> combine(const MassFunction& a, const MassFunction& b) {
    try {
        return dempster_combine(a, b);
    } catch (const Error& e) {
        if (e.code() != Errc::total_conflict) throw;
        return std::nullopt;
    }
}

void evidence(Checks& c) {
    std::mt19937_64 rng(9001);
    int pairs = 0, triples = 0;
    for (int i = 0; i < 200; ++i) {
        const Frame f = oracle::random_frame(rng);
        const MassFunction a = oracle::random_mass(rng, f), b = oracle::random_mass(rng, f), d = oracle::random_mass(rng, f);
        const auto ab = combine(a, b), ba = combine(b, a);
        c.expect(ab.has_value() == ba.has_value() && (!ab || *ab == *ba), "commutativity");
        pairs += ab.has_value();

        const auto left = ab ? combine(*ab, d) : std::nullopt;
        const auto bd = combine(b, d);
        const auto right = bd ? combine(a, *bd) : std::nullopt;
        // Total conflict at either stage means the triple has no common support.
        c.expect(left.has_value() == right.has_value() && (!left || *left == *right), "associativity");
        triples += left.has_value();

        c.expect(dempster_combine(a, MassFunction::vacuous(f)) == a, "vacuous identity");

        const std::size_t atom = std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng);
        const MassFunction sure(f, {{AtomSet::singleton(atom), q(1)}});
        const auto absorbed = combine(a, sure);
        const bool possible = !bel_pl(a, AtomSet::singleton(atom)).second.is_zero();
        c.expect(absorbed.has_value() == possible && (!absorbed || *absorbed == sure), "singleton absorption");

        const CredalSet credal = mass_to_credal(a);
        for (std::size_t s = 0; s < f.size(); ++s) {
            const AtomSet e = AtomSet::singleton(s);
            const auto [bel, pl] = oracle::bel_pl_oracle(a, e);
            c.expect(bel_pl(a, e) == std::pair{bel, pl}, "bel/pl against the definition");
            c.expect(envelopes(credal, e) == std::pair{standard_part(bel), standard_part(pl)}, "envelope agreement");
        }
    }
    // Random frames of one atom always combine; enough pairs must be informative.
    c.expect(pairs >= 100 && triples >= 50, "too few nonconflicting samples: " + std::to_string(pairs) + " pairs, " +
                                                std::to_string(triples) + " triples");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "gelman reproduction", 1, gelman},
        {2, "field axioms on 1000 random elements", 30, field_axioms},
        {3, "order soundness", 10, order_soundness},
        {4, "kernel axioms", 30, kernel_axioms},
        {5, "embedding homomorphism", 60, embedding},
        {6, "two-path scenarios", 30, scenarios},
        {7, "non-archimedean detection", 10, non_archimedean},
        {8, "robust engine", 10, robust_engine},
        {9, "evidence properties", 30, evidence},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        Checks checks;
        std::string crash;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(checks);
        } catch (const std::exception& e) {
            crash = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < cr.limit_seconds;
        const bool ok = crash.empty() && checks.failed() == 0 && in_time;
        failures += !ok;
        std::printf("%s %d %s (%zu checks, %.3f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name.c_str(),
                    checks.count(), seconds, cr.limit_seconds);
        if (!crash.empty()) std::printf("  exception: %s\n", crash.c_str());
        if (!in_time) std::printf("  over the runtime limit\n");
        for (const auto& m : checks.messages()) std::printf("  %s\n", m.c_str());
        if (checks.failed() > checks.messages().size())
            std::printf("  ... %zu more failures\n", checks.failed() - checks.messages().size());
    }
    std::printf("%s: %d of %zu criteria failed\n", failures ? "FAIL" : "PASS", failures, criteria.size());
    return failures ? 1 : 0;
}
