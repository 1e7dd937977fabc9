#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plaus/axioms.hpp"
#include "plaus/kernel.hpp"

namespace plaus {

/// [a, b] with b != bottom: the quotient a / b. (a, b) ~ (c, d) iff
/// F(a, d) = F(b, c).
template <class V>
struct Frac {
    V a;
    V b;
};

/// [[p, n]]: the difference p - n of two fractions. (p, n) ~ (p', n') iff
/// p + n' = n + p'.
template <class V>
struct Diff {
    Frac<V> p;
    Frac<V> n;
};

/// num / den with den not equivalent to zero.
template <class V>
struct FieldElem {
    Diff<V> num;
    Diff<V> den;
};

/// c_n = c^ceil(log2 n) with c = min(e, S(e)); n = 1 yields c itself.
/// With this unit the n-fold sum F(c_n, a_1) + ... + F(c_n, a_n) is
/// defined for any a_i. Throws Error(Errc::trivial_kernel) when the kernel
/// has no element strictly between bottom and top.
template <Kernel K>
typename K::value_type choose_unit(const K& k, std::size_t n, std::optional<typename K::value_type> e = std::nullopt) {
    if (!e) e = k.nontrivial();
    if (!e) throw Error(Errc::trivial_kernel, "trivial kernel");
    if (!k.less(k.bottom(), *e) || !k.less(*e, k.top()))
        throw Error(Errc::invalid_argument, "unit seed must lie strictly between bottom and top");
    if (n == 0) throw Error(Errc::invalid_argument, "choose_unit needs n >= 1");
    const auto c = min_of(k, *e, k.complement(*e));
    std::size_t exponent = 0;
    while ((std::size_t{1} << exponent) < n) ++exponent;
    auto unit = c;
    for (std::size_t i = 1; i < exponent; ++i) unit = k.conj(unit, c);
    return unit;
}

/// Ordered-field extension of a plausibility kernel, built in three
/// quotient steps: fractions of kernel values, differences of fractions,
/// and quotients of differences. Every comparison reduces to kernel
/// equality or order through cross-multiplication, so equality and order
/// are decidable without normal forms.
template <Kernel K>
class Embedding {
public:
    using V = typename K::value_type;
    using Fr = Frac<V>;
    using Df = Diff<V>;
    using Elem = FieldElem<V>;

    static constexpr std::size_t unit_budget = 64;

    explicit Embedding(K kernel) : k_(std::move(kernel)) {
        if (auto e = k_.nontrivial()) {
            base_unit_ = choose_unit(k_, 2, e);
        } else {
            base_unit_ = k_.top();
        }
    }

    const K& kernel() const noexcept { return k_; }
    const V& base_unit() const noexcept { return base_unit_; }

    // Fractions

    Fr frac(const V& a, const V& b) const {
        if (k_.equal(b, k_.bottom())) throw Error(Errc::division_by_zero, "division by zero");
        return Fr{a, b};
    }

    bool frac_eq(const Fr& x, const Fr& y) const { return k_.equal(k_.conj(x.a, y.b), k_.conj(x.b, y.a)); }
    bool frac_less(const Fr& x, const Fr& y) const { return k_.less(k_.conj(x.a, y.b), k_.conj(y.a, x.b)); }
    Fr frac_mul(const Fr& x, const Fr& y) const { return Fr{k_.conj(x.a, y.a), k_.conj(x.b, y.b)}; }

    /// [e*a*d + e*c*b, e*b*d] for the given unit e, or nullopt if the sum
    /// is undefined for that unit.
    std::optional<Fr> frac_add_with(const Fr& x, const Fr& y, const V& e) const {
        auto lhs = k_.conj(e, k_.conj(x.a, y.b));
        auto rhs = k_.conj(e, k_.conj(y.a, x.b));
        auto sum = k_.disj(lhs, rhs);
        if (!sum) return std::nullopt;
        return Fr{*sum, k_.conj(e, k_.conj(x.b, y.b))};
    }

    /// Sum using the first unit c, c^2, c^3, ... that makes it defined.
    Fr frac_add(const Fr& x, const Fr& y) const {
        V e = base_unit_;
        for (std::size_t i = 0; i < unit_budget; ++i) {
            if (auto r = frac_add_with(x, y, e)) return *r;
            e = k_.conj(e, base_unit_);
        }
        throw Error(Errc::unit_exhausted, "summation unit exhausted");
    }

    Fr frac_zero() const { return Fr{k_.bottom(), k_.top()}; }
    Fr frac_one() const { return Fr{k_.top(), k_.top()}; }

    // Differences

    Df diff(const Fr& p, const Fr& n) const { return Df{p, n}; }
    bool diff_eq(const Df& x, const Df& y) const { return frac_eq(frac_add(x.p, y.n), frac_add(x.n, y.p)); }
    bool diff_less(const Df& x, const Df& y) const { return frac_less(frac_add(x.p, y.n), frac_add(y.p, x.n)); }
    Df diff_add(const Df& x, const Df& y) const { return Df{frac_add(x.p, y.p), frac_add(x.n, y.n)}; }
    Df diff_neg(const Df& x) const { return Df{x.n, x.p}; }
    Df diff_mul(const Df& x, const Df& y) const {
        return Df{frac_add(frac_mul(x.p, y.p), frac_mul(x.n, y.n)), frac_add(frac_mul(x.p, y.n), frac_mul(x.n, y.p))};
    }
    Df diff_zero() const { return Df{frac_zero(), frac_zero()}; }
    Df diff_one() const { return Df{frac_one(), frac_zero()}; }

    // Field elements

    Elem field(const Df& num, const Df& den) const {
        if (diff_eq(den, diff_zero())) throw Error(Errc::division_by_zero, "division by zero");
        return Elem{num, den};
    }

    Elem zero() const { return Elem{diff_zero(), diff_one()}; }
    Elem one() const { return Elem{diff_one(), diff_one()}; }

    /// d is identified with [[ [d, top], [bottom, top] ]] / 1.
    Elem embed(const V& x) const {
        require_in_domain(k_, x);
        return Elem{Df{Fr{x, k_.top()}, frac_zero()}, diff_one()};
    }

    bool eq(const Elem& x, const Elem& y) const { return diff_eq(diff_mul(x.num, y.den), diff_mul(y.num, x.den)); }

    /// a/b < c/d iff (a d)(b d) < (c b)(b d).
    bool less(const Elem& x, const Elem& y) const {
        const Df bd = diff_mul(x.den, y.den);
        return diff_less(diff_mul(diff_mul(x.num, y.den), bd), diff_mul(diff_mul(y.num, x.den), bd));
    }

    Elem add(const Elem& x, const Elem& y) const {
        return Elem{diff_add(diff_mul(x.num, y.den), diff_mul(y.num, x.den)), diff_mul(x.den, y.den)};
    }
    Elem mul(const Elem& x, const Elem& y) const { return Elem{diff_mul(x.num, y.num), diff_mul(x.den, y.den)}; }
    Elem neg(const Elem& x) const { return Elem{diff_neg(x.num), x.den}; }
    Elem sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

    Elem inverse(const Elem& x) const {
        if (diff_eq(x.num, diff_zero())) throw Error(Errc::division_by_zero, "division by zero");
        return Elem{x.den, x.num};
    }

private:
    K k_;
    V base_unit_;
};

/// Checks on sampled pairs that the embedding is a homomorphism for F and
/// G (where defined), preserves and reflects the order, and is injective.
/// Also checks the units, the rational identification [x+x, x+x+x] = 2/3
/// and its independence from x.
template <Kernel K>
AxiomReport verify_embedding(const K& k, std::size_t samples, std::uint64_t seed) {
    using V = typename K::value_type;
    Embedding<K> emb(k);
    AxiomReport report;
    report.kernel = std::string(k.name());
    report.samples = samples;
    report.seed = seed;

    auto slot = [&](const char* name) -> AxiomResult& {
        for (auto& r : report.results)
            if (r.name == name) return r;
        report.results.push_back(AxiomResult{name, true, 0, {}, {}});
        return report.results.back();
    };
    auto record = [&](const char* name, bool ok, std::vector<std::string> witness) {
        AxiomResult& r = slot(name);
        ++r.checked;
        if (!ok && r.passed) {
            r.passed = false;
            r.witness = std::move(witness);
        }
    };

    record("units", emb.eq(emb.embed(k.bottom()), emb.zero()) && emb.eq(emb.embed(k.top()), emb.one()), {});

    std::vector<std::pair<V, V>> pairs;
    std::vector<V> probes{k.bottom(), k.top()};
    if (auto e = k.nontrivial()) probes.push_back(*e);
    for (const auto& a : probes)
        for (const auto& b : probes) pairs.emplace_back(a, b);
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        V x = k.sample(rng);
        V y = k.sample(rng);
        pairs.emplace_back(std::move(x), std::move(y));
    }

    for (const auto& [x, y] : pairs) {
        const std::vector<std::string> w{"x=" + k.format(x), "y=" + k.format(y)};
        const auto ex = emb.embed(x);
        const auto ey = emb.embed(y);
        record("F homomorphism", emb.eq(emb.embed(k.conj(x, y)), emb.mul(ex, ey)), w);
        if (auto g = k.disj(x, y)) record("G homomorphism", emb.eq(emb.embed(*g), emb.add(ex, ey)), w);
        record("order preservation", k.less(x, y) == emb.less(ex, ey), w);
        if (!k.equal(x, y)) record("injectivity", !emb.eq(ex, ey), w);
    }

    if (auto e = k.nontrivial()) {
        // Any x below c_3 makes x + x + x defined.
        const V c = min_of(k, *e, k.complement(*e));
        const V x = k.conj(choose_unit(k, 3, e), c);
        const V x2 = k.conj(x, c);
        auto two_thirds = [&](const V& v) {
            const V twice = *k.disj(v, v);
            return emb.frac(twice, *k.disj(twice, v));
        };
        const auto a = two_thirds(x);
        const auto b = two_thirds(x2);
        record("two-thirds representation independence", emb.frac_eq(a, b), {"x=" + k.format(x), "x'=" + k.format(x2)});
        if constexpr (RationalValued<K>) {
            const auto q = emb.frac(k.from_rational(BigRational(2, 3)), k.top());
            record("two-thirds identification", emb.frac_eq(a, q), {"x=" + k.format(x)});
        }
    }
    return report;
}

}  // namespace plaus
