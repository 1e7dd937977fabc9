#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plaus/kernel.hpp"

namespace plaus {

struct AxiomResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    /// First violating tuple as "x=...", "y=..." entries; empty on pass.
    std::vector<std::string> witness;
    std::string detail;
};

struct AxiomReport {
    std::string kernel;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<AxiomResult> results;

    bool all_passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }

    const AxiomResult* find(std::string_view name) const {
        for (const auto& r : results)
            if (r.name == name) return &r;
        return nullptr;
    }
};

namespace detail {

template <Kernel K>
class AxiomChecker {
public:
    using V = typename K::value_type;

    explicit AxiomChecker(const K& k) : k_(k) {}

    void run(const V& x, const V& y, const V& z) {
        unary(x);
        binary(x, y);
        ternary(x, y, z);
    }

    std::vector<AxiomResult> take() { return std::move(results_); }

private:
    AxiomResult& slot(const char* name) {
        for (auto& r : results_)
            if (r.name == name) return r;
        results_.push_back(AxiomResult{name, true, 0, {}, {}});
        return results_.back();
    }

    std::string show(const char* label, const V& v) const { return std::string(label) + "=" + k_.format(v); }

    void record(const char* name, bool ok, std::vector<std::string> witness, std::string detail = {}) {
        AxiomResult& r = slot(name);
        ++r.checked;
        if (!ok && r.passed) {
            r.passed = false;
            r.witness = std::move(witness);
            r.detail = std::move(detail);
        }
    }

    bool eq(const V& a, const V& b) const { return k_.equal(a, b); }
    bool le(const V& a, const V& b) const { return leq(k_, a, b); }

    void unary(const V& x) {
        const V sx = k_.complement(x);
        const V ssx = k_.complement(sx);
        record("closure", k_.contains(sx), {show("x", x)}, "S(x)=" + k_.format(sx));
        record("S involution", eq(ssx, x), {show("x", x)}, "S(S(x))=" + k_.format(ssx));
        record("F zero", eq(k_.conj(k_.bottom(), x), k_.bottom()), {show("x", x)});
        record("F unit", eq(k_.conj(x, k_.top()), x), {show("x", x)});
        auto g = k_.disj(x, k_.bottom());
        record("G unit", g && eq(*g, x), {show("x", x)}, g ? "G(x,bottom)=" + k_.format(*g) : "G(x,bottom) undefined");
    }

    void binary(const V& x, const V& y) {
        const V fxy = k_.conj(x, y);
        const V fyx = k_.conj(y, x);
        record("closure", k_.contains(fxy), {show("x", x), show("y", y)}, "F(x,y)=" + k_.format(fxy));
        record("F symmetry", eq(fxy, fyx), {show("x", x), show("y", y)});
        record("F bound", le(fxy, min_of(k_, x, y)), {show("x", x), show("y", y)}, "F(x,y)=" + k_.format(fxy));

        auto gxy = k_.disj(x, y);
        auto gyx = k_.disj(y, x);
        bool sym = gxy.has_value() == gyx.has_value() && (!gxy || eq(*gxy, *gyx));
        if (gxy || gyx) record("G symmetry", sym, {show("x", x), show("y", y)});
        if (gxy) {
            record("closure", k_.contains(*gxy), {show("x", x), show("y", y)}, "G(x,y)=" + k_.format(*gxy));
            const V& mx = k_.less(x, y) ? y : x;
            record("G bound", le(mx, *gxy), {show("x", x), show("y", y)}, "G(x,y)=" + k_.format(*gxy));
        }

        if (!k_.equal(x, y)) {
            const V& lo = k_.less(x, y) ? x : y;
            const V& hi = k_.less(x, y) ? y : x;
            record("S strictly decreasing", k_.less(k_.complement(hi), k_.complement(lo)), {show("x", lo), show("y", hi)});
        }
    }

    void ternary(const V& x, const V& y, const V& z) {
        const std::vector<std::string> w{show("x", x), show("y", y), show("z", z)};

        record("F associativity", eq(k_.conj(k_.conj(x, y), z), k_.conj(x, k_.conj(y, z))), w);

        std::optional<V> left, right;
        if (auto xy = k_.disj(x, y)) left = k_.disj(*xy, z);
        if (auto yz = k_.disj(y, z)) right = k_.disj(x, *yz);
        if (left || right)
            record("G associativity", left && right && eq(*left, *right), w,
                   std::string("left ") + (left ? k_.format(*left) : "undefined") + ", right " +
                       (right ? k_.format(*right) : "undefined"));

        if (auto gxy = k_.disj(x, y)) {
            const V lhs = k_.conj(*gxy, z);
            auto rhs = k_.disj(k_.conj(x, z), k_.conj(y, z));
            record("F distributes over G", rhs && eq(lhs, *rhs), w);
        }

        if (!k_.equal(x, y)) {
            const V& lo = k_.less(x, y) ? x : y;
            const V& hi = k_.less(x, y) ? y : x;
            const std::vector<std::string> ordered{show("x", lo), show("y", hi), show("z", z)};
            if (!k_.equal(z, k_.bottom()))
                record("F strictly increasing", k_.less(k_.conj(lo, z), k_.conj(hi, z)), ordered);
            auto glo = k_.disj(lo, z);
            auto ghi = k_.disj(hi, z);
            if (glo && ghi) record("G strictly increasing", k_.less(*glo, *ghi), ordered);
            if (!glo && ghi) record("G strictly increasing", false, ordered, "G defined at the larger argument only");
        }

        // Cancellation: equal images force equal arguments.
        if (!k_.equal(y, z)) {
            auto gy = k_.disj(x, y);
            auto gz = k_.disj(x, z);
            if (gy && gz) record("G cancellation", !eq(*gy, *gz), w);
            if (!k_.equal(x, k_.bottom())) record("F cancellation", !eq(k_.conj(x, y), k_.conj(x, z)), w);
        }
    }

    const K& k_;
    std::vector<AxiomResult> results_;
};

}  // namespace detail

/// Tests every proper-plausibility-space law on probe tuples built from
/// bottom, top and the nontrivial element, then on `samples` random
/// tuples drawn with the given seed. Failures carry the first witness.
template <Kernel K>
AxiomReport check_axioms(const K& k, std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw Error(Errc::invalid_argument, "samples must be at least 1");
    using V = typename K::value_type;
    detail::AxiomChecker<K> checker(k);

    std::vector<V> probes;
    if (auto e = k.nontrivial()) probes.push_back(*e);
    probes.push_back(k.bottom());
    probes.push_back(k.top());
    for (const auto& a : probes)
        for (const auto& b : probes)
            for (const auto& c : probes) checker.run(a, b, c);

    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        V x = k.sample(rng);
        V y = k.sample(rng);
        V z = k.sample(rng);
        checker.run(x, y, z);
    }

    AxiomReport report;
    report.kernel = std::string(k.name());
    report.samples = samples;
    report.seed = seed;
    report.results = checker.take();
    AxiomResult s_bottom{"S bottom", true, 0, {}, {}};
    s_bottom.checked = 1;
    if (!k.equal(k.complement(k.bottom()), k.top())) {
        s_bottom.passed = false;
        s_bottom.witness = {"x=" + k.format(k.bottom())};
        s_bottom.detail = "S(bottom)=" + k.format(k.complement(k.bottom()));
    }
    report.results.push_back(std::move(s_bottom));
    return report;
}

struct ArchimedeanResult {
    bool found = false;
    std::size_t n = 0;
    /// Why the search stopped without a witness: "bound reached" or
    /// "sum left domain".
    std::string reason;
};

/// Smallest N <= n_max with N*e > S(e), where 1*e = e and
/// n*e = G((n-1)*e, e).
template <Kernel K>
ArchimedeanResult archimedean_check(const K& k, const typename K::value_type& e, std::size_t n_max) {
    if (k.equal(e, k.bottom())) throw Error(Errc::invalid_argument, "archimedean check needs e != bottom");
    require_in_domain(k, e);
    const auto se = k.complement(e);
    auto multiple = e;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n > 1) {
            auto next = k.disj(multiple, e);
            if (!next) return {false, n, "sum left domain"};
            multiple = std::move(*next);
        }
        if (k.less(se, multiple)) return {true, n, {}};
    }
    return {false, n_max, "bound reached"};
}

struct SeparabilityResult {
    bool found = false;
    std::size_t n = 0;
    std::size_t m = 0;
};

/// Lexicographically smallest (n, m), both <= bound, with
/// x^n < c^m < y^n, where x^1 = x and x^n = F(x, x^(n-1)).
template <Kernel K>
SeparabilityResult separability_check(const K& k, const typename K::value_type& x, const typename K::value_type& y,
                                      const typename K::value_type& c, std::size_t bound) {
    using V = typename K::value_type;
    auto interior = [&](const V& v) { return k.less(k.bottom(), v) && k.less(v, k.top()); };
    if (!k.less(x, y)) throw Error(Errc::invalid_argument, "separability check needs x < y");
    if (!interior(x) || !interior(y) || !interior(c))
        throw Error(Errc::invalid_argument, "separability check needs x, y, c strictly between bottom and top");

    auto powers = [&](const V& v) {
        std::vector<V> p;
        p.reserve(bound);
        if (bound == 0) return p;
        p.push_back(v);
        while (p.size() < bound) p.push_back(k.conj(v, p.back()));
        return p;
    };
    const std::vector<V> xs = powers(x);
    const std::vector<V> ys = powers(y);
    const std::vector<V> cs = powers(c);
    for (std::size_t n = 0; n < bound; ++n)
        for (std::size_t m = 0; m < bound; ++m)
            if (k.less(xs[n], cs[m]) && k.less(cs[m], ys[n])) return {true, n + 1, m + 1};
    return {};
}

}  // namespace plaus
