#pragma once

#include <concepts>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "plaus/big_rational.hpp"
#include "plaus/eps_rational.hpp"
#include "plaus/error.hpp"

namespace plaus {

using Rng = std::mt19937_64;

/// A proper ordered plausibility space (D, F, G, S, <=, bottom, top).
///
///   conj(x, y)    F, the plausibility of a conjunction; total
///   disj(x, y)    G, the plausibility of an exclusive disjunction; defined
///                 only when x <= complement(y), otherwise nullopt
///   complement(x) S, the plausibility of the negation
///
/// Kernels are stateless values. Nothing here assumes the laws hold;
/// check_axioms() tests them.
template <class K>
concept Kernel = requires(const K& k, const typename K::value_type& x, Rng& rng, std::string_view text) {
    typename K::value_type;
    { k.name() } -> std::convertible_to<std::string_view>;
    { k.bottom() } -> std::same_as<typename K::value_type>;
    { k.top() } -> std::same_as<typename K::value_type>;
    { k.contains(x) } -> std::same_as<bool>;
    { k.conj(x, x) } -> std::same_as<typename K::value_type>;
    { k.disj(x, x) } -> std::same_as<std::optional<typename K::value_type>>;
    { k.complement(x) } -> std::same_as<typename K::value_type>;
    { k.less(x, x) } -> std::same_as<bool>;
    { k.equal(x, x) } -> std::same_as<bool>;
    { k.nontrivial() } -> std::same_as<std::optional<typename K::value_type>>;
    { k.sample(rng) } -> std::same_as<typename K::value_type>;
    { k.format(x) } -> std::same_as<std::string>;
    { k.parse(text) } -> std::same_as<typename K::value_type>;
};

/// Kernels whose domain contains the rationals of [0, 1] as values.
template <class K>
concept RationalValued = Kernel<K> && requires(const K& k, const BigRational& q) {
    { k.from_rational(q) } -> std::same_as<typename K::value_type>;
};

template <Kernel K>
bool leq(const K& k, const typename K::value_type& x, const typename K::value_type& y) {
    return !k.less(y, x);
}

template <Kernel K>
const typename K::value_type& min_of(const K& k, const typename K::value_type& x, const typename K::value_type& y) {
    return k.less(y, x) ? y : x;
}

template <Kernel K>
void require_in_domain(const K& k, const typename K::value_type& x) {
    if (!k.contains(x)) throw Error(Errc::domain, "value " + k.format(x) + " outside the domain of kernel " + std::string(k.name()));
}

template <Kernel K>
typename K::value_type apply_F(const K& k, const typename K::value_type& x, const typename K::value_type& y) {
    require_in_domain(k, x);
    require_in_domain(k, y);
    return k.conj(x, y);
}

template <Kernel K>
typename K::value_type apply_S(const K& k, const typename K::value_type& x) {
    require_in_domain(k, x);
    return k.complement(x);
}

/// Throws Error(Errc::undefined_sum) when x > S(y).
template <Kernel K>
typename K::value_type apply_G(const K& k, const typename K::value_type& x, const typename K::value_type& y) {
    require_in_domain(k, x);
    require_in_domain(k, y);
    auto r = k.disj(x, y);
    if (!r) throw Error(Errc::undefined_sum, "undefined sum");
    return *r;
}

/// Probability on the rationals of [0, 1]: F = *, G = +, S = 1 - x.
class RationalKernel {
public:
    using value_type = BigRational;

    std::string_view name() const { return "rat"; }
    BigRational bottom() const { return BigRational(0); }
    BigRational top() const { return BigRational(1); }
    bool contains(const BigRational& x) const { return x >= 0 && x <= 1; }
    BigRational conj(const BigRational& x, const BigRational& y) const { return x * y; }
    std::optional<BigRational> disj(const BigRational& x, const BigRational& y) const;
    BigRational complement(const BigRational& x) const { return 1 - x; }
    bool less(const BigRational& x, const BigRational& y) const { return x < y; }
    bool equal(const BigRational& x, const BigRational& y) const { return x == y; }
    std::optional<BigRational> nontrivial() const { return BigRational(1, 2); }
    /// Uniform denominator in [1, 100], numerator in [0, denominator].
    BigRational sample(Rng& rng) const;
    std::string format(const BigRational& x) const { return to_string(x); }
    /// Any eps-expression whose value is a rational constant.
    BigRational parse(std::string_view text) const;
    BigRational from_rational(const BigRational& q) const { return q; }
};

/// Extended probability on [0, 1] in Q(eps), same formulas as "rat".
class EpsKernel {
public:
    using value_type = EpsRational;

    std::string_view name() const { return "eps"; }
    EpsRational bottom() const { return EpsRational(0); }
    EpsRational top() const { return EpsRational(1); }
    bool contains(const EpsRational& x) const { return x.sign() >= 0 && x <= EpsRational(1); }
    EpsRational conj(const EpsRational& x, const EpsRational& y) const { return x * y; }
    std::optional<EpsRational> disj(const EpsRational& x, const EpsRational& y) const;
    EpsRational complement(const EpsRational& x) const { return 1 - x; }
    bool less(const EpsRational& x, const EpsRational& y) const { return x < y; }
    bool equal(const EpsRational& x, const EpsRational& y) const { return x == y; }
    std::optional<EpsRational> nontrivial() const { return EpsRational(BigRational(1, 2)); }
    /// q0 + q1*eps + q2*eps^2 clipped to [0, 1]; q0 in [0, 1], q1, q2 in [-1, 1].
    EpsRational sample(Rng& rng) const;
    std::string format(const EpsRational& x) const { return to_string(x); }
    EpsRational parse(std::string_view text) const;
    EpsRational from_rational(const BigRational& q) const { return EpsRational(q); }
};

/// Value of the propositional kernel.
enum class Truth : unsigned char { bottom = 0, top = 1 };

/// Propositional limit: D = {bottom, top}.
class BoolKernel {
public:
    using value_type = Truth;

    std::string_view name() const { return "bool"; }
    Truth bottom() const { return Truth::bottom; }
    Truth top() const { return Truth::top; }
    bool contains(const Truth& x) const { return x == Truth::bottom || x == Truth::top; }
    Truth conj(const Truth& x, const Truth& y) const { return x == Truth::top && y == Truth::top ? Truth::top : Truth::bottom; }
    std::optional<Truth> disj(const Truth& x, const Truth& y) const;
    Truth complement(const Truth& x) const { return x == Truth::top ? Truth::bottom : Truth::top; }
    bool less(const Truth& x, const Truth& y) const { return x < y; }
    bool equal(const Truth& x, const Truth& y) const { return x == y; }
    std::optional<Truth> nontrivial() const { return std::nullopt; }
    Truth sample(Rng& rng) const;
    std::string format(const Truth& x) const { return x == Truth::top ? "top" : "bottom"; }
    /// "top"/"1"/"true" or "bottom"/"0"/"false".
    Truth parse(std::string_view text) const;
};

/// The "rat" kernel with S(x) = (1 - x)^2. Not an involution; used to
/// show the axiom checker produces witnesses.
class BrokenComplementKernel : public RationalKernel {
public:
    std::string_view name() const { return "rat-broken"; }
    BigRational complement(const BigRational& x) const {
        BigRational d = 1 - x;
        return d * d;
    }
    std::optional<BigRational> disj(const BigRational& x, const BigRational& y) const;
};

static_assert(Kernel<RationalKernel>);
static_assert(Kernel<EpsKernel>);
static_assert(Kernel<BoolKernel>);
static_assert(Kernel<BrokenComplementKernel>);

/// Calls fn with the kernel registered under name ("rat", "eps", "bool",
/// "rat-broken"). Throws Error(Errc::invalid_argument) for unknown names.
template <class Fn>
decltype(auto) with_kernel(std::string_view name, Fn&& fn) {
    if (name == "rat") return fn(RationalKernel{});
    if (name == "eps") return fn(EpsKernel{});
    if (name == "bool") return fn(BoolKernel{});
    if (name == "rat-broken") return fn(BrokenComplementKernel{});
    throw Error(Errc::invalid_argument, "unknown kernel '" + std::string(name) + "'");
}

}  // namespace plaus
