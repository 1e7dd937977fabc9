#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plaus/eps_rational.hpp"
#include "plaus/error.hpp"

namespace plaus {

/// Subset of an outcome space, one bit per atom in space order.
class AtomSet {
public:
    constexpr AtomSet() = default;
    constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr AtomSet singleton(std::size_t i) { return AtomSet(std::uint64_t{1} << i); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
    constexpr bool subset_of(AtomSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(AtomSet o) const noexcept { return (bits_ & o.bits_) != 0; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }

    friend constexpr AtomSet operator&(AtomSet a, AtomSet b) { return AtomSet(a.bits_ & b.bits_); }
    friend constexpr AtomSet operator|(AtomSet a, AtomSet b) { return AtomSet(a.bits_ | b.bits_); }
    friend constexpr auto operator<=>(AtomSet, AtomSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Finite ordered set of named atoms (at most 64).
class OutcomeSpace {
public:
    static constexpr std::size_t max_atoms = 64;

    explicit OutcomeSpace(std::vector<std::string> atoms);

    std::size_t size() const noexcept { return atoms_.size(); }
    const std::vector<std::string>& atoms() const noexcept { return atoms_; }
    /// Throws Error(Errc::unknown_atom).
    std::size_t index(std::string_view atom) const;
    AtomSet set(std::span<const std::string> names) const;
    AtomSet set(std::initializer_list<std::string_view> names) const;
    AtomSet full() const noexcept;
    /// "{a, b}" in space order.
    std::string format(AtomSet s) const;

    friend bool operator==(const OutcomeSpace&, const OutcomeSpace&) = default;

private:
    std::vector<std::string> atoms_;
};

/// Extended probability distribution: nonnegative values in Q(eps), one
/// per atom, summing to exactly 1.
class ExtDist {
public:
    explicit ExtDist(std::vector<EpsRational> probs);
    static ExtDist point(std::size_t size, std::size_t atom);
    static ExtDist uniform(std::size_t size);

    std::size_t size() const noexcept { return probs_.size(); }
    const EpsRational& operator[](std::size_t i) const { return probs_.at(i); }
    const std::vector<EpsRational>& probs() const noexcept { return probs_; }
    EpsRational probability(AtomSet event) const;

    friend bool operator==(const ExtDist&, const ExtDist&) = default;

private:
    std::vector<EpsRational> probs_;
};

/// Nonempty finite indexed family of distributions over one space.
class CredalSet {
public:
    CredalSet(OutcomeSpace space, std::vector<ExtDist> dists);

    const OutcomeSpace& space() const noexcept { return space_; }
    const std::vector<ExtDist>& dists() const noexcept { return dists_; }
    std::size_t size() const noexcept { return dists_.size(); }

private:
    OutcomeSpace space_;
    std::vector<ExtDist> dists_;
};

/// Element of the product ring Q(eps)^n, one component per family index.
/// Operations are componentwise; the order is the product order.
struct PlausVector {
    std::vector<EpsRational> components;

    std::size_t size() const noexcept { return components.size(); }
    bool is_zero() const;
    /// All components equal: a precise value.
    bool is_precise() const;

    static PlausVector constant(std::size_t n, const EpsRational& v);

    friend PlausVector operator+(const PlausVector& a, const PlausVector& b);
    friend PlausVector operator-(const PlausVector& a, const PlausVector& b);
    friend PlausVector operator*(const PlausVector& a, const PlausVector& b);
    friend bool operator==(const PlausVector&, const PlausVector&) = default;
};

/// Componentwise a_i <= b_i.
bool product_leq(const PlausVector& a, const PlausVector& b);
/// Neither a <= b nor b <= a.
bool incomparable(const PlausVector& a, const PlausVector& b);

std::string to_string(const PlausVector& v);

/// Component i is the probability of the event under distribution i.
PlausVector event_plausibility(const CredalSet& c, AtomSet event);
PlausVector event_plausibility(const CredalSet& c, std::span<const std::string> event);

enum class Verdict { yes, no, incomparable };
const char* to_string(Verdict v);

struct PlausibilityComparison {
    Verdict verdict = Verdict::incomparable;
    /// Set when the two vectors coincide (reported as incomparable).
    bool equal = false;
};

/// yes iff A is strictly more plausible than B under every member, no iff
/// strictly less under every member.
PlausibilityComparison more_plausible(const CredalSet& c, AtomSet a, AtomSet b);

/// Per-member conditioning on the event. Members giving the event
/// probability exactly zero are dropped. Throws
/// Error(Errc::impossible_conditioning) if every member is dropped.
CredalSet condition(const CredalSet& c, AtomSet event);

/// Laplace combination: for every index pair (i, j) in lexicographic order,
/// the atomwise product of c1[i] and c2[j] renormalized. Pairs with zero
/// total mass are dropped; Error(Errc::incompatible) if all are.
CredalSet combine_laplace(const CredalSet& c1, const CredalSet& c2);

/// (min, max) over members of the standard part of the event probability.
std::pair<BigRational, BigRational> envelopes(const CredalSet& c, AtomSet event);

/// p = s + a * t with s = min p, t = max p - min p and a = (p - s) / t.
/// a is absent when t = 0 (p precise).
struct Decomposition {
    EpsRational s;
    EpsRational t;
    std::optional<PlausVector> a;
};

Decomposition zimmermann_decompose(const PlausVector& p);

/// Moebius transform of the exact lower envelope P_(A) = min_i P_i(A),
/// listing the subsets with nonzero value. For the credal translation of a
/// body of evidence this recovers its mass function.
std::vector<std::pair<AtomSet, EpsRational>> lower_envelope_masses(const CredalSet& c);

}  // namespace plaus
