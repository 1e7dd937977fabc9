#include "plaus/credal.hpp"

#include <algorithm>
#include <set>

#include "plaus/error.hpp"

namespace plaus {

OutcomeSpace::OutcomeSpace(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw Error(Errc::validation, "outcome space must be nonempty");
    if (atoms_.size() > max_atoms) throw Error(Errc::validation, "outcome space exceeds 64 atoms");
    std::set<std::string_view> seen;
    for (const auto& a : atoms_)
        if (!seen.insert(a).second) throw Error(Errc::validation, "duplicate atom '" + a + "'");
}

std::size_t OutcomeSpace::index(std::string_view atom) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i] == atom) return i;
    throw Error(Errc::unknown_atom, "unknown atom '" + std::string(atom) + "'");
}

AtomSet OutcomeSpace::set(std::span<const std::string> names) const {
    AtomSet s;
    for (const auto& n : names) s = s | AtomSet::singleton(index(n));
    return s;
}

AtomSet OutcomeSpace::set(std::initializer_list<std::string_view> names) const {
    AtomSet s;
    for (auto n : names) s = s | AtomSet::singleton(index(n));
    return s;
}

AtomSet OutcomeSpace::full() const noexcept {
    return AtomSet(atoms_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << atoms_.size()) - 1);
}

std::string OutcomeSpace::format(AtomSet s) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!s.contains(i)) continue;
        if (!first) out += ", ";
        out += atoms_[i];
        first = false;
    }
    return out + "}";
}

ExtDist::ExtDist(std::vector<EpsRational> probs) : probs_(std::move(probs)) {
    EpsRational total;
    for (const auto& p : probs_) {
        if (p.sign() < 0) throw Error(Errc::validation, "negative probability " + to_string(p));
        total += p;
    }
    if (total != EpsRational(1))
        throw Error(Errc::validation, "probabilities sum to " + to_string(total) + ", expected 1");
}

ExtDist ExtDist::point(std::size_t size, std::size_t atom) {
    std::vector<EpsRational> p(size);
    p.at(atom) = EpsRational(1);
    return ExtDist(std::move(p));
}

ExtDist ExtDist::uniform(std::size_t size) {
    return ExtDist(std::vector<EpsRational>(size, EpsRational(BigRational(1, static_cast<long>(size)))));
}

EpsRational ExtDist::probability(AtomSet event) const {
    EpsRational total;
    for (std::size_t i = 0; i < probs_.size(); ++i)
        if (event.contains(i)) total += probs_[i];
    return total;
}

CredalSet::CredalSet(OutcomeSpace space, std::vector<ExtDist> dists) : space_(std::move(space)), dists_(std::move(dists)) {
    if (dists_.empty()) throw Error(Errc::validation, "credal set must be nonempty");
    for (const auto& d : dists_)
        if (d.size() != space_.size()) throw Error(Errc::validation, "distribution does not match the outcome space");
}

bool PlausVector::is_zero() const {
    return std::all_of(components.begin(), components.end(), [](const EpsRational& c) { return c.is_zero(); });
}

bool PlausVector::is_precise() const {
    return std::all_of(components.begin(), components.end(), [&](const EpsRational& c) { return c == components.front(); });
}

PlausVector PlausVector::constant(std::size_t n, const EpsRational& v) { return PlausVector{std::vector<EpsRational>(n, v)}; }

namespace {

template <class Op>
PlausVector zip(const PlausVector& a, const PlausVector& b, Op op) {
    if (a.size() != b.size()) throw Error(Errc::invalid_argument, "plausibility vectors differ in length");
    PlausVector r;
    r.components.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.components.push_back(op(a.components[i], b.components[i]));
    return r;
}

}  // namespace

PlausVector operator+(const PlausVector& a, const PlausVector& b) { return zip(a, b, std::plus<>{}); }
PlausVector operator-(const PlausVector& a, const PlausVector& b) { return zip(a, b, std::minus<>{}); }
PlausVector operator*(const PlausVector& a, const PlausVector& b) { return zip(a, b, std::multiplies<>{}); }

bool product_leq(const PlausVector& a, const PlausVector& b) {
    if (a.size() != b.size()) throw Error(Errc::invalid_argument, "plausibility vectors differ in length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b.components[i] < a.components[i]) return false;
    return true;
}

bool incomparable(const PlausVector& a, const PlausVector& b) { return !product_leq(a, b) && !product_leq(b, a); }

std::string to_string(const PlausVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v.components[i]);
    }
    return out + ")";
}

PlausVector event_plausibility(const CredalSet& c, AtomSet event) {
    if (!event.subset_of(c.space().full())) throw Error(Errc::unknown_atom, "event outside the outcome space");
    PlausVector v;
    v.components.reserve(c.size());
    for (const auto& d : c.dists()) v.components.push_back(d.probability(event));
    return v;
}

PlausVector event_plausibility(const CredalSet& c, std::span<const std::string> event) {
    return event_plausibility(c, c.space().set(event));
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::incomparable: return "incomparable";
    }
    return "?";
}

PlausibilityComparison more_plausible(const CredalSet& c, AtomSet a, AtomSet b) {
    const PlausVector pa = event_plausibility(c, a);
    const PlausVector pb = event_plausibility(c, b);
    bool all_greater = true;
    bool all_less = true;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        auto cmp = pa.components[i] <=> pb.components[i];
        all_greater = all_greater && cmp > 0;
        all_less = all_less && cmp < 0;
    }
    if (all_greater) return {Verdict::yes, false};
    if (all_less) return {Verdict::no, false};
    return {Verdict::incomparable, pa == pb};
}

CredalSet condition(const CredalSet& c, AtomSet event) {
    if (!event.subset_of(c.space().full())) throw Error(Errc::unknown_atom, "event outside the outcome space");
    std::vector<ExtDist> kept;
    for (const auto& d : c.dists()) {
        const EpsRational mass = d.probability(event);
        if (mass.is_zero()) continue;
        std::vector<EpsRational> probs(d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            if (event.contains(i)) probs[i] = d[i] / mass;
        kept.emplace_back(std::move(probs));
    }
    if (kept.empty()) throw Error(Errc::impossible_conditioning, "conditioning on impossible event");
    return CredalSet(c.space(), std::move(kept));
}

CredalSet combine_laplace(const CredalSet& c1, const CredalSet& c2) {
    if (!(c1.space() == c2.space())) throw Error(Errc::invalid_argument, "credal sets over different outcome spaces");
    std::vector<ExtDist> out;
    const std::size_t n = c1.space().size();
    for (const auto& d1 : c1.dists()) {
        for (const auto& d2 : c2.dists()) {
            std::vector<EpsRational> prod(n);
            EpsRational total;
            for (std::size_t i = 0; i < n; ++i) {
                prod[i] = d1[i] * d2[i];
                total += prod[i];
            }
            if (total.is_zero()) continue;
            for (auto& p : prod) p /= total;
            out.emplace_back(std::move(prod));
        }
    }
    if (out.empty()) throw Error(Errc::incompatible, "incompatible credal sets");
    return CredalSet(c1.space(), std::move(out));
}

std::pair<BigRational, BigRational> envelopes(const CredalSet& c, AtomSet event) {
    const PlausVector v = event_plausibility(c, event);
    BigRational lo = standard_part(v.components.front());
    BigRational hi = lo;
    for (const auto& x : v.components) {
        BigRational s = standard_part(x);
        if (s < lo) lo = s;
        if (s > hi) hi = s;
    }
    return {lo, hi};
}

Decomposition zimmermann_decompose(const PlausVector& p) {
    if (p.components.empty()) throw Error(Errc::invalid_argument, "empty plausibility vector");
    const auto [lo, hi] = std::minmax_element(p.components.begin(), p.components.end());
    Decomposition d{*lo, *hi - *lo, std::nullopt};
    if (d.t.is_zero()) return d;
    PlausVector a;
    a.components.reserve(p.size());
    for (const auto& x : p.components) a.components.push_back((x - d.s) / d.t);
    d.a = std::move(a);
    return d;
}

std::vector<std::pair<AtomSet, EpsRational>> lower_envelope_masses(const CredalSet& c) {
    const std::size_t n = c.space().size();
    if (n > 20) throw Error(Errc::budget_exceeded, "lower envelope transform needs at most 20 atoms");
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<EpsRational> lower(subsets);
    for (std::size_t s = 1; s < subsets; ++s) {
        const AtomSet event(s);
        EpsRational lo = c.dists().front().probability(event);
        for (const auto& d : c.dists()) lo = std::min(lo, d.probability(event));
        lower[s] = std::move(lo);
    }
    // In-place Moebius inversion over the subset lattice.
    for (std::size_t bit = 0; bit < n; ++bit)
        for (std::size_t s = 0; s < subsets; ++s)
            if (s & (std::size_t{1} << bit)) lower[s] -= lower[s ^ (std::size_t{1} << bit)];
    std::vector<std::pair<AtomSet, EpsRational>> out;
    for (std::size_t s = 1; s < subsets; ++s)
        if (!lower[s].is_zero()) out.emplace_back(AtomSet(s), lower[s]);
    return out;
}

}  // namespace plaus
