#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plaus/kernel.hpp"

namespace plaus {

using EventId = std::size_t;

/// Node of a refinement tree. A child event implies its parent.
struct Event {
    std::string name;
    std::optional<EventId> parent;
};

/// Conditional-event model built by refinement. Each non-root event
/// carries its plausibility given its parent; the root has plausibility
/// top. Siblings can be declared mutually exclusive or information
/// independent. Models are immutable: refinement returns a new model.
template <Kernel K>
class Model {
public:
    using V = typename K::value_type;

    explicit Model(K kernel, std::string root_name = "S") : kernel_(std::move(kernel)) {
        events_.push_back(Event{std::move(root_name), std::nullopt});
        local_.push_back(kernel_.top());
    }

    const K& kernel() const noexcept { return kernel_; }
    EventId root() const noexcept { return 0; }
    std::size_t size() const noexcept { return events_.size(); }
    const Event& event(EventId id) const { return events_.at(id); }

    std::optional<EventId> find(std::string_view name) const {
        for (EventId i = 0; i < events_.size(); ++i)
            if (events_[i].name == name) return i;
        return std::nullopt;
    }

    EventId id(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw Error(Errc::refinement, "unknown event '" + std::string(name) + "'");
    }

    /// Plausibility of the event given its parent.
    const V& local(EventId id) const { return local_.at(id); }

    bool is_ancestor(EventId ancestor, EventId id) const {
        for (auto p = events_.at(id).parent; p; p = events_[*p].parent)
            if (*p == ancestor) return true;
        return false;
    }

    bool exclusive(EventId a, EventId b) const { return exclusive_.contains(ordered(a, b)); }
    bool independent(EventId a, EventId b) const { return independent_.contains(ordered(a, b)); }

    /// Plausibility of `id` given the conjunction of `context` (the root
    /// when empty), or nullopt if the assignments do not determine it.
    ///
    /// The context is first reduced to its deepest events, since a child
    /// implies its ancestors. Independence declarations then rewrite
    /// B|B'A to B|A, until the context is exactly the parent of `id`.
    std::optional<V> conditional(EventId id, std::span<const EventId> context) const {
        std::vector<EventId> ctx(context.begin(), context.end());
        if (ctx.empty()) ctx.push_back(root());
        reduce(ctx);
        for (;;) {
            for (EventId c : ctx) {
                if (c == id || is_ancestor(id, c)) return kernel_.top();
                if (exclusive(c, id)) return kernel_.bottom();
            }
            const auto parent = events_.at(id).parent;
            if (!parent) return std::nullopt;
            if (ctx.size() == 1 && ctx.front() == *parent) return local_[id];
            auto it = std::find_if(ctx.begin(), ctx.end(), [&](EventId c) { return independent(id, c); });
            if (it == ctx.end()) return std::nullopt;
            *it = *events_[*it].parent;
            reduce(ctx);
        }
    }

    std::optional<V> conditional(EventId id, std::initializer_list<EventId> context) const {
        return conditional(id, std::span<const EventId>(context.begin(), context.size()));
    }

    /// New events under `parent`, pairwise exclusive, each independent of
    /// the listed siblings. Used by the refine_* operations.
    Model extended(EventId parent, const std::vector<std::pair<std::string, V>>& children, bool mutually_exclusive,
                   const std::vector<EventId>& independent_of) const {
        if (kernel_.equal(local_.at(parent), kernel_.bottom()))
            throw Error(Errc::refinement, "cannot refine event '" + events_[parent].name + "' with plausibility bottom");
        for (EventId s : independent_of)
            if (events_.at(s).parent != parent)
                throw Error(Errc::refinement, "independence needs sibling events under '" + events_[parent].name + "'");
        Model next = *this;
        std::vector<EventId> added;
        for (const auto& [name, value] : children) {
            if (next.find(name)) throw Error(Errc::refinement, "duplicate event name '" + name + "'");
            require_in_domain(kernel_, value);
            next.events_.push_back(Event{name, parent});
            next.local_.push_back(value);
            const EventId id = next.events_.size() - 1;
            for (EventId s : independent_of) next.independent_.insert(ordered(id, s));
            if (mutually_exclusive)
                for (EventId other : added) next.exclusive_.insert(ordered(id, other));
            added.push_back(id);
        }
        return next;
    }

private:
    static std::pair<EventId, EventId> ordered(EventId a, EventId b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

    void reduce(std::vector<EventId>& ctx) const {
        std::sort(ctx.begin(), ctx.end());
        ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
        std::vector<EventId> kept;
        for (EventId c : ctx) {
            bool implied = std::any_of(ctx.begin(), ctx.end(), [&](EventId d) { return d != c && is_ancestor(c, d); });
            if (!implied) kept.push_back(c);
        }
        ctx = std::move(kept);
    }

    K kernel_;
    std::vector<Event> events_;
    std::vector<V> local_;
    std::set<std::pair<EventId, EventId>> exclusive_;
    std::set<std::pair<EventId, EventId>> independent_;
};

/// Adds a subcase `name` of `parent` with name|parent = p, information
/// independent of the listed siblings. Existing conditionals are unchanged.
template <Kernel K>
Model<K> refine_subcase(const Model<K>& m, std::string_view parent, const std::string& name,
                        const typename K::value_type& p, const std::vector<std::string>& independent_of = {}) {
    std::vector<EventId> indep;
    for (const auto& s : independent_of) indep.push_back(m.id(s));
    return m.extended(m.id(parent), {{name, p}}, false, indep);
}

/// Adds mutually exclusive subcases of `parent`. The running disjunction
/// G(...G(x1, x2)..., xn) must be defined.
template <Kernel K>
Model<K> refine_exclusive(const Model<K>& m, std::string_view parent,
                          const std::vector<std::pair<std::string, typename K::value_type>>& children,
                          const std::vector<std::string>& independent_of = {}) {
    const K& k = m.kernel();
    if (!children.empty()) {
        auto total = children.front().second;
        for (std::size_t i = 1; i < children.size(); ++i) {
            auto next = k.disj(total, children[i].second);
            if (!next) throw Error(Errc::exclusivity_impossible, "exclusivity impossible");
            total = *next;
        }
    }
    std::vector<EventId> indep;
    for (const auto& s : independent_of) indep.push_back(m.id(s));
    return m.extended(m.id(parent), children, true, indep);
}

/// Adds exclusive subcases first|parent = x and second|parent = y.
/// Requires x <= S(y).
template <Kernel K>
Model<K> refine_exclusive_pair(const Model<K>& m, std::string_view parent, const std::string& first,
                               const std::string& second, const typename K::value_type& x,
                               const typename K::value_type& y) {
    const K& k = m.kernel();
    if (k.less(k.complement(y), x)) throw Error(Errc::exclusivity_impossible, "exclusivity impossible");
    return refine_exclusive(m, parent, {{first, x}, {second, y}});
}

enum class Law { assoc_F, comm_F, comm_G, assoc_G, distrib };

inline std::size_t arity(Law law) { return law == Law::comm_F || law == Law::comm_G ? 2 : 3; }

inline const char* to_string(Law law) {
    switch (law) {
        case Law::assoc_F: return "assoc_F";
        case Law::comm_F: return "comm_F";
        case Law::comm_G: return "comm_G";
        case Law::assoc_G: return "assoc_G";
        case Law::distrib: return "distrib";
    }
    return "?";
}

inline std::optional<Law> law_from_string(std::string_view s) {
    for (Law l : {Law::assoc_F, Law::comm_F, Law::comm_G, Law::assoc_G, Law::distrib})
        if (s == to_string(l)) return l;
    return std::nullopt;
}

/// Builds the refinement scenario for `law` and evaluates the target
/// conditional along its two derivations.
///
///   assoc_F (a, b, c)  chain A' -> B' -> C' -> S with A'|B' = a,
///                      B'|C' = b, C'|S = c; target A'B'C'|S grouped as
///                      (A'B')C' and A'(B'C')
///   comm_F  (x, y)     A|D = x, B'|D = y independent; AB'|D vs B'A|D
///   comm_G  (x, y)     exclusive A|D = x, B|D = y; A or B vs B or A
///   assoc_G (x, y, z)  exclusive A, B, C under D; (A or B) or C vs
///                      A or (B or C)
///   distrib (x, y, z)  exclusive A|D = x, B|D = y and C|D = z
///                      independent of both; (A or B)C|D vs AC or BC|D
///
/// Throws Error(Errc::scenario_undefined) if the scenario cannot be built
/// or a disjunction along either path is undefined.
template <Kernel K>
std::pair<typename K::value_type, typename K::value_type> two_path_eval(const K& k, Law law,
                                                                        std::span<const typename K::value_type> values) {
    using V = typename K::value_type;
    if (values.size() != arity(law))
        throw Error(Errc::invalid_argument, std::string(to_string(law)) + " takes " + std::to_string(arity(law)) + " values");
    for (const auto& v : values) require_in_domain(k, v);

    auto undefined = [] { return Error(Errc::scenario_undefined, "scenario undefined"); };
    auto G = [&](const V& a, const V& b) {
        auto r = k.disj(a, b);
        if (!r) throw undefined();
        return *r;
    };
    auto F = [&](const V& a, const V& b) { return k.conj(a, b); };

    try {
        switch (law) {
            case Law::assoc_F: {
                Model<K> m(k, "S");
                m = refine_subcase(m, "S", "C'", values[2]);
                m = refine_subcase(m, "C'", "B'", values[1]);
                m = refine_subcase(m, "B'", "A'", values[0]);
                const EventId S = m.id("S"), A = m.id("A'"), B = m.id("B'"), C = m.id("C'");
                auto cond = [&](EventId e, std::initializer_list<EventId> ctx) {
                    auto v = m.conditional(e, ctx);
                    if (!v) throw undefined();
                    return *v;
                };
                // (A'B')C'|S = F(A'B'|SC', C'|S), A'B'|SC' = F(A'|B'SC', B'|SC')
                V left = F(F(cond(A, {B, S, C}), cond(B, {S, C})), cond(C, {S}));
                // A'(B'C')|S = F(A'|SB'C', B'C'|S), B'C'|S = F(B'|SC', C'|S)
                V right = F(cond(A, {S, B, C}), F(cond(B, {S, C}), cond(C, {S})));
                return {left, right};
            }
            case Law::comm_F: {
                Model<K> m(k, "D");
                m = refine_subcase(m, "D", "A", values[0]);
                m = refine_subcase(m, "D", "B'", values[1], {"A"});
                const EventId D = m.id("D"), A = m.id("A"), B = m.id("B'");
                auto cond = [&](EventId e, std::initializer_list<EventId> ctx) {
                    auto v = m.conditional(e, ctx);
                    if (!v) throw undefined();
                    return *v;
                };
                V left = F(cond(A, {B, D}), cond(B, {D}));
                V right = F(cond(B, {A, D}), cond(A, {D}));
                return {left, right};
            }
            case Law::comm_G: {
                Model<K> m(k, "D");
                m = refine_exclusive_pair(m, "D", "A", "B", values[0], values[1]);
                const EventId D = m.id("D"), A = m.id("A"), B = m.id("B");
                V a = *m.conditional(A, {D});
                V b = *m.conditional(B, {D});
                return {G(a, b), G(b, a)};
            }
            case Law::assoc_G: {
                Model<K> m(k, "D");
                m = refine_exclusive(m, "D", {{"A", values[0]}, {"B", values[1]}, {"C", values[2]}});
                const EventId D = m.id("D");
                V a = *m.conditional(m.id("A"), {D});
                V b = *m.conditional(m.id("B"), {D});
                V c = *m.conditional(m.id("C"), {D});
                return {G(G(a, b), c), G(a, G(b, c))};
            }
            case Law::distrib: {
                Model<K> m(k, "D");
                m = refine_exclusive_pair(m, "D", "A", "B", values[0], values[1]);
                m = refine_subcase(m, "D", "C", values[2], {"A", "B"});
                const EventId D = m.id("D"), A = m.id("A"), B = m.id("B"), C = m.id("C");
                auto cond = [&](EventId e, std::initializer_list<EventId> ctx) {
                    auto v = m.conditional(e, ctx);
                    if (!v) throw undefined();
                    return *v;
                };
                // (A or B)C|D = F(A or B|CD, C|D)
                V left = F(G(cond(A, {C, D}), cond(B, {C, D})), cond(C, {D}));
                // AC or BC|D = G(F(A|CD, C|D), F(B|CD, C|D))
                V right = G(F(cond(A, {C, D}), cond(C, {D})), F(cond(B, {C, D}), cond(C, {D})));
                return {left, right};
            }
        }
    } catch (const Error& e) {
        if (e.code() == Errc::refinement || e.code() == Errc::exclusivity_impossible) throw undefined();
        throw;
    }
    throw undefined();
}

}  // namespace plaus
