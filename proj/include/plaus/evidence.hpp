#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "plaus/credal.hpp"
#include "plaus/eps_rational.hpp"

namespace plaus {

/// Frame of discernment.
using Frame = OutcomeSpace;

struct FocalElement {
    AtomSet set;
    EpsRational mass;

    friend bool operator==(const FocalElement&, const FocalElement&) = default;
};

/// Body of evidence: positive masses on nonempty subsets of the frame,
/// summing to exactly 1. Focal elements are kept sorted by bitmask, so
/// equal mass functions compare equal regardless of input order.
class MassFunction {
public:
    /// Validates the invariants; sets listed twice are rejected.
    MassFunction(Frame frame, std::vector<FocalElement> focal);

    static MassFunction vacuous(const Frame& frame);

    const Frame& frame() const noexcept { return frame_; }
    const std::vector<FocalElement>& focal() const noexcept { return focal_; }
    /// m(set), zero when the set is not focal.
    EpsRational mass(AtomSet set) const;
    /// Every focal element is a singleton.
    bool is_bayesian() const;
    std::string format() const;

    friend bool operator==(const MassFunction&, const MassFunction&) = default;

private:
    Frame frame_;
    std::vector<FocalElement> focal_;
};

/// Dempster's rule: random-set intersection conditioned on nonemptiness.
/// Throws Error(Errc::total_conflict) when every intersection is empty.
MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2);

/// Belief and plausibility of the event.
std::pair<EpsRational, EpsRational> bel_pl(const MassFunction& m, AtomSet event);

/// One distribution per selection function (each focal mass placed on
/// one of its atoms), duplicates removed, in mixed-radix order over the
/// focal elements. Throws Error(Errc::budget_exceeded) when the number of
/// selection functions exceeds the budget.
CredalSet mass_to_credal(const MassFunction& m, std::size_t budget = 1'000'000);

/// The boxer/wrestler/coin example combined both ways.
struct GelmanReport {
    Frame frame;
    MassFunction m1;
    MassFunction m2;
    MassFunction m3;
    MassFunction dempster;
    CredalSet robust;
    /// Lower-envelope masses of the robust result.
    std::vector<std::pair<AtomSet, EpsRational>> robust_masses;
    AtomSet event_b;
    AtomSet event_c;
    std::pair<EpsRational, EpsRational> dempster_b;
    std::pair<EpsRational, EpsRational> dempster_c;
    std::pair<BigRational, BigRational> robust_b;
    std::pair<BigRational, BigRational> robust_c;
    /// Symbol assignments such as "E|m1" -> 0 for E = {BC}, F = {BC, nBnC}.
    std::vector<std::pair<std::string, EpsRational>> symbols;
};

GelmanReport run_gelman();

/// Line-oriented rendering of the report.
std::vector<std::string> format_gelman(const GelmanReport& r);

}  // namespace plaus
