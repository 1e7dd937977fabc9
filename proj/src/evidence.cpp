#include "plaus/evidence.hpp"

#include <algorithm>
#include <map>

#include "plaus/error.hpp"

namespace plaus {

MassFunction::MassFunction(Frame frame, std::vector<FocalElement> focal) : frame_(std::move(frame)), focal_(std::move(focal)) {
    std::sort(focal_.begin(), focal_.end(), [](const auto& a, const auto& b) { return a.set < b.set; });
    EpsRational total;
    for (std::size_t i = 0; i < focal_.size(); ++i) {
        const auto& f = focal_[i];
        if (f.set.empty()) throw Error(Errc::validation, "focal element must be nonempty");
        if (!f.set.subset_of(frame_.full())) throw Error(Errc::unknown_atom, "focal element outside the frame");
        if (i > 0 && focal_[i - 1].set == f.set)
            throw Error(Errc::validation, "focal element " + frame_.format(f.set) + " listed twice");
        if (f.mass.sign() <= 0)
            throw Error(Errc::validation, "mass of " + frame_.format(f.set) + " must be positive, got " + to_string(f.mass));
        total += f.mass;
    }
    if (total != EpsRational(1)) throw Error(Errc::validation, "masses sum to " + to_string(total) + ", expected 1");
}

MassFunction MassFunction::vacuous(const Frame& frame) { return MassFunction(frame, {{frame.full(), EpsRational(1)}}); }

EpsRational MassFunction::mass(AtomSet set) const {
    for (const auto& f : focal_)
        if (f.set == set) return f.mass;
    return {};
}

bool MassFunction::is_bayesian() const {
    return std::all_of(focal_.begin(), focal_.end(), [](const auto& f) { return f.set.size() == 1; });
}

std::string MassFunction::format() const {
    std::string out;
    for (const auto& f : focal_) {
        if (!out.empty()) out += "; ";
        out += frame_.format(f.set) + ": " + to_string(f.mass);
    }
    return out;
}

MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2) {
    if (!(m1.frame() == m2.frame())) throw Error(Errc::invalid_argument, "bodies of evidence over different frames");
    std::map<AtomSet, EpsRational> joint;
    EpsRational conflict;
    for (const auto& a : m1.focal()) {
        for (const auto& b : m2.focal()) {
            const AtomSet c = a.set & b.set;
            EpsRational w = a.mass * b.mass;
            if (c.empty())
                conflict += w;
            else
                joint[c] += w;
        }
    }
    const EpsRational norm = EpsRational(1) - conflict;
    if (norm.is_zero()) throw Error(Errc::total_conflict, "total conflict");
    std::vector<FocalElement> focal;
    focal.reserve(joint.size());
    for (auto& [set, w] : joint)
        if (!w.is_zero()) focal.push_back({set, w / norm});
    return MassFunction(m1.frame(), std::move(focal));
}

std::pair<EpsRational, EpsRational> bel_pl(const MassFunction& m, AtomSet event) {
    if (!event.subset_of(m.frame().full())) throw Error(Errc::unknown_atom, "event outside the frame");
    EpsRational bel, pl;
    for (const auto& f : m.focal()) {
        if (f.set.subset_of(event)) bel += f.mass;
        if (f.set.intersects(event)) pl += f.mass;
    }
    return {bel, pl};
}

CredalSet mass_to_credal(const MassFunction& m, std::size_t budget) {
    const auto& focal = m.focal();
    std::vector<std::vector<std::size_t>> choices;
    std::size_t count = 1;
    bool over = false;
    for (const auto& f : focal) {
        std::vector<std::size_t> atoms;
        for (std::size_t i = 0; i < m.frame().size(); ++i)
            if (f.set.contains(i)) atoms.push_back(i);
        if (over || count > budget / atoms.size())
            over = true;
        else
            count *= atoms.size();
        choices.push_back(std::move(atoms));
    }
    if (over) {
        BigInteger needed(1);
        for (const auto& c : choices) needed *= static_cast<unsigned long>(c.size());
        throw Error(Errc::budget_exceeded, "credal translation needs " + needed.get_str() + " selection functions, budget is " +
                                               std::to_string(budget));
    }

    std::vector<ExtDist> dists;
    std::vector<std::size_t> pick(focal.size(), 0);
    for (std::size_t n = 0; n < count; ++n) {
        std::vector<EpsRational> probs(m.frame().size());
        for (std::size_t j = 0; j < focal.size(); ++j) probs[choices[j][pick[j]]] += focal[j].mass;
        ExtDist d(std::move(probs));
        if (std::find(dists.begin(), dists.end(), d) == dists.end()) dists.push_back(std::move(d));
        // Mixed-radix increment, last focal element fastest.
        for (std::size_t j = focal.size(); j-- > 0;) {
            if (++pick[j] < choices[j].size()) break;
            pick[j] = 0;
        }
    }
    return CredalSet(m.frame(), std::move(dists));
}

GelmanReport run_gelman() {
    Frame frame({"BC", "BnC", "nBC", "nBnC"});
    const EpsRational half(BigRational(1, 2));
    MassFunction m1 = MassFunction::vacuous(frame);
    MassFunction m2(frame, {{frame.set({"BC", "nBC"}), half}, {frame.set({"BnC", "nBnC"}), half}});
    MassFunction m3(frame, {{frame.set({"BC", "nBnC"}), EpsRational(1)}});

    MassFunction dempster = dempster_combine(dempster_combine(m1, m2), m3);
    CredalSet robust = combine_laplace(combine_laplace(mass_to_credal(m1), mass_to_credal(m2)), mass_to_credal(m3));
    auto robust_masses = lower_envelope_masses(robust);

    const AtomSet b = frame.set({"BC", "BnC"});
    const AtomSet c = frame.set({"BC", "nBC"});
    const AtomSet e = frame.set({"BC"});
    const AtomSet f = frame.set({"BC", "nBnC"});
    auto robust_mass = [&](AtomSet s) {
        for (const auto& [set, w] : robust_masses)
            if (set == s) return w;
        return EpsRational();
    };

    std::vector<std::pair<std::string, EpsRational>> symbols{
        {"E|m1", m1.mass(e)}, {"E|m2", m2.mass(e)},  {"E|m3", m3.mass(e)},
        {"E|m", dempster.mass(e)}, {"E|m_r", robust_mass(e)}, {"F|m_r", robust_mass(f)},
    };

    GelmanReport r{frame,
                   m1,
                   m2,
                   m3,
                   dempster,
                   robust,
                   robust_masses,
                   b,
                   c,
                   bel_pl(dempster, b),
                   bel_pl(dempster, c),
                   envelopes(robust, b),
                   envelopes(robust, c),
                   std::move(symbols)};
    return r;
}

std::vector<std::string> format_gelman(const GelmanReport& r) {
    std::vector<std::string> lines;
    const auto& fr = r.frame;
    lines.push_back("frame: " + fr.format(fr.full()));
    lines.push_back("m1: " + r.m1.format());
    lines.push_back("m2: " + r.m2.format());
    lines.push_back("m3: " + r.m3.format());
    lines.push_back("dempster: " + r.dempster.format());
    std::string robust = "robust: ";
    for (std::size_t i = 0; i < r.robust_masses.size(); ++i) {
        if (i) robust += "; ";
        robust += fr.format(r.robust_masses[i].first) + ": " + to_string(r.robust_masses[i].second);
    }
    lines.push_back(robust);
    lines.push_back("robust members: " + std::to_string(r.robust.size()));
    lines.push_back("dempster B " + fr.format(r.event_b) + ": bel=" + to_string(r.dempster_b.first) +
                    " pl=" + to_string(r.dempster_b.second));
    lines.push_back("dempster C " + fr.format(r.event_c) + ": bel=" + to_string(r.dempster_c.first) +
                    " pl=" + to_string(r.dempster_c.second));
    lines.push_back("robust B " + fr.format(r.event_b) + ": lower=" + to_string(r.robust_b.first) +
                    " upper=" + to_string(r.robust_b.second));
    lines.push_back("robust C " + fr.format(r.event_c) + ": lower=" + to_string(r.robust_c.first) +
                    " upper=" + to_string(r.robust_c.second));
    std::string symbols = "symbols:";
    for (const auto& [name, v] : r.symbols) symbols += " " + name + "=" + to_string(v);
    lines.push_back(symbols);
    return lines;
}

}  // namespace plaus
