#include "plaus/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "plaus/axioms.hpp"
#include "plaus/credal.hpp"
#include "plaus/embedding.hpp"
#include "plaus/eps_parser.hpp"
#include "plaus/evidence.hpp"
#include "plaus/kernel.hpp"
#include "plaus/refinement.hpp"
#include "plaus/scenario.hpp"

namespace plaus::cli {

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::undefined_sum:
        case Errc::unit_exhausted:
        case Errc::exclusivity_impossible:
        case Errc::scenario_undefined:
        case Errc::impossible_conditioning:
        case Errc::incompatible:
        case Errc::total_conflict:
        case Errc::infinite:
            return finding;
        default:
            return usage;
    }
}

namespace {

std::string format_dist(const OutcomeSpace& space, const ExtDist& d) {
    std::string out = "{";
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (i) out += ", ";
        out += space.atoms()[i] + ": " + to_string(d[i]);
    }
    return out + "}";
}

void print_credal(std::ostream& out, const CredalSet& c) {
    out << "members: " << c.size() << '\n';
    for (std::size_t i = 0; i < c.size(); ++i) out << "  [" << i << "] " << format_dist(c.space(), c.dists()[i]) << '\n';
}

void print_report(std::ostream& out, const AxiomReport& r) {
    out << "kernel " << r.kernel << " samples " << r.samples << " seed " << r.seed << '\n';
    for (const auto& a : r.results) {
        out << (a.passed ? "PASS " : "FAIL ") << a.name << " (" << a.checked << " checks)";
        if (!a.passed) {
            out << " witness:";
            for (const auto& w : a.witness) out << ' ' << w;
            if (!a.detail.empty()) out << " [" << a.detail << ']';
        }
        out << '\n';
    }
    out << "result: " << (r.all_passed() ? "pass" : "fail") << '\n';
}

AtomSet event_from(const Frame& frame, const std::vector<std::string>& atoms) { return frame.set(atoms); }

AtomSet event_from(const Frame& frame, const nlohmann::json& atoms) {
    return event_from(frame, atoms.get<std::vector<std::string>>());
}

void run_combine(std::ostream& out, const Scenario& s, const std::string& rule, const std::vector<std::string>& names) {
    if (names.empty()) throw Error(Errc::invalid_argument, "combine needs at least one body");
    if (rule == "dempster") {
        MassFunction m = s.body(names.front());
        for (std::size_t i = 1; i < names.size(); ++i) m = dempster_combine(m, s.body(names[i]));
        out << "dempster: " << m.format() << '\n';
    } else if (rule == "robust") {
        CredalSet c = mass_to_credal(s.body(names.front()));
        for (std::size_t i = 1; i < names.size(); ++i) c = combine_laplace(c, mass_to_credal(s.body(names[i])));
        std::string masses;
        for (const auto& [set, w] : lower_envelope_masses(c)) {
            if (!masses.empty()) masses += "; ";
            masses += s.frame.format(set) + ": " + to_string(w);
        }
        out << "robust: " << masses << '\n';
        print_credal(out, c);
    } else {
        throw Error(Errc::invalid_argument, "unknown rule '" + rule + "'");
    }
}

void run_envelopes(std::ostream& out, const CredalSet& c, AtomSet event) {
    auto [lo, hi] = envelopes(c, event);
    out << "envelopes " << c.space().format(event) << ": lower=" << to_string(lo) << " upper=" << to_string(hi) << '\n';
}

void run_decompose(std::ostream& out, const CredalSet& c, AtomSet event) {
    const PlausVector p = event_plausibility(c, event);
    const Decomposition d = zimmermann_decompose(p);
    out << "p=" << to_string(p) << '\n';
    out << "s=" << to_string(d.s) << " t=" << to_string(d.t) << " a=" << (d.a ? to_string(*d.a) : "none") << '\n';
}

void run_condition(std::ostream& out, const CredalSet& c, AtomSet event) { print_credal(out, condition(c, event)); }

/// Executes one validated query; semantic errors are reported and counted.
bool run_query(std::ostream& out, std::ostream& err, const Scenario& s, const Query& q, std::size_t index) {
    out << "# query " << index << ": " << q.op << '\n';
    const auto& a = q.args;
    try {
        if (q.op == "combine") {
            run_combine(out, s, a["rule"].get<std::string>(), a["bodies"].get<std::vector<std::string>>());
        } else if (q.op == "bel_pl") {
            const MassFunction& m = s.body(a["body"].get<std::string>());
            const AtomSet e = event_from(s.frame, a["event"]);
            auto [bel, pl] = bel_pl(m, e);
            out << "bel_pl " << s.frame.format(e) << ": bel=" << to_string(bel) << " pl=" << to_string(pl) << '\n';
        } else if (q.op == "to_credal") {
            print_credal(out, mass_to_credal(s.body(a["body"].get<std::string>())));
        } else if (q.op == "plausibility") {
            const CredalSet& c = s.credal(a["credal"].get<std::string>());
            out << "plausibility: " << to_string(event_plausibility(c, event_from(s.frame, a["event"]))) << '\n';
        } else if (q.op == "more_plausible") {
            const CredalSet& c = s.credal(a["credal"].get<std::string>());
            auto r = more_plausible(c, event_from(s.frame, a["a"]), event_from(s.frame, a["b"]));
            out << "more_plausible: " << to_string(r.verdict) << (r.equal ? " (equal)" : "") << '\n';
        } else if (q.op == "condition") {
            run_condition(out, s.credal(a["credal"].get<std::string>()), event_from(s.frame, a["event"]));
        } else if (q.op == "envelopes") {
            run_envelopes(out, s.credal(a["credal"].get<std::string>()), event_from(s.frame, a["event"]));
        } else if (q.op == "decompose") {
            run_decompose(out, s.credal(a["credal"].get<std::string>()), event_from(s.frame, a["event"]));
        }
    } catch (const Error& e) {
        if (exit_code_for(e.code()) != finding) throw;
        out << "finding: " << e.what() << '\n';
        err << "query " << index << ": " << e.what() << '\n';
        return false;
    }
    return true;
}

template <Kernel K>
std::vector<typename K::value_type> parse_values(const K& k, const std::vector<std::string>& texts) {
    std::vector<typename K::value_type> values;
    for (const auto& t : texts) values.push_back(k.parse(t));
    return values;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact plausibility calculus: extended probability, kernels, embeddings, credal sets and evidence"};
    app.name("plaus");
    app.require_subcommand(1);

    const std::vector<std::string> kernels{"rat", "eps", "bool", "rat-broken"};
    std::function<int()> action;

    // check-axioms
    std::string kernel_name;
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    auto* axioms = app.add_subcommand("check-axioms", "Test the plausibility-space laws on sampled tuples");
    axioms->add_option("--kernel", kernel_name, "Kernel name")->required()->check(CLI::IsMember(kernels));
    axioms->add_option("--samples", samples, "Random tuples")->check(CLI::PositiveNumber);
    axioms->add_option("--seed", seed, "Random seed");
    axioms->callback([&] {
        action = [&] {
            return with_kernel(kernel_name, [&](const auto& k) {
                auto report = check_axioms(k, samples, seed);
                print_report(out, report);
                return report.all_passed() ? ok : finding;
            });
        };
    });

    // embed
    std::size_t embed_samples = 200;
    auto* embed = app.add_subcommand("embed", "Verify the ordered-field embedding of a kernel");
    embed->add_option("--kernel", kernel_name, "Kernel name")->required()->check(CLI::IsMember(kernels));
    embed->add_option("--samples", embed_samples, "Random pairs")->check(CLI::PositiveNumber);
    embed->add_option("--seed", seed, "Random seed");
    embed->callback([&] {
        action = [&] {
            return with_kernel(kernel_name, [&](const auto& k) {
                auto report = verify_embedding(k, embed_samples, seed);
                print_report(out, report);
                return report.all_passed() ? ok : finding;
            });
        };
    });

    // order
    std::string lhs, rhs;
    auto* order = app.add_subcommand("order", "Compare two eps-expressions");
    order->add_option("lhs", lhs)->required();
    order->add_option("rhs", rhs)->required();
    order->callback([&] {
        action = [&] {
            out << to_string(compare(parse_eps_expr(lhs), parse_eps_expr(rhs))) << '\n';
            return ok;
        };
    });

    // gelman
    auto* gelman = app.add_subcommand("gelman", "Boxer/wrestler/coin example: Dempster vs robust combination");
    gelman->callback([&] {
        action = [&] {
            for (const auto& line : format_gelman(run_gelman())) out << line << '\n';
            return ok;
        };
    });

    // scenario run | law
    std::string file;
    auto* scenario = app.add_subcommand("scenario", "Scenario files and refinement law scenarios");
    scenario->require_subcommand(1);
    auto* scenario_run = scenario->add_subcommand("run", "Run the queries of a scenario file");
    scenario_run->add_option("file", file)->required();
    scenario_run->callback([&] {
        action = [&] {
            const Scenario s = load_scenario(file);
            bool clean = true;
            for (std::size_t i = 0; i < s.queries.size(); ++i) clean = run_query(out, err, s, s.queries[i], i) && clean;
            return clean ? ok : finding;
        };
    });
    std::string law_name;
    std::vector<std::string> law_values;
    auto* scenario_law = scenario->add_subcommand("law", "Evaluate a refinement scenario along both derivations");
    scenario_law->add_option("law", law_name, "assoc_F, comm_F, comm_G, assoc_G or distrib")->required();
    scenario_law->add_option("--kernel", kernel_name, "Kernel name")->required()->check(CLI::IsMember(kernels));
    scenario_law->add_option("values", law_values, "Kernel values")->required();
    scenario_law->callback([&] {
        action = [&] {
            auto law = law_from_string(law_name);
            if (!law) throw Error(Errc::invalid_argument, "unknown law '" + law_name + "'");
            return with_kernel(kernel_name, [&](const auto& k) {
                auto values = parse_values(k, law_values);
                auto [left, right] = two_path_eval(k, *law, std::span<const typename std::decay_t<decltype(k)>::value_type>(values));
                const bool same = k.equal(left, right);
                out << "left: " << k.format(left) << '\n' << "right: " << k.format(right) << '\n';
                out << "equal: " << (same ? "yes" : "no") << '\n';
                return same ? ok : finding;
            });
        };
    });

    // ds combine
    std::string rule;
    std::vector<std::string> body_names;
    auto* ds = app.add_subcommand("ds", "Dempster-Shafer operations");
    ds->require_subcommand(1);
    auto* ds_combine = ds->add_subcommand("combine", "Combine bodies of evidence from a scenario file");
    ds_combine->add_option("--rule", rule)->required()->check(CLI::IsMember({"dempster", "robust"}));
    ds_combine->add_option("file", file)->required();
    ds_combine->add_option("--bodies", body_names, "Body names")->required()->delimiter(',');
    ds_combine->callback([&] {
        action = [&] {
            run_combine(out, load_scenario(file), rule, body_names);
            return ok;
        };
    });

    // credal condition | envelopes | decompose
    std::string credal_name;
    std::vector<std::string> event_atoms;
    auto* credal = app.add_subcommand("credal", "Credal-set operations on a scenario file");
    credal->require_subcommand(1);
    auto add_credal_cmd = [&](const char* name, const char* help,
                              std::function<void(std::ostream&, const CredalSet&, AtomSet)> fn) {
        auto* cmd = credal->add_subcommand(name, help);
        cmd->add_option("file", file)->required();
        cmd->add_option("--credal", credal_name)->required();
        cmd->add_option("--event", event_atoms, "Atoms of the event")->required()->delimiter(',');
        cmd->callback([&, fn] {
            action = [&, fn] {
                const Scenario s = load_scenario(file);
                const CredalSet& c = s.credal(credal_name);
                fn(out, c, event_from(s.frame, event_atoms));
                return ok;
            };
        });
    };
    add_credal_cmd("condition", "Condition every member on the event", run_condition);
    add_credal_cmd("envelopes", "Lower and upper standard-part envelopes", run_envelopes);
    add_credal_cmd("decompose", "Zimmermann decomposition of the event plausibility", run_decompose);

    // archimedean / separability diagnostics
    std::string e_text;
    std::size_t n_max = 1'000'000;
    auto* arch = app.add_subcommand("archimedean", "Search N with N*e > S(e)");
    arch->add_option("--kernel", kernel_name)->required()->check(CLI::IsMember(kernels));
    arch->add_option("--e", e_text)->required();
    arch->add_option("--n-max", n_max);
    arch->callback([&] {
        action = [&] {
            return with_kernel(kernel_name, [&](const auto& k) {
                auto r = archimedean_check(k, k.parse(e_text), n_max);
                if (r.found)
                    out << "found(" << r.n << ")\n";
                else
                    out << "not_found (" << r.reason << ")\n";
                return ok;
            });
        };
    });

    std::string x_text, y_text, c_text;
    std::size_t bound = 1000;
    auto* sep = app.add_subcommand("separability", "Search (n, m) with x^n < c^m < y^n");
    sep->add_option("--kernel", kernel_name)->required()->check(CLI::IsMember(kernels));
    sep->add_option("--x", x_text)->required();
    sep->add_option("--y", y_text)->required();
    sep->add_option("--c", c_text)->required();
    sep->add_option("--bound", bound);
    sep->callback([&] {
        action = [&] {
            return with_kernel(kernel_name, [&](const auto& k) {
                auto r = separability_check(k, k.parse(x_text), k.parse(y_text), k.parse(c_text), bound);
                if (r.found)
                    out << "witness(" << r.n << ", " << r.m << ")\n";
                else
                    out << "not_found\n";
                return ok;
            });
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; every other parse failure is a usage error.
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    try {
        return action ? action() : usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

}  // namespace plaus::cli
