#include "plaus/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "plaus/eps_parser.hpp"
#include "plaus/error.hpp"

namespace plaus {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message, Errc code = Errc::validation) {
    throw Error(code, path + ": " + message);
}

const json& member(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing \"") + key + "\"");
    return *it;
}

std::string string_at(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

EpsRational number_at(const json& v, const std::string& path) {
    const std::string text = string_at(v, path);
    try {
        return parse_eps_expr(text);
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

AtomSet atoms_at(const Frame& frame, const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of atoms");
    AtomSet s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const std::string atom = string_at(v[i], p);
        try {
            s = s | AtomSet::singleton(frame.index(atom));
        } catch (const Error& e) {
            fail(p, e.what(), Errc::unknown_atom);
        }
    }
    return s;
}

Frame parse_frame(const json& doc) {
    const json& f = member(doc, "frame", "frame");
    if (!f.is_array()) fail("frame", "expected an array of atom names");
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < f.size(); ++i) atoms.push_back(string_at(f[i], "frame[" + std::to_string(i) + "]"));
    try {
        return Frame(std::move(atoms));
    } catch (const Error& e) {
        fail("frame", e.what());
    }
}

MassFunction parse_body(const Frame& frame, const json& b, const std::string& path) {
    const json& masses = member(b, "masses", path);
    if (!masses.is_array()) fail(path + ".masses", "expected an array");
    std::vector<FocalElement> focal;
    for (std::size_t i = 0; i < masses.size(); ++i) {
        const std::string p = path + ".masses[" + std::to_string(i) + "]";
        AtomSet set = atoms_at(frame, member(masses[i], "set", p), p + ".set");
        EpsRational mass = number_at(member(masses[i], "mass", p), p + ".mass");
        focal.push_back({set, std::move(mass)});
    }
    try {
        return MassFunction(frame, std::move(focal));
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

CredalSet parse_credal(const Frame& frame, const json& c, const std::string& path) {
    const json& dists = member(c, "dists", path);
    if (!dists.is_array()) fail(path + ".dists", "expected an array");
    std::vector<ExtDist> out;
    for (std::size_t i = 0; i < dists.size(); ++i) {
        const std::string p = path + ".dists[" + std::to_string(i) + "]";
        if (!dists[i].is_object()) fail(p, "expected an object mapping atoms to probabilities");
        std::vector<EpsRational> probs(frame.size());
        for (const auto& [atom, value] : dists[i].items()) {
            std::size_t idx = 0;
            try {
                idx = frame.index(atom);
            } catch (const Error& e) {
                fail(p + "." + atom, e.what(), Errc::unknown_atom);
            }
            probs[idx] = number_at(value, p + "." + atom);
        }
        try {
            out.emplace_back(std::move(probs));
        } catch (const Error& e) {
            fail(p, e.what());
        }
    }
    try {
        return CredalSet(frame, std::move(out));
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

void check_query(const Scenario& s, const json& q, const std::string& path) {
    if (!q.is_object()) fail(path, "expected an object");
    const std::string op = string_at(member(q, "op", path), path + ".op");
    const auto& ops = query_ops();
    if (std::find(ops.begin(), ops.end(), op) == ops.end()) fail(path + ".op", "unknown operation '" + op + "'");

    auto need_body = [&](const json& v, const std::string& p) {
        const std::string name = string_at(v, p);
        if (!s.bodies.contains(name)) fail(p, "unknown body '" + name + "'");
    };
    auto need_credal = [&](const std::string& p) {
        const std::string name = string_at(member(q, "credal", path), p);
        if (!s.credals.contains(name)) fail(p, "unknown credal set '" + name + "'");
    };
    auto need_event = [&](const char* key) { atoms_at(s.frame, member(q, key, path), path + "." + key); };

    if (op == "combine") {
        const std::string rule = string_at(member(q, "rule", path), path + ".rule");
        if (rule != "dempster" && rule != "robust") fail(path + ".rule", "expected \"dempster\" or \"robust\"");
        const json& names = member(q, "bodies", path);
        if (!names.is_array() || names.empty()) fail(path + ".bodies", "expected a nonempty array of body names");
        for (std::size_t i = 0; i < names.size(); ++i) need_body(names[i], path + ".bodies[" + std::to_string(i) + "]");
    } else if (op == "bel_pl") {
        need_body(member(q, "body", path), path + ".body");
        need_event("event");
    } else if (op == "to_credal") {
        need_body(member(q, "body", path), path + ".body");
    } else if (op == "more_plausible") {
        need_credal(path + ".credal");
        need_event("a");
        need_event("b");
    } else {
        need_credal(path + ".credal");
        need_event("event");
    }
}

}  // namespace

const std::vector<std::string>& query_ops() {
    static const std::vector<std::string> ops{"combine",        "bel_pl",    "to_credal",  "plausibility",
                                              "more_plausible", "condition", "envelopes", "decompose"};
    return ops;
}

const MassFunction& Scenario::body(std::string_view name) const {
    auto it = bodies.find(std::string(name));
    if (it == bodies.end()) throw Error(Errc::invalid_argument, "unknown body '" + std::string(name) + "'");
    return it->second;
}

const CredalSet& Scenario::credal(std::string_view name) const {
    auto it = credals.find(std::string(name));
    if (it == credals.end()) throw Error(Errc::invalid_argument, "unknown credal set '" + std::string(name) + "'");
    return it->second;
}

Scenario parse_scenario(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::parse, std::string("malformed scenario: ") + e.what());
    }
    if (!doc.is_object()) fail("$", "expected a JSON object");

    Scenario s{parse_frame(doc), {}, {}, {}};

    auto named = [&](const char* key, auto&& parse_one, auto& target) {
        auto it = doc.find(key);
        if (it == doc.end()) return;
        if (!it->is_array()) fail(key, "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string p = std::string(key) + "[" + std::to_string(i) + "]";
            const std::string name = string_at(member((*it)[i], "name", p), p + ".name");
            if (s.bodies.contains(name) || s.credals.contains(name)) fail(p + ".name", "duplicate name '" + name + "'");
            target.emplace(name, parse_one(s.frame, (*it)[i], p));
        }
    };
    named("bodies", parse_body, s.bodies);
    named("credals", parse_credal, s.credals);

    if (auto it = doc.find("queries"); it != doc.end()) {
        if (!it->is_array()) fail("queries", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string p = "queries[" + std::to_string(i) + "]";
            check_query(s, (*it)[i], p);
            s.queries.push_back(Query{(*it)[i]["op"].get<std::string>(), (*it)[i]});
        }
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse, "cannot open scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace plaus
