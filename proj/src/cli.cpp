#include "clawkit/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "clawkit/characterize.hpp"
#include "clawkit/enumerate.hpp"
#include "clawkit/graph.hpp"
#include "clawkit/halin.hpp"
#include "clawkit/indep.hpp"
#include "clawkit/json_io.hpp"
#include "clawkit/patterns.hpp"
#include "clawkit/structures.hpp"

namespace clawkit {

namespace {

int env_jobs() {
    if (const char* e = std::getenv("COMBCLASS_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024) return (int)v;
    }
    return 1;
}

Graph parse_input_graph(const std::string& s) {
    try {
        return parse_graph6(s);
    } catch (const Graph6Error& e) {
        throw std::invalid_argument("bad graph6 input \"" + s + "\": " + e.what());
    }
}

// graph6 inputs come from positional arguments when given, stdin lines otherwise
template <class F>
void each_input(const std::vector<std::string>& args, std::istream& in, F&& f) {
    if (!args.empty()) {
        for (const auto& a : args) f(a);
        return;
    }
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty()) continue;
        f(line);
    }
}

int cmd_parse(const std::vector<std::string>& args, std::istream& in,
              std::ostream& out) {
    long bad = 0;
    each_input(args, in, [&](const std::string& s) {
        json j{{"graph6", s}};
        try {
            Graph g = parse_graph6(s);
            j["ok"] = true;
            j["n"] = g.n;
            j["edges"] = g.edge_count();
        } catch (const Graph6Error& e) {
            j["ok"] = false;
            j["error"] = e.what();
            j["offset"] = (long)e.offset;
            ++bad;
        }
        out << j.dump() << "\n";
    });
    return bad ? 1 : 0;
}

int cmd_free(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, const std::string& family_str) {
    auto family = parse_family(family_str);
    long hits = 0;
    each_input(args, in, [&](const std::string& s) {
        Graph g = parse_input_graph(s);
        json j{{"graph6", s}};
        if (auto viol = find_family_violation(g, family)) {
            j["free"] = false;
            j["witness"] = json{{"pattern", family[viol->family_index].name()},
                                {"embedding", viol->embedding}};
            ++hits;
        } else {
            j["free"] = true;
        }
        out << j.dump() << "\n";
    });
    return hits ? 1 : 0;
}

int cmd_find(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, const std::string& pattern_str) {
    PatternSpec spec = parse_pattern(pattern_str);
    Graph pat = make_pattern(spec);
    long misses = 0;
    each_input(args, in, [&](const std::string& s) {
        Graph g = parse_input_graph(s);
        json j{{"graph6", s}, {"pattern", spec.name()}};
        if (auto emb = find_induced(g, pat)) {
            j["found"] = true;
            j["embedding"] = *emb;
        } else {
            j["found"] = false;
            ++misses;
        }
        out << j.dump() << "\n";
    });
    return misses ? 1 : 0;
}

int cmd_recognize(const std::vector<std::string>& args, std::istream& in,
                  std::ostream& out, const std::string& family, int min_l) {
    if (family != "comb" && family != "hunion" && family != "fat")
        throw std::invalid_argument("--family must be comb, hunion, or fat");
    long misses = 0;
    each_input(args, in, [&](const std::string& s) {
        Graph g = parse_input_graph(s);
        json j{{"graph6", s}, {"family", family}};
        json desc;
        bool ok = false;
        if (family == "comb") {
            if (auto d = recognize_comb(g)) {
                ok = true;
                desc = to_json(*d);
            }
        } else if (family == "hunion") {
            if (auto d = recognize_H_union(g)) {
                ok = true;
                desc = to_json(*d);
            }
        } else {
            if (auto d = recognize_fat(g, min_l)) {
                ok = true;
                desc = to_json(*d);
            }
        }
        j["recognized"] = ok;
        if (ok) j["description"] = desc;
        else ++misses;
        out << j.dump() << "\n";
    });
    return misses ? 1 : 0;
}

json construct_description(const Construct& c) {
    switch (c.kind) {
        case Construct::Kind::fat: return to_json(c.fat);
        case Construct::Kind::comb: return to_json(c.comb);
        case Construct::Kind::h: return to_json(c.h);
        case Construct::Kind::fprime:
            return json{{"type", "fprime"}, {"m", c.fprime_m}};
    }
    throw std::logic_error("bad construct kind");
}

int cmd_build(std::ostream& out, const std::string& construct_str) {
    Construct c = parse_construct(construct_str);
    Graph g = build_construct(c);
    json j{{"construct", construct_str},
           {"graph6", write_graph6(g)},
           {"n", g.n},
           {"edges", g.edge_count()},
           {"description", construct_description(c)}};
    out << j.dump() << "\n";
    return 0;
}

int cmd_check(const std::vector<std::string>& args, std::istream& in,
              std::ostream& out, const std::string& theorem_str, int m) {
    TheoremSpec spec = theorem_spec(parse_theorem(theorem_str, m));
    long cex = 0;
    each_input(args, in, [&](const std::string& s) {
        Graph g = parse_input_graph(s);
        Verdict v = check(g, spec);
        if (v.status == Verdict::Status::Counterexample) ++cex;
        out << verdict_to_json(s, spec.name, v).dump() << "\n";
    });
    return cex ? 1 : 0;
}

int cmd_sweep(std::istream& in, std::ostream& out,
              const std::string& theorem_str, int m, int n, int jobs) {
    TheoremSpec spec = theorem_spec(parse_theorem(theorem_str, m));
    SweepReport rep =
        n > 0 ? sweep_enumerated(n, spec, jobs) : sweep_stream(in, spec, jobs);
    out << sweep_to_json(rep).dump() << "\n";
    return rep.counterexamples ? 1 : 0;
}

int cmd_enumerate(std::ostream& out, int n) {
    enumerate_connected_stream(n, [&](const Graph& g) {
        out << write_graph6(g) << "\n";
    });
    return 0;
}

int cmd_halin(std::istream& in, std::ostream& out,
              const std::string& construct_str, bool verify) {
    if (!construct_str.empty()) {
        Construct c = parse_construct(construct_str);
        Graph g;
        HalinCandidate cand;
        std::optional<FanCycleSystem> fcs;
        switch (c.kind) {
            case Construct::Kind::fat:
                g = build_fat(c.fat);
                cand = halin_for_fat(c.fat);
                break;
            case Construct::Kind::comb: {
                HExpansion e;
                e.index = 0;
                e.comb = c.comb;
                g = build_comb(c.comb);
                fcs = fan_cycle_for_H(g, e);
                cand = halin_from_fan_cycle(g, *fcs);
                break;
            }
            case Construct::Kind::h:
                g = build_H(c.h);
                fcs = fan_cycle_for_H(g, c.h);
                cand = halin_from_fan_cycle(g, *fcs);
                break;
            case Construct::Kind::fprime:
                throw std::invalid_argument(
                    "halin: Fprime is not a Halin construction target");
        }
        json j = halin_to_json(write_graph6(g), cand, fcs);
        int rc = 0;
        if (verify) {
            VerifyResult vr{true, ""};
            if (fcs) vr = verify_fan_cycle_system(g, *fcs);
            if (vr.ok) vr = verify_halin(g, cand);
            j["verified"] = vr.ok;
            if (!vr.ok) {
                j["reason"] = vr.reason;
                rc = 1;
            }
        }
        out << j.dump() << "\n";
        return rc;
    }
    if (!verify)
        throw std::invalid_argument("halin: need --construct and/or --verify");
    long failed = 0;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty()) continue;
        json doc = json::parse(line);
        std::string g6;
        std::optional<FanCycleSystem> fcs;
        HalinCandidate cand = halin_from_json(doc, g6, fcs);
        Graph g = parse_input_graph(g6);
        VerifyResult vr{true, ""};
        if (fcs) vr = verify_fan_cycle_system(g, *fcs);
        if (vr.ok) vr = verify_halin(g, cand);
        json j{{"graph6", g6}, {"ok", vr.ok}};
        if (!vr.ok) {
            j["reason"] = vr.reason;
            ++failed;
        }
        out << j.dump() << "\n";
    }
    return failed ? 1 : 0;
}

int cmd_alpha(const std::vector<std::string>& args, std::istream& in,
              std::ostream& out, const std::string& method, int min_l) {
    if (method != "auto" && method != "brute" && method != "fat")
        throw std::invalid_argument("--method must be auto, brute, or fat");
    static const std::vector<PatternSpec> b11family{PatternSpec::claw(),
                                                    PatternSpec::B(1, 1)};
    long failures = 0;
    each_input(args, in, [&](const std::string& s) {
        Graph g = parse_input_graph(s);
        json j{{"graph6", s}};
        if (method == "brute") {
            j.update(to_json(alpha_bruteforce(g)));
        } else if (method == "fat") {
            if (auto d = recognize_fat(g, min_l)) {
                j.update(to_json(alpha_fat(*d)));
            } else {
                j["error"] = "not a fat structure with parameter >= " +
                             std::to_string(min_l);
                ++failures;
            }
        } else {  // auto: the B11-free dispatcher when applicable, else brute
            if (is_connected(g) && is_free(g, b11family))
                j.update(to_json(alpha_B11free(g)));
            else
                j.update(to_json(alpha_bruteforce(g)));
        }
        out << j.dump() << "\n";
    });
    return failures ? 1 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out) {
    CLI::App app{"constructions, recognizers and theorem checks for claw-free graph families"};
    app.require_subcommand(0, 1);
    long long seed = 0;  // reserved: fixes randomized generators in test tooling
    app.add_option("--seed", seed, "seed for randomized generators (reserved)");

    std::vector<std::string> graphs;
    std::string family_str, pattern_str, rec_family, theorem_str, construct_str;
    std::string method = "auto";
    int m = 1, n = 0, min_l = 5;
    int jobs = env_jobs();
    bool deterministic = false, verify = false, connected = true;

    auto* c_parse = app.add_subcommand("parse", "parse graph6 lines, report n/edges or errors");
    c_parse->add_option("graphs", graphs, "graph6 strings (default: stdin)");

    auto* c_free = app.add_subcommand("free", "test induced-subgraph freeness for a family");
    c_free->add_option("graphs", graphs, "graph6 strings (default: stdin)");
    c_free->add_option("--family", family_str, "pattern list, e.g. K1,3,Z2")->required();

    auto* c_find = app.add_subcommand("find", "find one induced embedding of a pattern");
    c_find->add_option("graphs", graphs, "graph6 strings (default: stdin)");
    c_find->add_option("--pattern", pattern_str, "pattern, e.g. P5 or B1,2")->required();

    auto* c_rec = app.add_subcommand("recognize", "recognize comb / hunion / fat membership");
    c_rec->add_option("graphs", graphs, "graph6 strings (default: stdin)");
    c_rec->add_option("--family", rec_family, "comb | hunion | fat")->required();
    c_rec->add_option("--min-l", min_l, "minimum fat parameter (fat only, default 5)");

    auto* c_build = app.add_subcommand("build", "build a graph from a construct description");
    c_build->add_option("--construct", construct_str,
                        "fatpath:... | fatcycle:... | comb:... | H3:u6=2 | Fprime:m=2")
        ->required();

    auto* c_check = app.add_subcommand("check", "check a theorem on input graphs");
    c_check->add_option("graphs", graphs, "graph6 strings (default: stdin)");
    c_check->add_option("--theorem", theorem_str, "thmA | thm1z | thm1 | thm2 | thm3 | olariu")
        ->required();
    c_check->add_option("--m", m, "family parameter for thm3 (default 1)");

    auto* c_sweep = app.add_subcommand("sweep", "check a theorem over all connected graphs");
    c_sweep->add_option("--theorem", theorem_str, "thmA | thm1z | thm1 | thm2 | thm3 | olariu")
        ->required();
    c_sweep->add_option("--m", m, "family parameter for thm3 (default 1)");
    c_sweep->add_option("--n", n, "enumerate orders 1..n internally (omit: read graph6 stream)");
    c_sweep->add_option("--jobs", jobs, "worker threads (default: COMBCLASS_JOBS or 1)");
    c_sweep->add_flag("--deterministic", deterministic, "single-threaded, byte-reproducible output");

    auto* c_enum = app.add_subcommand("enumerate", "emit all connected graphs on n vertices");
    c_enum->add_option("--n", n, "number of vertices (1..9)")->required();
    c_enum->add_flag("--connected", connected, "connected classes only (always on)");
    c_enum->add_flag("--deterministic", deterministic, "canonical order (always on)");
    c_enum->add_option("--jobs", jobs, "accepted for symmetry; generation is single-threaded");

    auto* c_halin = app.add_subcommand("halin", "construct / verify spanning Halin certificates");
    c_halin->add_option("--construct", construct_str, "fatpath:... | fatcycle:... | comb:... | H1:...");
    c_halin->add_flag("--verify", verify, "verify (with --construct: the built candidate; else stdin JSON)");

    auto* c_alpha = app.add_subcommand("alpha", "independence number with witness");
    c_alpha->add_option("graphs", graphs, "graph6 strings (default: stdin)");
    c_alpha->add_option("--method", method, "auto | brute | fat (default auto)");
    c_alpha->add_option("--min-l", min_l, "minimum fat parameter for --method fat (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, std::cerr);
        return rc == 0 ? 0 : 2;
    }

    auto subs = app.get_subcommands();
    if (subs.empty()) {
        std::cerr << app.help() << std::flush;
        return 2;
    }
    CLI::App* sub = subs.front();

    try {
        if (deterministic) jobs = 1;
        if (sub == c_parse) return cmd_parse(graphs, in, out);
        if (sub == c_free) return cmd_free(graphs, in, out, family_str);
        if (sub == c_find) return cmd_find(graphs, in, out, pattern_str);
        if (sub == c_rec) return cmd_recognize(graphs, in, out, rec_family, min_l);
        if (sub == c_build) return cmd_build(out, construct_str);
        if (sub == c_check) return cmd_check(graphs, in, out, theorem_str, m);
        if (sub == c_sweep) return cmd_sweep(in, out, theorem_str, m, n, jobs);
        if (sub == c_enum) return cmd_enumerate(out, n);
        if (sub == c_halin) return cmd_halin(in, out, construct_str, verify);
        if (sub == c_alpha) return cmd_alpha(graphs, in, out, method, min_l);
        std::cerr << "error: unknown command\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace clawkit
