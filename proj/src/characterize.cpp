#include "clawkit/characterize.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "clawkit/enumerate.hpp"
#include "clawkit/structures.hpp"

namespace clawkit {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = (char)std::tolower((unsigned char)c);
    return s;
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

std::string fat_witness(const FatDescription& d) {
    std::ostringstream os;
    os << (d.kind == FatDescription::Kind::path ? "fat path" : "fat cycle")
       << ", parameter " << d.parameter() << ", sizes ";
    os << join_ints(d.clique_sizes);
    return os.str();
}

ClassResult class_comb(const Graph& g) {
    if (auto c = recognize_comb(g)) {
        std::ostringstream os;
        os << "generalized comb, m=" << c->m() << ", base " << c->base_size;
        return {true, os.str()};
    }
    return {false, {}};
}

ClassResult class_h_union(const Graph& g) {
    if (auto h = recognize_H_union(g)) {
        std::ostringstream os;
        if (h->index == 0) {
            os << "pointed comb (H0), m=" << h->comb.m();
        } else {
            os << "H" << h->index << " expansion";
            if (!h->clique_sizes.empty())
                os << ", sizes " << join_ints(h->clique_sizes);
        }
        return {true, os.str()};
    }
    return {false, {}};
}

ClassResult class_fat(const Graph& g, int min_l) {
    if (auto d = recognize_fat(g, min_l)) return {true, fat_witness(*d)};
    return {false, {}};
}

ClassResult class_multipartite3(const Graph& g) {
    if (auto parts = complete_multipartite_parts(g)) {
        if ((int)parts->size() >= 3) {
            std::ostringstream os;
            os << "complete multipartite, " << parts->size() << " parts";
            return {true, os.str()};
        }
    }
    return {false, {}};
}

}  // namespace

Theorem parse_theorem(const std::string& name, int m) {
    std::string s = lower(name);
    if (s == "thma") return {TheoremId::ThmA, 1};
    if (s == "thm1z") return {TheoremId::Thm1z, 1};
    if (s == "thm1") return {TheoremId::Thm1, 1};
    if (s == "thm2") return {TheoremId::Thm2, 1};
    if (s == "thm3") {
        if (m < 1) throw std::invalid_argument("thm3 requires m >= 1");
        return {TheoremId::Thm3, m};
    }
    if (s == "olariu") return {TheoremId::Olariu, 1};
    throw std::invalid_argument("unknown theorem: " + name);
}

std::string theorem_name(const Theorem& t) {
    switch (t.id) {
        case TheoremId::ThmA: return "thmA";
        case TheoremId::Thm1z: return "thm1z";
        case TheoremId::Thm1: return "thm1";
        case TheoremId::Thm2: return "thm2";
        case TheoremId::Thm3: return "thm3(m=" + std::to_string(t.m) + ")";
        case TheoremId::Olariu: return "olariu";
    }
    throw std::logic_error("bad theorem id");
}

TheoremSpec theorem_spec(const Theorem& t) {
    TheoremSpec spec;
    spec.name = theorem_name(t);
    switch (t.id) {
        case TheoremId::ThmA:
            spec.family = {PatternSpec::claw(), PatternSpec::B(1, 2)};
            spec.trigger = PatternSpec::net();
            spec.in_class = class_comb;
            break;
        case TheoremId::Thm1z:
            spec.family = {PatternSpec::claw(), PatternSpec::Z(2)};
            spec.trigger = PatternSpec::B(1, 1);
            spec.in_class = class_h_union;
            break;
        case TheoremId::Thm1:
            spec.family = {PatternSpec::claw(), PatternSpec::B(1, 1)};
            spec.trigger = PatternSpec::path(5);
            spec.in_class = [](const Graph& g) { return class_fat(g, 5); };
            break;
        case TheoremId::Thm2:
            spec.family = {PatternSpec::claw(), PatternSpec::B(1, 2)};
            spec.trigger = PatternSpec::path(6);
            spec.in_class = [](const Graph& g) { return class_fat(g, 6); };
            break;
        case TheoremId::Thm3: {
            int l = std::max(3 * t.m, t.m + 4);
            spec.family = {PatternSpec::claw(), PatternSpec::B(1, t.m)};
            spec.trigger = PatternSpec::path(l);
            spec.in_class = [l](const Graph& g) { return class_fat(g, l); };
            break;
        }
        case TheoremId::Olariu:
            spec.family = {PatternSpec::Z(1)};
            spec.trigger = PatternSpec::complete(3);
            spec.in_class = class_multipartite3;
            break;
    }
    return spec;
}

Verdict check(const Graph& g, const TheoremSpec& spec) {
    if (g.n == 0) throw std::invalid_argument("check: empty graph");
    Verdict v;
    if (!is_connected(g)) {
        v.status = Verdict::Status::NotApplicable;
        v.note = "disconnected";
        return v;
    }
    if (auto viol = find_family_violation(g, spec.family)) {
        v.status = Verdict::Status::NotApplicable;
        v.note = "not " + spec.family[viol->family_index].name() +
                 "-free, embedding " + join_ints(viol->embedding);
        return v;
    }
    auto emb = find_induced(g, make_pattern(spec.trigger));
    v.trigger_present = emb.has_value();
    if (emb) v.trigger_embedding = *emb;
    ClassResult cls = spec.in_class(g);
    v.in_class = cls.member;
    if (v.trigger_present == v.in_class) {
        v.status = Verdict::Status::Holds;
        if (cls.member) v.note = cls.witness;
        else v.note = "no " + spec.trigger.name() + ", not in class";
    } else {
        v.status = Verdict::Status::Counterexample;
        if (v.trigger_present) {
            v.direction = "only_if";
            v.note = spec.trigger.name() + " at " + join_ints(*emb) +
                     " but class recognition fails";
        } else {
            v.direction = "if";
            v.note = cls.witness + " without induced " + spec.trigger.name();
        }
    }
    return v;
}

Verdict check(const Graph& g, const Theorem& t) {
    return check(g, theorem_spec(t));
}

namespace {

struct Tally {
    long holds = 0, not_applicable = 0, counterexamples = 0;
    std::vector<Counterexample> cex;
};

void tally_one(const Graph& g, const std::string& g6, const TheoremSpec& spec,
               Tally& t) {
    Verdict v = check(g, spec);
    switch (v.status) {
        case Verdict::Status::Holds: ++t.holds; break;
        case Verdict::Status::NotApplicable: ++t.not_applicable; break;
        case Verdict::Status::Counterexample:
            ++t.counterexamples;
            t.cex.push_back({g6, v.direction, v.note});
            break;
    }
}

void run_batch(const std::vector<std::pair<Graph, std::string>>& batch,
               const TheoremSpec& spec, int jobs, Tally& out) {
    if (jobs <= 1 || batch.size() < 2) {
        for (const auto& [g, g6] : batch) tally_one(g, g6, spec, out);
        return;
    }
    int workers = std::min<int>(jobs, (int)batch.size());
    std::vector<Tally> parts(workers);
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (size_t i = next.fetch_add(1); i < batch.size();
                 i = next.fetch_add(1)) {
                tally_one(batch[i].first, batch[i].second, spec, parts[w]);
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& p : parts) {
        out.holds += p.holds;
        out.not_applicable += p.not_applicable;
        out.counterexamples += p.counterexamples;
        out.cex.insert(out.cex.end(), p.cex.begin(), p.cex.end());
    }
}

SweepReport finish(const TheoremSpec& spec, std::string n_range, Tally tally,
                   long skipped) {
    SweepReport rep;
    rep.theorem = spec.name;
    rep.n_range = std::move(n_range);
    rep.holds = tally.holds;
    rep.not_applicable = tally.not_applicable;
    rep.counterexamples = tally.counterexamples;
    rep.skipped_disconnected = skipped;
    rep.cex = std::move(tally.cex);
    std::sort(rep.cex.begin(), rep.cex.end(),
              [](const Counterexample& a, const Counterexample& b) {
                  if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
                  return a.direction < b.direction;
              });
    return rep;
}

}  // namespace

SweepReport sweep_enumerated(int max_n, const TheoremSpec& spec, int jobs) {
    if (max_n < 1 || max_n > 9)
        throw std::invalid_argument("sweep: max_n must be in 1..9");
    Tally tally;
    std::vector<std::pair<Graph, std::string>> batch;
    const size_t flush_at = 4096 * (size_t)std::max(1, jobs);
    for (int n = 1; n <= max_n; ++n) {
        enumerate_connected_stream(n, [&](const Graph& g) {
            batch.emplace_back(g, write_graph6(g));
            if (batch.size() >= flush_at) {
                run_batch(batch, spec, jobs, tally);
                batch.clear();
            }
        });
    }
    run_batch(batch, spec, jobs, tally);
    return finish(spec, "1.." + std::to_string(max_n), std::move(tally), 0);
}

SweepReport sweep_stream(std::istream& in, const TheoremSpec& spec, int jobs) {
    Tally tally;
    long skipped = 0;
    std::vector<std::pair<Graph, std::string>> batch;
    const size_t flush_at = 4096 * (size_t)std::max(1, jobs);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const Graph6Error& e) {
            throw Graph6Error("line " + std::to_string(lineno) + ": " + e.detail,
                              e.offset);
        }
        if (!is_connected(g)) {
            ++skipped;
            continue;
        }
        batch.emplace_back(std::move(g), line);
        if (batch.size() >= flush_at) {
            run_batch(batch, spec, jobs, tally);
            batch.clear();
        }
    }
    run_batch(batch, spec, jobs, tally);
    return finish(spec, "stream", std::move(tally), skipped);
}

}  // namespace clawkit
