#include "clawkit/json_io.hpp"

#include <stdexcept>

namespace clawkit {

json to_json(const CombDescription& d) {
    return json{{"type", "comb"},
                {"base_size", d.base_size},
                {"roots", d.roots},
                {"leaf_sizes", d.leaf_sizes},
                {"m", d.m()},
                {"pointed", d.pointed()}};
}

json to_json(const HExpansion& e) {
    json j{{"type", "h_expansion"}, {"index", e.index}};
    if (e.index == 0) j["comb"] = to_json(e.comb);
    if (e.index >= 1 && e.index <= 5) j["clique_sizes"] = e.clique_sizes;
    return j;
}

json to_json(const FatDescription& d) {
    return json{{"type", "fat"},
                {"kind", d.kind == FatDescription::Kind::path ? "path" : "cycle"},
                {"clique_sizes", d.clique_sizes},
                {"parameter", d.parameter()}};
}

json to_json(const AlphaResult& r) {
    return json{{"alpha", r.alpha}, {"method", r.method}, {"witness", r.witness}};
}

json to_json(const FanCycleSystem& s) {
    return json{{"cycle", s.cycle},
                {"apex", s.apex},
                {"paths", s.paths},
                {"attach", s.attach}};
}

json halin_to_json(const std::string& graph6, const HalinCandidate& h,
                   const std::optional<FanCycleSystem>& fcs) {
    json edges = json::array();
    for (const auto& [u, v] : h.tree_edges) edges.push_back(json::array({u, v}));
    json j{{"graph6", graph6}, {"tree_edges", edges}, {"cycle", h.cycle}};
    if (fcs) j["fan_cycle_system"] = to_json(*fcs);
    return j;
}

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(std::string("halin json: ") + what);
}

std::vector<int> int_list(const json& j, const char* what) {
    require(j.is_array(), what);
    std::vector<int> v;
    for (const auto& x : j) {
        require(x.is_number_integer(), what);
        v.push_back(x.get<int>());
    }
    return v;
}

}  // namespace

HalinCandidate halin_from_json(const json& j, std::string& graph6_out,
                               std::optional<FanCycleSystem>& fcs_out) {
    require(j.is_object(), "document is not an object");
    require(j.contains("graph6") && j.at("graph6").is_string(),
            "missing string field graph6");
    require(j.contains("tree_edges") && j.at("tree_edges").is_array(),
            "missing array field tree_edges");
    require(j.contains("cycle"), "missing field cycle");
    graph6_out = j.at("graph6").get<std::string>();
    HalinCandidate h;
    for (const auto& e : j.at("tree_edges")) {
        require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                    e[1].is_number_integer(),
                "tree edge is not an integer pair");
        h.tree_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    h.cycle = int_list(j.at("cycle"), "cycle is not an integer array");
    fcs_out.reset();
    if (j.contains("fan_cycle_system")) {
        const json& f = j.at("fan_cycle_system");
        require(f.is_object(), "fan_cycle_system is not an object");
        require(f.contains("cycle") && f.contains("apex") && f.contains("paths") &&
                    f.contains("attach"),
                "fan_cycle_system missing fields");
        FanCycleSystem s;
        s.cycle = int_list(f.at("cycle"), "fcs cycle");
        require(f.at("apex").is_number_integer(), "fcs apex");
        s.apex = f.at("apex").get<int>();
        require(f.at("paths").is_array(), "fcs paths");
        for (const auto& p : f.at("paths")) s.paths.push_back(int_list(p, "fcs path"));
        s.attach = int_list(f.at("attach"), "fcs attach");
        fcs_out = std::move(s);
    }
    return h;
}

json verdict_to_json(const std::string& graph6, const std::string& theorem,
                     const Verdict& v) {
    const char* status = v.status == Verdict::Status::Holds ? "holds"
                         : v.status == Verdict::Status::NotApplicable
                             ? "not_applicable"
                             : "counterexample";
    json j{{"graph6", graph6},
           {"theorem", theorem},
           {"status", status},
           {"note", v.note}};
    if (v.status != Verdict::Status::NotApplicable) {
        j["trigger_present"] = v.trigger_present;
        j["in_class"] = v.in_class;
    }
    if (v.status == Verdict::Status::Counterexample) j["direction"] = v.direction;
    if (v.trigger_present) j["trigger_embedding"] = v.trigger_embedding;
    return j;
}

json sweep_to_json(const SweepReport& r) {
    json cex = json::array();
    for (const auto& c : r.cex)
        cex.push_back(json{{"graph6", c.graph6},
                           {"direction", c.direction},
                           {"detail", c.detail}});
    return json{{"theorem", r.theorem},
                {"n_range", r.n_range},
                {"holds", r.holds},
                {"not_applicable", r.not_applicable},
                {"counterexamples", r.counterexamples},
                {"skipped_disconnected", r.skipped_disconnected},
                {"cex", cex}};
}

}  // namespace clawkit
