#pragma once
// JSON shapes for the line-oriented CLI output. One object per line; key
// order is nlohmann's sorted order, so identical inputs give identical bytes.

#include <optional>
#include <string>

#include "json.hpp"

#include "clawkit/characterize.hpp"
#include "clawkit/halin.hpp"
#include "clawkit/indep.hpp"
#include "clawkit/structures.hpp"

namespace clawkit {

using json = nlohmann::json;

json to_json(const CombDescription& d);
json to_json(const HExpansion& e);
json to_json(const FatDescription& d);
json to_json(const AlphaResult& r);
json to_json(const FanCycleSystem& s);

// {graph6, tree_edges, cycle} (+ fan_cycle_system when present)
json halin_to_json(const std::string& graph6, const HalinCandidate& h,
                   const std::optional<FanCycleSystem>& fcs = std::nullopt);
// Inverse: reads graph6 out-param plus candidate; throws std::invalid_argument
// on malformed documents.
HalinCandidate halin_from_json(const json& j, std::string& graph6_out,
                               std::optional<FanCycleSystem>& fcs_out);

json verdict_to_json(const std::string& graph6, const std::string& theorem,
                     const Verdict& v);
json sweep_to_json(const SweepReport& r);

}  // namespace clawkit
