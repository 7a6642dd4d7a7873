#pragma once
// Canonical labeling (equitable-partition refinement with individualization
// backtracking) and exhaustive enumeration of connected graphs up to
// isomorphism by one-vertex augmentation with canonical-form deduplication.

#include <functional>
#include <string>
#include <vector>

#include "clawkit/graph.hpp"

namespace clawkit {

// graph6 string of the canonically relabeled graph. Two graphs receive equal
// labels iff they are isomorphic. Supports n <= 64.
std::string canonical_form(const Graph& g);

// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g);

// Streams exactly one representative per isomorphism class of connected
// graphs on n vertices (1 <= n <= 9), in ascending canonical-form order,
// each emitted graph canonically labeled.
void enumerate_connected_stream(int n, const std::function<void(const Graph&)>& emit);

std::vector<Graph> enumerate_connected(int n);

}  // namespace clawkit
