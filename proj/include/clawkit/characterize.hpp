#pragma once
// Theorem checking: each statement is data (forbidden family F1, trigger
// pattern, target-class membership test), checked per graph and swept over
// enumerated ranges or graph6 streams with worker-pool parallelism.
// Applicability: connected and F1-free. A theorem holds on an applicable
// graph iff (trigger occurs as induced subgraph) == (graph lies in the class).

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "clawkit/graph.hpp"
#include "clawkit/patterns.hpp"

namespace clawkit {

enum class TheoremId { ThmA, Thm1z, Thm1, Thm2, Thm3, Olariu };

struct Theorem {
    TheoremId id = TheoremId::Thm1;
    int m = 1;  // Thm3 family parameter
};

// Accepted names: thmA, thm1z, thm1, thm2, thm3, olariu (case-insensitive).
Theorem parse_theorem(const std::string& name, int m = 1);
std::string theorem_name(const Theorem& t);

struct ClassResult {
    bool member = false;
    std::string witness;  // short description of the recognized structure
};

// A checkable statement as data; the named theorems are instances of this.
struct TheoremSpec {
    std::string name;
    std::vector<PatternSpec> family;  // F1
    PatternSpec trigger;
    std::function<ClassResult(const Graph&)> in_class;
};

TheoremSpec theorem_spec(const Theorem& t);

struct Verdict {
    enum class Status { NotApplicable, Holds, Counterexample };
    Status status = Status::NotApplicable;
    std::string note;  // applicability reason, or class witness when it holds
    bool trigger_present = false;
    bool in_class = false;
    std::vector<int> trigger_embedding;  // when trigger present
    // counterexamples: "only_if" = trigger present but not in the class,
    // "if" = in the class without the trigger
    std::string direction;
};

Verdict check(const Graph& g, const TheoremSpec& spec);
Verdict check(const Graph& g, const Theorem& t);

struct Counterexample {
    std::string graph6;
    std::string direction;
    std::string detail;
};

struct SweepReport {
    std::string theorem;
    std::string n_range;
    long holds = 0;
    long not_applicable = 0;
    long counterexamples = 0;
    long skipped_disconnected = 0;  // stream entries only
    std::vector<Counterexample> cex;  // sorted by graph6 string
};

// Sweeps all connected graphs with 1 <= n <= max_n (internal enumeration).
SweepReport sweep_enumerated(int max_n, const TheoremSpec& spec, int jobs = 1);
// Sweeps graph6 lines from a stream; disconnected entries are skipped+counted.
SweepReport sweep_stream(std::istream& in, const TheoremSpec& spec, int jobs = 1);

}  // namespace clawkit
