#ifndef PFT_GRAPH_ANALYSIS_HPP_
#define PFT_GRAPH_ANALYSIS_HPP_

#include "pft/presentation.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace pft {

/// Strongly connected components, each sorted, ordered by smallest member.
std::vector<std::vector<StateId>> scc(const LabeledGraph& g);

/// Non-empty and strongly connected.
bool is_irreducible(const LabeledGraph& g);

/// Components that contain at least one edge (i.e. some cycle).
std::vector<std::vector<StateId>> cyclic_components(const LabeledGraph& g);

/**
 * per(V) for every state on a cycle and per(G) = gcd of them.
 */
struct PeriodReport {
    /// per(V); empty for states that lie on no cycle.
    std::vector<std::optional<std::size_t>> per_state;
    /// per(V) of each cyclic component, in scc() order restricted to cyclic components.
    std::vector<std::size_t> per_component;
    std::size_t per_graph = 0;
    bool irreducible = false;
    std::vector<StateId> acyclic_states;
};

/// Throws Error("aperiodic-empty") when the graph has no cycle.
PeriodReport graph_period(const LabeledGraph& g);

struct JoinabilityResult {
    bool joinable = true;
    /// Set for the empty graph: the statement holds vacuously.
    bool vacuous = false;
    /// A pair (u, v) of blocks with no z such that uzv is a block.
    std::optional<std::pair<Word, Word>> counterexample;
};

/// For all blocks u, v with |u|, |v| <= max_len, decides whether some z makes uzv a block.
JoinabilityResult language_irreducibility_check(const LabeledGraph& g, std::size_t max_len);

} // namespace pft

#endif // PFT_GRAPH_ANALYSIS_HPP_
