#ifndef PFT_PRESENTATION_HPP_
#define PFT_PRESENTATION_HPP_

#include "pft/pft_spec.hpp"
#include "pft/word.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pft {

using StateId = std::uint32_t;

/// State identity in a phased de Bruijn graph: copy `phase` of the length-ℓ word `word`.
struct StateTag {
    std::uint32_t phase = 0;
    WordCode word = 0;

    friend auto operator<=>(const StateTag&, const StateTag&) = default;
};

struct Edge {
    StateId from = 0;
    StateId to = 0;
    Symbol label = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Labeled directed graph presenting a sofic shift.
 *
 * Edges are kept sorted by (from, label, to); parallel edges with distinct labels are
 * allowed. Tags are unique and, for graphs built from specs, sorted phase-major then by
 * word code, which makes every construction reproducible.
 */
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(Alphabet alphabet, std::size_t word_length, std::size_t phases,
                 std::vector<StateTag> states, std::vector<Edge> edges);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t q() const noexcept { return alphabet_.size(); }
    /// ℓ, the length of the words naming the states.
    std::size_t word_length() const noexcept { return word_length_; }
    std::size_t phases() const noexcept { return phases_; }

    std::size_t num_states() const noexcept { return states_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return states_.empty(); }

    const std::vector<StateTag>& states() const noexcept { return states_; }
    const StateTag& tag(StateId s) const { return states_.at(s); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Edge> out_edges(StateId s) const;
    /// Target of the `label` edge leaving s, or -1. Meaningful on deterministic graphs.
    std::int64_t successor(StateId s, Symbol label) const;

    /// Index of the state with the given tag, or -1.
    std::int64_t find(const StateTag& tag) const;

    /// No state has two outgoing edges with the same label.
    bool is_deterministic() const;

    /// Subgraph induced by the states with keep[s] == true; relative order is preserved.
    LabeledGraph induced(const std::vector<bool>& keep) const;

    Word state_word(StateId s) const;
    /// "phase:word" rendered with the alphabet glyphs.
    std::string state_name(StateId s) const;

private:
    Alphabet alphabet_{2};
    std::size_t word_length_ = 0;
    std::size_t phases_ = 1;
    std::vector<StateTag> states_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
};

/// T copies of Σ^ℓ; u^(j) --a--> v^(j+1 mod T) iff u_2..u_ℓ = v_1..v_{ℓ-1} and v_ℓ = a.
LabeledGraph build_phased_full(const PftSpec& normal_spec);

/// Deletes the phase-0 copies of the words of F^(0) (the graph G').
LabeledGraph remove_forbidden(const LabeledGraph& g, const PftSpec& normal_spec);

/// Repeatedly deletes states without incoming or without outgoing edges.
LabeledGraph trim_essential(const LabeledGraph& g);

/// The Moision-Siegel presentation G_X: normalize, phased full graph, removal, trimming.
LabeledGraph build_ms(const PftSpec& spec);

/// Subgraph of G' induced by the copies of Σ^ℓ \ F^(0) in every phase (not trimmed).
LabeledGraph build_subgraph_H(const PftSpec& normal_spec);

/// Graphviz rendering with states "phase:word" and glyph edge labels, sorted.
void write_dot(std::ostream& out, const LabeledGraph& g, const std::string& name = "pft");
std::string to_dot(const LabeledGraph& g, const std::string& name = "pft");

} // namespace pft

#endif // PFT_PRESENTATION_HPP_
