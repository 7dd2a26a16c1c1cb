#ifndef PFT_LANGUAGE_HPP_
#define PFT_LANGUAGE_HPP_

#include "pft/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace pft {

/// B_n(S): the length-n blocks of a shift.
struct BlockSet {
    std::size_t n = 0;
    std::set<Word> words;

    friend bool operator==(const BlockSet&, const BlockSet&) = default;
};

/// Labels of the length-n paths of the essential part of g. n = 0 always yields {ε}.
BlockSet blocks_of_length(const LabeledGraph& g, std::size_t n);

/**
 * Deterministic acceptor of the block language B(S).
 *
 * Every state accepts and state 0 is the start; a missing transition (kNone) leads to the
 * implicit dead state. After minimization states are numbered in breadth-first order from
 * the start with symbols visited in increasing order, so two minimized automata accept the
 * same language iff their transition tables are equal.
 */
class BlockDfa {
public:
    static constexpr std::int64_t kNone = -1;

    BlockDfa(std::size_t q, std::vector<std::vector<std::int64_t>> next, bool minimized);

    std::size_t num_states() const noexcept { return next_.size(); }
    std::size_t q() const noexcept { return q_; }
    std::int64_t next(std::size_t state, Symbol a) const { return next_.at(state).at(a); }
    const std::vector<std::vector<std::int64_t>>& table() const noexcept { return next_; }
    bool minimized() const noexcept { return minimized_; }
    /// The empty shift: only ε is accepted.
    bool accepts_only_empty_word() const;

    bool accepts(const Word& w) const;

    friend bool operator==(const BlockDfa&, const BlockDfa&) = default;

private:
    std::size_t q_;
    std::vector<std::vector<std::int64_t>> next_;
    bool minimized_;
};

/// Subset construction from the set of all states of trim_essential(g), unminimized.
BlockDfa subset_dfa(const LabeledGraph& g);
/// Hopcroft minimization followed by canonical renumbering.
BlockDfa minimize(const BlockDfa& dfa);
/// minimize(subset_dfa(g)).
BlockDfa block_dfa(const LabeledGraph& g);

/// Same block language, i.e. the same sofic shift.
bool shifts_equal(const LabeledGraph& a, const LabeledGraph& b);
/// B(a) ⊆ B(b).
bool subshift_contains(const LabeledGraph& a, const LabeledGraph& b);
/// Shortest (then lexicographically least) block of exactly one of the two shifts.
std::optional<Word> separating_block(const LabeledGraph& a, const LabeledGraph& b);

/// DFA-level variants for callers that reuse automata.
bool dfa_contains(const BlockDfa& a, const BlockDfa& b);
std::optional<Word> dfa_separating_word(const BlockDfa& a, const BlockDfa& b);

/**
 * Merges states of a deterministic presentation with equal follower sets.
 *
 * Throws Error("requires-deterministic") for non-deterministic input. Each merged state
 * keeps the tag of its smallest member.
 */
LabeledGraph follower_minimize(const LabeledGraph& g);

} // namespace pft

#endif // PFT_LANGUAGE_HPP_
