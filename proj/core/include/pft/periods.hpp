#ifndef PFT_PERIODS_HPP_
#define PFT_PERIODS_HPP_

#include "pft/pft_spec.hpp"
#include "pft/presentation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pft {

/// Smallest period of a periodic point, or nothing up to `bound`.
struct TSeqResult {
    std::optional<std::size_t> period;
    std::size_t bound = 0;
    /// A block of length `period` whose periodic extension lies in the shift.
    std::optional<Word> witness;

    std::string to_string() const;  ///< "4" or "unknown>16"
};

/// Exhaustive over necklaces of length 1, 2, ... max_period using periodic-point membership.
TSeqResult t_seq(const PftSpec& spec, std::size_t max_period);

/// Every p <= max_period such that some point of the shift has period p.
std::vector<std::size_t> realized_periods(const PftSpec& spec, std::size_t max_period);

/**
 * Same quantity read off cycles of G_X: a block v of length p <= max_period counts when
 * G_X has a cycle labeled v^m with m*p <= max_cycle. max_cycle = 0 means max_period * T,
 * enough for every point of period p (its path in G_X closes after lcm(p, T) steps).
 */
TSeqResult t_seq_via_cycles(const PftSpec& spec, std::size_t max_period, std::size_t max_cycle = 0);

/// The shift presented by g is irreducible: some strongly connected component presents it.
bool shift_irreducible(const LabeledGraph& g);

struct TGraphBounds {
    std::size_t lower = 1;
    std::size_t upper = 0;
    /// lower relies on the periodic points with period <= evidence_bound.
    bool lower_conditional = false;
    std::size_t evidence_bound = 0;
    std::vector<std::string> candidates;  ///< presentations whose per() was considered
};

/// Throws Error("t-graph-undefined") when the shift is reducible or empty.
TGraphBounds t_graph_bounds(const PftSpec& spec, std::size_t max_period_evidence);

struct GcdCheck {
    bool applicable = false;  ///< the shift was reported proper
    bool holds = true;
    std::size_t per = 0;
    std::size_t period = 0;
};

/// If X is proper, gcd(per(G_X), T) != 1 must hold for its irreducible MS presentation.
GcdCheck gcd_necessary_check(const PftSpec& spec, bool proper);

enum class RowVerdict { achievable, excluded_by_gcd, no_within_search, inconclusive };

std::string to_string(RowVerdict v);

struct DescRow {
    std::size_t period = 0;
    RowVerdict verdict = RowVerdict::inconclusive;
    /// Length of the words in the certifying phase-0 schedule, when achievable.
    std::optional<std::size_t> word_length;
    std::string note;
};

struct DescOptions {
    /// Largest T* examined below the spec's own period; 0 means all of them.
    std::size_t max_period = 0;
    std::size_t max_len = 8;
    std::size_t subset_budget = 20;
    std::size_t node_cap = 20000;
};

struct DescVerdict {
    std::size_t t_desc = 0;
    /// X is an SFT (t_desc = 1) or no SFT description with words of length <= max_len exists.
    bool sft = false;
    std::size_t sft_length = 0;
    std::size_t max_len = 0;
    /// Every smaller T* was ruled out (via the gcd criterion, which presumes properness).
    bool exact = false;
    std::vector<DescRow> rows;

    bool proper_up_to() const noexcept { return !sft; }
    std::string properness() const;  ///< "sft(ℓ)" or "proper-up-to(L)"
};

DescVerdict t_desc_search(const PftSpec& spec, DescOptions options = {});

enum class Divisibility { consistent, violated, undetermined };

std::string to_string(Divisibility d);

struct DivisibilityReport {
    Divisibility status = Divisibility::undetermined;
    std::size_t t_desc = 0;
    std::size_t lower = 0;
    std::size_t upper = 0;
};

/// Logs whether t_desc divides T_graph as far as the bounds can tell.
DivisibilityReport divisibility_conjecture_check(std::size_t t_desc, const TGraphBounds& bounds);

struct PeriodBounds {
    std::size_t max_period = 16;
    std::size_t max_len = 8;
    std::size_t budget = 20;
};

struct PeriodTriple {
    TSeqResult t_seq;
    TSeqResult t_seq_cycles;
    std::optional<TGraphBounds> t_graph;
    std::string t_graph_note;
    DescVerdict t_desc;
    GcdCheck gcd_check;
    std::optional<DivisibilityReport> divisibility;
    PeriodBounds bounds;
};

PeriodTriple period_triple(const PftSpec& spec, PeriodBounds bounds = {});

} // namespace pft

#endif // PFT_PERIODS_HPP_
