#include "pft/periods.hpp"

#include "pft/error.hpp"
#include "pft/graph_analysis.hpp"
#include "pft/language.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pft {

std::string TSeqResult::to_string() const {
    return period ? std::to_string(*period) : "unknown>" + std::to_string(bound);
}

TSeqResult t_seq(const PftSpec& spec, std::size_t max_period) {
    const MembershipTester tester(spec);
    TSeqResult out;
    out.bound = max_period;
    for (std::size_t p = 1; p <= max_period && !out.period; ++p) {
        for_each_necklace(spec.q(), p, [&](const Word& v) {
            if (!out.period && tester.contains(PeriodicWord(v))) {
                out.period = p;
                out.witness = v;
            }
        });
    }
    return out;
}

namespace {

/// Lengths of the primitive necklaces (Lyndon words) whose periodic extension lies in X.
std::vector<std::size_t> primitive_periods(const PftSpec& spec, std::size_t max_period) {
    const MembershipTester tester(spec);
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p <= max_period; ++p) {
        bool found = false;
        for_each_necklace(spec.q(), p, [&](const Word& v) {
            if (!found && primitive_period(v.view()) == p && tester.contains(PeriodicWord(v))) {
                found = true;
            }
        });
        if (found) {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace

std::vector<std::size_t> realized_periods(const PftSpec& spec, std::size_t max_period) {
    const auto prim = primitive_periods(spec, max_period);
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p <= max_period; ++p) {
        if (std::any_of(prim.begin(), prim.end(), [&](std::size_t d) { return p % d == 0; })) {
            out.push_back(p);
        }
    }
    return out;
}

TSeqResult t_seq_via_cycles(const PftSpec& spec, std::size_t max_period, std::size_t max_cycle) {
    if (max_cycle == 0) {
        max_cycle = max_period * spec.period();
    }
    const LabeledGraph g = build_ms(spec);
    TSeqResult out;
    out.bound = max_period;
    auto read = [&](StateId s, const Word& v) -> std::int64_t {
        std::int64_t cur = s;
        for (Symbol a : v.symbols()) {
            cur = g.successor(static_cast<StateId>(cur), a);
            if (cur < 0) {
                return -1;
            }
        }
        return cur;
    };
    for (std::size_t p = 1; p <= max_period && p <= max_cycle && !out.period; ++p) {
        for_each_necklace(spec.q(), p, [&](const Word& v) {
            if (out.period) {
                return;
            }
            for (StateId s = 0; s < g.num_states(); ++s) {
                std::int64_t cur = s;
                for (std::size_t m = 1; m * p <= max_cycle; ++m) {
                    cur = read(static_cast<StateId>(cur), v);
                    if (cur < 0) {
                        break;
                    }
                    if (cur == s) {
                        out.period = primitive_period(v.view());
                        out.witness = v.prefix(*out.period);
                        return;
                    }
                }
            }
        });
    }
    return out;
}

namespace {

LabeledGraph component_graph(const LabeledGraph& g, const std::vector<StateId>& comp) {
    std::vector<bool> keep(g.num_states(), false);
    for (StateId s : comp) {
        keep[s] = true;
    }
    return g.induced(keep);
}

struct Candidate {
    std::string name;
    LabeledGraph graph;
};

/// Irreducible presentations of X derived from g: g itself or its components presenting X,
/// together with their follower-set quotients.
std::vector<Candidate> irreducible_candidates(const LabeledGraph& graph) {
    const LabeledGraph g = trim_essential(graph);
    std::vector<Candidate> out;
    if (g.empty()) {
        return out;
    }
    auto add = [&](const std::string& name, const LabeledGraph& c) {
        out.push_back(Candidate{name, c});
        if (c.is_deterministic()) {
            out.push_back(Candidate{"follower(" + name + ")", follower_minimize(c)});
        }
    };
    if (is_irreducible(g)) {
        add("G_X", g);
        return out;
    }
    const BlockDfa whole = block_dfa(g);
    const auto comps = cyclic_components(g);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const LabeledGraph c = component_graph(g, comps[i]);
        if (dfa_contains(whole, block_dfa(c))) {
            add("component" + std::to_string(i), c);
        }
    }
    return out;
}

} // namespace

bool shift_irreducible(const LabeledGraph& graph) {
    const LabeledGraph g = trim_essential(graph);
    if (g.empty()) {
        return false;
    }
    if (is_irreducible(g)) {
        return true;
    }
    const BlockDfa whole = block_dfa(g);
    for (const auto& comp : cyclic_components(g)) {
        if (dfa_contains(whole, block_dfa(component_graph(g, comp)))) {
            return true;
        }
    }
    return false;
}

TGraphBounds t_graph_bounds(const PftSpec& spec, std::size_t max_period_evidence) {
    const auto candidates = irreducible_candidates(build_ms(spec));
    if (candidates.empty()) {
        throw Error("t-graph-undefined", "the graphical period needs an irreducible shift");
    }
    TGraphBounds out;
    out.evidence_bound = max_period_evidence;
    for (const auto& c : candidates) {
        const std::size_t per = graph_period(c.graph).per_graph;
        out.candidates.push_back(c.name + ":" + std::to_string(per));
        out.upper = out.upper == 0 ? per : std::min(out.upper, per);
    }
    std::size_t g0 = 0;
    for (std::size_t d : primitive_periods(spec, max_period_evidence)) {
        g0 = std::gcd(g0, d);
    }
    out.lower = g0 == 0 ? 1 : std::gcd(g0, out.upper);
    out.lower_conditional = out.lower > 1;
    return out;
}

GcdCheck gcd_necessary_check(const PftSpec& spec, bool proper) {
    GcdCheck out;
    out.period = spec.period();
    if (!proper || spec.period() == 1) {
        return out;
    }
    const auto candidates = irreducible_candidates(build_ms(spec));
    if (candidates.empty()) {
        return out;
    }
    out.applicable = true;
    out.per = graph_period(candidates.front().graph).per_graph;
    out.holds = std::gcd(out.per, out.period) != 1;
    return out;
}

std::string to_string(RowVerdict v) {
    switch (v) {
    case RowVerdict::achievable:
        return "achievable";
    case RowVerdict::excluded_by_gcd:
        return "excluded-by-gcd";
    case RowVerdict::no_within_search:
        return "no-within-search";
    case RowVerdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

std::string DescVerdict::properness() const {
    return sft ? "sft(" + std::to_string(sft_length) + ")" : "proper-up-to(" + std::to_string(max_len) + ")";
}

namespace {

/// Phase-0 schedules with period tp: is there S ⊆ Σ^len with X_{S,tp} = X?
struct SubsetSearch {
    const PftSpec& spec;
    const BlockDfa& target;
    std::size_t period;
    std::size_t node_cap;
    std::size_t nodes = 0;
    bool capped = false;
    std::vector<Word> pool;

    BlockDfa dfa_of(const std::vector<Word>& s) const {
        return block_dfa(build_ms(PftSpec::phase_zero(spec.alphabet(), period, WordSet(s.begin(), s.end()))));
    }
    bool keeps_x(const std::vector<Word>& s) const {
        return dfa_contains(target, dfa_of(s));
    }

    /// Maximal S ⊆ pool with X ⊆ X_S, each checked for X_S ⊆ X.
    bool run() {
        if (keeps_x(pool)) {
            return dfa_contains(dfa_of(pool), target);
        }
        std::vector<Word> chosen;
        return dfs(0, chosen);
    }

    bool dfs(std::size_t i, std::vector<Word>& chosen) {
        if (++nodes > node_cap) {
            capped = true;
            return false;
        }
        if (i == pool.size()) {
            for (const auto& u : pool) {
                if (std::find(chosen.begin(), chosen.end(), u) != chosen.end()) {
                    continue;
                }
                auto bigger = chosen;
                bigger.push_back(u);
                if (keeps_x(bigger)) {
                    return false;  // not maximal
                }
            }
            return dfa_contains(dfa_of(chosen), target);
        }
        chosen.push_back(pool[i]);
        if (keeps_x(chosen) && dfs(i + 1, chosen)) {
            return true;
        }
        chosen.pop_back();
        return !capped && dfs(i + 1, chosen);
    }
};

} // namespace

DescVerdict t_desc_search(const PftSpec& spec, DescOptions options) {
    DescVerdict out;
    out.max_len = options.max_len;
    const std::size_t period = spec.period();
    const LabeledGraph gx = build_ms(spec);
    const BlockDfa target = block_dfa(gx);

    DescRow sft_row{1, RowVerdict::no_within_search, std::nullopt, ""};
    if (period == 1) {
        out.sft = true;
        out.sft_length = build_ms(spec).word_length();
    } else {
        for (std::size_t len = 1; len <= options.max_len && !out.sft; ++len) {
            const auto blocks = blocks_of_length(gx, len);
            WordSet forbidden;
            for_each_word(spec.q(), len, [&](const Word& u) {
                if (blocks.words.count(u) == 0) {
                    forbidden.insert(u);
                }
            });
            if (block_dfa(build_ms(PftSpec::sft(spec.alphabet(), forbidden))) == target) {
                out.sft = true;
                out.sft_length = len;
            }
        }
    }
    if (out.sft) {
        sft_row.verdict = RowVerdict::achievable;
        sft_row.word_length = out.sft_length;
        out.rows.push_back(sft_row);
        out.t_desc = 1;
        out.exact = true;
        return out;
    }
    sft_row.note = "no SFT description with words of length <= " + std::to_string(options.max_len);
    out.rows.push_back(sft_row);

    std::optional<std::size_t> per;
    if (const auto candidates = irreducible_candidates(gx); !candidates.empty()) {
        per = graph_period(candidates.front().graph).per_graph;
    }
    std::size_t limit = period - 1;
    if (options.max_period != 0) {
        limit = std::min(limit, options.max_period);
    }
    bool all_excluded = true;
    for (std::size_t tp = 2; tp <= limit; ++tp) {
        DescRow row{tp, RowVerdict::no_within_search, std::nullopt, ""};
        if (per && std::gcd(*per, tp) == 1) {
            row.verdict = RowVerdict::excluded_by_gcd;
            row.note = "gcd(per(G), " + std::to_string(tp) + ") = 1 with per(G) = " + std::to_string(*per) +
                       "; presumes properness";
            out.rows.push_back(row);
            continue;
        }
        all_excluded = false;
        bool inconclusive = false;
        for (std::size_t len = 1; len <= options.max_len; ++len) {
            SubsetSearch search{spec, target, tp, options.node_cap, 0, false, {}};
            for_each_word(spec.q(), len, [&](const Word& u) {
                if (search.keeps_x({u})) {
                    search.pool.push_back(u);
                }
            });
            if (search.pool.size() > options.subset_budget) {
                inconclusive = true;
                row.note = "candidate pool " + std::to_string(search.pool.size()) + " > budget at length " +
                           std::to_string(len);
                continue;
            }
            if (search.run()) {
                row.verdict = RowVerdict::achievable;
                row.word_length = len;
                break;
            }
            if (search.capped) {
                inconclusive = true;
                row.note = "node cap reached at length " + std::to_string(len);
            }
        }
        if (row.verdict != RowVerdict::achievable && inconclusive) {
            row.verdict = RowVerdict::inconclusive;
        }
        out.rows.push_back(row);
        if (row.verdict == RowVerdict::achievable) {
            out.t_desc = tp;
            return out;
        }
    }
    out.t_desc = period;
    out.exact = all_excluded && limit + 1 >= period;
    return out;
}

std::string to_string(Divisibility d) {
    switch (d) {
    case Divisibility::consistent:
        return "consistent";
    case Divisibility::violated:
        return "violated";
    case Divisibility::undetermined:
        return "undetermined";
    }
    return "?";
}

DivisibilityReport divisibility_conjecture_check(std::size_t t_desc, const TGraphBounds& bounds) {
    DivisibilityReport out;
    out.t_desc = t_desc;
    out.lower = bounds.lower;
    out.upper = bounds.upper;
    if (t_desc != 0 && bounds.lower % t_desc == 0) {
        out.status = Divisibility::consistent;
    } else if (bounds.lower == bounds.upper) {
        out.status = Divisibility::violated;
    }
    return out;
}

PeriodTriple period_triple(const PftSpec& spec, PeriodBounds bounds) {
    PeriodTriple out;
    out.bounds = bounds;
    out.t_seq = t_seq(spec, bounds.max_period);
    out.t_seq_cycles = t_seq_via_cycles(spec, bounds.max_period);
    DescOptions desc;
    desc.max_len = bounds.max_len;
    desc.subset_budget = bounds.budget;
    out.t_desc = t_desc_search(spec, desc);
    out.gcd_check = gcd_necessary_check(spec, out.t_desc.proper_up_to());
    try {
        out.t_graph = t_graph_bounds(spec, bounds.max_period);
        out.divisibility = divisibility_conjecture_check(out.t_desc.t_desc, *out.t_graph);
    } catch (const Error& e) {
        if (e.code() != "t-graph-undefined") {
            throw;
        }
        out.t_graph_note = e.what();
    }
    return out;
}

} // namespace pft
