#include "pft/language.hpp"

#include "partition.hpp"
#include "pft/error.hpp"

#include <algorithm>
#include <map>

namespace pft {

BlockSet blocks_of_length(const LabeledGraph& graph, std::size_t n) {
    BlockSet out;
    out.n = n;
    if (n == 0) {
        out.words.insert(Word{});
        return out;
    }
    const LabeledGraph g = trim_essential(graph);
    if (g.empty()) {
        return out;
    }
    // Depth-first over words, carrying the set of states where a path reading the prefix ends.
    std::vector<StateId> all(g.num_states());
    for (StateId s = 0; s < g.num_states(); ++s) {
        all[s] = s;
    }

    struct Frame {
        std::vector<StateId> states;
        std::size_t depth;
        std::vector<Symbol> word;
    };
    std::vector<Frame> todo{Frame{all, 0, {}}};
    while (!todo.empty()) {
        Frame f = std::move(todo.back());
        todo.pop_back();
        if (f.depth == n) {
            out.words.insert(Word(f.word));
            continue;
        }
        for (Symbol a = 0; a < g.q(); ++a) {
            std::vector<StateId> next;
            for (StateId s : f.states) {
                for (const auto& e : g.out_edges(s)) {
                    if (e.label == a) {
                        next.push_back(e.to);
                    }
                }
            }
            if (next.empty()) {
                continue;
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            auto word = f.word;
            word.push_back(a);
            todo.push_back(Frame{std::move(next), f.depth + 1, std::move(word)});
        }
    }
    return out;
}

BlockDfa::BlockDfa(std::size_t q, std::vector<std::vector<std::int64_t>> next, bool minimized)
    : q_(q), next_(std::move(next)), minimized_(minimized) {
    if (next_.empty()) {
        throw Error("dfa", "a block automaton has at least its start state");
    }
    for (const auto& row : next_) {
        if (row.size() != q_) {
            throw Error("dfa", "transition row has wrong width");
        }
        for (auto t : row) {
            if (t != kNone && (t < 0 || static_cast<std::size_t>(t) >= next_.size())) {
                throw Error("dfa", "transition target out of range");
            }
        }
    }
}

bool BlockDfa::accepts_only_empty_word() const {
    return std::all_of(next_[0].begin(), next_[0].end(), [](std::int64_t t) { return t == kNone; });
}

bool BlockDfa::accepts(const Word& w) const {
    std::int64_t state = 0;
    for (Symbol a : w.symbols()) {
        if (a >= q_) {
            return false;
        }
        state = next_[static_cast<std::size_t>(state)][a];
        if (state == kNone) {
            return false;
        }
    }
    return true;
}

namespace {

/// Breadth-first renumbering from state 0, symbols in increasing order; drops unreachable states.
std::vector<std::vector<std::int64_t>> canonical_order(const std::vector<std::vector<std::int64_t>>& table,
                                                       std::size_t q) {
    std::vector<std::int64_t> order(table.size(), -1);
    std::vector<std::size_t> queue{0};
    order[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t a = 0; a < q; ++a) {
            const auto t = table[queue[head]][a];
            if (t != BlockDfa::kNone && order[static_cast<std::size_t>(t)] < 0) {
                order[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(queue.size());
                queue.push_back(static_cast<std::size_t>(t));
            }
        }
    }
    std::vector<std::vector<std::int64_t>> out(queue.size(), std::vector<std::int64_t>(q, BlockDfa::kNone));
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (std::size_t a = 0; a < q; ++a) {
            const auto t = table[queue[i]][a];
            out[i][a] = t == BlockDfa::kNone ? BlockDfa::kNone : order[static_cast<std::size_t>(t)];
        }
    }
    return out;
}

} // namespace

BlockDfa subset_dfa(const LabeledGraph& graph) {
    const LabeledGraph g = trim_essential(graph);
    const std::size_t q = g.q();
    if (g.empty()) {
        return BlockDfa(q, {std::vector<std::int64_t>(q, BlockDfa::kNone)}, true);
    }
    std::vector<StateId> start(g.num_states());
    for (StateId s = 0; s < g.num_states(); ++s) {
        start[s] = s;
    }
    std::map<std::vector<StateId>, std::int64_t> index;
    std::vector<std::vector<StateId>> subsets{start};
    index.emplace(start, 0);
    std::vector<std::vector<std::int64_t>> table;
    for (std::size_t head = 0; head < subsets.size(); ++head) {
        std::vector<std::int64_t> row(q, BlockDfa::kNone);
        for (Symbol a = 0; a < q; ++a) {
            std::vector<StateId> next;
            for (StateId s : subsets[head]) {
                for (const auto& e : g.out_edges(s)) {
                    if (e.label == a) {
                        next.push_back(e.to);
                    }
                }
            }
            if (next.empty()) {
                continue;
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            auto [it, fresh] = index.emplace(next, static_cast<std::int64_t>(subsets.size()));
            if (fresh) {
                subsets.push_back(std::move(next));
            }
            row[a] = it->second;
        }
        table.push_back(std::move(row));
    }
    return BlockDfa(q, std::move(table), false);
}

BlockDfa minimize(const BlockDfa& dfa) {
    const std::size_t n = dfa.num_states();
    const std::size_t q = dfa.q();
    const std::size_t dead = n;
    std::vector<std::vector<std::size_t>> complete(n + 1, std::vector<std::size_t>(q, dead));
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t a = 0; a < q; ++a) {
            const auto t = dfa.next(s, static_cast<Symbol>(a));
            complete[s][a] = t == BlockDfa::kNone ? dead : static_cast<std::size_t>(t);
        }
    }
    std::vector<std::size_t> initial(n + 1, 0);
    initial[dead] = 1;
    const auto cls = detail::hopcroft_refine(complete, initial, q);

    std::map<std::size_t, std::size_t> class_index;
    for (std::size_t s = 0; s < n; ++s) {
        class_index.emplace(cls[s], class_index.size());
    }
    std::vector<std::vector<std::int64_t>> quotient(class_index.size(), std::vector<std::int64_t>(q, BlockDfa::kNone));
    for (std::size_t s = 0; s < n; ++s) {
        const auto from = class_index.at(cls[s]);
        for (std::size_t a = 0; a < q; ++a) {
            const auto t = complete[s][a];
            if (t != dead) {
                quotient[from][a] = static_cast<std::int64_t>(class_index.at(cls[t]));
            }
        }
    }
    // Make the start class state 0 before canonical renumbering.
    const auto start = class_index.at(cls[0]);
    if (start != 0) {
        std::swap(quotient[0], quotient[start]);
        for (auto& row : quotient) {
            for (auto& t : row) {
                if (t == 0) {
                    t = static_cast<std::int64_t>(start);
                } else if (t == static_cast<std::int64_t>(start)) {
                    t = 0;
                }
            }
        }
    }
    return BlockDfa(q, canonical_order(quotient, q), true);
}

BlockDfa block_dfa(const LabeledGraph& g) {
    return minimize(subset_dfa(g));
}

namespace {

BlockDfa widen(const BlockDfa& d, std::size_t q) {
    if (d.q() == q) {
        return d;
    }
    auto table = d.table();
    for (auto& row : table) {
        row.resize(q, BlockDfa::kNone);
    }
    return BlockDfa(q, std::move(table), d.minimized());
}

} // namespace

bool shifts_equal(const LabeledGraph& a, const LabeledGraph& b) {
    const std::size_t q = std::max(a.q(), b.q());
    return widen(block_dfa(a), q).table() == widen(block_dfa(b), q).table();
}

std::optional<Word> dfa_separating_word(const BlockDfa& a, const BlockDfa& b) {
    // Breadth-first over the product; the b side may already be dead (kNone).
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
    struct Node {
        std::int64_t sa;
        std::int64_t sb;
        std::int64_t parent;
        Symbol via;
    };
    std::vector<Node> nodes{Node{0, 0, -1, 0}};
    seen.emplace(std::make_pair(0, 0), 0);
    auto trace = [&](std::size_t idx, Symbol last) {
        std::vector<Symbol> rev{last};
        for (auto i = static_cast<std::int64_t>(idx); nodes[static_cast<std::size_t>(i)].parent >= 0;
             i = nodes[static_cast<std::size_t>(i)].parent) {
            rev.push_back(nodes[static_cast<std::size_t>(i)].via);
        }
        std::reverse(rev.begin(), rev.end());
        return Word(std::move(rev));
    };
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const Node cur = nodes[head];
        for (Symbol c = 0; c < a.q(); ++c) {
            const auto ta = a.next(static_cast<std::size_t>(cur.sa), c);
            if (ta == BlockDfa::kNone) {
                continue;
            }
            const auto tb = (cur.sb == BlockDfa::kNone || c >= b.q()) ? BlockDfa::kNone
                                                                        : b.next(static_cast<std::size_t>(cur.sb), c);
            if (tb == BlockDfa::kNone) {
                return trace(head, c);
            }
            if (seen.emplace(std::make_pair(ta, tb), nodes.size()).second) {
                nodes.push_back(Node{ta, tb, static_cast<std::int64_t>(head), c});
            }
        }
    }
    return std::nullopt;
}

bool dfa_contains(const BlockDfa& a, const BlockDfa& b) {
    return !dfa_separating_word(a, b).has_value();
}

bool subshift_contains(const LabeledGraph& a, const LabeledGraph& b) {
    return dfa_contains(block_dfa(a), block_dfa(b));
}

std::optional<Word> separating_block(const LabeledGraph& a, const LabeledGraph& b) {
    const BlockDfa da = block_dfa(a);
    const BlockDfa db = block_dfa(b);
    auto ab = dfa_separating_word(da, db);
    auto ba = dfa_separating_word(db, da);
    if (ab && ba) {
        return std::min(*ab, *ba);
    }
    return ab ? ab : ba;
}

LabeledGraph follower_minimize(const LabeledGraph& graph) {
    if (!graph.is_deterministic()) {
        throw Error("requires-deterministic", "follower-set merging needs a deterministic presentation");
    }
    const LabeledGraph g = trim_essential(graph);
    const std::size_t n = g.num_states();
    if (n == 0) {
        return g;
    }
    const std::size_t q = g.q();
    const std::size_t dead = n;
    std::vector<std::vector<std::size_t>> complete(n + 1, std::vector<std::size_t>(q, dead));
    for (StateId s = 0; s < n; ++s) {
        for (const auto& e : g.out_edges(s)) {
            complete[s][e.label] = e.to;
        }
    }
    std::vector<std::size_t> initial(n + 1, 0);
    initial[dead] = 1;
    const auto cls = detail::hopcroft_refine(complete, initial, q);

    // Classes numbered by smallest member, which keeps tags sorted like the input.
    std::map<std::size_t, StateId> class_index;
    std::vector<StateTag> tags;
    for (StateId s = 0; s < n; ++s) {
        if (class_index.emplace(cls[s], static_cast<StateId>(tags.size())).second) {
            tags.push_back(g.tag(s));
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        edges.push_back(Edge{class_index.at(cls[e.from]), class_index.at(cls[e.to]), e.label});
    }
    return LabeledGraph(g.alphabet(), g.word_length(), g.phases(), std::move(tags), std::move(edges));
}

} // namespace pft
