#include "pft/graph_analysis.hpp"

#include "pft/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

namespace pft {

std::vector<std::vector<StateId>> scc(const LabeledGraph& g) {
    const std::size_t n = g.num_states();
    constexpr std::int64_t kUnvisited = -1;
    std::vector<std::int64_t> index(n, kUnvisited);
    std::vector<std::int64_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    std::vector<std::vector<StateId>> components;
    std::int64_t counter = 0;

    // Iterative Tarjan: frames hold (state, next out-edge offset).
    std::vector<std::pair<StateId, std::size_t>> frames;
    for (StateId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) {
            continue;
        }
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto out = g.out_edges(v);
            if (pos < out.size()) {
                const StateId w = out[pos++].to;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const StateId done = v;
            frames.pop_back();
            if (!frames.empty()) {
                const StateId parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::vector<StateId> comp;
                StateId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

bool is_irreducible(const LabeledGraph& g) {
    return !g.empty() && scc(g).size() == 1;
}

namespace {

std::vector<std::int64_t> component_ids(const LabeledGraph& g, const std::vector<std::vector<StateId>>& comps) {
    std::vector<std::int64_t> id(g.num_states(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (StateId s : comps[c]) {
            id[s] = static_cast<std::int64_t>(c);
        }
    }
    return id;
}

bool has_internal_edge(const LabeledGraph& g, const std::vector<StateId>& comp,
                       const std::vector<std::int64_t>& id) {
    for (StateId s : comp) {
        for (const auto& e : g.out_edges(s)) {
            if (id[e.to] == id[s]) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

std::vector<std::vector<StateId>> cyclic_components(const LabeledGraph& g) {
    auto comps = scc(g);
    const auto id = component_ids(g, comps);
    std::vector<std::vector<StateId>> out;
    for (auto& comp : comps) {
        if (has_internal_edge(g, comp, id)) {
            out.push_back(std::move(comp));
        }
    }
    return out;
}

PeriodReport graph_period(const LabeledGraph& g) {
    const auto comps = scc(g);
    const auto id = component_ids(g, comps);
    PeriodReport report;
    report.per_state.assign(g.num_states(), std::nullopt);
    report.irreducible = comps.size() == 1 && !g.empty();

    std::vector<std::int64_t> level(g.num_states(), -1);
    for (const auto& comp : comps) {
        if (!has_internal_edge(g, comp, id)) {
            report.acyclic_states.insert(report.acyclic_states.end(), comp.begin(), comp.end());
            continue;
        }
        // BFS levels inside the component; every internal edge u->v contributes
        // |level(u) + 1 - level(v)|, whose gcd is the gcd of the cycle lengths.
        const StateId root = comp.front();
        const auto cid = id[root];
        std::deque<StateId> queue{root};
        level[root] = 0;
        std::size_t per = 0;
        while (!queue.empty()) {
            const StateId u = queue.front();
            queue.pop_front();
            for (const auto& e : g.out_edges(u)) {
                if (id[e.to] != cid) {
                    continue;
                }
                if (level[e.to] < 0) {
                    level[e.to] = level[u] + 1;
                    queue.push_back(e.to);
                } else {
                    const auto diff = level[u] + 1 - level[e.to];
                    per = std::gcd(per, static_cast<std::size_t>(diff < 0 ? -diff : diff));
                }
            }
        }
        for (StateId s : comp) {
            report.per_state[s] = per;
        }
        report.per_component.push_back(per);
        report.per_graph = std::gcd(report.per_graph, per);
    }
    std::sort(report.acyclic_states.begin(), report.acyclic_states.end());
    if (report.per_component.empty()) {
        throw Error("aperiodic-empty", "graph has no cycle");
    }
    return report;
}

JoinabilityResult language_irreducibility_check(const LabeledGraph& graph, std::size_t max_len) {
    JoinabilityResult result;
    const LabeledGraph g = trim_essential(graph);
    if (g.empty()) {
        result.vacuous = true;
        return result;
    }
    const std::size_t n = g.num_states();
    using Bits = boost::dynamic_bitset<>;

    std::vector<Bits> reach(n, Bits(n));
    for (StateId s = 0; s < n; ++s) {
        std::deque<StateId> queue{s};
        reach[s].set(s);
        while (!queue.empty()) {
            const StateId u = queue.front();
            queue.pop_front();
            for (const auto& e : g.out_edges(u)) {
                if (!reach[s].test(e.to)) {
                    reach[s].set(e.to);
                    queue.push_back(e.to);
                }
            }
        }
    }

    // Blocks up to max_len, with the states where a path reading them can end (ends)
    // and the states where such a path can start (starts).
    struct Block {
        Word word;
        Bits starts;
        Bits ends;
    };
    std::vector<Block> blocks;
    {
        struct Frame {
            Word word;
            std::vector<Bits> ends_from;  // ends_from[s]: ends of paths from s reading word
        };
        std::vector<Frame> todo;
        std::vector<Bits> identity(n, Bits(n));
        for (StateId s = 0; s < n; ++s) {
            identity[s].set(s);
        }
        todo.push_back(Frame{Word{}, identity});
        while (!todo.empty()) {
            Frame f = std::move(todo.back());
            todo.pop_back();
            Block b{f.word, Bits(n), Bits(n)};
            for (StateId s = 0; s < n; ++s) {
                if (f.ends_from[s].any()) {
                    b.starts.set(s);
                    b.ends |= f.ends_from[s];
                }
            }
            if (b.starts.none()) {
                continue;
            }
            blocks.push_back(b);
            if (f.word.size() == max_len) {
                continue;
            }
            for (Symbol a = static_cast<Symbol>(g.q()); a-- > 0;) {
                Frame next{f.word + Word{a}, std::vector<Bits>(n, Bits(n))};
                for (StateId s = 0; s < n; ++s) {
                    for (auto t = f.ends_from[s].find_first(); t != Bits::npos; t = f.ends_from[s].find_next(t)) {
                        for (const auto& e : g.out_edges(static_cast<StateId>(t))) {
                            if (e.label == a) {
                                next.ends_from[s].set(e.to);
                            }
                        }
                    }
                }
                todo.push_back(std::move(next));
            }
        }
    }

    for (const auto& u : blocks) {
        Bits after(n);
        for (auto t = u.ends.find_first(); t != Bits::npos; t = u.ends.find_next(t)) {
            after |= reach[t];
        }
        for (const auto& v : blocks) {
            if (!after.intersects(v.starts)) {
                result.joinable = false;
                result.counterexample = std::make_pair(u.word, v.word);
                return result;
            }
        }
    }
    return result;
}

} // namespace pft
