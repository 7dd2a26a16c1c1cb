#include "pft/presentation.hpp"

#include "pft/error.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <sstream>
#include <tuple>

namespace pft {

LabeledGraph::LabeledGraph(Alphabet alphabet, std::size_t word_length, std::size_t phases,
                           std::vector<StateTag> states, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)),
      word_length_(word_length),
      phases_(phases == 0 ? 1 : phases),
      states_(std::move(states)),
      edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        if (e.from >= states_.size() || e.to >= states_.size()) {
            throw Error("graph", "edge endpoint out of range");
        }
        if (e.label >= alphabet_.size()) {
            throw Error("graph", "edge label outside the alphabet");
        }
    }
    std::vector<StateTag> sorted_tags = states_;
    std::sort(sorted_tags.begin(), sorted_tags.end());
    if (std::adjacent_find(sorted_tags.begin(), sorted_tags.end()) != sorted_tags.end()) {
        throw Error("graph", "duplicate state tag");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
    });
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    offsets_.assign(states_.size() + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.from + 1];
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
        offsets_[i + 1] += offsets_[i];
    }
}

std::span<const Edge> LabeledGraph::out_edges(StateId s) const {
    return std::span<const Edge>(edges_).subspan(offsets_[s], offsets_[s + 1] - offsets_[s]);
}

std::int64_t LabeledGraph::successor(StateId s, Symbol label) const {
    for (const auto& e : out_edges(s)) {
        if (e.label == label) {
            return e.to;
        }
    }
    return -1;
}

std::int64_t LabeledGraph::find(const StateTag& tag) const {
    auto it = std::find(states_.begin(), states_.end(), tag);
    return it == states_.end() ? -1 : it - states_.begin();
}

bool LabeledGraph::is_deterministic() const {
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].from == edges_[i - 1].from && edges_[i].label == edges_[i - 1].label) {
            return false;
        }
    }
    return true;
}

LabeledGraph LabeledGraph::induced(const std::vector<bool>& keep) const {
    std::vector<std::int64_t> remap(states_.size(), -1);
    std::vector<StateTag> tags;
    for (std::size_t s = 0; s < states_.size(); ++s) {
        if (keep[s]) {
            remap[s] = static_cast<std::int64_t>(tags.size());
            tags.push_back(states_[s]);
        }
    }
    std::vector<Edge> kept;
    for (const auto& e : edges_) {
        if (remap[e.from] >= 0 && remap[e.to] >= 0) {
            kept.push_back(Edge{static_cast<StateId>(remap[e.from]), static_cast<StateId>(remap[e.to]), e.label});
        }
    }
    return LabeledGraph(alphabet_, word_length_, phases_, std::move(tags), std::move(kept));
}

Word LabeledGraph::state_word(StateId s) const {
    return Word::from_code(tag(s).word, word_length_, q());
}

std::string LabeledGraph::state_name(StateId s) const {
    return std::to_string(tag(s).phase) + ":" + state_word(s).to_string(alphabet_);
}

LabeledGraph build_phased_full(const PftSpec& spec) {
    if (!spec.is_normal_form()) {
        throw Error("spec", "phased construction needs a normal-form spec");
    }
    const std::size_t q = spec.q();
    const std::size_t ell = spec.block_length();
    const std::size_t period = spec.period();
    const WordCode copies = checked_pow(q, ell);
    const WordCode total = copies * period;
    if (total > (WordCode{1} << 28)) {
        throw Error("desk-scale-exceeded", "phased graph would have " + std::to_string(total) + " states");
    }

    std::vector<StateTag> states;
    states.reserve(total);
    for (std::size_t j = 0; j < period; ++j) {
        for (WordCode c = 0; c < copies; ++c) {
            states.push_back(StateTag{static_cast<std::uint32_t>(j), c});
        }
    }
    std::vector<Edge> edges;
    edges.reserve(total * q);
    for (std::size_t j = 0; j < period; ++j) {
        const std::size_t next_phase = (j + 1) % period;
        for (WordCode c = 0; c < copies; ++c) {
            const WordCode shifted = (c * q) % copies;
            for (Symbol a = 0; a < q; ++a) {
                edges.push_back(Edge{static_cast<StateId>(j * copies + c),
                                     static_cast<StateId>(next_phase * copies + shifted + a), a});
            }
        }
    }
    return LabeledGraph(spec.alphabet(), ell, period, std::move(states), std::move(edges));
}

LabeledGraph remove_forbidden(const LabeledGraph& g, const PftSpec& spec) {
    const auto& f0 = spec.forbidden(0);
    std::vector<bool> keep(g.num_states(), true);
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (g.tag(s).phase == 0 && f0.count(g.state_word(s)) != 0) {
            keep[s] = false;
        }
    }
    return g.induced(keep);
}

LabeledGraph trim_essential(const LabeledGraph& g) {
    const std::size_t n = g.num_states();
    std::vector<std::size_t> in_deg(n, 0);
    std::vector<std::size_t> out_deg(n, 0);
    std::vector<std::vector<StateId>> preds(n);
    for (const auto& e : g.edges()) {
        ++out_deg[e.from];
        ++in_deg[e.to];
        preds[e.to].push_back(e.from);
    }
    std::vector<bool> alive(n, true);
    std::deque<StateId> work;
    for (StateId s = 0; s < n; ++s) {
        if (in_deg[s] == 0 || out_deg[s] == 0) {
            alive[s] = false;
            work.push_back(s);
        }
    }
    while (!work.empty()) {
        const StateId s = work.front();
        work.pop_front();
        for (const auto& e : g.out_edges(s)) {
            if (alive[e.to] && --in_deg[e.to] == 0) {
                alive[e.to] = false;
                work.push_back(e.to);
            }
        }
        for (StateId p : preds[s]) {
            if (alive[p] && --out_deg[p] == 0) {
                alive[p] = false;
                work.push_back(p);
            }
        }
    }
    return g.induced(alive);
}

LabeledGraph build_ms(const PftSpec& spec) {
    const PftSpec normal = spec.is_normal_form() ? spec : normalize_pft(spec);
    return trim_essential(remove_forbidden(build_phased_full(normal), normal));
}

LabeledGraph build_subgraph_H(const PftSpec& spec) {
    const LabeledGraph full = build_phased_full(spec);
    const auto& f0 = spec.forbidden(0);
    std::vector<bool> keep(full.num_states(), true);
    for (StateId s = 0; s < full.num_states(); ++s) {
        if (f0.count(full.state_word(s)) != 0) {
            keep[s] = false;
        }
    }
    return full.induced(keep);
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

} // namespace

void write_dot(std::ostream& out, const LabeledGraph& g, const std::string& name) {
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n";
    for (StateId s = 0; s < g.num_states(); ++s) {
        out << "  n" << s << " [label=\"" << dot_escape(g.state_name(s)) << "\"];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  n" << e.from << " -> n" << e.to << " [label=\"" << dot_escape(g.alphabet().glyph(e.label))
            << "\"];\n";
    }
    out << "}\n";
}

std::string to_dot(const LabeledGraph& g, const std::string& name) {
    std::ostringstream os;
    write_dot(os, g, name);
    return os.str();
}

} // namespace pft
