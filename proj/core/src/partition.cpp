#include "partition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace pft::detail {

std::vector<std::size_t> hopcroft_refine(const std::vector<std::vector<std::size_t>>& next,
                                         const std::vector<std::size_t>& initial_class,
                                         std::size_t num_symbols) {
    const std::size_t n = next.size();
    if (n == 0) {
        return {};
    }

    // inverse[c][t]: states s with next[s][c] == t
    std::vector<std::vector<std::vector<std::size_t>>> inverse(num_symbols, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t c = 0; c < num_symbols; ++c) {
            inverse[c][next[s][c]].push_back(s);
        }
    }

    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_of(n);
    {
        std::map<std::size_t, std::size_t> renumber;
        for (std::size_t s = 0; s < n; ++s) {
            auto [it, fresh] = renumber.emplace(initial_class[s], blocks.size());
            if (fresh) {
                blocks.emplace_back();
            }
            block_of[s] = it->second;
            blocks[it->second].push_back(s);
        }
    }

    std::deque<std::pair<std::size_t, std::size_t>> work;
    std::vector<char> in_work;
    auto mark_work = [&](std::size_t b, std::size_t c) {
        if (in_work.size() < (b + 1) * num_symbols) {
            in_work.resize((b + 1) * num_symbols, 0);
        }
        if (!in_work[b * num_symbols + c]) {
            in_work[b * num_symbols + c] = 1;
            work.emplace_back(b, c);
        }
    };
    {
        std::size_t largest = 0;
        for (std::size_t b = 1; b < blocks.size(); ++b) {
            if (blocks[b].size() > blocks[largest].size()) {
                largest = b;
            }
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (b != largest) {
                for (std::size_t c = 0; c < num_symbols; ++c) {
                    mark_work(b, c);
                }
            }
        }
    }

    std::vector<std::size_t> hits(n, 0);
    std::vector<char> marked(n, 0);
    std::vector<std::size_t> touched;
    std::vector<std::size_t> preimage;
    while (!work.empty()) {
        const auto [splitter, c] = work.front();
        work.pop_front();
        in_work[splitter * num_symbols + c] = 0;

        preimage.clear();
        for (std::size_t t : blocks[splitter]) {
            for (std::size_t s : inverse[c][t]) {
                preimage.push_back(s);
            }
        }
        touched.clear();
        for (std::size_t s : preimage) {
            marked[s] = 1;
            const std::size_t b = block_of[s];
            if (hits[b]++ == 0) {
                touched.push_back(b);
            }
        }
        for (std::size_t b : touched) {
            if (hits[b] < blocks[b].size()) {
                // Move the marked members of b into a fresh block.
                const std::size_t fresh = blocks.size();
                blocks.emplace_back();
                auto& old_block = blocks[b];
                std::vector<std::size_t> keep;
                keep.reserve(old_block.size() - hits[b]);
                for (std::size_t s : old_block) {
                    if (marked[s]) {
                        block_of[s] = fresh;
                        blocks[fresh].push_back(s);
                    } else {
                        keep.push_back(s);
                    }
                }
                old_block = std::move(keep);
                for (std::size_t sym = 0; sym < num_symbols; ++sym) {
                    const bool old_pending =
                        in_work.size() > b * num_symbols + sym && in_work[b * num_symbols + sym];
                    if (old_pending) {
                        mark_work(fresh, sym);
                    } else if (blocks[fresh].size() <= blocks[b].size()) {
                        mark_work(fresh, sym);
                    } else {
                        mark_work(b, sym);
                    }
                }
            }
            hits[b] = 0;
        }
        for (std::size_t s : preimage) {
            marked[s] = 0;
        }
    }
    return block_of;
}

} // namespace pft::detail
