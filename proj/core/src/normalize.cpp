#include "pft/error.hpp"
#include "pft/language.hpp"
#include "pft/pft_spec.hpp"
#include "pft/presentation.hpp"

#include <algorithm>

namespace pft {

namespace {

/// Every word of length `target` having a member of `words` as a prefix.
WordSet prefix_expand(const WordSet& words, std::size_t target, std::size_t q) {
    WordSet out;
    for (const auto& f : words) {
        for_each_word(q, target - f.size(), [&](const Word& tail) { out.insert(f + tail); });
    }
    return out;
}

std::size_t longest(const WordSet& words) {
    std::size_t m = 0;
    for (const auto& w : words) {
        m = std::max(m, w.size());
    }
    return m;
}

} // namespace

PftSpec normalize_sft(const PftSpec& spec) {
    if (spec.period() != 1) {
        throw Error("spec", "normalize_sft expects period 1");
    }
    const auto& f = spec.forbidden(0);
    if (f.empty()) {
        return spec;
    }
    return PftSpec::sft(spec.alphabet(), prefix_expand(f, longest(f), spec.q()));
}

PftSpec complete_forbidden_set(const PftSpec& spec) {
    if (spec.period() != 1 || !spec.is_normal_form()) {
        throw Error("spec", "completion expects a normal-form spec with period 1");
    }
    const std::size_t ell = spec.block_length();
    const auto blocks = blocks_of_length(build_ms(spec), ell);
    WordSet f = spec.forbidden(0);
    for_each_word(spec.q(), ell, [&](const Word& u) {
        if (blocks.words.count(u) == 0) {
            f.insert(u);
        }
    });
    return PftSpec::sft(spec.alphabet(), std::move(f));
}

PftSpec normalize_pft(const PftSpec& spec, NormalizeOptions options) {
    const std::size_t q = spec.q();
    const std::size_t period = spec.period();
    WordSet merged = spec.forbidden(0);
    for (std::size_t j = 1; j < period; ++j) {
        for (const auto& f : spec.forbidden(j)) {
            for_each_word(q, j, [&](const Word& head) { merged.insert(head + f); });
        }
    }
    PftSpec normal = PftSpec::phase_zero(spec.alphabet(), period,
                                         merged.empty() ? merged : prefix_expand(merged, longest(merged), q));
    if (!options.complete) {
        return normal;
    }
    if (period == 1) {
        return complete_forbidden_set(normal);
    }

    // Greedy in code order: keep u when forbidding it at phase 0 removes no point.
    const std::size_t ell = normal.block_length();
    const LabeledGraph reference = build_ms(normal);
    const BlockDfa reference_dfa = block_dfa(reference);
    WordSet f = normal.forbidden(0);
    for_each_word(q, ell, [&](const Word& u) {
        if (f.count(u) != 0) {
            return;
        }
        WordSet candidate = f;
        candidate.insert(u);
        const auto g = build_ms(PftSpec::phase_zero(spec.alphabet(), period, candidate));
        if (dfa_contains(reference_dfa, block_dfa(g))) {
            f = std::move(candidate);
        }
    });
    return PftSpec::phase_zero(spec.alphabet(), period, std::move(f));
}

} // namespace pft
