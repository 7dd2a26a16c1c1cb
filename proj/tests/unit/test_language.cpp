#include "oracles.hpp"

#include "pft/error.hpp"
#include "pft/graph_analysis.hpp"
#include "pft/language.hpp"
#include "pft/presentation.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pft;

namespace {

WordSet ws(std::initializer_list<const char*> ds) {
    WordSet out;
    for (const char* d : ds) {
        out.insert(Word::from_digits(d));
    }
    return out;
}

const LabeledGraph kGolden = build_ms(PftSpec::sft(Alphabet(2), ws({"11"})));
const LabeledGraph kDoubled = build_ms(PftSpec::phase_zero(Alphabet(2), 2, ws({"11"})));
const LabeledGraph kEmpty = build_ms(PftSpec::sft(Alphabet(2), ws({"0", "1"})));

PftSpec random_small(std::mt19937_64& rng) {
    const std::size_t t = 1 + rng() % 3;
    const std::size_t ell = 1 + rng() % 2;
    WordSet f;
    for (std::size_t i = rng() % 3; i > 0; --i) {
        f.insert(Word::from_code(rng() % (std::size_t{1} << ell), ell, 2));
    }
    return PftSpec::phase_zero(Alphabet(2), t, f);
}

} // namespace

TEST_CASE("block sets") {
    CHECK(blocks_of_length(kGolden, 2).words == ws({"00", "01", "10"}));
    CHECK(blocks_of_length(kDoubled, 2).words == ws({"00", "01", "10", "11"}));
    for (const auto* g : {&kGolden, &kDoubled, &kEmpty}) {
        CHECK(blocks_of_length(*g, 0).words == WordSet{Word{}});
    }
}

TEST_CASE("minimal block automata") {
    CHECK(block_dfa(kGolden).num_states() == 2);
    CHECK(block_dfa(build_ms(PftSpec::sft(Alphabet(2), {}))).num_states() == 1);
    CHECK(block_dfa(kEmpty).accepts_only_empty_word());
    CHECK(block_dfa(kGolden).accepts(Word::from_digits("0100101")));
    CHECK_FALSE(block_dfa(kGolden).accepts(Word::from_digits("0110")));
}

TEST_CASE("equality and containment") {
    const auto same = build_ms(PftSpec(Alphabet(2), 2, {ws({"11"}), ws({"11"})}));
    CHECK(shifts_equal(same, kGolden));
    CHECK_FALSE(shifts_equal(kDoubled, kGolden));
    CHECK(shifts_equal(kDoubled, kDoubled));
    CHECK(subshift_contains(kGolden, kDoubled));
    CHECK_FALSE(subshift_contains(kDoubled, kGolden));
    CHECK(subshift_contains(kEmpty, kGolden));
    const auto sep = separating_block(kDoubled, kGolden);
    REQUIRE(sep);
    CHECK(sep->digits() == "11");
}

TEST_CASE("separating blocks are shortest and block comparison agrees with equality") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 60; ++round) {
        const PftSpec a = random_small(rng);
        const PftSpec b = round % 3 == 0 ? a : random_small(rng);
        const auto ga = build_ms(a);
        const auto gb = build_ms(b);
        const auto sep = separating_block(ga, gb);
        REQUIRE(shifts_equal(ga, gb) == !sep.has_value());
        const std::size_t limit = sep ? sep->size() : std::max<std::size_t>(1, ga.num_states() * gb.num_states());
        for (std::size_t n = 1; n <= std::min<std::size_t>(limit, 8); ++n) {
            const bool differ = oracle::blocks(a, n) != oracle::blocks(b, n);
            REQUIRE(differ == (sep && n == sep->size()));
        }
    }
}

TEST_CASE("follower-set minimization") {
    CHECK(follower_minimize(kGolden).num_states() == 2);
    const auto once = follower_minimize(kGolden);
    CHECK(follower_minimize(once).num_states() == once.num_states());
    const auto m = follower_minimize(kDoubled);
    CHECK(shifts_equal(m, kDoubled));
    CHECK(2 % graph_period(m).per_graph == 0);
}

TEST_CASE("nondeterministic graphs are rejected where determinism matters") {
    // two 0-labelled edges leaving state 0
    const LabeledGraph nfa(Alphabet(2), 1, 1, {{0, 0}, {0, 1}}, {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}});
    REQUIRE_FALSE(nfa.is_deterministic());
    try {
        follower_minimize(nfa);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "requires-deterministic");
    }
    // subset construction still yields the language
    CHECK(block_dfa(nfa).accepts(Word::from_digits("0101")));
}
