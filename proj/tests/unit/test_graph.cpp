#include "oracles.hpp"

#include "pft/error.hpp"
#include "pft/families.hpp"
#include "pft/graph_analysis.hpp"
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

const PftSpec kDoubled = PftSpec::phase_zero(Alphabet(2), 2, ws({"11"}));

} // namespace

TEST_CASE("components of MS presentations") {
    CHECK(scc(build_ms(kDoubled)).size() == 1);
    CHECK(is_irreducible(build_ms(kDoubled)));
    CHECK_FALSE(is_irreducible(build_ms(xk_spec(7))));
    CHECK_FALSE(is_irreducible(build_ms(PftSpec::sft(Alphabet(2), ws({"0", "1"})))));
    // 0^inf and 1^inf only
    const auto loops = build_ms(PftSpec::sft(Alphabet(2), ws({"01", "10"})));
    CHECK(scc(loops).size() == 2);
    CHECK(cyclic_components(loops).size() == 2);
}

TEST_CASE("graph periods") {
    CHECK(graph_period(build_ms(kDoubled)).per_graph == 2);
    CHECK(graph_period(build_ms(PftSpec::sft(Alphabet(2), ws({"0"})))).per_graph == 1);
    CHECK(graph_period(build_ms(xk_spec(2))).per_graph == 2);
    CHECK_THROWS_AS(graph_period(build_ms(PftSpec::sft(Alphabet(2), ws({"0", "1"})))), Error);
}

TEST_CASE("irreducibility and period match matrix-power oracles") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 80; ++round) {
        const std::size_t t = 1 + rng() % 4;
        const std::size_t ell = 1 + rng() % 3;
        WordSet f;
        for (std::size_t i = 1 + rng() % 4; i > 0; --i) {
            f.insert(Word::from_code(rng() % (std::size_t{1} << ell), ell, 2));
        }
        const auto g = build_ms(PftSpec::phase_zero(Alphabet(2), t, f));
        REQUIRE(is_irreducible(g) == oracle::strongly_connected(g));
        if (g.num_states() > 0 && oracle::strongly_connected(g)) {
            REQUIRE(graph_period(g).per_graph == oracle::period(g));
        }
    }
}

TEST_CASE("block joinability") {
    CHECK(language_irreducibility_check(build_ms(PftSpec::sft(Alphabet(2), ws({"11"}))), 3).joinable);
    const auto loops = language_irreducibility_check(build_ms(PftSpec::sft(Alphabet(2), ws({"01", "10"}))), 2);
    CHECK_FALSE(loops.joinable);
    REQUIRE(loops.counterexample);
    const auto empty = language_irreducibility_check(build_ms(PftSpec::sft(Alphabet(2), ws({"0", "1"}))), 2);
    CHECK(empty.joinable);
    CHECK(empty.vacuous);
}
