#include "oracles.hpp"

#include "pft/error.hpp"
#include "pft/families.hpp"
#include "pft/periods.hpp"
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

TEST_CASE("sequential periods of the families") {
    CHECK(t_seq(xk_spec(1), 16).period == 1);
    CHECK(t_seq(xk_spec(2), 16).period == 2);
    CHECK(t_seq(xk_spec(4), 16).period == 4);
    CHECK(t_seq(xk_spec(5), 16).period == 8);
    CHECK(t_seq(kDoubled, 16).period == 1);
    const auto none = t_seq(PftSpec::sft(Alphabet(2), ws({"0", "1"})), 6);
    CHECK_FALSE(none.period);
    CHECK(none.to_string() == "unknown>6");
}

TEST_CASE("sequential periods match brute force") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 40; ++round) {
        const std::size_t t = 1 + rng() % 4;
        const std::size_t ell = 1 + rng() % 3;
        WordSet f;
        for (std::size_t i = 1 + rng() % 4; i > 0; --i) {
            f.insert(Word::from_code(rng() % (std::size_t{1} << ell), ell, 2));
        }
        const auto spec = PftSpec::phase_zero(Alphabet(2), t, f);
        const auto expected = oracle::smallest_period(spec, 9);
        const auto got = t_seq(spec, 9);
        REQUIRE(got.period.value_or(0) == expected);
        REQUIRE(t_seq_via_cycles(spec, 9).period.value_or(0) == expected);
        const auto realized = realized_periods(spec, 9);
        // realized periods are the p with σ^p x = x for some x: multiples of least periods
        std::set<std::size_t> expected_realized;
        for (std::size_t d : oracle::realized_periods(spec, 9)) {
            for (std::size_t p = d; p <= 9; p += d) {
                expected_realized.insert(p);
            }
        }
        REQUIRE(std::set<std::size_t>(realized.begin(), realized.end()) == expected_realized);
        if (got.witness) {
            REQUIRE(oracle::periodic_member(spec, got.witness->digits()));
        }
    }
}

TEST_CASE("cycle route finds the explicit 2-cycle") {
    const auto r = t_seq_via_cycles(kDoubled, 8);
    CHECK(r.period == 1);
    CHECK(r.witness->digits() == "0");
    CHECK(t_seq_via_cycles(xk_spec(2), 8).period == 2);
}

TEST_CASE("graphical period bounds") {
    const auto x2 = t_graph_bounds(xk_spec(2), 16);
    CHECK(x2.lower == 2);
    CHECK(x2.upper == 2);
    CHECK(t_graph_bounds(xk_spec(4), 16).lower >= 4);
    CHECK(t_graph_bounds(factorial_window_spec(2), 16).upper == 2);
    try {
        t_graph_bounds(xk_spec(7), 16);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "t-graph-undefined");
    }
}

TEST_CASE("necessary gcd condition") {
    const auto a = gcd_necessary_check(kDoubled, true);
    CHECK(a.applicable);
    CHECK(a.holds);
    CHECK(a.per == 2);
    CHECK_FALSE(gcd_necessary_check(PftSpec::sft(Alphabet(2), ws({"11"})), false).applicable);
    CHECK(gcd_necessary_check(xk_spec(2), true).holds);
}

TEST_CASE("descriptive periods") {
    const auto sft = t_desc_search(PftSpec(Alphabet(2), 2, {ws({"11"}), ws({"11"})}));
    CHECK(sft.t_desc == 1);
    CHECK(sft.sft);
    CHECK(sft.properness() == "sft(2)");
    const auto proper = t_desc_search(kDoubled);
    CHECK(proper.t_desc == 2);
    CHECK(proper.properness() == "proper-up-to(8)");
    for (std::size_t k = 1; k <= 6; ++k) {
        INFO(k);
        CHECK(t_desc_search(xk_spec(k)).t_desc == 2);
    }
}

TEST_CASE("divisibility reports") {
    const auto x2 = divisibility_conjecture_check(2, t_graph_bounds(xk_spec(2), 16));
    CHECK(x2.status == Divisibility::consistent);
    const auto x4 = divisibility_conjecture_check(2, t_graph_bounds(xk_spec(4), 16));
    CHECK(x4.status == Divisibility::consistent);
    TGraphBounds tight;
    tight.lower = tight.upper = 3;
    CHECK(divisibility_conjecture_check(2, tight).status == Divisibility::violated);
}

TEST_CASE("period triple") {
    const auto x2 = period_triple(xk_spec(2));
    CHECK(x2.t_seq.period == 2);
    CHECK(x2.t_graph->upper == 2);
    CHECK(x2.t_desc.t_desc == 2);
    const auto x7 = period_triple(xk_spec(7));
    CHECK_FALSE(x7.t_graph);
    CHECK_FALSE(x7.t_graph_note.empty());
}
