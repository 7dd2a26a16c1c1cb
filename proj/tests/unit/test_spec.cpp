#include "oracles.hpp"

#include "pft/error.hpp"
#include "pft/language.hpp"
#include "pft/pft_spec.hpp"
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

PftSpec random_spec(std::mt19937_64& rng) {
    const std::size_t t = 1 + rng() % 3;
    std::vector<WordSet> schedule(t);
    for (auto& phase : schedule) {
        const std::size_t count = rng() % 3;
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t len = 1 + rng() % 3;
            phase.insert(Word::from_code(rng() % (std::size_t{1} << len), len, 2));
        }
    }
    return PftSpec(Alphabet(2), t, schedule);
}

} // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(PftSpec(Alphabet(2), 0, {}), Error);
    CHECK_THROWS_AS(PftSpec(Alphabet(2), 2, {ws({"11"})}), Error);
    CHECK_THROWS_AS(PftSpec(Alphabet(2), 1, {ws({"12"})}), Error);
    CHECK_THROWS_AS(PftSpec(Alphabet(2), 1, {WordSet{Word{}}}), Error);
    CHECK(PftSpec::phase_zero(Alphabet(2), 2, ws({"11"})).is_normal_form());
    CHECK_FALSE(PftSpec(Alphabet(2), 2, {ws({}), ws({"1"})}).is_normal_form());
}

TEST_CASE("periodic membership examples") {
    const auto spec = PftSpec::phase_zero(Alphabet(2), 2, ws({"11"}));
    const MembershipTester tester(spec);
    CHECK(tester.admissible(PeriodicWord(Word::from_digits("0011"))).admissible_residues == std::vector<std::size_t>{1});
    CHECK(tester.admissible(PeriodicWord(Word::from_digits("11"))).admissible_residues.empty());
    CHECK(tester.admissible(PeriodicWord(Word::from_digits("01"))).admissible_residues ==
          std::vector<std::size_t>{0, 1});
}

TEST_CASE("periodic membership matches the definition on random schedules") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 60; ++round) {
        const PftSpec spec = random_spec(rng);
        const MembershipTester tester(spec);
        for (std::size_t p = 1; p <= 7; ++p) {
            for (const auto& d : oracle::words(2, p)) {
                REQUIRE(tester.admissible(PeriodicWord(Word::from_digits(d))).admissible_residues ==
                        oracle::admissible_offsets(spec, d));
            }
        }
    }
}

TEST_CASE("SFT normalization") {
    const auto a = normalize_sft(PftSpec::sft(Alphabet(2), ws({"1", "00"})));
    CHECK(a.forbidden(0) == ws({"10", "11", "00"}));
    CHECK(a.block_length() == 2);
    CHECK(normalize_sft(PftSpec::sft(Alphabet(2), ws({"11"}))).forbidden(0) == ws({"11"}));
    CHECK(normalize_sft(PftSpec::sft(Alphabet(2), ws({"0", "1"}))).forbidden(0) == ws({"0", "1"}));
}

TEST_CASE("forbidden-set completion") {
    CHECK(complete_forbidden_set(PftSpec::sft(Alphabet(2), ws({"11"}))).forbidden(0) == ws({"11"}));
    // only 0^inf survives {01, 11}, so 10 never occurs either
    CHECK(complete_forbidden_set(PftSpec::sft(Alphabet(2), ws({"01", "11"}))).forbidden(0) == ws({"01", "10", "11"}));
    CHECK(complete_forbidden_set(PftSpec::sft(Alphabet(2), {})).forbidden(0).empty());
}

TEST_CASE("PFT normalization examples") {
    const auto a = normalize_pft(PftSpec(Alphabet(2), 2, {ws({}), ws({"1"})}));
    CHECK(a.forbidden(0) == ws({"01", "11"}));
    CHECK(a.forbidden(1).empty());

    const auto normal = PftSpec::phase_zero(Alphabet(2), 2, ws({"11"}));
    CHECK(normalize_pft(normal) == normal);

    const auto b = PftSpec(Alphabet(2), 2, {ws({"0"}), ws({"1"})});
    // (10)^inf avoids the schedule, so 10 stays allowed
    CHECK(normalize_pft(b).forbidden(0) == ws({"00", "01", "11"}));
    CHECK(oracle::periodic_member(b, "10"));
    NormalizeOptions complete;
    complete.complete = true;
    const auto c = normalize_pft(b, complete);
    CHECK(shifts_equal(build_ms(c), build_ms(b)));
}

TEST_CASE("normalization preserves blocks on random schedules") {
    std::mt19937_64 rng(7);
    NormalizeOptions complete;
    complete.complete = true;
    for (int round = 0; round < 25; ++round) {
        const PftSpec spec = random_spec(rng);
        const PftSpec n = normalize_pft(spec);
        const PftSpec c = normalize_pft(spec, complete);
        REQUIRE(n.is_normal_form());
        for (std::size_t len = 1; len <= 4; ++len) {
            const auto expected = oracle::blocks(spec, len);
            REQUIRE(oracle::blocks(n, len) == expected);
            REQUIRE(oracle::blocks(c, len) == expected);
        }
    }
}

TEST_CASE("constant schedule is the SFT") {
    const auto x = PftSpec(Alphabet(2), 2, {ws({"11"}), ws({"11"})});
    CHECK(shifts_equal(build_ms(x), build_ms(PftSpec::sft(Alphabet(2), ws({"11"})))));
}
