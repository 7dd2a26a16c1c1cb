#include "oracles.hpp"

#include "pft/error.hpp"
#include "pft/families.hpp"

#include <catch_amalgamated.hpp>

using namespace pft;

namespace {

Word w(const char* d) {
    return Word::from_digits(d);
}

WordSet ws(std::initializer_list<const char*> ds) {
    WordSet out;
    for (const char* d : ds) {
        out.insert(Word::from_digits(d));
    }
    return out;
}

} // namespace

TEST_CASE("psi on words") {
    CHECK(psi_word(w("0110")).digits() == "101");
    CHECK(psi_word(w("1")).empty());
    CHECK(psi_word(w("10110")).digits() == "1101");
    CHECK_THROWS_AS(psi_word(Word{2, 0}), Error);
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const auto& d : oracle::words(2, n)) {
            REQUIRE(psi_word(w(d.c_str())).digits() == oracle::psi(d));
        }
    }
}

TEST_CASE("psi is two-to-one") {
    for (std::size_t n = 2; n <= 9; ++n) {
        std::map<std::string, int> hits;
        for (const auto& d : oracle::words(2, n)) {
            ++hits[oracle::psi(d)];
        }
        CHECK(hits.size() == (std::size_t{1} << (n - 1)));
        for (const auto& [image, count] : hits) {
            CHECK(count == 2);
        }
    }
}

TEST_CASE("psi on periodic points") {
    CHECK(psi_periodic(PeriodicWord(w("01"))).primitive_period() == 1);
    CHECK(subword_at(psi_periodic(PeriodicWord(w("01"))), 0, 1).digits() == "1");
    const auto p = psi_periodic(PeriodicWord(w("0001")));
    CHECK(subword_at(p, 0, 8) == subword_at(PeriodicWord(w("0011")), 0, 8));
    CHECK(subword_at(psi_periodic(PeriodicWord(w("0"))), 0, 3).digits() == "000");
}

TEST_CASE("psi powers") {
    CHECK(psi_power(w("10110"), 3).digits() == "10");
    CHECK(psi_power(w("10110"), 4).digits() == "1");
    CHECK(psi_power(w("10110"), 0).digits() == "10110");
    CHECK_THROWS_AS(psi_power(w("101"), 3), Error);
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const auto& d : oracle::words(2, n)) {
            std::string iter = d;
            for (std::size_t m = 0; m < n; ++m) {
                REQUIRE(psi_power(w(d.c_str()), m).digits() == iter);
                iter = oracle::psi(iter);
            }
        }
    }
}

TEST_CASE("forbidden sets of the X_k family") {
    CHECK(xk_forbidden(1) == ws({"0"}));
    CHECK(xk_forbidden(2) == ws({"00", "11"}));
    CHECK(xk_forbidden(3) == ws({"000", "010", "101", "111"}));
    const auto f5 = xk_forbidden(5);
    CHECK(f5.size() == 16);
    for (const auto& f : f5) {
        CHECK(f[4] == f[0]);
    }
    CHECK_THROWS_AS(xk_forbidden(0), Error);
    // F_k = psi^{-1}(F_{k-1}) straight from the oracle
    for (std::size_t k = 2; k <= 9; ++k) {
        WordSet expected;
        const auto prev = xk_forbidden(k - 1);
        for (const auto& d : oracle::words(2, k)) {
            if (prev.count(w(oracle::psi(d).c_str())) != 0) {
                expected.insert(w(d.c_str()));
            }
        }
        REQUIRE(xk_forbidden(k) == expected);
    }
}

TEST_CASE("X_k specs") {
    CHECK(xk_spec(1) == PftSpec::phase_zero(Alphabet(2), 2, ws({"0"})));
    CHECK(xk_spec(2) == PftSpec::phase_zero(Alphabet(2), 2, ws({"00", "11"})));
}

TEST_CASE("words of F_{2^j} have even weight") {
    for (std::size_t j = 1; j <= 3; ++j) {
        CHECK(odd_parity_filter(j));
    }
    for (const auto& f : xk_forbidden(4)) {
        CHECK(f.weight() % 2 == 0);
    }
}

TEST_CASE("k!-window construction") {
    CHECK(factorial_window_spec(2).forbidden(0) == ws({"0000", "0101", "1010", "1111"}));
    const auto k3 = factorial_window_spec(3);
    CHECK(k3.forbidden(0).size() <= 64 * 6);
    CHECK(k3.block_length() == 12);
    try {
        factorial_window_spec(4);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "desk-scale-exceeded");
    }
}
