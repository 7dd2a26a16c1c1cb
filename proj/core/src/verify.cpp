#include "pft/verify.hpp"

#include "pft/error.hpp"
#include "pft/families.hpp"
#include "pft/graph_analysis.hpp"
#include "pft/language.hpp"
#include "pft/periods.hpp"
#include "pft/presentation.hpp"
#include "pft/spectral.hpp"
#include "pft/charpoly_identity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace pft {

namespace {

constexpr std::uint64_t kSeed = 0x70f7c0de;

Word repeat(Symbol a, std::size_t n) {
    return Word(std::vector<Symbol>(n, a));
}

WordSet words(std::initializer_list<const char*> digits) {
    WordSet out;
    for (const char* d : digits) {
        out.insert(Word::from_digits(d));
    }
    return out;
}

std::string join(const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t x : xs) {
        out += (out.empty() ? "" : ",") + std::to_string(x);
    }
    return "{" + out + "}";
}

bool sft_irreducible(const Alphabet& alphabet, const WordSet& f) {
    return is_irreducible(build_ms(PftSpec::sft(alphabet, f)));
}

std::vector<PftSpec> single_word_specs() {
    std::vector<PftSpec> out;
    for (std::size_t ell : {2, 3}) {
        for_each_word(2, ell, [&](const Word& f) { out.push_back(PftSpec::phase_zero(Alphabet(2), 2, {f})); });
    }
    return out;
}

PftSpec bb_spec(std::size_t period) {
    return PftSpec::phase_zero(Alphabet(2), period, {Word::from_digits("11")});
}

PftSpec doubled_golden_mean() {
    return PftSpec(Alphabet(2), 2, {words({"11"}), words({"11"})});
}

/// Small specs whose essential MS presentation has at most four states.
PftSpec small_spec(std::mt19937_64& rng) {
    for (;;) {
        const bool sft = rng() % 2 == 0;
        const std::size_t ell = sft ? 1 + rng() % 2 : 1;
        WordSet f;
        for_each_word(2, ell, [&](const Word& u) {
            if (rng() % 3 == 0) {
                f.insert(u);
            }
        });
        PftSpec s = sft ? PftSpec::sft(Alphabet(2), f) : PftSpec::phase_zero(Alphabet(2), 2, f);
        if (trim_essential(build_ms(s)).num_states() <= 4) {
            return s;
        }
    }
}

/// A different description of the same shift.
PftSpec equivalent_variant(const PftSpec& s) {
    if (s.period() == 1) {
        if (s.block_length() == 1) {
            return PftSpec(s.alphabet(), 2, {s.forbidden(0), s.forbidden(0)});
        }
        return complete_forbidden_set(s);
    }
    NormalizeOptions complete;
    complete.complete = true;
    return normalize_pft(s, complete);
}

CriterionResult make(int id, std::string name) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    return r;
}

// 1. MS construction of ({11}, ∅), T = 2.
CriterionResult criterion_construction() {
    auto r = make(1, "MS construction");
    const LabeledGraph g = build_ms(bb_spec(2));
    const bool shape = g.num_states() == 7 && g.num_edges() == 12;
    const bool det = g.is_deterministic();
    const bool irr = is_irreducible(g);
    const std::size_t per = graph_period(g).per_graph;

    std::mt19937_64 rng(kSeed);
    std::size_t suffix_ok = 0;
    const std::size_t ell = g.word_length();
    for (int walk = 0; walk < 1000; ++walk) {
        StateId s = static_cast<StateId>(rng() % g.num_states());
        const std::size_t len = ell + rng() % 19;
        std::vector<Symbol> labels;
        for (std::size_t i = 0; i < len; ++i) {
            const auto out = g.out_edges(s);
            const Edge& e = out[rng() % out.size()];
            labels.push_back(e.label);
            s = e.to;
        }
        const Word tail(std::vector<Symbol>(labels.end() - static_cast<std::ptrdiff_t>(ell), labels.end()));
        if (g.state_word(s) == tail) {
            ++suffix_ok;
        }
    }
    r.passed = shape && det && irr && per == 2 && suffix_ok == 1000;
    std::ostringstream d;
    d << "states=" << g.num_states() << " edges=" << g.num_edges() << " deterministic=" << det
      << " irreducible=" << irr << " per=" << per << " suffix-property=" << suffix_ok << "/1000";
    r.detail = d.str();
    return r;
}

// 2. G_X irreducible over random irreducible SFTs and ternary few-word SFTs.
CriterionResult criterion_irreducibility() {
    auto r = make(2, "irreducibility of G_X");
    std::size_t ok = 0;
    const auto corpus = irreducible_sft_corpus();
    for (const auto& s : corpus) {
        ok += is_irreducible(build_ms(s)) ? 1 : 0;
    }
    std::size_t cor_ok = 0;
    const auto cor = single_word_corpus();
    for (const auto& s : cor) {
        cor_ok += is_irreducible(build_ms(s)) ? 1 : 0;
    }
    r.passed = ok == corpus.size() && cor_ok == cor.size() && corpus.size() == 50;
    r.detail = "binary " + std::to_string(ok) + "/" + std::to_string(corpus.size()) + ", ternary few-word " +
               std::to_string(cor_ok) + "/" + std::to_string(cor.size());
    return r;
}

// 3. H presents Y_{F'}.
CriterionResult criterion_subgraph() {
    auto r = make(3, "subgraph H presents the SFT");
    std::size_t ok = 0;
    auto corpus = irreducible_sft_corpus();
    const auto cor = single_word_corpus();
    corpus.insert(corpus.end(), cor.begin(), cor.end());
    for (const auto& s : corpus) {
        const auto h = build_subgraph_H(s);
        const auto y = build_ms(PftSpec::sft(s.alphabet(), s.forbidden(0)));
        ok += shifts_equal(h, y) ? 1 : 0;
    }
    r.passed = ok == corpus.size();
    r.detail = std::to_string(ok) + "/" + std::to_string(corpus.size()) + " shifts equal";
    return r;
}

// 4. Characteristic polynomial identity.
CriterionResult criterion_charpoly() {
    auto r = make(4, "characteristic polynomial identity");
    std::size_t holds = 0;
    std::size_t applicable = 0;
    std::size_t l2 = 0;
    std::string failures;
    for (const auto& s : single_word_specs()) {
        const Word& f = *s.forbidden(0).begin();
        try {
            const auto res = charpoly_identity_check(s);
            ++applicable;
            if (res.holds && res.arrangement_ok) {
                ++holds;
                l2 += f.size() == 2 ? 1 : 0;
            } else {
                failures += " " + f.digits();
            }
        } catch (const Error& e) {
            if (e.code() != "arrangement-inapplicable") {
                throw;
            }
            failures += " " + f.digits() + "(inapplicable)";
        }
    }
    r.passed = holds == applicable && l2 == 4;
    r.detail = std::to_string(holds) + "/" + std::to_string(applicable) + " applicable instances hold" +
               (failures.empty() ? "" : "; not holding:" + failures);
    return r;
}

// 5. Entropy values and λ_H <= λ_GX.
CriterionResult criterion_entropy() {
    auto r = make(5, "entropy");
    const double golden = entropy(build_ms(PftSpec::sft(Alphabet(2), words({"11"})))).entropy_bits;
    const double expected = std::log2((1.0 + std::sqrt(5.0)) / 2.0);
    const double full = entropy(build_ms(PftSpec::sft(Alphabet(2), {}))).entropy_bits;

    auto corpus = irreducible_sft_corpus();
    const auto cor = single_word_corpus();
    const auto t3 = single_word_specs();
    corpus.insert(corpus.end(), cor.begin(), cor.end());
    corpus.insert(corpus.end(), t3.begin(), t3.end());
    std::size_t ok = 0;
    for (const auto& s : corpus) {
        const double lh = entropy(build_subgraph_H(s)).lambda;
        const double lg = entropy(build_ms(s)).lambda;
        ok += lh <= lg + 1e-12 ? 1 : 0;
    }
    r.passed = std::abs(golden - expected) <= 1e-9 && full == 1.0 && ok == corpus.size();
    std::ostringstream d;
    d.precision(15);
    d << "golden-mean=" << golden << " (|err|=" << std::abs(golden - expected) << ") full-shift=" << full
      << " lambda_H<=lambda_GX " << ok << "/" << corpus.size();
    r.detail = d.str();
    return r;
}

// 6. ψ and the forbidden sets F_k.
CriterionResult criterion_families() {
    auto r = make(6, "families and the psi map");
    bool sizes = true;
    for (std::size_t k = 1; k <= 12; ++k) {
        const auto f = xk_forbidden(k);
        sizes = sizes && f.size() == (std::size_t{1} << (k - 1)) && f.count(repeat(0, k)) == 1 &&
                f == xk_forbidden_recursive(k);
    }
    const bool f2 = xk_forbidden(2) == words({"00", "11"});
    WordSet expected_f3;
    for_each_word(2, 2, [&](const Word& w) { expected_f3.insert(w + Word{w[0]}); });
    const bool f3 = xk_forbidden(3) == expected_f3 && expected_f3 == words({"000", "010", "101", "111"});
    bool odd = true;
    for (std::size_t j = 0; j <= 3; ++j) {
        odd = odd && odd_parity_filter(j);
    }
    std::size_t checked = 0;
    bool fast = true;
    for (std::size_t n = 1; n <= 12; ++n) {
        for_each_word(2, n, [&](const Word& u) {
            for (std::size_t m = 0; m < n; ++m) {
                const bool pow2 = (m & (m - 1)) == 0 && m != 0;
                const bool pow2m1 = ((m + 1) & m) == 0;
                if (!pow2 && !pow2m1) {
                    continue;
                }
                ++checked;
                fast = fast && psi_power(u, m) == psi_power_iterated(u, m);
            }
        });
    }
    r.passed = sizes && f2 && f3 && odd && fast;
    std::ostringstream d;
    d << "sizes/recursion k<=12 " << (sizes ? "ok" : "FAIL") << ", F_2 " << (f2 ? "ok" : "FAIL") << ", F_3 "
      << (f3 ? "ok" : "FAIL") << ", odd-weight j<=3 " << (odd ? "ok" : "FAIL") << ", psi fast paths " << checked
      << " cases " << (fast ? "ok" : "FAIL");
    r.detail = d.str();
    return r;
}

// 7. X_{k+1} = ψ^{-1}(X_k) on blocks, irreducibility range, properness.
CriterionResult criterion_xk() {
    auto r = make(7, "X_k structure");
    bool preimage = true;
    for (std::size_t k = 1; k <= 5 && preimage; ++k) {
        const auto gk = build_ms(xk_spec(k));
        const auto gk1 = build_ms(xk_spec(k + 1));
        for (std::size_t n = 1; n <= 10; ++n) {
            const auto bk = blocks_of_length(gk, n);
            WordSet expected;
            for_each_word(2, n + 1, [&](const Word& u) {
                if (bk.words.count(psi_word(u)) != 0) {
                    expected.insert(u);
                }
            });
            if (blocks_of_length(gk1, n + 1).words != expected) {
                preimage = false;
                r.detail += "preimage fails at k=" + std::to_string(k) + " n=" + std::to_string(n) + "; ";
                break;
            }
        }
    }
    std::string irr;
    bool irreducible_range = true;
    for (std::size_t k = 1; k <= 7; ++k) {
        const bool irred = is_irreducible(build_ms(xk_spec(k)));
        irr += irred ? "1" : "0";
        irreducible_range = irreducible_range && irred == (k <= 6);
    }
    const bool shift_level_7 = shift_irreducible(build_ms(xk_spec(7)));
    std::string proper;
    bool all_proper = true;
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto v = t_desc_search(xk_spec(k));
        proper += " " + v.properness();
        all_proper = all_proper && v.properness() == "proper-up-to(8)";
    }
    r.passed = preimage && irreducible_range && !shift_level_7 && all_proper;
    r.detail += "preimage k<=5,n<=10 " + std::string(preimage ? "ok" : "FAIL") + ", graph irreducible k=1..7: " + irr +
                ", X_7 shift irreducible=" + (shift_level_7 ? "yes" : "no") + ", properness k=1..4:" + proper;
    return r;
}

// 8. Periods of X_k.
CriterionResult criterion_periods() {
    auto r = make(8, "sequential periods of X_k");
    const std::map<std::size_t, std::size_t> expected{{1, 1}, {2, 2}, {3, 4}, {4, 4}, {5, 8}, {6, 8}, {7, 8}, {8, 8}};
    bool tseq = true;
    std::string found;
    for (const auto& [k, p] : expected) {
        const auto res = t_seq(xk_spec(k), 16);
        found += " X_" + std::to_string(k) + "=" + res.to_string();
        tseq = tseq && res.period == p;
    }
    bool multiples = true;
    for (std::size_t k = 2; k <= 8; ++k) {
        std::size_t m = 2;
        while (m < k) {
            m *= 2;
        }
        for (std::size_t p : realized_periods(xk_spec(k), 16)) {
            multiples = multiples && p % m == 0;
        }
    }
    auto avoids = [](std::size_t k, const std::vector<std::size_t>& banned) {
        const auto periods = realized_periods(xk_spec(k), 16);
        for (std::size_t p : banned) {
            if (std::find(periods.begin(), periods.end(), p) != periods.end()) {
                return false;
            }
        }
        return true;
    };
    const bool gaps = avoids(2, {1, 3, 5, 7, 9, 11, 13, 15}) && avoids(3, {2, 6, 10, 14}) && avoids(5, {4, 12});
    r.passed = tseq && multiples && gaps;
    r.detail = "t_seq:" + found + "; multiples " + (multiples ? "ok" : "FAIL") + "; forbidden periods " +
               (gaps ? "absent" : "PRESENT") + "; X_2 periods<=16 " + join(realized_periods(xk_spec(2), 16));
    return r;
}

// 9. Descriptive periods.
CriterionResult criterion_desc() {
    auto r = make(9, "descriptive periods");
    std::ostringstream d;
    bool ok = true;
    const auto sft = t_desc_search(doubled_golden_mean());
    ok = ok && sft.t_desc == 1;
    d << "({11},{11})->" << sft.t_desc;
    std::vector<std::pair<std::string, PftSpec>> proper_cases;
    for (std::size_t t : {2, 3, 5}) {
        proper_cases.emplace_back("({11},...) T=" + std::to_string(t), bb_spec(t));
    }
    for (std::size_t k = 1; k <= 4; ++k) {
        proper_cases.emplace_back("X_" + std::to_string(k), xk_spec(k));
    }
    bool gcd_check = true;
    for (const auto& [name, spec] : proper_cases) {
        const auto v = t_desc_search(spec);
        const std::size_t want = spec.period();
        const bool good = v.t_desc == want && v.properness() == "proper-up-to(8)";
        ok = ok && good;
        const auto p1 = gcd_necessary_check(spec, v.proper_up_to());
        gcd_check = gcd_check && p1.applicable && p1.holds;
        d << "; " << name << "->" << v.t_desc << " " << v.properness() << (v.exact ? " exact" : "")
          << " gcd(per=" << p1.per << ",T)" << (p1.holds ? "!=1" : "=1");
    }
    r.passed = ok && gcd_check;
    r.detail = d.str();
    return r;
}

// 10. The k = 2 instance of the k!-window construction.
CriterionResult criterion_windows() {
    auto r = make(10, "sequential period exceeds graphical period");
    const PftSpec s = factorial_window_spec(2);
    const bool forbidden = s.forbidden(0) == words({"0000", "0101", "1010", "1111"});
    const auto v = t_desc_search(s);
    const auto g = build_ms(s);
    const bool irr = is_irreducible(g) || shift_irreducible(g);
    const auto ts = t_seq(s, 16);
    const bool seq = !ts.period || *ts.period >= 3;
    const auto tg = t_graph_bounds(s, 16);
    const bool graph = tg.upper == 2 && tg.lower <= 2 && 2 % tg.lower == 0;
    r.passed = forbidden && v.properness() == "proper-up-to(8)" && irr && seq && graph;
    std::ostringstream d;
    d << "F0 " << (forbidden ? "ok" : "FAIL") << ", " << v.properness() << ", irreducible=" << irr
      << ", t_seq=" << ts.to_string() << ", t_graph in [" << tg.lower << "," << tg.upper << "]";
    r.detail = d.str();
    return r;
}

// 11. Independent routes agree.
CriterionResult criterion_oracles() {
    auto r = make(11, "cross-oracle agreement");
    std::size_t seq_ok = 0;
    const auto corpus = full_corpus();
    for (const auto& s : corpus) {
        seq_ok += t_seq(s, 16).period == t_seq_via_cycles(s, 16).period ? 1 : 0;
    }

    std::mt19937_64 rng(kSeed + 11);
    std::size_t pairs_ok = 0;
    std::size_t equal_pairs = 0;
    for (int i = 0; i < 20; ++i) {
        const PftSpec a = small_spec(rng);
        const PftSpec b = i % 2 == 0 ? small_spec(rng) : equivalent_variant(a);
        const auto ga = trim_essential(build_ms(a));
        const auto gb = trim_essential(build_ms(b));
        const std::size_t bound = std::max<std::size_t>(1, ga.num_states() * gb.num_states());
        bool blocks_agree = true;
        for (std::size_t n = 1; n <= bound && blocks_agree; ++n) {
            blocks_agree = blocks_of_length(ga, n) == blocks_of_length(gb, n);
        }
        const bool eq = shifts_equal(ga, gb);
        equal_pairs += eq ? 1 : 0;
        pairs_ok += eq == blocks_agree ? 1 : 0;
    }

    std::size_t matrices = 0;
    std::size_t poly_ok = 0;
    auto check_matrix = [&](const IntMatrix& m) {
        ++matrices;
        const auto p = char_poly(m);
        bool ok = p == char_poly_multimodular(m) && p == char_poly_faddeev(m);
        for (int t : {-2, -1, 0, 1, 3}) {
            IntMatrix n(m.dim());
            for (std::size_t i = 0; i < m.dim(); ++i) {
                for (std::size_t j = 0; j < m.dim(); ++j) {
                    n(i, j) = (i == j ? BigInt(t) : BigInt(0)) - m(i, j);
                }
            }
            ok = ok && p.evaluate(t) == bareiss_determinant(n);
        }
        poly_ok += ok ? 1 : 0;
    };
    for (const auto& s : corpus) {
        const auto g = build_ms(s);
        if (g.num_states() <= 16) {
            check_matrix(adjacency(g));
        }
    }
    for (const auto& s : single_word_specs()) {
        try {
            const auto arr = charpoly_arrange(s);
            check_matrix(arr.a_gx);
            check_matrix(arr.a_h);
        } catch (const Error&) {
        }
    }
    r.passed = seq_ok == corpus.size() && pairs_ok == 20 && poly_ok == matrices;
    std::ostringstream d;
    d << "t_seq routes " << seq_ok << "/" << corpus.size() << ", block-compare pairs " << pairs_ok << "/20 ("
      << equal_pairs << " equal), char-poly vs determinant " << poly_ok << "/" << matrices;
    r.detail = d.str();
    return r;
}

using CriterionFn = CriterionResult (*)();

const std::vector<CriterionFn>& criteria() {
    static const std::vector<CriterionFn> fns{
        criterion_construction, criterion_irreducibility, criterion_subgraph, criterion_charpoly,
        criterion_entropy,      criterion_families,       criterion_xk,     criterion_periods,
        criterion_desc,         criterion_windows,       criterion_oracles};
    return fns;
}

const std::map<std::string, std::vector<int>>& suites() {
    static const std::map<std::string, std::vector<int>> m{
        {"construction", {1}}, {"irreducibility", {2, 3}}, {"charpoly", {4}},  {"entropy", {5}},
        {"families", {6, 7}},  {"periods", {8}},           {"desc", {9}},      {"windows", {10}},
        {"oracles", {11}}};
    return m;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"construction", "irreducibility", "charpoly", "entropy", "families",
                                                "periods",      "desc",           "windows", "oracles"};
    return names;
}

CriterionResult run_criterion(int id) {
    if (id < 1 || id > static_cast<int>(criteria().size())) {
        throw Error("usage", "no criterion " + std::to_string(id));
    }
    try {
        return criteria()[static_cast<std::size_t>(id - 1)]();
    } catch (const std::exception& e) {
        CriterionResult r;
        r.id = id;
        r.name = "criterion " + std::to_string(id);
        r.detail = std::string("exception: ") + e.what();
        return r;
    }
}

std::vector<CriterionResult> run_suite(const std::string& name) {
    std::vector<int> ids;
    if (name == "all") {
        for (int i = 1; i <= static_cast<int>(criteria().size()); ++i) {
            ids.push_back(i);
        }
    } else {
        const auto it = suites().find(name);
        if (it == suites().end()) {
            throw Error("usage", "unknown suite '" + name + "'");
        }
        ids = it->second;
    }
    std::vector<CriterionResult> out;
    for (int id : ids) {
        out.push_back(run_criterion(id));
    }
    return out;
}

std::vector<PftSpec> irreducible_sft_corpus() {
    std::mt19937_64 rng(kSeed + 2);
    std::vector<PftSpec> out;
    const Alphabet binary(2);
    while (out.size() < 50) {
        const std::size_t ell = 2 + rng() % 2;
        const auto a = static_cast<Symbol>(rng() % 2);
        WordSet f;
        for_each_word(2, ell, [&](const Word& u) {
            if (u != repeat(a, ell) && rng() % 3 == 0) {
                f.insert(u);
            }
        });
        if (f.empty() || !sft_irreducible(binary, f)) {
            continue;
        }
        const std::size_t period = 2 + rng() % 3;
        out.push_back(PftSpec::phase_zero(binary, period, std::move(f)));
    }
    return out;
}

std::vector<PftSpec> single_word_corpus() {
    std::mt19937_64 rng(kSeed + 3);
    std::vector<PftSpec> out;
    const Alphabet ternary(3);
    while (out.size() < 20) {
        const std::size_t count = 1 + rng() % 2;
        WordSet f;
        while (f.size() < count) {
            f.insert(Word::from_code(rng() % 9, 2, 3));
        }
        if (!sft_irreducible(ternary, f)) {
            continue;
        }
        const std::size_t period = 1 + rng() % 4;
        out.push_back(PftSpec::phase_zero(ternary, period, std::move(f)));
    }
    return out;
}

std::vector<PftSpec> full_corpus() {
    auto out = irreducible_sft_corpus();
    const auto cor = single_word_corpus();
    out.insert(out.end(), cor.begin(), cor.end());
    for (std::size_t k = 1; k <= 8; ++k) {
        out.push_back(xk_spec(k));
    }
    for (const auto& s : single_word_specs()) {
        out.push_back(s);
    }
    for (std::size_t t : {2, 3, 5}) {
        out.push_back(bb_spec(t));
    }
    out.push_back(doubled_golden_mean());
    out.push_back(factorial_window_spec(2));
    return out;
}

} // namespace pft
