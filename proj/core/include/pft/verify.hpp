#ifndef PFT_VERIFY_HPP_
#define PFT_VERIFY_HPP_

#include "pft/pft_spec.hpp"

#include <string>
#include <vector>

namespace pft {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Suite names in criterion order; "all" runs every criterion.
const std::vector<std::string>& suite_names();
/// Throws Error("usage") for an unknown suite.
std::vector<CriterionResult> run_suite(const std::string& name);
CriterionResult run_criterion(int id);

/// 50 irreducible binary SFT forbidden sets (ℓ ∈ {2,3}, a fixed point a^∞) placed at phase 0
/// with T ∈ {2,3,4}; deterministic.
std::vector<PftSpec> irreducible_sft_corpus();
/// Ternary irreducible SFTs with 1 or 2 forbidden words, at phase 0 with T ∈ {1,..,4}.
std::vector<PftSpec> single_word_corpus();
/// Every spec used by the suites, for corpus-wide cross checks.
std::vector<PftSpec> full_corpus();

} // namespace pft

#endif // PFT_VERIFY_HPP_
