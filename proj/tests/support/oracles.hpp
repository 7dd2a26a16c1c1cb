#ifndef PFT_TESTS_ORACLES_HPP_
#define PFT_TESTS_ORACLES_HPP_

// Brute-force reference implementations, written straight from the definitions
// and sharing no code with the library beyond Word/PftSpec containers.

#include "pft/pft_spec.hpp"
#include "pft/presentation.hpp"
#include "pft/spectral.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Digits = std::string;  // binary/ternary words as digit strings

/// Offsets r in [0, T) for which σ^r((block)^∞) avoids every f ∈ F^(j) at positions i ≡ j (mod T).
std::vector<std::size_t> admissible_offsets(const pft::PftSpec& spec, const Digits& block);
bool periodic_member(const pft::PftSpec& spec, const Digits& block);

/// Length-n blocks of the shift: words that sit at some offset inside an arbitrarily long legal window.
std::set<Digits> blocks(const pft::PftSpec& spec, std::size_t n);

/// Smallest p <= bound with a member of period p, 0 when none.
std::size_t smallest_period(const pft::PftSpec& spec, std::size_t bound);
std::set<std::size_t> realized_periods(const pft::PftSpec& spec, std::size_t bound);

/// Reachability closure over the adjacency matrix.
bool strongly_connected(const pft::LabeledGraph& g);
/// gcd of closed walk lengths up to 2n through any vertex, from boolean matrix powers. 0 if acyclic.
std::size_t period(const pft::LabeledGraph& g);

/// Laplace expansion of det(tI - A); keep dim <= 8.
std::vector<std::int64_t> char_poly_laplace(const std::vector<std::vector<std::int64_t>>& a);
std::int64_t det_laplace(const std::vector<std::vector<std::int64_t>>& a);
/// Power iteration on A + I, minus one.
double spectral_radius(const std::vector<std::vector<std::int64_t>>& a);

std::vector<std::vector<std::int64_t>> dense(const pft::IntMatrix& m);
std::vector<std::vector<std::int64_t>> random_01(std::mt19937_64& rng, std::size_t n, double density);

Digits psi(const Digits& u);
std::vector<Digits> words(std::size_t q, std::size_t n);

} // namespace oracle

#endif // PFT_TESTS_ORACLES_HPP_
