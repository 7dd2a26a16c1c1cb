#ifndef PFT_FAMILIES_HPP_
#define PFT_FAMILIES_HPP_

#include "pft/pft_spec.hpp"
#include "pft/word.hpp"

#include <cstddef>

namespace pft {

/// Adjacent XORs u_i + u_{i+1} (mod 2); ε for a single symbol. Binary words only.
Word psi_word(const Word& u);
/// The image sequence, kept with the same block length.
PeriodicWord psi_periodic(const PeriodicWord& w);

/// ψ^m(u) for m < |u|, using the closed forms for m = 2^j and m = 2^j - 1 when they apply.
Word psi_power(const Word& u, std::size_t m);
Word psi_power_iterated(const Word& u, std::size_t m);
/// ψ^{2^j}(u)_i = u_i + u_{i+2^j}.
Word psi_power_two_term(const Word& u, std::size_t j);
/// ψ^{2^j - 1}(u)_i = u_i + ... + u_{i+2^j-1}.
Word psi_power_window(const Word& u, std::size_t j);

/// F_k^(0) = {u ∈ Σ^k : ψ^{k-1}(u) = 0}.
WordSet xk_forbidden(std::size_t k);
/// F_1^(0) = {0}, F_k^(0) = ψ^{-1}(F_{k-1}^(0)).
WordSet xk_forbidden_recursive(std::size_t k);
/// X_k = X_{(F_k^(0), ∅), 2}.
PftSpec xk_spec(std::size_t k);

/// No odd-weight word of length 2^j lies in F_{2^j}^(0).
bool odd_parity_filter(std::size_t j);

/// F^(0) = length-2k! windows of the period-k! binary sequences, T = 2.
/// k >= 4 throws Error("desk-scale-exceeded") unless forced.
PftSpec factorial_window_spec(std::size_t k, bool force = false);

} // namespace pft

#endif // PFT_FAMILIES_HPP_
