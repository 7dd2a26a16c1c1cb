#ifndef PFT_CHARPOLY_IDENTITY_HPP_
#define PFT_CHARPOLY_IDENTITY_HPP_

#include "pft/pft_spec.hpp"
#include "pft/presentation.hpp"
#include "pft/spectral.hpp"

#include <cstddef>
#include <vector>

namespace pft {

/**
 * Block arrangement of A_{G_X} for X = X_{({f'}, ∅), 2}, zero-based:
 *   index 0                 a V^(0) predecessor x of f'^(1) (smallest code),
 *   1 .. q^ℓ-2              the remaining V^(0) states by code,
 *   q^ℓ-1                   u^(1) with u ≠ f' sharing f''s longest proper suffix (smallest code),
 *   q^ℓ .. 2q^ℓ-3           the remaining V^(1) states by code,
 *   2q^ℓ-2                  f'^(1).
 * B = tI - A_H after subtracting row 0 from every other row with an edge into f'^(1).
 */
struct CharPolyArrangement {
    LabeledGraph graph;
    std::vector<StateId> order;  ///< order[i] = state of G_X placed at index i
    IntMatrix a_gx;
    IntMatrix a_h;
    LinearPencil b;
    std::size_t x_row = 0;
    std::size_t u_row = 0;
    std::size_t f_row = 0;
};

/// Throws Error("arrangement-inapplicable") when G_X lacks any of its 2q^ℓ-1 states.
CharPolyArrangement charpoly_arrange(const PftSpec& spec);

struct CharPolyIdentity {
    bool holds = false;
    /// Arrangement sanity: entry (0, f_row) is 1, rows u_row and f_row agree, det(B) = χ_{A_H}.
    bool arrangement_ok = false;
    IntPolynomial lhs;      ///< χ_{A_GX}
    IntPolynomial rhs;      ///< t (χ_{A_H} + (-1)^{q^ℓ} det(B^{(1,q^ℓ)}))
    IntPolynomial chi_h;
    IntPolynomial minor_det;
};

CharPolyIdentity charpoly_identity_check(const PftSpec& spec);

} // namespace pft

#endif // PFT_CHARPOLY_IDENTITY_HPP_
