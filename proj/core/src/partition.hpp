#ifndef PFT_SRC_PARTITION_HPP_
#define PFT_SRC_PARTITION_HPP_

#include <cstddef>
#include <vector>

namespace pft::detail {

/**
 * Hopcroft partition refinement on a complete DFA.
 *
 * `next[s][c]` must be a valid state for every state s and symbol c. States start in the
 * classes given by `initial_class`; the result maps each state to the index of its
 * coarsest stable block (language-equivalent states share an index).
 */
std::vector<std::size_t> hopcroft_refine(const std::vector<std::vector<std::size_t>>& next,
                                         const std::vector<std::size_t>& initial_class,
                                         std::size_t num_symbols);

} // namespace pft::detail

#endif // PFT_SRC_PARTITION_HPP_
