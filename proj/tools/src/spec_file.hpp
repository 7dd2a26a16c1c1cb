#ifndef PFT_TOOLS_SPEC_FILE_HPP_
#define PFT_TOOLS_SPEC_FILE_HPP_

#include "pft/pft_spec.hpp"

#include <string>
#include <string_view>

namespace pft::cli {

/**
 * Shift spec documents:
 *
 *   alphabet: ["0", "1"]
 *   period: 2
 *   forbidden:
 *     - ["11"]
 *     - []
 *
 * Errors are pft::Error("parse") with "source:line:column: " in front.
 */
PftSpec parse_spec(std::string_view text, const std::string& source = "<input>");
PftSpec read_spec_file(const std::string& path);

/// Canonical form: flow lists, quoted glyph strings, words in shortlex order.
std::string emit_spec(const PftSpec& spec);

} // namespace pft::cli

#endif // PFT_TOOLS_SPEC_FILE_HPP_
