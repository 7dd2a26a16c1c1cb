#ifndef PFT_TOOLS_REPORTS_HPP_
#define PFT_TOOLS_REPORTS_HPP_

#include "pft/periods.hpp"
#include "pft/pft_spec.hpp"
#include "pft/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pft::cli {

using Report = nlohmann::ordered_json;

enum class Format { text, json_like };

Format parse_format(const std::string& name);

Report analysis_report(const PftSpec& spec, const PeriodBounds& bounds);
Report periods_report(const PftSpec& spec, const PeriodTriple& triple);
Report verify_report(const std::vector<CriterionResult>& results);

/// Indented "key: value" lines for text, two-space JSON for json-like; always newline-terminated.
std::string render(const Report& report, Format format);

} // namespace pft::cli

#endif // PFT_TOOLS_REPORTS_HPP_
