#include "reports.hpp"

#include "pft/error.hpp"
#include "pft/graph_analysis.hpp"
#include "pft/presentation.hpp"
#include "pft/spectral.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace pft::cli {

namespace {

Report number_or_text(double x) {
    if (std::isinf(x)) {
        return x < 0 ? "-inf" : "inf";
    }
    return x;
}

Report t_seq_json(const TSeqResult& r, const Alphabet& alphabet) {
    Report out;
    out["value"] = r.to_string();
    out["bound"] = r.bound;
    out["witness"] = r.witness ? Report(r.witness->to_string(alphabet)) : Report(nullptr);
    return out;
}

Report bounds_json(const PeriodBounds& b) {
    Report out;
    out["max_period"] = b.max_period;
    out["max_len"] = b.max_len;
    out["budget"] = b.budget;
    return out;
}

std::string scalar_text(const Report& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "-";
    }
    if (v.is_number_float()) {
        std::ostringstream s;
        s << std::setprecision(12) << v.get<double>();
        return s.str();
    }
    return v.dump();
}

void render_text(const Report& node, std::size_t indent, std::ostringstream& out) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : node.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render_text(value, indent + 2, out);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << pad << key << ":\n";
            for (const auto& row : value) {
                out << pad << "  -";
                for (const auto& [k, v] : row.items()) {
                    out << ' ' << k << '=' << scalar_text(v);
                }
                out << '\n';
            }
        } else if (value.is_array()) {
            out << pad << key << ": ";
            bool first = true;
            for (const auto& v : value) {
                out << (first ? "" : ", ") << scalar_text(v);
                first = false;
            }
            out << '\n';
        } else {
            out << pad << key << ": " << scalar_text(value) << '\n';
        }
    }
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "text") {
        return Format::text;
    }
    if (name == "json-like" || name == "json") {
        return Format::json_like;
    }
    throw Error("usage", "unknown format '" + name + "' (text|json-like)");
}

Report periods_report(const PftSpec& spec, const PeriodTriple& triple) {
    Report out;
    out["t_seq"] = t_seq_json(triple.t_seq, spec.alphabet());
    out["t_seq_via_cycles"] = t_seq_json(triple.t_seq_cycles, spec.alphabet());
    if (triple.t_graph) {
        const auto& g = *triple.t_graph;
        Report tg;
        tg["lower"] = g.lower;
        tg["upper"] = g.upper;
        tg["lower_conditional"] = g.lower_conditional;
        tg["evidence_bound"] = g.evidence_bound;
        tg["candidates"] = g.candidates;
        out["t_graph"] = tg;
    } else {
        out["t_graph"] = triple.t_graph_note;
    }
    const auto& d = triple.t_desc;
    Report desc;
    desc["value"] = d.t_desc;
    desc["exact"] = d.exact;
    desc["properness"] = d.properness();
    Report rows = Report::array();
    for (const auto& row : d.rows) {
        Report r;
        r["period"] = row.period;
        r["verdict"] = to_string(row.verdict);
        r["word_length"] = row.word_length ? Report(*row.word_length) : Report(nullptr);
        if (!row.note.empty()) {
            r["note"] = row.note;
        }
        rows.push_back(r);
    }
    desc["rows"] = rows;
    out["t_desc"] = desc;
    Report p1;
    p1["applicable"] = triple.gcd_check.applicable;
    p1["holds"] = triple.gcd_check.holds;
    p1["per"] = triple.gcd_check.per;
    p1["period"] = triple.gcd_check.period;
    out["gcd_check"] = p1;
    if (triple.divisibility) {
        out["divisibility"] = to_string(triple.divisibility->status);
    }
    out["bounds"] = bounds_json(triple.bounds);
    return out;
}

Report analysis_report(const PftSpec& spec, const PeriodBounds& bounds) {
    const PftSpec normal = normalize_pft(spec);
    const LabeledGraph g = build_ms(normal);
    Report out;
    Report nf;
    nf["word_length"] = normal.block_length();
    nf["forbidden_words"] = normal.forbidden(0).size();
    nf["period"] = normal.period();
    out["normal_form"] = nf;
    Report graph;
    graph["states"] = g.num_states();
    graph["edges"] = g.num_edges();
    graph["deterministic"] = g.is_deterministic();
    out["graph"] = graph;
    const bool irreducible = g.num_states() > 0 && is_irreducible(g);
    out["irreducible"] = irreducible;
    out["per"] = irreducible ? Report(graph_period(g).per_graph) : Report(nullptr);

    const SpectralReport spectral = entropy(g);
    Report ent;
    ent["lambda"] = spectral.lambda;
    ent["bits"] = number_or_text(spectral.entropy_bits);
    ent["empty_shift"] = spectral.empty_shift;
    ent["numeric"] = spectral.numeric;
    out["entropy"] = ent;
    out["char_poly"] = spectral.char_poly ? Report(spectral.char_poly->to_string()) : Report(nullptr);
    out["periods"] = periods_report(spec, period_triple(spec, bounds));
    return out;
}

Report verify_report(const std::vector<CriterionResult>& results) {
    Report out;
    Report rows = Report::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        Report row;
        row["id"] = r.id;
        row["name"] = r.name;
        row["result"] = r.passed ? "PASS" : "FAIL";
        row["detail"] = r.detail;
        rows.push_back(row);
        passed += r.passed ? 1 : 0;
    }
    out["criteria"] = rows;
    out["passed"] = std::to_string(passed) + "/" + std::to_string(results.size());
    return out;
}

std::string render(const Report& report, Format format) {
    if (format == Format::json_like) {
        return report.dump(2) + "\n";
    }
    std::ostringstream out;
    render_text(report, 0, out);
    return out.str();
}

} // namespace pft::cli
