#include "commands.hpp"

#include "reports.hpp"
#include "spec_file.hpp"

#include "pft/error.hpp"
#include "pft/families.hpp"
#include "pft/language.hpp"
#include "pft/presentation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace pft::cli {

namespace {

struct Options {
    std::string file;
    std::string file_b;
    std::string dot;
    std::string format = "text";
    std::string family;
    std::string suite = "all";
    bool complete = false;
    bool force = false;
    std::size_t k = 1;
    std::size_t max_period = 16;
    std::size_t max_len = 8;
    std::size_t budget = 20;
    std::size_t max_block = 16;

    PeriodBounds bounds() const { return {max_period, max_len, budget}; }
};

int cmd_normalize(const Options& o, std::ostream& out) {
    NormalizeOptions opts;
    opts.complete = o.complete;
    out << emit_spec(normalize_pft(read_spec_file(o.file), opts));
    return kOk;
}

int cmd_build(const Options& o, std::ostream& out, std::ostream& err) {
    const LabeledGraph g = build_ms(read_spec_file(o.file));
    if (g.num_states() == 0) {
        err << "warning: the shift is empty; the presentation has no states\n";
    }
    const std::string dot = to_dot(g);
    if (o.dot.empty()) {
        out << dot;
        return kOk;
    }
    std::ofstream file(o.dot);
    if (!file) {
        throw Error("usage", "cannot write " + o.dot);
    }
    file << dot;
    out << "states " << g.num_states() << ", edges " << g.num_edges() << " -> " << o.dot << "\n";
    return kOk;
}

int cmd_family(const Options& o, std::ostream& out) {
    if (o.family == "xk") {
        out << emit_spec(xk_spec(o.k));
    } else {
        out << emit_spec(factorial_window_spec(o.k, o.force));
    }
    return kOk;
}

/// Shortlex-first primitive block whose periodic point lies in exactly one of the shifts.
std::optional<std::pair<Word, bool>> periodic_witness(const PftSpec& a, const PftSpec& b, std::size_t max_period) {
    const MembershipTester ta(a);
    const MembershipTester tb(b);
    for (std::size_t p = 1; p <= max_period; ++p) {
        std::optional<std::pair<Word, bool>> found;
        for_each_necklace(a.q(), p, [&](const Word& v) {
            if (found || primitive_period(v.view()) != p) {
                return;
            }
            const PeriodicWord w(v);
            const bool in_a = ta.contains(w);
            if (in_a != tb.contains(w)) {
                found.emplace(v, in_a);
            }
        });
        if (found) {
            return found;
        }
    }
    return std::nullopt;
}

int cmd_equal(const Options& o, std::ostream& out) {
    const PftSpec a = read_spec_file(o.file);
    const PftSpec b = read_spec_file(o.file_b);
    if (a.alphabet() != b.alphabet()) {
        throw Error("alphabet", "the two specs use different alphabets");
    }
    const LabeledGraph ga = build_ms(a);
    const LabeledGraph gb = build_ms(b);
    const auto block = separating_block(ga, gb);
    Report r;
    r["equal"] = !block.has_value();
    if (block) {
        const bool in_a = blocks_of_length(ga, block->size()).words.count(*block) != 0;
        r["separating_block"] = block->to_string(a.alphabet());
        r["block_in"] = in_a ? o.file : o.file_b;
        const auto w = periodic_witness(a, b, o.max_block);
        if (w) {
            r["periodic_witness"] = "(" + w->first.to_string(a.alphabet()) + ")^inf";
            r["witness_in"] = w->second ? o.file : o.file_b;
        } else {
            r["periodic_witness"] = "none with period <= " + std::to_string(o.max_block);
        }
    }
    out << render(r, parse_format(o.format));
    return block ? kFailure : kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto results = run_suite(o.suite);
    const Format format = parse_format(o.format);
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.passed;
    }
    if (format == Format::json_like) {
        out << render(verify_report(results), format);
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << ": " << r.detail << "\n";
        }
    }
    return ok ? kOk : kFailure;
}

int exit_code_for(const Error& e) {
    const std::string& c = e.code();
    return c == "parse" || c == "usage" || c == "spec" || c == "alphabet" ? kUsage : kFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Periodic-finite-type shift toolkit", "pft"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text|json-like")->capture_default_str();
    };
    auto add_bounds = [&](CLI::App* c) {
        c->add_option("--max-period", o.max_period, "largest period searched")->capture_default_str();
        c->add_option("--max-len", o.max_len, "longest SFT description tried")->capture_default_str();
        c->add_option("--budget", o.budget, "phase-0 pool size limit for descriptive search")->capture_default_str();
    };

    auto* normalize = app.add_subcommand("normalize", "rewrite a spec into (F0, {}, ..., {}) normal form");
    normalize->add_option("file", o.file)->required();
    normalize->add_flag("--complete", o.complete, "add every word forced out by F0");

    auto* build = app.add_subcommand("build", "MS presentation as DOT");
    build->add_option("file", o.file)->required();
    build->add_option("--dot", o.dot, "write DOT here instead of stdout");

    auto* analyze = app.add_subcommand("analyze", "irreducibility, per, entropy, characteristic polynomial, periods");
    analyze->add_option("file", o.file)->required();
    add_bounds(analyze);
    add_format(analyze);

    auto* periods = app.add_subcommand("periods", "sequential, graphical and descriptive periods");
    periods->add_option("file", o.file)->required();
    add_bounds(periods);
    add_format(periods);

    auto* family = app.add_subcommand("family", "generate X_k (xk) or the k!-window shift (windows, alias thm8)");
    family->add_option("kind", o.family)->required()->check(CLI::IsMember({"xk", "windows", "thm8"}));
    family->add_option("--k", o.k)->capture_default_str()->check(CLI::PositiveNumber);
    family->add_flag("--force", o.force, "allow windows beyond the desk-scale limit");

    auto* equal = app.add_subcommand("equal", "decide equality of two shifts");
    equal->add_option("file_a", o.file)->required();
    equal->add_option("file_b", o.file_b)->required();
    equal->add_option("--max-block", o.max_block, "longest period tried for a periodic witness")->capture_default_str();
    add_format(equal);

    auto* verify = app.add_subcommand("verify", "run acceptance suites");
    verify->add_option("--suite", o.suite, "suite name or all")->capture_default_str();
    add_format(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*normalize) {
            return cmd_normalize(o, out);
        }
        if (*build) {
            return cmd_build(o, out, err);
        }
        if (*analyze) {
            out << render(analysis_report(read_spec_file(o.file), o.bounds()), parse_format(o.format));
            return kOk;
        }
        if (*periods) {
            const PftSpec spec = read_spec_file(o.file);
            out << render(periods_report(spec, period_triple(spec, o.bounds())), parse_format(o.format));
            return kOk;
        }
        if (*family) {
            return cmd_family(o, out);
        }
        if (*equal) {
            return cmd_equal(o, out);
        }
        return cmd_verify(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
}

} // namespace pft::cli
