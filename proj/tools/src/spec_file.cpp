#include "spec_file.hpp"

#include "pft/error.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace pft::cli {

namespace {

[[noreturn]] void fail(const std::string& source, const YAML::Mark& mark, const std::string& msg) {
    std::string where = source;
    if (!mark.is_null()) {
        where += ":" + std::to_string(mark.line + 1) + ":" + std::to_string(mark.column + 1);
    }
    throw Error("parse", where + ": " + msg);
}

std::string message(const Error& e) {
    const std::string what = e.what();
    const std::string prefix = e.code() + ": ";
    return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

std::string scalar(const YAML::Node& node, const std::string& source, const std::string& what) {
    if (!node.IsScalar()) {
        fail(source, node.Mark(), what + " must be a string");
    }
    return node.Scalar();
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

} // namespace

PftSpec parse_spec(std::string_view text, const std::string& source) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        fail(source, e.mark, e.msg);
    }
    if (!root.IsMap()) {
        fail(source, root.Mark(), "expected a mapping with keys alphabet, period, forbidden");
    }
    for (const auto& kv : root) {
        const std::string key = kv.first.Scalar();
        if (key != "alphabet" && key != "period" && key != "forbidden") {
            fail(source, kv.first.Mark(), "unknown key '" + key + "'");
        }
    }
    for (const char* key : {"alphabet", "period", "forbidden"}) {
        if (!root[key]) {
            fail(source, root.Mark(), std::string("missing key '") + key + "'");
        }
    }

    const YAML::Node glyph_nodes = root["alphabet"];
    if (!glyph_nodes.IsSequence() || glyph_nodes.size() == 0) {
        fail(source, glyph_nodes.Mark(), "alphabet must be a non-empty list of glyphs");
    }
    std::vector<std::string> glyphs;
    for (const auto& g : glyph_nodes) {
        glyphs.push_back(scalar(g, source, "glyph"));
    }
    std::optional<Alphabet> alphabet;
    try {
        alphabet.emplace(std::move(glyphs));
    } catch (const Error& e) {
        fail(source, glyph_nodes.Mark(), message(e));
    }

    const YAML::Node period_node = root["period"];
    long long period = 0;
    try {
        period = period_node.as<long long>();
    } catch (const YAML::Exception&) {
        fail(source, period_node.Mark(), "period must be an integer");
    }
    if (period < 1) {
        fail(source, period_node.Mark(), "period must be at least 1");
    }

    const YAML::Node schedule_node = root["forbidden"];
    if (!schedule_node.IsSequence()) {
        fail(source, schedule_node.Mark(), "forbidden must be a list of " + std::to_string(period) + " lists");
    }
    if (schedule_node.size() != static_cast<std::size_t>(period)) {
        fail(source, schedule_node.Mark(),
             "forbidden has " + std::to_string(schedule_node.size()) + " phases, period is " + std::to_string(period));
    }
    std::vector<WordSet> schedule;
    for (const auto& phase : schedule_node) {
        if (!phase.IsSequence()) {
            fail(source, phase.Mark(), "each phase must be a list of words");
        }
        WordSet set;
        for (const auto& w : phase) {
            const std::string text_word = scalar(w, source, "word");
            if (text_word.empty()) {
                fail(source, w.Mark(), "empty word");
            }
            try {
                set.insert(Word(alphabet->tokenize(text_word)));
            } catch (const Error& e) {
                fail(source, w.Mark(), message(e));
            }
        }
        schedule.push_back(std::move(set));
    }
    try {
        return PftSpec(*alphabet, static_cast<std::size_t>(period), std::move(schedule));
    } catch (const Error& e) {
        fail(source, root.Mark(), message(e));
    }
}

PftSpec read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("parse", path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), path);
}

std::string emit_spec(const PftSpec& spec) {
    std::ostringstream out;
    out << "alphabet: [";
    const auto& glyphs = spec.alphabet().glyphs();
    for (std::size_t i = 0; i < glyphs.size(); ++i) {
        out << (i ? ", " : "") << quote(glyphs[i]);
    }
    out << "]\nperiod: " << spec.period() << "\nforbidden:\n";
    for (const auto& phase : spec.schedule()) {
        out << "  - [";
        bool first = true;
        for (const auto& w : phase) {
            out << (first ? "" : ", ") << quote(w.to_string(spec.alphabet()));
            first = false;
        }
        out << "]\n";
    }
    return out.str();
}

} // namespace pft::cli
