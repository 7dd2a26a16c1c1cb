#include "pft/word.hpp"

#include "pft/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace pft {

WordCode checked_pow(std::size_t q, std::size_t n) {
    WordCode result = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (result > std::numeric_limits<WordCode>::max() / q) {
            throw Error("overflow", "q^n does not fit into 64 bits");
        }
        result *= q;
    }
    return result;
}

Alphabet::Alphabet(std::size_t q) {
    if (q < 2) {
        throw Error("alphabet", "alphabet needs at least two symbols");
    }
    glyphs_.reserve(q);
    for (std::size_t i = 0; i < q; ++i) {
        glyphs_.push_back(std::to_string(i));
    }
    // "1" is a prefix of "10" once q > 10; fall back to bracketed names there.
    if (q > 10) {
        for (std::size_t i = 0; i < q; ++i) {
            glyphs_[i] = "<" + std::to_string(i) + ">";
        }
    }
}

Alphabet::Alphabet(std::vector<std::string> glyphs) : glyphs_(std::move(glyphs)) {
    if (glyphs_.size() < 2) {
        throw Error("alphabet", "alphabet needs at least two symbols");
    }
    std::set<std::string> seen;
    for (const auto& g : glyphs_) {
        if (g.empty()) {
            throw Error("alphabet", "empty glyph");
        }
        if (!seen.insert(g).second) {
            throw Error("alphabet", "duplicate glyph '" + g + "'");
        }
    }
    for (const auto& a : glyphs_) {
        for (const auto& b : glyphs_) {
            if (a != b && b.compare(0, a.size(), a) == 0) {
                throw Error("alphabet", "glyph '" + a + "' is a prefix of '" + b + "'");
            }
        }
    }
}

std::vector<Symbol> Alphabet::tokenize(std::string_view text) const {
    std::vector<Symbol> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        bool matched = false;
        for (Symbol s = 0; s < glyphs_.size(); ++s) {
            const auto& g = glyphs_[s];
            if (text.compare(pos, g.size(), g) == 0) {
                out.push_back(s);
                pos += g.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            throw Error("parse", "unknown glyph at offset " + std::to_string(pos) + " in '" +
                                     std::string(text) + "'");
        }
    }
    return out;
}

Word Word::from_digits(std::string_view digits) {
    std::vector<Symbol> s;
    s.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw Error("parse", std::string("not a digit: ") + c);
        }
        s.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(s));
}

Word Word::from_code(WordCode code, std::size_t length, std::size_t q) {
    std::vector<Symbol> s(length);
    for (std::size_t i = length; i-- > 0;) {
        s[i] = static_cast<Symbol>(code % q);
        code /= q;
    }
    return Word(std::move(s));
}

WordCode Word::code(std::size_t q) const {
    WordCode c = 0;
    for (Symbol s : symbols_) {
        c = c * q + s;
    }
    return c;
}

Word Word::sub(std::size_t pos, std::size_t n) const {
    return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    symbols_.begin() + static_cast<std::ptrdiff_t>(pos + n)));
}

Word Word::operator+(const Word& other) const {
    std::vector<Symbol> s = symbols_;
    s.insert(s.end(), other.symbols_.begin(), other.symbols_.end());
    return Word(std::move(s));
}

bool Word::has_prefix(const Word& p) const {
    return p.size() <= size() && std::equal(p.symbols_.begin(), p.symbols_.end(), symbols_.begin());
}

bool Word::has_suffix(const Word& s) const {
    return s.size() <= size() &&
           std::equal(s.symbols_.begin(), s.symbols_.end(), symbols_.end() - static_cast<std::ptrdiff_t>(s.size()));
}

std::size_t Word::weight() const {
    return static_cast<std::size_t>(std::count_if(symbols_.begin(), symbols_.end(), [](Symbol s) { return s != 0; }));
}

std::string Word::to_string(const Alphabet& alphabet) const {
    std::string out;
    for (Symbol s : symbols_) {
        out += alphabet.glyph(s);
    }
    return out;
}

std::string Word::digits() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) {
        out.push_back(static_cast<char>('0' + s));
    }
    return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) {
        return a.size() <=> b.size();
    }
    return a.symbols_ <=> b.symbols_;
}

void for_each_word(std::size_t q, std::size_t n, const std::function<void(const Word&)>& fn) {
    const WordCode count = checked_pow(q, n);
    for (WordCode c = 0; c < count; ++c) {
        fn(Word::from_code(c, n, q));
    }
}

std::vector<Word> all_words(std::size_t q, std::size_t n) {
    std::vector<Word> out;
    for_each_word(q, n, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::size_t primitive_period(std::span<const Symbol> block) {
    const std::size_t n = block.size();
    if (n == 0) {
        return 0;
    }
    // KMP failure function; n - border is the smallest period, primitive iff it divides n.
    std::vector<std::size_t> fail(n + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && block[i] != block[k]) {
            k = fail[k];
        }
        if (block[i] == block[k]) {
            ++k;
        }
        fail[i + 1] = k;
    }
    const std::size_t d = n - fail[n];
    return n % d == 0 ? d : n;
}

PeriodicWord::PeriodicWord(Word block) : block_(std::move(block)) {
    if (block_.empty()) {
        throw Error("periodic-word", "repeating block must be non-empty");
    }
}

Symbol PeriodicWord::at(std::int64_t i) const {
    const auto p = static_cast<std::int64_t>(block_.size());
    return block_[static_cast<std::size_t>(((i % p) + p) % p)];
}

PeriodicWord PeriodicWord::rotated(std::int64_t s) const {
    std::vector<Symbol> out(block_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = at(static_cast<std::int64_t>(i) + s);
    }
    return PeriodicWord(Word(std::move(out)));
}

Word subword_at(const PeriodicWord& w, std::int64_t i, std::size_t n) {
    std::vector<Symbol> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = w.at(i + static_cast<std::int64_t>(k));
    }
    return Word(std::move(out));
}

void for_each_necklace(std::size_t q, std::size_t n, const std::function<void(const Word&)>& fn) {
    if (n == 0) {
        return;
    }
    // Fredricksen-Kessler-Maiorana: visits pre-necklaces in lexicographic order;
    // a pre-necklace a_1..a_n is a necklace iff its Lyndon prefix length divides n.
    std::vector<Symbol> a(n + 1, 0);
    const auto top = static_cast<Symbol>(q - 1);
    std::size_t p = 1;
    while (true) {
        if (n % p == 0) {
            fn(Word(std::vector<Symbol>(a.begin() + 1, a.end())));
        }
        std::size_t i = n;
        while (i > 0 && a[i] == top) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++a[i];
        p = i;
        for (std::size_t j = i + 1; j <= n; ++j) {
            a[j] = a[j - p];
        }
    }
}

} // namespace pft
