#ifndef PFT_WORD_HPP_
#define PFT_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pft {

using Symbol = std::uint32_t;
/// Radix-q encoding of a word, first symbol most significant.
using WordCode = std::uint64_t;

/// q^n, throwing when the result does not fit into a WordCode.
WordCode checked_pow(std::size_t q, std::size_t n);

/**
 * Finite symbol set {0, ..., q-1} together with printable glyphs.
 *
 * Glyphs are used only for I/O. No glyph may be a prefix of another so that
 * words written as concatenated glyphs parse unambiguously.
 */
class Alphabet {
public:
    /// Default glyphs "0", "1", ..., (q-1).
    explicit Alphabet(std::size_t q = 2);
    explicit Alphabet(std::vector<std::string> glyphs);

    std::size_t size() const noexcept { return glyphs_.size(); }
    const std::string& glyph(Symbol s) const { return glyphs_.at(s); }
    const std::vector<std::string>& glyphs() const noexcept { return glyphs_; }

    /// Greedy tokenization of a glyph string; throws pft::Error("parse") on unknown glyphs.
    std::vector<Symbol> tokenize(std::string_view text) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> glyphs_;
};

/// A finite word over symbol indices. Ordering is shortlex (length first, then lexicographic),
/// so words of one length sort by their radix code.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

    /// Parses a string of single-character digits, e.g. Word::from_digits("0110").
    static Word from_digits(std::string_view digits);
    static Word from_code(WordCode code, std::size_t length, std::size_t q);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::span<const Symbol> view() const noexcept { return symbols_; }

    WordCode code(std::size_t q) const;
    Word sub(std::size_t pos, std::size_t n) const;
    Word prefix(std::size_t n) const { return sub(0, n); }
    Word suffix(std::size_t n) const { return sub(size() - n, n); }
    Word operator+(const Word& other) const;
    bool has_prefix(const Word& p) const;
    bool has_suffix(const Word& s) const;
    std::size_t weight() const;  ///< number of non-zero symbols

    std::string to_string(const Alphabet& alphabet) const;
    /// Digits rendering, valid for q <= 10.
    std::string digits() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<Symbol> symbols_;
};

/// Calls fn(word) for every word of Σ^n in increasing code order.
void for_each_word(std::size_t q, std::size_t n, const std::function<void(const Word&)>& fn);
std::vector<Word> all_words(std::size_t q, std::size_t n);

/// Smallest d with w_{i+d} = w_i cyclically (d divides |w|).
std::size_t primitive_period(std::span<const Symbol> block);

/**
 * The bi-infinite sequence (block)^∞ with index 0 at block position 0.
 */
class PeriodicWord {
public:
    explicit PeriodicWord(Word block);

    const Word& block() const noexcept { return block_; }
    std::size_t length() const noexcept { return block_.size(); }
    std::size_t primitive_period() const { return pft::primitive_period(block_.view()); }
    Symbol at(std::int64_t i) const;

    /// σ^s applied to the sequence, represented by the rotated block.
    PeriodicWord rotated(std::int64_t s) const;

    friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;

private:
    Word block_;
};

/// u = w_i w_{i+1} ... w_{i+n-1}; n = 0 yields ε.
Word subword_at(const PeriodicWord& w, std::int64_t i, std::size_t n);

/// Calls fn(block) for every necklace (rotation-minimal word, primitive or not) of length n.
void for_each_necklace(std::size_t q, std::size_t n, const std::function<void(const Word&)>& fn);

} // namespace pft

#endif // PFT_WORD_HPP_
