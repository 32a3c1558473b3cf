#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace twistlab {

enum class Family { c, b, sigma, named };

// One signed Dehn twist (or braid generator). Named symbols carry a name and no index.
struct TwistSymbol {
    Family family = Family::c;
    unsigned index = 0;
    std::string name;
    int exponent = 1;

    static TwistSymbol c(unsigned i, int e = 1) { return {Family::c, i, {}, e}; }
    static TwistSymbol b(unsigned i, int e = 1) { return {Family::b, i, {}, e}; }
    static TwistSymbol sigma(unsigned i, int e = 1) { return {Family::sigma, i, {}, e}; }
    static TwistSymbol named(std::string n, int e = 1) { return {Family::named, 0, std::move(n), e}; }

    TwistSymbol inverse() const;
    // Same curve, ignoring the exponent.
    bool same_curve(const TwistSymbol& o) const;
    // Binding key: "c3", "b0", "s4" or the name.
    std::string key() const;

    bool operator==(const TwistSymbol&) const = default;
};

// Symbols in written order. The matrix of a word is the product in written order,
// so the rightmost twist acts first.
class TwistWord {
public:
    TwistWord() = default;
    explicit TwistWord(std::vector<TwistSymbol> symbols) : symbols_(std::move(symbols)) {}

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const TwistSymbol& operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<TwistSymbol>& symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    TwistWord inverse() const;
    TwistWord power(int n) const;
    TwistWord subword(std::size_t pos, std::size_t len) const;
    // Replace len symbols at pos by r.
    TwistWord spliced(std::size_t pos, std::size_t len, const TwistWord& r) const;

    TwistWord operator*(const TwistWord& o) const;
    TwistWord& operator*=(const TwistWord& o);
    void push_back(TwistSymbol s) { symbols_.push_back(std::move(s)); }

    bool operator==(const TwistWord&) const = default;

private:
    std::vector<TwistSymbol> symbols_;
};

// Parses whitespace-separated tokens (c3, b0^-1, s4, named), ( ... )^n groups and
// digit strings such as 123451234123121 (each digit a c-family index). An exponent
// binds to the atom immediately before it, so 1211^-1 is c1 c2 c1 c1^-1.
TwistWord parse_word(std::string_view text);

enum class WordStyle {
    tokens,   // c1 c2^-1 s3
    compact,  // digit shorthand with (..)^n blocks when every symbol is c1..c9
};

std::string format_word(const TwistWord& w, WordStyle style = WordStyle::tokens);
std::string format_symbol(const TwistSymbol& s);

std::ostream& operator<<(std::ostream& os, const TwistWord& w);

}  // namespace twistlab
