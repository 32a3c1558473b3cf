#include "twistlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "twistlab/errors.hpp"

namespace twistlab {

TwistSymbol TwistSymbol::inverse() const {
    auto s = *this;
    s.exponent = -exponent;
    return s;
}

bool TwistSymbol::same_curve(const TwistSymbol& o) const {
    return family == o.family && index == o.index && name == o.name;
}

std::string TwistSymbol::key() const {
    switch (family) {
        case Family::c: return "c" + std::to_string(index);
        case Family::b: return "b" + std::to_string(index);
        case Family::sigma: return "s" + std::to_string(index);
        case Family::named: return name;
    }
    return name;
}

TwistWord TwistWord::inverse() const {
    std::vector<TwistSymbol> out;
    out.reserve(symbols_.size());
    for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it) out.push_back(it->inverse());
    return TwistWord(std::move(out));
}

TwistWord TwistWord::power(int n) const {
    const TwistWord base = n < 0 ? inverse() : *this;
    TwistWord out;
    for (int i = 0; i < std::abs(n); ++i) out *= base;
    return out;
}

TwistWord TwistWord::subword(std::size_t pos, std::size_t len) const {
    if (pos > symbols_.size() || len > symbols_.size() - pos) throw std::out_of_range("subword out of range");
    return TwistWord(std::vector<TwistSymbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                              symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

TwistWord TwistWord::spliced(std::size_t pos, std::size_t len, const TwistWord& r) const {
    if (pos > symbols_.size() || len > symbols_.size() - pos) throw std::out_of_range("splice out of range");
    std::vector<TwistSymbol> out(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), r.symbols_.begin(), r.symbols_.end());
    out.insert(out.end(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len), symbols_.end());
    return TwistWord(std::move(out));
}

TwistWord TwistWord::operator*(const TwistWord& o) const {
    auto w = *this;
    w *= o;
    return w;
}

TwistWord& TwistWord::operator*=(const TwistWord& o) {
    symbols_.insert(symbols_.end(), o.symbols_.begin(), o.symbols_.end());
    return *this;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    TwistWord parse() {
        TwistWord w = sequence();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("word parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == '*'))
            ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    TwistWord sequence() {
        TwistWord out;
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] == ')') return out;
            out *= item();
        }
    }

    // An atom list where a trailing exponent applies only to the last atom.
    TwistWord item() {
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            TwistWord inner = sequence();
            if (!peek(')')) fail("missing ')'");
            ++pos_;
            return inner.power(exponent());
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::vector<TwistSymbol> digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const unsigned d = static_cast<unsigned>(text_[pos_] - '0');
                if (d == 0) fail("digit shorthand has no c0");
                digits.push_back(TwistSymbol::c(d));
                ++pos_;
            }
            const TwistSymbol last = digits.back();
            digits.pop_back();
            return TwistWord(std::move(digits)) * TwistWord({last}).power(exponent());
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string letters(text_.substr(start, pos_ - start));
            const std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string digits(text_.substr(dstart, pos_ - dstart));
            TwistSymbol sym;
            if (digits.empty()) {
                sym = TwistSymbol::named(letters);
            } else {
                const unsigned idx = static_cast<unsigned>(std::stoul(digits));
                if (letters == "c") sym = TwistSymbol::c(idx);
                else if (letters == "b") sym = TwistSymbol::b(idx);
                else if (letters == "s" || letters == "sigma") sym = TwistSymbol::sigma(idx);
                else sym = TwistSymbol::named(letters + digits);
            }
            return TwistWord({sym}).power(exponent());
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    int exponent() {
        if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
        ++pos_;
        const bool braced = pos_ < text_.size() && text_[pos_] == '{';
        if (braced) ++pos_;
        int sign = 1;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-') sign = -1;
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent needs digits");
        if (pos_ - start > 6) fail("exponent too large");
        const int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (braced) {
            if (pos_ >= text_.size() || text_[pos_] != '}') fail("missing '}'");
            ++pos_;
        }
        return sign * n;
    }
};

bool compact_ok(const TwistWord& w) {
    return std::all_of(w.begin(), w.end(),
                       [](const TwistSymbol& s) { return s.family == Family::c && s.index >= 1 && s.index <= 9; });
}

std::string digits_of(const std::vector<TwistSymbol>& run) {
    std::string out;
    for (const auto& s : run) out += static_cast<char>('0' + s.index);
    return out;
}

// Smallest p with run = block^(size/p); returns size if aperiodic.
std::size_t period(const std::vector<TwistSymbol>& run) {
    const std::size_t n = run.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = run[i] == run[i - p];
        if (ok) return p;
    }
    return n;
}

std::string compact(const TwistWord& w) {
    std::string out;
    bool after_exponent = false;
    std::size_t i = 0;
    while (i < w.size()) {
        const int sign = w[i].exponent;
        std::size_t j = i;
        while (j < w.size() && w[j].exponent == sign) ++j;
        std::vector<TwistSymbol> run(w.symbols().begin() + static_cast<std::ptrdiff_t>(i),
                                     w.symbols().begin() + static_cast<std::ptrdiff_t>(j));
        if (sign < 0) run = TwistWord(run).inverse().symbols();
        const std::size_t p = period(run);
        const std::size_t reps = run.size() / p;
        const std::string block = digits_of(std::vector<TwistSymbol>(run.begin(), run.begin() + static_cast<std::ptrdiff_t>(p)));
        std::string piece;
        bool exponent_written = true;
        if (sign > 0 && reps == 1) {
            piece = block;
            exponent_written = false;
        } else {
            const long e = sign * static_cast<long>(reps);
            piece = (block.size() == 1 ? block : "(" + block + ")") + "^" + std::to_string(e);
        }
        if (after_exponent && std::isdigit(static_cast<unsigned char>(piece[0]))) out += ' ';
        out += piece;
        after_exponent = exponent_written;
        i = j;
    }
    return out;
}

}  // namespace

TwistWord parse_word(std::string_view text) { return Parser(text).parse(); }

std::string format_symbol(const TwistSymbol& s) {
    return s.key() + (s.exponent < 0 ? "^-1" : "");
}

std::string format_word(const TwistWord& w, WordStyle style) {
    if (style == WordStyle::compact && compact_ok(w)) return compact(w);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += format_symbol(w[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TwistWord& w) { return os << format_word(w); }

}  // namespace twistlab
