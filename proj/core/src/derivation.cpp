#include "twistlab/derivation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "twistlab/errors.hpp"
#include "twistlab/involutions.hpp"
#include "shipped_scripts.inc"

namespace twistlab {

namespace {

[[noreturn]] void bad_line(const std::string& script, std::size_t line, const std::string& msg) {
    throw ParseError((script.empty() ? std::string("script") : script) + " line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_pos(std::istringstream& ls, const std::string& script, std::size_t line) {
    long long p = -1;
    if (!(ls >> p) || p < 0) bad_line(script, line, "expected a non-negative position");
    return static_cast<std::size_t>(p);
}

std::string rest_of(std::istringstream& ls) {
    std::string rest;
    std::getline(ls, rest);
    return rest;
}

}  // namespace

DerivationScript parse_script(std::string_view text, std::string name) {
    DerivationScript s;
    s.name = std::move(name);
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    bool have_start = false, have_expect = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (have_expect) bad_line(s.name, lineno, "'expect' must be the last directive");
        if (head == "start") {
            if (have_start) bad_line(s.name, lineno, "duplicate 'start'");
            s.start = parse_word(rest_of(ls));
            have_start = true;
            continue;
        }
        if (head == "expect") {
            s.expected = parse_word(rest_of(ls));
            have_expect = true;
            continue;
        }
        if (!have_start) bad_line(s.name, lineno, "'start' must precede moves");
        ScriptStep step;
        step.line = lineno;
        if (head == "commute") {
            step.move.kind = MoveKind::commute;
        } else if (head == "braid") {
            step.move.kind = MoveKind::braid;
        } else if (head == "cancel") {
            step.move.kind = MoveKind::cancel;
        } else if (head == "insert") {
            step.move.kind = MoveKind::insert;
        } else if (head == "subst") {
            step.move.kind = MoveKind::subst;
        } else {
            bad_line(s.name, lineno, "unknown move '" + head + "'");
        }
        step.move.pos = parse_pos(ls, s.name, lineno);
        if (step.move.kind == MoveKind::insert) {
            std::string tok;
            if (!(ls >> tok)) bad_line(s.name, lineno, "insert needs a symbol");
            TwistWord w = parse_word(tok);
            if (w.size() != 1) bad_line(s.name, lineno, "insert takes exactly one symbol");
            step.move.symbol = w[0];
        } else if (step.move.kind == MoveKind::subst) {
            std::string dir;
            if (!(ls >> step.move.relation >> dir)) bad_line(s.name, lineno, "subst needs <relation> <direction>");
            if (dir == "forward") step.move.direction = Direction::forward;
            else if (dir == "backward") step.move.direction = Direction::backward;
            else bad_line(s.name, lineno, "direction must be forward or backward");
        }
        std::string extra;
        if (ls >> extra) bad_line(s.name, lineno, "trailing text '" + extra + "'");
        s.steps.push_back(std::move(step));
    }
    if (!have_start) throw ParseError("script has no 'start' line");
    if (!have_expect) throw ParseError("script has no final 'expect' line");
    return s;
}

DerivationScript load_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open script " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_script(ss.str(), path);
}

ReplayResult replay(const DerivationScript& script, const ReplayContext& ctx) {
    ReplayResult r;
    r.final_word = script.start;
    std::optional<SpMatrix> reference;
    if (ctx.shadow) reference = word_matrix(script.start, *ctx.shadow);
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        const auto& step = script.steps[i];
        try {
            r.final_word = apply_move(r.final_word, step.move, ctx.registry, ctx.relations);
        } catch (const IllegalMove& e) {
            throw IllegalMove("step " + std::to_string(i + 1) + " (line " + std::to_string(step.line) + ", " +
                                  step.move.describe() + "): " + e.what(),
                              i + 1);
        }
        if (reference && word_matrix(r.final_word, *ctx.shadow) != *reference)
            throw IllegalMove("step " + std::to_string(i + 1) + " (line " + std::to_string(step.line) +
                                  ") changed the homology matrix",
                              i + 1);
        r.trace.push_back(r.final_word);
    }
    if (r.final_word != script.expected)
        throw DerivationMismatch("final word " + format_word(r.final_word, WordStyle::compact) + " differs from expected " +
                                 format_word(script.expected, WordStyle::compact));
    return r;
}

CycleConfiguration replay_shadow_configuration(int genus) {
    CycleConfiguration cfg = standard_chain_classes(genus);
    const auto chain = cfg.bindings();
    for (std::size_t i = 0; i < chain.size(); ++i) cfg.bind("s" + std::to_string(i + 1), chain[i].second);
    cfg.bind("c", HomologyClass::zero(cfg.space()));
    return cfg;
}

int shadow_genus_for(const DerivationScript& script) {
    unsigned top = 1;
    auto scan = [&](const TwistWord& w) {
        for (const auto& s : w)
            if (s.family == Family::c || s.family == Family::sigma) top = std::max(top, s.index);
    };
    scan(script.start);
    scan(script.expected);
    for (const auto& st : script.steps)
        if (st.move.kind == MoveKind::insert) scan(TwistWord({st.move.symbol}));
    // The genus-g chain has 2g+1 curves.
    return std::max(1, static_cast<int>(top) / 2);
}

std::span<const ShippedScript> shipped_scripts() { return kShippedScripts; }

}  // namespace twistlab
