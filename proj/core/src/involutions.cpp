#include "twistlab/involutions.hpp"

#include <cstdlib>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

void ThetaParams::validate() const {
    if (k % 2 != 0) throw ParameterError("k must be even, got " + std::to_string(k));
    if (k < 2) throw ParameterError("k must be at least 2, got " + std::to_string(k));
    if (l < 1) throw ParameterError("l must be at least 1, got " + std::to_string(l));
    if (r < 1) throw ParameterError("r must be at least 1, got " + std::to_string(r));
}

std::string ThetaParams::label() const {
    return "(" + std::to_string(l) + "," + std::to_string(k) + "," + std::to_string(r) + ")";
}

namespace {

std::string c_name(int j) { return "c" + std::to_string(j); }

// Chain c1..c(2h+1) on handles 1..h of a possibly larger space.
void bind_chain(CycleConfiguration& cfg, int h) {
    const auto sp = cfg.space();
    cfg.bind(c_name(1), HomologyClass::y(sp, 1));
    for (int j = 1; j <= h; ++j) {
        cfg.bind(c_name(2 * j), HomologyClass::x(sp, j));
        if (j < h) cfg.bind(c_name(2 * j + 1), HomologyClass::y(sp, j) + HomologyClass::y(sp, j + 1));
    }
    cfg.bind(c_name(2 * h + 1), HomologyClass::y(sp, h));
}

}  // namespace

CycleConfiguration standard_chain_classes(int g) {
    CycleConfiguration cfg{SymplecticSpace(g)};
    bind_chain(cfg, g);
    return cfg;
}

InvolutionWord hyperelliptic_word(int g) {
    if (g < 2) throw ParameterError("hyperelliptic word needs genus >= 2, got " + std::to_string(g));
    TwistWord w;
    for (int j = 2 * g + 1; j >= 1; --j) w.push_back(TwistSymbol::c(static_cast<unsigned>(j)));
    for (int j = 1; j <= 2 * g + 1; ++j) w.push_back(TwistSymbol::c(static_cast<unsigned>(j)));
    return {std::move(w), standard_chain_classes(g), InvolutionKind::hyperelliptic};
}

SWords s_words_genus2() {
    return {parse_word("123451234123121"), parse_word("121321432154321"), parse_word("(54321)^6")};
}

CycleConfiguration s_configuration_genus2() {
    CycleConfiguration cfg = standard_chain_classes(2);
    // b0 = t1 t2 t3 t4 (c5), b1 = t1 t1 t2 t3 (c4), b2 = t2 t1 t1 t2 (c3).
    cfg.bind("b0", word_matrix(parse_word("1234"), cfg) * cfg.at("c5"));
    cfg.bind("b1", word_matrix(parse_word("1123"), cfg) * cfg.at("c4"));
    cfg.bind("b2", word_matrix(parse_word("2112"), cfg) * cfg.at("c3"));
    cfg.bind("c", HomologyClass::zero(cfg.space()));
    return cfg;
}

TwistWord theta_word_only(const ThetaParams& p) {
    p.validate();
    const int h = p.h();
    const int i = p.i();
    TwistWord w;
    auto c = [&](int j) { w.push_back(TwistSymbol::c(static_cast<unsigned>(j))); };
    for (int j = 2 * i + 2; j <= 2 * h + 1; ++j) c(j);
    for (int j = 2 * i; j >= 1; --j) c(j);
    w.push_back(TwistSymbol::b(0));
    for (int j = 2 * h + 1; j >= 2 * i + 2; --j) c(j);
    for (int j = 1; j <= 2 * i; ++j) c(j);
    for (int j = 1; j <= p.k; ++j) w.push_back(TwistSymbol::b(static_cast<unsigned>(j)));
    c(2 * i + 1);
    return w;
}

CycleConfiguration theta_configuration(const ThetaParams& p) {
    p.validate();
    const int l = p.l, k = p.k, h = p.h(), m = k / 2;
    const SymplecticSpace sp(p.g());
    CycleConfiguration cfg(sp);
    bind_chain(cfg, h);

    // Handles h+1..h+k carry the vertical part; handle h+a is paired with h+k+1-a.
    auto X = [&](int j) { return HomologyClass::x(sp, j); };
    auto Y = [&](int j) { return HomologyClass::y(sp, j); };
    auto P = [&](int a) { return X(h + a) - X(h + k + 1 - a); };
    auto Q = [&](int a) { return Y(h + a) - Y(h + k + 1 - a); };

    auto left = HomologyClass::zero(sp);
    for (int j = 1; j <= l; ++j) left += X(j) * ((l - j) % 2 == 0 ? 1 : -1);
    auto right = HomologyClass::zero(sp);
    for (int j = l + 1; j <= h; ++j) right += X(j) * ((j - l - 1) % 2 == 0 ? 1 : -1);

    auto b0 = right - left;
    for (int a = 1; a <= m; ++a) b0 += P(a) - Q(a);
    cfg.bind("b0", b0);

    const auto cross = Y(l) - Y(l + 1);
    auto drift = HomologyClass::zero(sp);
    for (int a = 1; a <= m; ++a) {
        cfg.bind("b" + std::to_string(2 * a - 1), cross + drift + P(a));
        cfg.bind("b" + std::to_string(2 * a), cross + drift + Q(a));
        drift += Q(a) - P(a);
    }

    // Pairs involving a b-curve: intersection counts taken as |algebraic intersection|.
    for (int j = 0; j <= k; ++j) {
        const std::string bj = "b" + std::to_string(j);
        for (const auto& [name, cls] : cfg.bindings()) {
            if (name == bj) continue;
            if (name[0] == 'b' && std::stoi(name.substr(1)) > j) continue;
            const auto n = std::llabs(pairing(cfg.at(bj), cls));
            cfg.registry().declare(bj, name, IntersectionDatum::from_count(static_cast<int>(n)));
        }
    }
    return cfg;
}

InvolutionWord theta_word(const ThetaParams& p) {
    return {theta_word_only(p), theta_configuration(p), InvolutionKind::theta};
}

std::string InvolutionReport::render() const {
    std::ostringstream out;
    for (const auto& c : checks)
        out << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    for (const auto& n : notes) out << "note " << n << '\n';
    return out.str();
}

namespace {

void chain_pattern_check(const CycleConfiguration& cfg, InvolutionReport& rep) {
    std::vector<std::pair<int, const HomologyClass*>> chain;
    for (int j = 1; cfg.contains(c_name(j)); ++j) chain.emplace_back(j, &cfg.at(c_name(j)));
    OracleCheck chk{"chain-pattern", true, {}};
    for (std::size_t a = 0; a < chain.size() && chk.passed; ++a) {
        for (std::size_t b = a + 1; b < chain.size(); ++b) {
            const Int v = pairing(*chain[a].second, *chain[b].second);
            const Int want = (b == a + 1) ? 1 : 0;
            if (std::llabs(v) != want) {
                chk.passed = false;
                chk.detail = "<c" + std::to_string(chain[a].first) + ", c" + std::to_string(chain[b].first) +
                             "> = " + std::to_string(v);
                break;
            }
        }
    }
    if (chk.passed) chk.detail = std::to_string(chain.size()) + " chain curves";
    rep.checks.push_back(chk);
}

}  // namespace

InvolutionReport validate_involution(const InvolutionWord& w) {
    InvolutionReport rep;
    const auto& cfg = w.config;
    auto add = [&](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    std::string unbound, zero;
    for (const auto& s : w.word) {
        if (!cfg.contains(s.key())) {
            if (unbound.empty()) unbound = s.key();
        } else if (cfg.class_of(s).is_zero() && zero.empty()) {
            zero = s.key();
        }
    }
    if (!unbound.empty()) {
        add("bound-symbols", false, "unbound symbol " + unbound);
        rep.passed = false;
        return rep;
    }
    add("nonzero-classes", zero.empty(), zero.empty() ? "" : "class of " + zero + " is zero");
    chain_pattern_check(cfg, rep);

    const SpMatrix m = word_matrix(w.word, cfg);
    rep.matrix = m;
    add("symplectic", is_symplectic(m), "");
    add("square-is-identity", (m * m).is_identity(), "");
    if (w.kind == InvolutionKind::hyperelliptic) {
        add("minus-identity", m.is_negative_identity(), "");
    } else {
        const bool trivial = m.is_identity() || m.is_negative_identity();
        add("not-plus-minus-identity", !trivial, trivial ? "matrix is +-I" : "");
    }
    if (w.kind == InvolutionKind::theta) {
        add("theta-squared-word", word_matrix(w.word * w.word, cfg).is_identity(), "");
        const TwistSymbol& last = w.word[w.word.size() - 1];
        OracleCheck chk{"middle-chain-vs-b", true, {}};
        for (unsigned j = 0; cfg.contains("b" + std::to_string(j)); ++j) {
            const Int v = std::llabs(pairing(cfg.class_of(last), cfg.at("b" + std::to_string(j))));
            if (v != 0 && v != 2) {
                chk.passed = false;
                chk.detail = "|<" + last.key() + ", b" + std::to_string(j) + ">| = " + std::to_string(v);
                break;
            }
        }
        rep.checks.push_back(chk);
    }
    for (const auto& c : rep.checks) rep.passed = rep.passed && c.passed;
    for (auto& line : chain_action(w)) rep.notes.push_back(std::move(line));
    return rep;
}

std::vector<std::string> chain_action(const InvolutionWord& w) {
    const auto& cfg = w.config;
    std::vector<std::string> out;
    std::vector<std::pair<std::string, HomologyClass>> chain;
    for (int j = 1; cfg.contains(c_name(j)); ++j) chain.emplace_back(c_name(j), cfg.at(c_name(j)));
    if (chain.empty()) return out;
    const SpMatrix m = word_matrix(w.word, cfg);
    for (const auto& [name, cls] : chain) {
        const HomologyClass img = m * cls;
        std::string target = "(not a chain class)";
        for (const auto& [other, ocls] : chain) {
            if (img == ocls) { target = other; break; }
            if (img == -ocls) { target = "-" + other; break; }
        }
        out.push_back(name + " -> " + target);
    }
    return out;
}

}  // namespace twistlab
