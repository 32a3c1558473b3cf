#include "twistlab/suites.hpp"

#include <algorithm>
#include <sstream>

#include "twistlab/derivation.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/involutions.hpp"
#include "twistlab/lefschetz.hpp"
#include "twistlab/rewrite.hpp"

namespace twistlab {

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::vector<std::string> suite_names() { return {"relations", "involutions", "derivations", "cocycle"}; }

SpMatrix random_symplectic(SymplecticSpace sp, std::mt19937_64& rng, int length) {
    std::uniform_int_distribution<int> coord(-1, 1);
    std::uniform_int_distribution<int> sign(0, 1);
    SpMatrix m(sp);
    for (int t = 0; t < length; ++t) {
        std::vector<Int> c(static_cast<std::size_t>(sp.dimension()));
        for (auto& v : c) v = coord(rng);
        multiply_by_transvection(m, HomologyClass(sp, std::move(c)), sign(rng) ? 1 : -1);
    }
    return m;
}

CocycleStats check_cocycle(int genus, int triples, std::uint64_t seed) {
    const SymplecticSpace sp(genus);
    std::mt19937_64 rng(seed);
    CocycleStats st;
    const SpMatrix id(sp);
    for (int t = 0; t < triples; ++t) {
        const SpMatrix a = random_symplectic(sp, rng);
        const SpMatrix b = random_symplectic(sp, rng);
        const SpMatrix c = random_symplectic(sp, rng);
        ++st.triples;
        if (meyer_tau(a, b) + meyer_tau(a * b, c) != meyer_tau(a, b * c) + meyer_tau(b, c)) ++st.identity_failures;
        const SpMatrix cinv = c.symplectic_inverse();
        if (meyer_tau(c * a * cinv, c * b * cinv) != meyer_tau(a, b)) ++st.conjugation_failures;
        if (meyer_tau(id, a) != 0 || meyer_tau(a, id) != 0) ++st.unit_failures;
    }
    return st;
}

namespace {

class Collector {
public:
    Collector(std::string suite, const CheckSink& sink) : sink_(sink) { report_.suite = std::move(suite); }

    void check(std::string name, bool ok, std::string detail = {}) {
        report_.checks.push_back({std::move(name), ok, std::move(detail)});
        if (sink_) sink_(report_.checks.back());
    }

    // Runs f, turning exceptions into failed checks.
    template <class F>
    void guarded(const std::string& name, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            check(name, false, std::string("exception: ") + e.what());
        }
    }

    SuiteReport take() { return std::move(report_); }

private:
    const CheckSink& sink_;
    SuiteReport report_;
};

void relations_suite(Collector& out) {
    for (int g = 1; g <= 6; ++g) {
        out.guarded("chain relations g=" + std::to_string(g), [&] {
            const auto cfg = standard_chain_classes(g);
            const unsigned top = static_cast<unsigned>(2 * g + 1);
            int bad = 0, total = 0;
            for (unsigned i = 1; i <= top; ++i)
                for (unsigned j = i + 1; j <= top; ++j) {
                    const TwistWord a({TwistSymbol::c(i)}), b({TwistSymbol::c(j)});
                    ++total;
                    const bool ok = j - i > 1 ? homology_shadow_equal(a * b, b * a, cfg)
                                              : homology_shadow_equal(a * b * a, b * a * b, cfg);
                    bad += ok ? 0 : 1;
                }
            out.check("chain relations g=" + std::to_string(g), bad == 0,
                      std::to_string(total - bad) + "/" + std::to_string(total) + " commute/braid relations");
        });
        out.guarded("chain special case g=" + std::to_string(g), [&] {
            const auto cfg = standard_chain_classes(g);
            // (c1 c2)^6 is a twist about a curve bounding the c1 c2 torus; for g >= 2 it is
            // separating, for g = 1 it is the identity.
            out.check("chain special case g=" + std::to_string(g),
                      word_matrix(parse_word("(12)^6"), cfg).is_identity() &&
                          homology_shadow_equal(parse_word("(12)^6"), parse_word("(21)^6"), cfg));
        });
    }
    for (int g = 2; g <= 6; ++g) {
        out.guarded("hyperelliptic relations g=" + std::to_string(g), [&] {
            const auto cfg = standard_chain_classes(g);
            TwistWord chain_odd, chain_even;
            for (int j = 1; j <= 2 * g + 1; ++j) chain_odd.push_back(TwistSymbol::c(static_cast<unsigned>(j)));
            for (int j = 1; j <= 2 * g; ++j) chain_even.push_back(TwistSymbol::c(static_cast<unsigned>(j)));
            const bool a = word_matrix(chain_odd.power(2 * g + 2), cfg).is_identity();
            const bool b = word_matrix(chain_even.power(4 * g + 2), cfg).is_identity();
            const auto i = hyperelliptic_word(g);
            const bool c = (word_matrix(i.word, cfg) * word_matrix(i.word, cfg)).is_identity();
            out.check("hyperelliptic relations g=" + std::to_string(g), a && b && c,
                      "(c1..c2g+1)^(2g+2), (c1..c2g)^(4g+2), i^2");
        });
    }
    out.guarded("conjugation lemma", [&] {
        const auto cfg = s_configuration_genus2();
        struct Case {
            const char* target;
            const char* f;
        };
        int bad = 0;
        for (auto [t, f] : {Case{"c5", "1234"}, Case{"c4", "1123"}, Case{"c3", "2112"}, Case{"c1", ""}}) {
            const TwistWord fw = parse_word(f);
            const TwistWord e = conjugate_expand(parse_word(t)[0], fw, cfg);
            const auto want = transvection(word_matrix(fw, cfg) * cfg.at(t));
            bad += word_matrix(e, cfg) == want ? 0 : 1;
        }
        out.check("conjugation lemma", bad == 0, "t_f(a) = f t_a f^-1 on 4 cases");
    });
    out.guarded("s words", [&] {
        const auto cfg = s_configuration_genus2();
        const auto s = s_words_genus2();
        const bool eq = homology_shadow_equal(s.s, s.s_rewritten, cfg) &&
                        homology_shadow_equal(parse_word("b0 b1 b2 c"), s.s, cfg);
        const SpMatrix m = word_matrix(s.s, cfg);
        const bool sq = (m * m).is_identity() && word_matrix(s.s_squared, cfg).is_identity();
        const SpMatrix i = word_matrix(hyperelliptic_word(2).word, cfg);
        const SpMatrix si = m * i;
        const bool comm = si * m == m * si && si * i == i * si;
        out.check("s words agree", eq, "123451234123121 = 121321432154321 = b0 b1 b2 c");
        out.check("s squared is identity", sq);
        out.check("s and i commute", comm);
    });
}

void involutions_suite(Collector& out) {
    for (int g = 2; g <= 10; ++g) {
        out.guarded("hyperelliptic -Id g=" + std::to_string(g), [&] {
            const auto w = hyperelliptic_word(g);
            const auto m = word_matrix(w.word, w.config);
            out.check("hyperelliptic -Id g=" + std::to_string(g),
                      m.is_negative_identity() && w.word.size() == static_cast<std::size_t>(4 * g + 2));
        });
    }
    for (int h = 2; h <= 8; ++h)
        for (int k = 2; k <= 8; k += 2)
            for (int l = 1; l < h; ++l) {
                const ThetaParams p{l, k, h - l};
                out.guarded("theta " + p.label(), [&] {
                    const auto w = theta_word(p);
                    const auto rep = validate_involution(w);
                    const bool len = w.word.size() == static_cast<std::size_t>(4 * h + k + 2);
                    std::string failed;
                    for (const auto& c : rep.checks)
                        if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
                    out.check("theta " + p.label(), rep.passed && len,
                              rep.passed ? "g=" + std::to_string(p.g()) + " |theta|=" + std::to_string(w.word.size())
                                         : "failed: " + failed);
                });
            }
    out.guarded("s involution", [&] {
        const auto cfg = s_configuration_genus2();
        const auto rep = validate_involution({s_words_genus2().s, cfg, InvolutionKind::s});
        out.check("s involution", rep.passed);
    });
}

void derivations_suite(Collector& out) {
    for (const auto& sh : shipped_scripts()) {
        const std::string name(sh.file);
        out.guarded(name, [&] {
            const auto script = parse_script(sh.text, name);
            const auto shadow = replay_shadow_configuration(shadow_genus_for(script));
            ReplayContext ctx;
            ctx.shadow = &shadow;
            const auto res = replay(script, ctx);
            out.check(name, true,
                      std::to_string(script.steps.size()) + " steps, final " +
                          format_word(res.final_word, WordStyle::compact));
        });
    }
}

void cocycle_suite(Collector& out) {
    for (int g = 1; g <= 3; ++g) {
        out.guarded("cocycle g=" + std::to_string(g), [&] {
            const auto st = check_cocycle(g, 40, 0x5eed0000u + static_cast<unsigned>(g));
            std::ostringstream d;
            d << st.triples << " triples, failures: identity " << st.identity_failures << ", conjugation "
              << st.conjugation_failures << ", unit " << st.unit_failures;
            out.check("cocycle g=" + std::to_string(g),
                      st.identity_failures + st.conjugation_failures + st.unit_failures == 0, d.str());
        });
    }
    out.guarded("torus (c1 c2)^6", [&] {
        const auto cfg = standard_chain_classes(1);
        const auto inv = invariants_of(Factorization::from_word(parse_word("(12)^6"), cfg));
        out.check("torus (c1 c2)^6", inv.sigma == -8 && inv.chi == 12 && inv.c1sq == 0,
                  "sigma " + std::to_string(inv.sigma) + ", chi " + std::to_string(inv.chi) + ", c1^2 " +
                      std::to_string(inv.c1sq));
    });
}

}  // namespace

SuiteReport run_suite(std::string_view name, const CheckSink& sink) {
    Collector out{std::string(name), sink};
    if (name == "relations") relations_suite(out);
    else if (name == "involutions") involutions_suite(out);
    else if (name == "derivations") derivations_suite(out);
    else if (name == "cocycle") cocycle_suite(out);
    else throw ParameterError("unknown suite '" + std::string(name) + "'");
    return out.take();
}

}  // namespace twistlab
