#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "twistlab/derivation.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/involutions.hpp"
#include "twistlab/lefschetz.hpp"
#include "twistlab/reference_tables.hpp"
#include "twistlab/suites.hpp"

namespace twistlab::cli {

namespace {

const std::map<std::string, Format> kFormats{{"text", Format::text}, {"csv", Format::csv}, {"kv", Format::kv}};

enum class StreamStyle { inline_, csv };
const std::map<std::string, StreamStyle> kStreams{{"inline", StreamStyle::inline_}, {"csv", StreamStyle::csv}};

std::string stream_text(const std::vector<int>& s, StreamStyle st) {
    return st == StreamStyle::csv ? render_stream_csv(s) : render_stream(s);
}

std::string render_invariants(const ThetaInvariants& t, Format fmt, StreamStyle st) {
    const auto& p = t.params;
    const auto& inv = t.inv;
    std::ostringstream o;
    const std::string stream = stream_text(inv.contributions, st);
    switch (fmt) {
        case Format::text:
            o << "(l,k,r) = " << p.label() << '\n'
              << "h = " << t.h << "\nk = " << t.k << "\ng = " << inv.g << "\nw = " << t.w << '\n'
              << "sigma = " << inv.sigma << "\nchi = " << inv.chi << "\nc1^2 = " << inv.c1sq
              << "\nchi_h = " << inv.chi_h.get_str() << '\n'
              << "sigma = -4(h+1): " << (t.sigma_closed_form ? "yes" : "no") << '\n'
              << "c1^2 = -4(g-1): " << (t.c1sq_closed_form ? "yes" : "no") << '\n'
              << "chi_h = 1-k/2: " << (t.chi_h_closed_form ? "yes" : "no") << '\n'
              << "contributions: " << stream << " = " << inv.sigma << '\n';
            break;
        case Format::csv:
            o << "l,k,r,h,g,w,sigma,chi,c1sq,chi_h,contributions\n"
              << p.l << ',' << p.k << ',' << p.r << ',' << t.h << ',' << inv.g << ',' << t.w << ',' << inv.sigma << ','
              << inv.chi << ',' << inv.c1sq << ',' << inv.chi_h.get_str() << ",\"" << stream << "\"\n";
            break;
        case Format::kv:
            o << "l: " << p.l << "\nk: " << p.k << "\nr: " << p.r << "\nh: " << t.h << "\ng: " << inv.g
              << "\nw: " << t.w << "\nsigma: " << inv.sigma << "\nchi: " << inv.chi << "\nc1sq: " << inv.c1sq
              << "\nchi_h: " << inv.chi_h.get_str() << "\ncontributions: " << stream << '\n';
            break;
    }
    return o.str();
}

struct Output {
    std::string path;
    std::ostream& fallback;

    void write(const std::string& s) const {
        if (path.empty()) {
            fallback << s;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << s;
    }
};

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, Format fmt) {
    std::ostringstream o;
    switch (fmt) {
        case Format::csv:
            o << "h,k,g,w,sigma\n";
            for (const auto& r : rows) o << r.h << ',' << r.k << ',' << r.g << ',' << r.w << ',' << r.sigma << '\n';
            break;
        case Format::text:
            o << std::setw(3) << "h" << std::setw(4) << "k" << std::setw(5) << "g" << std::setw(5) << "w"
              << std::setw(11) << "signature" << '\n';
            for (const auto& r : rows)
                o << std::setw(3) << r.h << std::setw(4) << r.k << std::setw(5) << r.g << std::setw(5) << r.w
                  << std::setw(11) << r.sigma << '\n';
            break;
        case Format::kv:
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                if (i) o << '\n';
                o << "h: " << r.h << "\nk: " << r.k << "\ng: " << r.g << "\nw: " << r.w << "\nsigma: " << r.sigma
                  << '\n';
            }
            break;
    }
    return o.str();
}

std::vector<TableRow> parse_table_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "h,k,g,w,sigma") throw std::runtime_error("table csv: bad header");
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        TableRow r;
        char c1, c2, c3, c4;
        std::istringstream ls(line);
        if (!(ls >> r.h >> c1 >> r.k >> c2 >> r.g >> c3 >> r.w >> c4 >> r.sigma) || c1 != ',' || c2 != ',' ||
            c3 != ',' || c4 != ',')
            throw std::runtime_error("table csv: bad row '" + line + "'");
        std::string rest;
        if (ls >> rest) throw std::runtime_error("table csv: trailing data in '" + line + "'");
        rows.push_back(r);
    }
    return rows;
}

std::vector<TableRow> compute_table(int h_min, int h_max, int k_min, int k_max, int l, bool sweep, unsigned jobs) {
    if (h_min < 2 || h_max < h_min) throw ParameterError("h range must satisfy 2 <= h-min <= h-max");
    if (k_min % 2 || k_max % 2) throw ParameterError("k must be even");
    if (k_min < 2 || k_max < k_min) throw ParameterError("k range must satisfy 2 <= k-min <= k-max");
    if (!sweep && l != 0 && l >= h_min)
        throw ParameterError("l = " + std::to_string(l) + " leaves no right genus for h = " + std::to_string(h_min));

    struct Task {
        int h, k;
    };
    std::vector<Task> tasks;
    for (int h = h_min; h <= h_max; ++h)
        for (int k = k_min; k <= k_max; k += 2) tasks.push_back({h, k});

    auto row_of = [&](const Task& t) {
        std::vector<int> splits;
        if (sweep) {
            for (int a = 1; a < t.h; ++a) splits.push_back(a);
        } else {
            splits.push_back(l == 0 ? 1 : l);
        }
        TableRow row{t.h, t.k, t.h + t.k, 0, 0};
        for (std::size_t i = 0; i < splits.size(); ++i) {
            const auto inv = invariants_bundle({splits[i], t.k, t.h - splits[i]});
            if (i == 0) {
                row.w = inv.w;
                row.sigma = inv.inv.sigma;
            } else if (inv.inv.sigma != row.sigma) {
                throw std::runtime_error("signature depends on the split for h=" + std::to_string(t.h) +
                                         " k=" + std::to_string(t.k));
            }
        }
        return row;
    };

    std::vector<TableRow> rows(tasks.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = row_of(tasks[i]);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned j = 0; j < jobs; ++j)
        workers.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) rows[i] = row_of(tasks[i]);
        }));
    for (auto& w : workers) w.get();
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dehn twist words, involutions and Lefschetz fibration invariants", "twistlab"};
    app.require_subcommand(1);

    Format fmt = Format::text;
    StreamStyle stream = StreamStyle::inline_;
    std::string out_path;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(kFormats));
        sub->add_option("--out", out_path, "Write output to a file instead of stdout");
    };

    ThetaParams p;
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--l", p.l, "Left genus")->required();
        sub->add_option("--k", p.k, "Vertical genus (even)")->required();
        sub->add_option("--r", p.r, "Right genus")->required();
    };

    auto* inv_cmd = app.add_subcommand("invariants", "Invariants of the theta^2 fibration for (l,k,r)");
    add_params(inv_cmd);
    add_common(inv_cmd);
    inv_cmd->add_option("--stream", stream, "Contribution stream style")->transform(CLI::CheckedTransformer(kStreams));

    int h_min = 2, h_max = 2, k_min = 2, k_max = 10, table_l = 0;
    bool sweep = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* table_cmd = app.add_subcommand("table", "Signature table over ranges of h and k");
    table_cmd->add_option("--h-min", h_min, "Smallest horizontal genus h");
    table_cmd->add_option("--h-max", h_max, "Largest horizontal genus h");
    table_cmd->add_option("--k-min", k_min, "Smallest vertical genus k");
    table_cmd->add_option("--k-max", k_max, "Largest vertical genus k");
    table_cmd->add_option("--l", table_l, "Fixed left genus (default 1, so r = h - 1)");
    table_cmd->add_flag("--sweep", sweep, "Compute every split l + r = h and require equal signatures");
    table_cmd->add_option("--jobs", jobs, "Worker threads");
    add_common(table_cmd);

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "Run a validation suite");
    verify_cmd->add_option("suite", suite, "relations | involutions | derivations | cocycle")->required();
    add_common(verify_cmd);

    std::string script_path;
    bool trace = false;
    auto* replay_cmd = app.add_subcommand("replay", "Replay a derivation script");
    replay_cmd->add_option("script", script_path, "Script file")->required()->check(CLI::ExistingFile);
    replay_cmd->add_flag("--trace", trace, "Print the word after every step");
    add_common(replay_cmd);

    std::string word_text, word_file, config_file;
    int hyper_g = 0;
    bool square = false, show_matrix = false;
    auto* word_cmd = app.add_subcommand("word", "Print an involution word, or evaluate a word under a configuration");
    auto* wl = word_cmd->add_option("--l", p.l, "Left genus");
    auto* wk = word_cmd->add_option("--k", p.k, "Vertical genus");
    auto* wr = word_cmd->add_option("--r", p.r, "Right genus");
    word_cmd->add_option("--hyperelliptic", hyper_g, "Hyperelliptic word of this genus");
    word_cmd->add_option("--text", word_text, "Word to evaluate");
    word_cmd->add_option("--file", word_file, "File holding a word to evaluate")->check(CLI::ExistingFile);
    word_cmd->add_option("--config", config_file, "Configuration file for --text/--file")->check(CLI::ExistingFile);
    word_cmd->add_flag("--square", square, "Print theta^2 instead of theta");
    word_cmd->add_flag("--matrix", show_matrix, "Print the homology matrix");
    add_common(word_cmd);

    auto* config_cmd = app.add_subcommand("config", "Write the cycle configuration for (l,k,r)");
    add_params(config_cmd);
    config_cmd->add_option("--out", out_path, "Output file");

    auto* streams_cmd = app.add_subcommand("streams", "Compare contribution streams with the known output blocks");
    add_common(streams_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    const Output sink{out_path, out};
    try {
        if (*inv_cmd) {
            p.validate();
            sink.write(render_invariants(invariants_bundle(p), fmt, stream));
            return ok;
        }
        if (*table_cmd) {
            sink.write(render_table(compute_table(h_min, h_max, k_min, k_max, table_l, sweep, jobs), fmt));
            return ok;
        }
        if (*verify_cmd) {
            const auto names = suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                err << "unknown suite '" << suite << "'; expected one of relations, involutions, derivations, cocycle\n";
                return usage;
            }
            std::ostringstream o;
            const auto rep = run_suite(suite);
            for (const auto& c : rep.checks) {
                if (fmt == Format::csv) o << suite << ',' << (c.passed ? "pass" : "fail") << ",\"" << c.name << "\"\n";
                else if (fmt == Format::kv) o << c.name << ": " << (c.passed ? "pass" : "fail") << '\n';
                else o << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
            }
            if (fmt == Format::text)
                o << suite << ": " << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks passed\n";
            sink.write(o.str());
            return rep.passed() ? ok : failure;
        }
        if (*replay_cmd) {
            const auto script = load_script(script_path);
            const auto shadow = replay_shadow_configuration(shadow_genus_for(script));
            ReplayContext ctx;
            ctx.shadow = &shadow;
            std::ostringstream o;
            try {
                const auto res = replay(script, ctx);
                if (trace)
                    for (std::size_t i = 0; i < res.trace.size(); ++i)
                        o << std::setw(4) << i + 1 << "  " << std::left << std::setw(28)
                          << script.steps[i].move.describe() << std::right << format_word(res.trace[i], WordStyle::compact)
                          << '\n';
                if (fmt == Format::kv)
                    o << "steps: " << script.steps.size() << "\nfinal: " << format_word(res.final_word, WordStyle::compact)
                      << "\nstatus: ok\n";
                else
                    o << script.steps.size() << " steps, every step legal and homology-preserving\nfinal word "
                      << format_word(res.final_word, WordStyle::compact) << '\n';
                sink.write(o.str());
                return ok;
            } catch (const IllegalMove& e) {
                err << "illegal move: " << e.what() << '\n';
                return failure;
            } catch (const DerivationMismatch& e) {
                err << "mismatch: " << e.what() << '\n';
                return failure;
            }
        }
        if (*word_cmd) {
            std::ostringstream o;
            std::optional<TwistWord> w;
            std::optional<CycleConfiguration> cfg;
            if (!word_text.empty() || !word_file.empty()) {
                std::string text = word_text;
                if (!word_file.empty()) {
                    std::ifstream f(word_file);
                    std::stringstream ss;
                    ss << f.rdbuf();
                    text = ss.str();
                }
                w = parse_word(text);
                if (!config_file.empty()) cfg = load_configuration(config_file);
            } else if (hyper_g) {
                auto iw = hyperelliptic_word(hyper_g);
                w = iw.word;
                cfg = iw.config;
            } else {
                if (!*wl || !*wk || !*wr) {
                    err << "word: give --l --k --r, --hyperelliptic <g>, --text or --file\n";
                    return usage;
                }
                auto iw = theta_word(p);
                w = square ? iw.word * iw.word : iw.word;
                cfg = iw.config;
            }
            if (fmt == Format::kv) o << "word: " << format_word(*w) << "\nlength: " << w->size() << '\n';
            else o << format_word(*w) << '\n' << "length " << w->size() << '\n';
            if (show_matrix) {
                if (!cfg) {
                    err << "word: --matrix needs --config\n";
                    return usage;
                }
                o << word_matrix(*w, *cfg);
            }
            sink.write(o.str());
            return ok;
        }
        if (*config_cmd) {
            p.validate();
            const auto cfg = theta_configuration(p);
            const auto rep = validate_involution({theta_word_only(p), cfg, InvolutionKind::theta});
            if (!rep.passed) {
                err << rep.render();
                return failure;
            }
            sink.write(format_configuration(cfg, "theta configuration " + p.label() + ", genus " +
                                                     std::to_string(p.g())));
            return ok;
        }
        if (*streams_cmd) {
            std::ostringstream o;
            for (const auto& ref : reference_streams()) {
                const auto inv = invariants_bundle(ref.params);
                const auto cmp = compare_streams(inv.inv.contributions, ref);
                if (fmt == Format::kv) {
                    o << ref.params.label() << ".sum: " << (cmp.sum_matches ? "match" : "differ") << '\n';
                    o << ref.params.label() << ".entrywise: " << (cmp.same_order ? "identical" : "different") << '\n';
                    o << ref.params.label() << ".reversed: " << (cmp.reversed_order ? "identical" : "different") << '\n';
                } else {
                    o << ref.params.label() << "  " << cmp.summary() << '\n';
                    if (fmt == Format::text) o << "  computed " << render_stream(inv.inv.contributions) << '\n';
                }
            }
            sink.write(o.str());
            return ok;
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
    return usage;
}

}  // namespace twistlab::cli
