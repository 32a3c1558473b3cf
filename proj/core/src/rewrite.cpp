#include "twistlab/rewrite.hpp"

#include <deque>
#include <unordered_map>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

std::string at_pos(std::size_t pos) { return " at position " + std::to_string(pos); }

void require_range(const TwistWord& w, std::size_t pos, std::size_t len, const char* move) {
    if (pos > w.size() || len > w.size() - pos)
        throw IllegalMove(std::string(move) + at_pos(pos) + ": needs " + std::to_string(len) +
                          " symbols, word has " + std::to_string(w.size()));
}

std::string pair_label(const TwistSymbol& a, const TwistSymbol& b) { return a.key() + "/" + b.key(); }

}  // namespace

TwistWord free_reduce(const TwistWord& w) {
    std::vector<TwistSymbol> stack;
    for (const auto& s : w) {
        if (!stack.empty() && stack.back().same_curve(s) && stack.back().exponent == -s.exponent) {
            stack.pop_back();
        } else {
            stack.push_back(s);
        }
    }
    return TwistWord(std::move(stack));
}

TwistWord apply_commute(const TwistWord& w, std::size_t pos, const CurveRegistry& reg) {
    require_range(w, pos, 2, "commute");
    const auto& a = w[pos];
    const auto& b = w[pos + 1];
    const auto d = reg.lookup(a, b);
    if (!d) throw IllegalMove("commute" + at_pos(pos) + ": no intersection data declared for " + pair_label(a, b));
    if (d->kind != Contact::disjoint)
        throw IllegalMove("commute" + at_pos(pos) + ": " + pair_label(a, b) + " declared " + d->describe());
    std::vector<TwistSymbol> out = w.symbols();
    std::swap(out[pos], out[pos + 1]);
    return TwistWord(std::move(out));
}

TwistWord apply_braid(const TwistWord& w, std::size_t pos, const CurveRegistry& reg) {
    require_range(w, pos, 3, "braid");
    const auto& a = w[pos];
    const auto& b = w[pos + 1];
    const auto& a2 = w[pos + 2];
    if (!a.same_curve(a2) || a.same_curve(b))
        throw IllegalMove("braid" + at_pos(pos) + ": pattern is not aba");
    if (a.exponent != b.exponent || a.exponent != a2.exponent)
        throw IllegalMove("braid" + at_pos(pos) + ": exponents must all be +1 or all -1");
    const auto d = reg.lookup(a, b);
    if (!d) throw IllegalMove("braid" + at_pos(pos) + ": no intersection data declared for " + pair_label(a, b));
    if (d->kind != Contact::one_point)
        throw IllegalMove("braid" + at_pos(pos) + ": " + pair_label(a, b) + " declared " + d->describe());
    std::vector<TwistSymbol> out = w.symbols();
    out[pos] = b;
    out[pos + 1] = a;
    out[pos + 2] = b;
    return TwistWord(std::move(out));
}

TwistWord apply_cancel(const TwistWord& w, std::size_t pos) {
    require_range(w, pos, 2, "cancel");
    if (!w[pos].same_curve(w[pos + 1]) || w[pos].exponent != -w[pos + 1].exponent)
        throw IllegalMove("cancel" + at_pos(pos) + ": " + format_symbol(w[pos]) + " " + format_symbol(w[pos + 1]) +
                          " is not an inverse pair");
    return w.spliced(pos, 2, TwistWord());
}

TwistWord apply_insert(const TwistWord& w, std::size_t pos, const TwistSymbol& s) {
    if (pos > w.size()) throw IllegalMove("insert" + at_pos(pos) + ": beyond end of word");
    return w.spliced(pos, 0, TwistWord({s, s.inverse()}));
}

void RelationTable::add(Relation r) {
    if (r.name.empty()) throw ConfigurationError("relation needs a name");
    relations_[r.name] = std::move(r);
}

const Relation& RelationTable::at(const std::string& name) const {
    auto it = relations_.find(name);
    if (it == relations_.end()) throw ConfigurationError("unknown relation: " + name);
    return it->second;
}

std::vector<std::string> RelationTable::names() const {
    std::vector<std::string> out;
    for (const auto& [k, _] : relations_) out.push_back(k);
    return out;
}

RelationTable RelationTable::defaults() {
    RelationTable t;
    t.add({"chain21", TwistWord({TwistSymbol::named("c")}), parse_word("(21)^6")});
    t.add({"chain12", TwistWord({TwistSymbol::named("c")}), parse_word("(12)^6")});
    return t;
}

TwistWord substitute_relation(const TwistWord& w, std::size_t pos, const Relation& rel, Direction dir) {
    const TwistWord& from = dir == Direction::forward ? rel.lhs : rel.rhs;
    const TwistWord& to = dir == Direction::forward ? rel.rhs : rel.lhs;
    if (pos > w.size() || from.size() > w.size() - pos || w.subword(pos, from.size()) != from)
        throw IllegalMove("subst" + at_pos(pos) + ": '" + format_word(from) + "' (relation " + rel.name +
                          ") does not occur there");
    return w.spliced(pos, from.size(), to);
}

TwistWord conjugate_expand(const TwistSymbol& target, const TwistWord& f, const CycleConfiguration& cfg) {
    (void)cfg.class_of(target);
    for (const auto& s : f) (void)cfg.class_of(s);
    TwistSymbol t = target;
    t.exponent = 1;
    return f * TwistWord({t}) * f.inverse();
}

bool homology_shadow_equal(const TwistWord& u, const TwistWord& v, const CycleConfiguration& cfg) {
    return word_matrix(u, cfg) == word_matrix(v, cfg);
}

std::string Move::describe() const {
    switch (kind) {
        case MoveKind::commute: return "commute " + std::to_string(pos);
        case MoveKind::braid: return "braid " + std::to_string(pos);
        case MoveKind::cancel: return "cancel " + std::to_string(pos);
        case MoveKind::insert: return "insert " + std::to_string(pos) + " " + format_symbol(symbol);
        case MoveKind::subst:
            return "subst " + std::to_string(pos) + " " + relation + " " +
                   (direction == Direction::forward ? "forward" : "backward");
    }
    return "?";
}

TwistWord apply_move(const TwistWord& w, const Move& m, const CurveRegistry& reg, const RelationTable& rels) {
    switch (m.kind) {
        case MoveKind::commute: return apply_commute(w, m.pos, reg);
        case MoveKind::braid: return apply_braid(w, m.pos, reg);
        case MoveKind::cancel: return apply_cancel(w, m.pos);
        case MoveKind::insert: return apply_insert(w, m.pos, m.symbol);
        case MoveKind::subst: return substitute_relation(w, m.pos, rels.at(m.relation), m.direction);
    }
    throw IllegalMove("unknown move");
}

std::optional<std::vector<Move>> search_rewrite(const TwistWord& from, const TwistWord& to, const CurveRegistry& reg,
                                                SearchOptions opts) {
    struct Node {
        std::string parent;
        Move move;
        int depth;
    };
    const std::string start = format_word(from);
    const std::string goal = format_word(to);
    std::unordered_map<std::string, Node> seen;
    std::deque<TwistWord> queue{from};
    seen.emplace(start, Node{{}, {}, 0});

    auto path_to = [&](std::string key) {
        std::vector<Move> moves;
        while (key != start) {
            const Node& n = seen.at(key);
            moves.push_back(n.move);
            key = n.parent;
        }
        return std::vector<Move>(moves.rbegin(), moves.rend());
    };
    if (start == goal) return std::vector<Move>{};

    while (!queue.empty()) {
        TwistWord w = std::move(queue.front());
        queue.pop_front();
        const std::string key = format_word(w);
        const int depth = seen.at(key).depth;
        if (depth >= opts.max_depth) continue;
        for (std::size_t p = 0; p < w.size(); ++p) {
            for (MoveKind k : {MoveKind::commute, MoveKind::braid, MoveKind::cancel}) {
                Move m;
                m.kind = k;
                m.pos = p;
                TwistWord next;
                try {
                    switch (k) {
                        case MoveKind::commute: next = apply_commute(w, p, reg); break;
                        case MoveKind::braid: next = apply_braid(w, p, reg); break;
                        default: next = apply_cancel(w, p); break;
                    }
                } catch (const IllegalMove&) {
                    continue;
                }
                std::string nk = format_word(next);
                if (seen.count(nk)) continue;
                seen.emplace(nk, Node{key, m, depth + 1});
                if (nk == goal) return path_to(nk);
                if (seen.size() >= opts.max_states) return std::nullopt;
                queue.push_back(std::move(next));
            }
        }
    }
    return std::nullopt;
}

}  // namespace twistlab
