#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/configuration.hpp"
#include "twistlab/registry.hpp"
#include "twistlab/word.hpp"

namespace twistlab {

// Positions are zero-based symbol indices.

// Removes adjacent s s^-1 pairs until none remain.
TwistWord free_reduce(const TwistWord& w);

// Swaps the symbols at pos, pos+1; they must be declared disjoint.
TwistWord apply_commute(const TwistWord& w, std::size_t pos, const CurveRegistry& reg);
// aba -> bab at pos for a one-point pair a, b, all exponents +1 or all -1.
TwistWord apply_braid(const TwistWord& w, std::size_t pos, const CurveRegistry& reg);
// Removes the pair s s^-1 (or s^-1 s) at pos, pos+1.
TwistWord apply_cancel(const TwistWord& w, std::size_t pos);
// Inserts s s^-1 before pos (pos may equal the word length).
TwistWord apply_insert(const TwistWord& w, std::size_t pos, const TwistSymbol& s);

struct Relation {
    std::string name;
    TwistWord lhs;
    TwistWord rhs;
};

enum class Direction { forward, backward };

class RelationTable {
public:
    void add(Relation r);
    const Relation& at(const std::string& name) const;
    bool contains(const std::string& name) const { return relations_.count(name) != 0; }
    std::vector<std::string> names() const;

    // The chain relations (c2 c1)^6 = c and (c1 c2)^6 = c for the separating curve c
    // bounding the subsurface of c1, c2.
    static RelationTable defaults();

private:
    std::map<std::string, Relation> relations_;
};

// Replaces an occurrence of one side of the relation at pos by the other.
// forward: lhs -> rhs, backward: rhs -> lhs.
TwistWord substitute_relation(const TwistWord& w, std::size_t pos, const Relation& rel, Direction dir);

// f t_target f^-1 as a word. Every symbol must be bound in cfg.
TwistWord conjugate_expand(const TwistSymbol& target, const TwistWord& f, const CycleConfiguration& cfg);

// word_matrix(u) == word_matrix(v). True is evidence of equality, false refutes it.
bool homology_shadow_equal(const TwistWord& u, const TwistWord& v, const CycleConfiguration& cfg);

enum class MoveKind { commute, braid, cancel, insert, subst };

struct Move {
    MoveKind kind = MoveKind::commute;
    std::size_t pos = 0;
    TwistSymbol symbol;        // insert only
    std::string relation;      // subst only
    Direction direction = Direction::forward;

    std::string describe() const;
};

TwistWord apply_move(const TwistWord& w, const Move& m, const CurveRegistry& reg, const RelationTable& rels);

struct SearchOptions {
    int max_depth = 6;
    std::size_t max_states = 2'000'000;
};

// Breadth-first search over commute, braid and cancel moves. Returns a shortest
// move list, or nullopt if none exists within the bounds.
std::optional<std::vector<Move>> search_rewrite(const TwistWord& from, const TwistWord& to, const CurveRegistry& reg,
                                                SearchOptions opts = {});

}  // namespace twistlab
