#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/configuration.hpp"
#include "twistlab/rewrite.hpp"
#include "twistlab/word.hpp"

namespace twistlab {

struct ScriptStep {
    Move move;
    std::size_t line = 0;
};

// Line format:
//   start <word>
//   commute <pos> | braid <pos> | cancel <pos> | insert <pos> <symbol>
//   subst <pos> <relation> forward|backward
//   expect <word>          (last directive)
// '#' starts a comment line.
struct DerivationScript {
    std::string name;
    TwistWord start;
    std::vector<ScriptStep> steps;
    TwistWord expected;
};

DerivationScript parse_script(std::string_view text, std::string name = {});
DerivationScript load_script(const std::string& path);

struct ReplayContext {
    CurveRegistry registry = CurveRegistry::chain_defaults();
    RelationTable relations = RelationTable::defaults();
    // When set, every step is checked to preserve word_matrix.
    const CycleConfiguration* shadow = nullptr;
};

struct ReplayResult {
    TwistWord final_word;
    std::vector<TwistWord> trace;  // word after each step
};

// Throws IllegalMove carrying the one-based step index, or DerivationMismatch.
ReplayResult replay(const DerivationScript& script, const ReplayContext& ctx = {});

// Genus-g chain classes for c1..c(2g+1), s_i bound to the class of c_i, and the
// separating curve c of the relation table bound to zero.
CycleConfiguration replay_shadow_configuration(int genus);
// Smallest genus whose chain covers every c- and s-index in the script.
int shadow_genus_for(const DerivationScript& script);

struct ShippedScript {
    std::string_view file;
    std::string_view text;
};

// Scripts compiled into the library from core/derivations/.
std::span<const ShippedScript> shipped_scripts();

}  // namespace twistlab
