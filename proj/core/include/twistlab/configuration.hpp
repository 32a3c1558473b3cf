#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/registry.hpp"
#include "twistlab/symplectic.hpp"
#include "twistlab/word.hpp"

namespace twistlab {

// Homology classes for named curves on one surface, plus their intersection registry.
class CycleConfiguration {
public:
    explicit CycleConfiguration(SymplecticSpace space, CurveRegistry registry = CurveRegistry::chain_defaults());

    const SymplecticSpace& space() const noexcept { return space_; }
    const CurveRegistry& registry() const noexcept { return registry_; }
    CurveRegistry& registry() noexcept { return registry_; }

    // Rebinding an existing name replaces its class.
    void bind(const std::string& name, HomologyClass cls);
    bool contains(const std::string& name) const;
    const HomologyClass& at(const std::string& name) const;
    const HomologyClass& class_of(const TwistSymbol& s) const { return at(s.key()); }

    // Bindings in insertion order.
    const std::vector<std::pair<std::string, HomologyClass>>& bindings() const noexcept { return bindings_; }

private:
    SymplecticSpace space_;
    CurveRegistry registry_;
    std::vector<std::pair<std::string, HomologyClass>> bindings_;
    std::map<std::string, std::size_t> index_;
};

// Text format:
//   genus <g>
//   defaults chain|none        (optional, chain by default)
//   cycle <name> <2g integers>
//   pair <name> <name> <geometric intersection>
// Blank lines and lines starting with '#' are ignored.
CycleConfiguration parse_configuration(std::string_view text);
CycleConfiguration load_configuration(const std::string& path);
std::string format_configuration(const CycleConfiguration& cfg, std::string_view header_comment = {});

// Product of the twist matrices in written order; inverse twists for negative exponents.
SpMatrix word_matrix(const TwistWord& w, const CycleConfiguration& cfg);

}  // namespace twistlab
