#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/word.hpp"

namespace twistlab {

enum class Contact { disjoint, one_point, other };

// Geometric intersection number of two curves, classified for rewrite legality.
struct IntersectionDatum {
    Contact kind = Contact::disjoint;
    int count = 0;

    static IntersectionDatum from_count(int n);
    std::string describe() const;

    bool operator==(const IntersectionDatum&) const = default;
};

// Declared intersection data for unordered pairs of curves, keyed by TwistSymbol::key().
// With chain defaults enabled, c-c and s-s pairs follow the chain pattern:
// one point iff |i - j| = 1, disjoint otherwise.
class CurveRegistry {
public:
    explicit CurveRegistry(bool chain_defaults = true) : chain_defaults_(chain_defaults) {}

    static CurveRegistry chain_defaults() { return CurveRegistry(true); }
    static CurveRegistry empty() { return CurveRegistry(false); }

    void declare(const std::string& a, const std::string& b, IntersectionDatum d);

    // Declared entries win over defaults; nullopt when nothing is known.
    std::optional<IntersectionDatum> lookup(const TwistSymbol& a, const TwistSymbol& b) const;

    bool uses_chain_defaults() const noexcept { return chain_defaults_; }
    // Declared entries in a deterministic order.
    std::vector<std::pair<std::pair<std::string, std::string>, IntersectionDatum>> entries() const;

private:
    bool chain_defaults_;
    std::map<std::pair<std::string, std::string>, IntersectionDatum> declared_;
};

}  // namespace twistlab
