#include "twistlab/registry.hpp"

#include <cstdlib>

#include "twistlab/errors.hpp"

namespace twistlab {

IntersectionDatum IntersectionDatum::from_count(int n) {
    if (n < 0) throw ParameterError("geometric intersection must be non-negative");
    if (n == 0) return {Contact::disjoint, 0};
    if (n == 1) return {Contact::one_point, 1};
    return {Contact::other, n};
}

std::string IntersectionDatum::describe() const {
    switch (kind) {
        case Contact::disjoint: return "disjoint";
        case Contact::one_point: return "one-point";
        case Contact::other: return "other(" + std::to_string(count) + ")";
    }
    return "?";
}

namespace {

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

void CurveRegistry::declare(const std::string& a, const std::string& b, IntersectionDatum d) {
    if (a == b && d.kind != Contact::disjoint)
        throw ConfigurationError("self-pair " + a + " must be declared disjoint");
    declared_[ordered(a, b)] = d;
}

std::optional<IntersectionDatum> CurveRegistry::lookup(const TwistSymbol& a, const TwistSymbol& b) const {
    if (a.same_curve(b)) return IntersectionDatum{};
    if (auto it = declared_.find(ordered(a.key(), b.key())); it != declared_.end()) return it->second;
    if (chain_defaults_ && a.family == b.family && (a.family == Family::c || a.family == Family::sigma)) {
        const long d = std::labs(static_cast<long>(a.index) - static_cast<long>(b.index));
        return d == 1 ? IntersectionDatum{Contact::one_point, 1} : IntersectionDatum{};
    }
    return std::nullopt;
}

std::vector<std::pair<std::pair<std::string, std::string>, IntersectionDatum>> CurveRegistry::entries() const {
    return {declared_.begin(), declared_.end()};
}

}  // namespace twistlab
