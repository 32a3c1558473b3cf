#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/symplectic.hpp"

namespace twistlab {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::size_t failures() const;
};

using CheckSink = std::function<void(const CheckResult&)>;

// Suite names: relations, involutions, derivations, cocycle.
std::vector<std::string> suite_names();
// Throws ParameterError for an unknown name. The sink, if set, sees each check as it finishes.
SuiteReport run_suite(std::string_view name, const CheckSink& sink = {});

// Random element of Sp(2g, Z) as a product of `length` transvections about classes
// with coordinates in [-1, 1].
SpMatrix random_symplectic(SymplecticSpace sp, std::mt19937_64& rng, int length = 6);

struct CocycleStats {
    int triples = 0;
    int identity_failures = 0;
    int conjugation_failures = 0;
    int unit_failures = 0;
};

// Cocycle identity, conjugation invariance and tau(I, .) = tau(., I) = 0.
CocycleStats check_cocycle(int genus, int triples, std::uint64_t seed);

}  // namespace twistlab
