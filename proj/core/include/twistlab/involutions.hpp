#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/configuration.hpp"
#include "twistlab/symplectic.hpp"
#include "twistlab/word.hpp"

namespace twistlab {

// Left genus l, vertical genus k, right genus r of the involution theta.
struct ThetaParams {
    int l = 1;
    int k = 2;
    int r = 1;

    int h() const noexcept { return l + r; }
    int g() const noexcept { return h() + k; }
    int i() const noexcept { return l; }

    // Throws ParameterError.
    void validate() const;
    std::string label() const;  // "(l,k,r)"

    bool operator==(const ThetaParams&) const = default;
};

enum class InvolutionKind { hyperelliptic, s, theta };

struct InvolutionWord {
    TwistWord word;
    CycleConfiguration config;
    InvolutionKind kind;
};

// Chain classes c1 = y1, c2j = xj, c(2j+1) = yj + y(j+1), c(2g+1) = yg.
CycleConfiguration standard_chain_classes(int g);

// c(2g+1) ... c2 c1 c1 c2 ... c(2g+1), acting as -Id.
InvolutionWord hyperelliptic_word(int g);

struct SWords {
    TwistWord s;          // 123451234123121
    TwistWord s_rewritten;  // 121321432154321
    TwistWord s_squared;  // (54321)^6
};
SWords s_words_genus2();
// Genus-2 chain plus b0, b1, b2 and the separating curve c (class zero).
CycleConfiguration s_configuration_genus2();

// c(2i+2)..c(2h+1) c(2i)..c1 b0 c(2h+1)..c(2i+2) c1..c(2i) b1..bk c(2i+1), with i = l.
TwistWord theta_word_only(const ThetaParams& p);
CycleConfiguration theta_configuration(const ThetaParams& p);
InvolutionWord theta_word(const ThetaParams& p);

struct OracleCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct InvolutionReport {
    bool passed = true;
    std::vector<OracleCheck> checks;
    std::optional<SpMatrix> matrix;
    std::vector<std::string> notes;  // informational, never asserted

    std::string render() const;
};

InvolutionReport validate_involution(const InvolutionWord& w);

// How the involution's matrix moves the chain classes c1..c(2h+1):
// one entry per chain curve, e.g. "c1 -> -c1", or "c3 -> (other)".
std::vector<std::string> chain_action(const InvolutionWord& w);

}  // namespace twistlab
