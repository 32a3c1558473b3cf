#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "twistlab/configuration.hpp"
#include "twistlab/involutions.hpp"
#include "twistlab/symplectic.hpp"
#include "twistlab/word.hpp"

namespace twistlab {

// Dense square matrix over Q, row-major.
class RationalMatrix {
public:
    explicit RationalMatrix(std::size_t n = 0) : n_(n), a_(n * n) {}
    RationalMatrix(std::size_t n, const std::vector<long>& row_major);

    std::size_t size() const noexcept { return n_; }
    mpq_class& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const mpq_class& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_symmetric() const;

private:
    std::size_t n_;
    std::vector<mpq_class> a_;
};

// #positive - #negative of a symmetric form, by congruence diagonalization over Q.
// Throws ContractError if Q is not symmetric.
int signature_of_form(RationalMatrix q);

// Meyer's cocycle: signature of the symmetrized form
// q((x,y),(x',y')) = <x + y, (I - B) y'> on V = {(x,y) : (A^-1 - I) x + (B - I) y = 0}.
// Throws ContractError unless A, B are symplectic on one space.
int meyer_tau(const SpMatrix& a, const SpMatrix& b);

// Ordered vanishing cycles; the monodromy is T(v1) T(v2) ... T(vn).
struct Factorization {
    SymplecticSpace space;
    std::vector<HomologyClass> cycles;

    static Factorization from_word(const TwistWord& w, const CycleConfiguration& cfg);
    SpMatrix product() const;
    std::size_t size() const noexcept { return cycles.size(); }
};

struct SignatureResult {
    int sigma = 0;
    std::vector<int> contributions;  // one per vanishing cycle, in factorization order
};

// Sum over k of tau(T(v1)...T(v(k-1)), T(vk)).
// Throws SeparatingCycleUnsupported on a zero class, NotAFibrationOverSphere if the
// product is not the identity.
SignatureResult lf_signature(const Factorization& f);

// Contributions only, with no check that the product is trivial.
SignatureResult accumulate_signature(const Factorization& f);

int euler_characteristic(int g, int n);

struct LFInvariants {
    int g = 0;
    int n = 0;
    int chi = 0;
    int sigma = 0;
    int c1sq = 0;
    mpq_class chi_h;
    std::vector<int> contributions;

    bool chi_h_integral() const { return chi_h.get_den() == 1; }
};

LFInvariants invariants_of(const Factorization& f);

struct ThetaInvariants {
    ThetaParams params;
    int h = 0;
    int k = 0;
    int w = 0;
    LFInvariants inv;
    // Comparisons with the closed forms; reported, also asserted by the tests.
    bool sigma_closed_form = false;  // sigma == -4(h+1)
    bool c1sq_closed_form = false;   // c1sq == -4(g-1)
    bool chi_h_closed_form = false;  // chi_h == 1 - k/2
};

// Invariants of the fibration with monodromy word theta^2.
// Throws ConfigurationError if chi_h is not an integer.
ThetaInvariants invariants_bundle(const ThetaParams& p);

// (v_pos, v_pos+1) -> (v_pos+1, T(v_pos+1)^-1 v_pos); pos is one-based, 1 <= pos < n.
Factorization hurwitz_move(const Factorization& f, std::size_t pos);
// Moves the first k cycles to the end.
Factorization rotate(const Factorization& f, std::size_t k);

}  // namespace twistlab
