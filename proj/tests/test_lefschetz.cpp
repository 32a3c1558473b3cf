#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/involutions.hpp"
#include "twistlab/lefschetz.hpp"
#include "twistlab/suites.hpp"

using namespace twistlab;

TEST_CASE("signature of a form") {
    CHECK(signature_of_form(RationalMatrix(2, {2, 0, 0, -3})) == 0);
    CHECK(signature_of_form(RationalMatrix(2, {0, 1, 1, 0})) == 0);
    CHECK(signature_of_form(RationalMatrix(2, {2, 1, 1, 2})) == 2);
    CHECK(signature_of_form(RationalMatrix(3, {0, 0, 0, 0, -1, 0, 0, 0, 0})) == -1);
    CHECK(signature_of_form(RationalMatrix(0)) == 0);
    CHECK_THROWS_AS(signature_of_form(RationalMatrix(2, {1, 2, 3, 4})), ContractError);
}

TEST_CASE("signature agrees with Descartes on random forms") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 7), entry(-3, 3), zero(0, 2);
    for (int t = 0; t < 300; ++t) {
        const auto n = static_cast<std::size_t>(dim(rng));
        RationalMatrix q(n);
        oracle::QMat o(n, std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const int v = zero(rng) == 0 ? 0 : entry(rng);
                q(i, j) = q(j, i) = v;
                o[i][j] = o[j][i] = v;
            }
        CHECK(signature_of_form(q) == oracle::signature_descartes(o));
    }
}

TEST_CASE("Meyer cocycle against the literal definition") {
    std::mt19937_64 rng(5);
    for (int g = 1; g <= 3; ++g) {
        const SymplecticSpace sp(g);
        for (int t = 0; t < 40; ++t) {
            const auto a = random_symplectic(sp, rng);
            const auto b = random_symplectic(sp, rng);
            CHECK(meyer_tau(a, b) == oracle::meyer_tau(a, b));
        }
    }
}

TEST_CASE("Meyer cocycle basics") {
    const SymplecticSpace sp(2);
    std::mt19937_64 rng(8);
    const SpMatrix id(sp);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_symplectic(sp, rng);
        CHECK(meyer_tau(id, a) == 0);
        CHECK(meyer_tau(a, id) == 0);
        CHECK(meyer_tau(a, a.symplectic_inverse()) == 0);
    }
    CHECK(check_cocycle(2, 30, 99).identity_failures == 0);
    CHECK_THROWS_AS(meyer_tau(SpMatrix(sp, std::vector<Int>(16, 1)), id), ContractError);
    CHECK_THROWS_AS(meyer_tau(id, SpMatrix(SymplecticSpace(1))), DimensionError);
}

TEST_CASE("torus fibration") {
    const auto cfg = standard_chain_classes(1);
    const auto f = Factorization::from_word(parse_word("(12)^6"), cfg);
    CHECK(f.size() == 12);
    CHECK(f.product().is_identity());
    const auto inv = invariants_of(f);
    CHECK(inv.sigma == -8);
    CHECK(inv.chi == 12);
    CHECK(inv.c1sq == 0);
    CHECK(inv.chi_h == 1);
    CHECK(inv.contributions.size() == 12);
}

TEST_CASE("theta squared signatures") {
    CHECK(invariants_bundle({1, 2, 1}).inv.sigma == -12);
    CHECK(invariants_bundle({3, 8, 1}).inv.sigma == -20);
    const auto b = invariants_bundle({2, 4, 2});
    CHECK(b.h == 4);
    CHECK(b.w == 44);
    CHECK(b.inv.g == 8);
    CHECK(b.inv.sigma == -20);
    CHECK(b.inv.chi == 16);
    CHECK(b.inv.c1sq == -28);
    CHECK(b.inv.chi_h == -1);
    CHECK(b.sigma_closed_form);
    CHECK(b.c1sq_closed_form);
    CHECK(b.chi_h_closed_form);
    const auto big = invariants_bundle({1, 10, 1});
    CHECK(big.inv.chi_h == -4);
    CHECK(big.sigma_closed_form);
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(1, 12) == 12);
    CHECK(euler_characteristic(4, 4) == -8);
    CHECK(euler_characteristic(3, 0) == -8);
    CHECK(euler_characteristic(8, 44) == 16);
    CHECK_THROWS_AS(euler_characteristic(0, 0), ParameterError);
}

TEST_CASE("signature is invariant under Hurwitz moves and rotation") {
    const auto w = theta_word({1, 2, 1});
    const auto f = Factorization::from_word(w.word.power(2), w.config);
    REQUIRE(f.size() == 24);
    for (std::size_t pos = 1; pos < f.size(); ++pos) {
        const auto m = hurwitz_move(f, pos);
        CHECK(m.product() == f.product());
        CHECK(lf_signature(m).sigma == -12);
    }
    for (std::size_t k = 0; k < f.size(); ++k) CHECK(lf_signature(rotate(f, k)).sigma == -12);
    CHECK_THROWS_AS(hurwitz_move(f, 0), std::out_of_range);
    CHECK_THROWS_AS(hurwitz_move(f, 24), std::out_of_range);
}

TEST_CASE("Hurwitz move formula") {
    const auto cfg = standard_chain_classes(1);
    const auto f = Factorization::from_word(parse_word("1 2"), cfg);
    const auto m = hurwitz_move(f, 1);
    CHECK(m.cycles[0] == f.cycles[1]);
    CHECK(m.cycles[1] == f.cycles[0] - f.cycles[1] * pairing(f.cycles[0], f.cycles[1]));
    CHECK(m.product() == f.product());
}

TEST_CASE("signature error paths") {
    const auto cfg = s_configuration_genus2();
    const auto sep = Factorization::from_word(parse_word("c (12)^6"), cfg);
    try {
        lf_signature(sep);
        FAIL("expected SeparatingCycleUnsupported");
    } catch (const SeparatingCycleUnsupported& e) {
        CHECK(e.index() == 0);
    }
    const auto chain = standard_chain_classes(2);
    CHECK_THROWS_AS(lf_signature(Factorization::from_word(parse_word("1 2 3"), chain)), NotAFibrationOverSphere);
    CHECK(accumulate_signature(Factorization::from_word(parse_word("1 2 3"), chain)).contributions.size() == 3);
    CHECK_THROWS_AS(Factorization::from_word(parse_word("c1^-1"), chain), ContractError);
    const Factorization empty{SymplecticSpace(2), {}};
    CHECK(lf_signature(empty).sigma == 0);
}
