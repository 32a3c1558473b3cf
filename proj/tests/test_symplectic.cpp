#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twistlab/configuration.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/symplectic.hpp"

using namespace twistlab;

namespace {

HomologyClass random_class(SymplecticSpace sp, std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<Int> d(-bound, bound);
    std::vector<Int> v(static_cast<std::size_t>(sp.dimension()));
    for (auto& x : v) x = d(rng);
    return HomologyClass(sp, v);
}

}  // namespace

TEST_CASE("space basics") {
    const SymplecticSpace sp(3);
    CHECK(sp.dimension() == 6);
    CHECK_THROWS_AS(SymplecticSpace(0), ParameterError);
    // J antisymmetric with J^2 = -I.
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            CHECK(sp.gram(i, j) == -sp.gram(j, i));
            Int s = 0;
            for (int t = 0; t < 6; ++t) s += sp.gram(i, t) * sp.gram(t, j);
            CHECK(s == (i == j ? -1 : 0));
        }
}

TEST_CASE("pairing") {
    const SymplecticSpace sp(2);
    const auto x1 = HomologyClass::x(sp, 1), y1 = HomologyClass::y(sp, 1), x2 = HomologyClass::x(sp, 2);
    CHECK(pairing(x1, y1) == 1);
    CHECK(pairing(y1, x1) == -1);
    CHECK(pairing(x1, x2) == 0);
    CHECK_THROWS_AS(pairing(x1, HomologyClass::x(SymplecticSpace(3), 1)), DimensionError);
    CHECK_THROWS_AS(HomologyClass(sp, {1, 2, 3}), DimensionError);
    CHECK(HomologyClass::zero(sp).is_separating());
}

TEST_CASE("transvection examples") {
    const SymplecticSpace sp(1);
    CHECK(transvection(HomologyClass::x(sp, 1)) == SpMatrix(sp, {1, -1, 0, 1}));
    CHECK(transvection(HomologyClass::y(sp, 1)) == SpMatrix(sp, {1, 0, 1, 1}));
    CHECK(transvection(HomologyClass::zero(sp)).is_identity());
}

TEST_CASE("is_symplectic") {
    const SymplecticSpace sp(1);
    CHECK(is_symplectic(SpMatrix(sp)));
    CHECK_FALSE(is_symplectic(SpMatrix(sp, {1, 1, 0, 2})));
    CHECK(is_symplectic(SpMatrix::negative_identity(SymplecticSpace(4))));
}

TEST_CASE("word_matrix (c1 c2)^3 on the torus is -I") {
    // [[1,-1],[0,1]] * [[1,0],[1,1]] = [[0,-1],[1,1]]; its cube is -I.
    const SymplecticSpace sp(1);
    CycleConfiguration cfg(sp);
    cfg.bind("c1", HomologyClass::x(sp, 1));
    cfg.bind("c2", HomologyClass::y(sp, 1));
    const SpMatrix once = word_matrix(parse_word("c1 c2"), cfg);
    CHECK(once == SpMatrix(sp, {0, -1, 1, 1}));
    CHECK(word_matrix(parse_word("(c1 c2)^3"), cfg).is_negative_identity());
    CHECK(word_matrix(TwistWord(), cfg).is_identity());
    CHECK_THROWS_AS(word_matrix(parse_word("c3"), cfg), ConfigurationError);
}

TEST_CASE("transvection properties on random classes") {
    std::mt19937_64 rng(11);
    for (int g = 1; g <= 4; ++g) {
        const SymplecticSpace sp(g);
        for (int t = 0; t < 50; ++t) {
            const auto c = random_class(sp, rng);
            const auto u = random_class(sp, rng);
            const auto v = random_class(sp, rng);
            const auto tc = transvection(c);
            CHECK(is_symplectic(tc));
            CHECK(tc * c == c);
            CHECK(transvection(-c) == tc);
            CHECK(pairing(tc * u, tc * v) == pairing(u, v));
            CHECK(tc * inverse_transvection(c) == SpMatrix(sp));
            CHECK(tc.symplectic_inverse() == inverse_transvection(c));
            // Agrees with the formula written out by hand.
            std::vector<long> uc(u.coords().begin(), u.coords().end()), cc(c.coords().begin(), c.coords().end());
            const auto want = oracle::twist_by_hand(uc, cc);
            const auto got = tc * u;
            CHECK(std::vector<long>(got.coords().begin(), got.coords().end()) == want);
            if (pairing(u, c) == 0) CHECK(tc * u == u);
        }
    }
}

TEST_CASE("word_matrix is a homomorphism") {
    std::mt19937_64 rng(5);
    const SymplecticSpace sp(3);
    CycleConfiguration cfg(sp, CurveRegistry::empty());
    for (int i = 0; i < 5; ++i) cfg.bind("a" + std::string(1, char('a' + i)), random_class(sp, rng, 2));
    const auto u = parse_word("aa ab^-1 ac ad");
    const auto v = parse_word("ae^-1 aa ab");
    const auto mu = word_matrix(u, cfg), mv = word_matrix(v, cfg);
    CHECK(word_matrix(u * v, cfg) == mu * mv);
    CHECK(word_matrix(u.inverse(), cfg) == mu.symplectic_inverse());
    CHECK(word_matrix(u.inverse(), cfg) * mu == SpMatrix(sp));
    CHECK(is_symplectic(mu * mv));
}

TEST_CASE("overflow is reported") {
    CHECK_THROWS_AS(checked_mul(Int(1) << 62, 4), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), ArithmeticOverflow);
}
