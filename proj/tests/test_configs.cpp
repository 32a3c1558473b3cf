#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "twistlab/configuration.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/involutions.hpp"
#include "twistlab/reference_tables.hpp"

using namespace twistlab;

namespace {

std::string config_path(const ThetaParams& p) {
    return std::string(TWISTLAB_SOURCE_DIR) + "/data/configurations/theta_l" + std::to_string(p.l) + "_k" +
           std::to_string(p.k) + "_r" + std::to_string(p.r) + ".cfg";
}

}  // namespace

TEST_CASE("configuration text round-trips") {
    const auto cfg = theta_configuration({2, 4, 1});
    const auto text = format_configuration(cfg, "note");
    const auto back = parse_configuration(text);
    CHECK(back.bindings() == cfg.bindings());
    CHECK(back.registry().entries() == cfg.registry().entries());
    CHECK(format_configuration(back, "note") == text);
}

TEST_CASE("configuration parse errors") {
    CHECK_THROWS_AS(parse_configuration("cycle a 1 0\n"), ConfigurationError);
    CHECK_THROWS_AS(parse_configuration("genus 1\ncycle a 1\n"), ConfigurationError);
    CHECK_THROWS_AS(parse_configuration("genus 1\ncycle a 1 0\npair a b -1\n"), ConfigurationError);
    CHECK_THROWS_AS(parse_configuration("genus 1\nbogus\n"), ConfigurationError);
    const auto cfg = parse_configuration("# torus\ngenus 1\ndefaults none\ncycle a 1 0\ncycle b 0 1\npair a b 1\n");
    CHECK_FALSE(cfg.registry().uses_chain_defaults());
    CHECK(cfg.registry().lookup(TwistSymbol::named("b"), TwistSymbol::named("a")) == IntersectionDatum::from_count(1));
}

TEST_CASE("shipped configurations match the generator") {
    int seen = 0;
    for (const auto& row : reference_rows()) {
        const auto path = config_path(row.params);
        CAPTURE(path);
        REQUIRE(std::filesystem::exists(path));
        const auto cfg = load_configuration(path);
        const auto gen = theta_configuration(row.params);
        CHECK(cfg.bindings() == gen.bindings());
        CHECK(cfg.registry().entries() == gen.registry().entries());
        CHECK(validate_involution({theta_word_only(row.params), cfg, InvolutionKind::theta}).passed);
        ++seen;
    }
    CHECK(seen == 39);
}
