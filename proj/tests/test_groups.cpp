#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latfree/group.hpp"

#include <numeric>

using namespace latfree;

static std::string fixture(const std::string& name) {
    return std::string(LATFREE_FIXTURE_DIR) + "/groups/" + name;
}

TEST_CASE("parse C2") {
    FinGroup g = FinGroup::parse("C2");
    CHECK(g.size() == 2);
    CHECK(g.exponent() == 2);
    CHECK(g.abelian());
    CHECK(g.inv(1) == 1);
}

TEST_CASE("parse C2xC4") {
    FinGroup g = FinGroup::parse("C2xC4");
    CHECK(g.size() == 8);
    CHECK(g.exponent() == 4);
    CHECK(g.abelian());
}

TEST_CASE("malformed specs are rejected") {
    CHECK_THROWS((void)FinGroup::parse("D4"));
    CHECK_THROWS((void)FinGroup::parse("C"));
    CHECK_THROWS((void)FinGroup::parse("C4x"));
    CHECK_THROWS((void)FinGroup::parse(""));
}

TEST_CASE("s3 table fixture") {
    FinGroup g = FinGroup::parse("table:" + fixture("s3.json"));
    CHECK(g.size() == 6);
    CHECK_FALSE(g.abelian());
    CHECK(g.exponent() == 6);
    // brute-force order statistics: 1 identity, 3 transpositions, 2 3-cycles
    std::map<unsigned long, int> census;
    for (std::size_t i = 0; i < 6; ++i) census[g.element_order(static_cast<int>(i))]++;
    CHECK(census[1] == 1);
    CHECK(census[2] == 3);
    CHECK(census[3] == 2);
}

TEST_CASE("bad tables name the failed axiom") {
    // mul[1][1] = 1 makes 1 idempotent but not the identity
    std::vector<std::vector<int>> bad{{0, 1}, {1, 1}};
    try {
        (void)FinGroup::from_table(bad, {});
        CHECK(false);
    } catch (const group_axiom_error& e) {
        CHECK(std::string(e.what()).find("inverse") != std::string::npos);
    }
    std::vector<std::vector<int>> noid{{1, 0}, {0, 1}};
    CHECK_THROWS_AS((void)FinGroup::from_table(noid, {}), group_axiom_error);
}

TEST_CASE("cyclic subgroup counts") {
    auto t2 = FinGroup::parse("C2").cyclic_subgroup_counts();
    CHECK(t2 == std::map<unsigned long, unsigned long>{{1, 1}, {2, 1}});

    auto t24 = FinGroup::parse("C2xC4").cyclic_subgroup_counts();
    CHECK(t24 == std::map<unsigned long, unsigned long>{{1, 1}, {2, 3}, {4, 2}});

    auto t22 = FinGroup::parse("C2xC2").cyclic_subgroup_counts();
    CHECK(t22 == std::map<unsigned long, unsigned long>{{1, 1}, {2, 3}});
}

TEST_CASE("sum of t_d phi(d) recovers the group order") {
    for (const char* spec : {"C1", "C2", "C6", "C2xC4", "C3xC3", "C12", "C2xC2xC2"}) {
        FinGroup g = FinGroup::parse(spec);
        unsigned long total = 0;
        for (const auto& [d, td] : g.cyclic_subgroup_counts()) total += td * euler_phi(d);
        CHECK(total == g.size());
    }
    for (const char* name : {"s3.json", "d4.json", "q8.json", "a4.json", "s4.json"}) {
        FinGroup g = FinGroup::parse("table:" + fixture(name));
        unsigned long total = 0;
        for (const auto& [d, td] : g.cyclic_subgroup_counts()) total += td * euler_phi(d);
        CHECK(total == g.size());
    }
}

TEST_CASE("cyclic groups have exactly one cyclic subgroup per divisor") {
    for (unsigned long n : {4ul, 6ul, 9ul, 12ul}) {
        FinGroup g = FinGroup::cyclic(n);
        for (const auto& [d, td] : g.cyclic_subgroup_counts()) {
            CHECK(n % d == 0);
            CHECK(td == 1);
        }
        CHECK(g.cyclic_subgroup_counts().size() == divisors(n).size());
    }
}

TEST_CASE("all table fixtures satisfy the group axioms") {
    for (const char* name : {"s3.json", "d4.json", "q8.json", "a4.json", "s4.json"}) {
        FinGroup g = FinGroup::parse("table:" + fixture(name));
        CHECK_FALSE(g.abelian());
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(g.mul(i, g.inv(static_cast<int>(i))) == 0);
            CHECK(g.mul(g.inv(static_cast<int>(i)), static_cast<int>(i)) == 0);
        }
    }
}
