#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latfree/algebra.hpp"
#include "latfree/groupring.hpp"

#include <random>

using namespace latfree;

static std::shared_ptr<const FinGroup> grp(const std::string& spec) {
    std::string s = spec;
    if (spec.find(".json") != std::string::npos)
        s = "table:" + std::string(LATFREE_FIXTURE_DIR) + "/groups/" + spec;
    return std::make_shared<const FinGroup>(FinGroup::parse(s));
}

static GroupRingElement random_elt(std::shared_ptr<const FinGroup> g, std::mt19937_64& rng) {
    std::vector<Rat> c(g->size());
    for (auto& q : c) {
        q = Rat(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3);
        q.canonicalize();
    }
    return GroupRingElement(g, c);
}

TEST_CASE("unit is neutral and C2 annihilation") {
    auto g = grp("C2");
    std::mt19937_64 rng(1);
    GroupRingElement x = random_elt(g, rng);
    CHECK(GroupRingElement::unit(g) * x == x);
    CHECK(x * GroupRingElement::unit(g) == x);
    // (1+g)(1-g) = 0
    GroupRingElement a(g, {Rat(1), Rat(1)});
    GroupRingElement b(g, {Rat(1), Rat(-1)});
    CHECK((a * b).is_zero());
}

TEST_CASE("Tr_G absorbs products") {
    auto g = grp("C2xC4");
    std::mt19937_64 rng(2);
    GroupRingElement tr = GroupRingElement::trace_element(g);
    for (int t = 0; t < 10; ++t) {
        GroupRingElement x = random_elt(g, rng);
        Rat total(0);
        for (const auto& q : x.coeffs()) total += q;
        CHECK(tr * x == tr * total);
    }
}

TEST_CASE("involution basics") {
    auto g = grp("C4");
    CHECK(GroupRingElement::unit(g).involution() == GroupRingElement::unit(g));
    // g -> g^{-1}
    GroupRingElement x = GroupRingElement::basis(g, 1);
    CHECK(x.involution() == GroupRingElement::basis(g, g->inv(1)));
}

TEST_CASE("involution is an anti-automorphism (random S3 samples)") {
    auto g = grp("s3.json");
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        GroupRingElement a = random_elt(g, rng), b = random_elt(g, rng);
        CHECK((a * b).involution() == b.involution() * a.involution());
        CHECK(a.involution().involution() == a);
    }
}

TEST_CASE("trace idempotent") {
    auto c2 = grp("C2");
    GroupRingElement e = trace_idempotent(c2);
    CHECK(e.coeffs() == std::vector<Rat>{Rat(1, 2), Rat(-1, 2)});
    CHECK(e * e == e);
    CHECK((e * GroupRingElement::trace_element(c2)).is_zero());

    auto s3 = grp("s3.json");
    GroupRingElement es = trace_idempotent(s3);
    CHECK(es * es == es);
    CHECK((es * GroupRingElement::trace_element(s3)).is_zero());
    for (std::size_t i = 0; i < s3->size(); ++i) {
        GroupRingElement b = GroupRingElement::basis(s3, static_cast<int>(i));
        CHECK(es * b == b * es);
    }
}

static void check_wedderburn(const std::string& spec,
                             const std::map<unsigned long, unsigned long>& expect_counts) {
    auto g = grp(spec);
    WedderburnData w = abelian_wedderburn(g);
    // counts per d match t_d
    std::map<unsigned long, unsigned long> counts;
    unsigned long degree_sum = 0;
    for (const auto& c : w.components) {
        counts[c.d]++;
        degree_sum += c.degree;
        CHECK(c.degree == euler_phi(c.d));
    }
    CHECK(counts == expect_counts);
    CHECK(degree_sum == g->size());
    // idempotents: orthogonal, idempotent, sum to 1, central by commutativity
    GroupRingElement sum = GroupRingElement::zero(g);
    for (std::size_t i = 0; i < w.components.size(); ++i) {
        const auto& ei = w.components[i].idempotent;
        CHECK(ei * ei == ei);
        for (std::size_t j = i + 1; j < w.components.size(); ++j)
            CHECK((ei * w.components[j].idempotent).is_zero());
        sum = sum + ei;
    }
    CHECK(sum == GroupRingElement::unit(g));
    // generator images act with exact order d: (e*h)^d = e, no smaller power
    for (const auto& c : w.components) {
        GroupRingElement pw = c.idempotent;
        for (unsigned long k = 1; k <= c.d; ++k) {
            pw = pw * GroupRingElement::basis(g, c.generator_element);
            if (k < c.d && c.d > 1) CHECK(pw != c.idempotent);
        }
        CHECK(pw == c.idempotent);
    }
}

TEST_CASE("wedderburn C2") {
    check_wedderburn("C2", {{1, 1}, {2, 1}});
    auto g = grp("C2");
    WedderburnData w = abelian_wedderburn(g);
    CHECK(w.components[0].idempotent.coeffs() == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    CHECK(w.components[1].idempotent.coeffs() == std::vector<Rat>{Rat(1, 2), Rat(-1, 2)});
}

TEST_CASE("wedderburn C3: trivial plus one quadratic orbit") {
    check_wedderburn("C3", {{1, 1}, {3, 1}});
    auto g = grp("C3");
    WedderburnData w = abelian_wedderburn(g);
    CHECK(w.components[1].degree == 2);
    CHECK(w.components[1].orbit.size() == 2);
}

TEST_CASE("wedderburn C2xC2: four linear components") {
    check_wedderburn("C2xC2", {{1, 1}, {2, 3}});
}

TEST_CASE("wedderburn across the abelian park") {
    check_wedderburn("C4", {{1, 1}, {2, 1}, {4, 1}});
    check_wedderburn("C6", {{1, 1}, {2, 1}, {3, 1}, {6, 1}});
    check_wedderburn("C2xC4", {{1, 1}, {2, 3}, {4, 2}});
    check_wedderburn("C3xC3", {{1, 1}, {3, 4}});
    check_wedderburn("C12", {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}, {12, 1}});
}

TEST_CASE("wedderburn rejects nonabelian input") {
    CHECK_THROWS((void)abelian_wedderburn(grp("s3.json")));
}

TEST_CASE("regular representation is multiplicative") {
    auto g = grp("C6");
    auto alg = AlgebraDesc::group_algebra(g);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        GroupRingElement a = random_elt(g, rng), b = random_elt(g, rng);
        RatMatrix la = alg->left_mul_matrix(a.coeff_row());
        RatMatrix lb = alg->left_mul_matrix(b.coeff_row());
        RatMatrix lab = alg->left_mul_matrix((a * b).coeff_row());
        // L_a L_b = L_{ab} on row vectors: v L_b L_a ... composition order
        CHECK(lb * la == lab);
    }
}

TEST_CASE("smith normal form") {
    RatMatrix m = RatMatrix::from_int_rows({{Int(2), Int(0)}, {Int(1), Int(4)}});
    SnfResult s = smith_normal_form(m);
    CHECK(s.diag == std::vector<Int>{Int(1), Int(8)});
    CHECK(s.u * m * s.v ==
          RatMatrix::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(8)}}));
    CHECK(rat_abs(s.u.det()) == Rat(1));
    CHECK(rat_abs(s.v.det()) == Rat(1));
}
