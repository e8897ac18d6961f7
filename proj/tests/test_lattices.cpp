#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latfree/algebra.hpp"
#include "latfree/lattice.hpp"
#include "latfree/order.hpp"

#include <random>

using namespace latfree;

namespace {

ZLattice lat(std::size_t amb, const std::vector<std::vector<Rat>>& rows) {
    return ZLattice(amb, RatMatrix::from_rows(rows));
}

std::shared_ptr<const FinGroup> grp(const std::string& spec) {
    std::string s = spec;
    if (spec.find(".json") != std::string::npos)
        s = "table:" + std::string(LATFREE_FIXTURE_DIR) + "/groups/" + spec;
    return std::make_shared<const FinGroup>(FinGroup::parse(s));
}

// random finite-index sublattice: multiply by a random integer matrix with
// nonzero determinant
ZLattice random_sublattice(const ZLattice& l, std::mt19937_64& rng) {
    std::size_t r = l.rank();
    for (;;) {
        std::vector<std::vector<Rat>> t(r, std::vector<Rat>(r));
        for (auto& row : t)
            for (auto& v : row) v = Rat(static_cast<long>(rng() % 5) - 2);
        RatMatrix m = RatMatrix::from_rows(t);
        if (m.det() == 0) continue;
        return ZLattice(l.ambient_dim(), m * l.basis());
    }
}

ZLattice random_full_lattice(std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        std::vector<std::vector<Rat>> t(n, std::vector<Rat>(n));
        for (auto& row : t)
            for (auto& v : row) {
                v = Rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 2);
                v.canonicalize();
            }
        RatMatrix m = RatMatrix::from_rows(t);
        if (m.det() != 0) return ZLattice(n, m);
    }
}

}  // namespace

TEST_CASE("module index basics") {
    ZLattice z2 = ZLattice::standard(2);
    CHECK(module_index(z2, z2).value == Rat(1));
    CHECK(module_index(z2, z2.scaled(Rat(2))).value == Rat(4));
    ZLattice mixed = lat(2, {{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(module_index(mixed, z2).value == Rat(2));
    CHECK(module_index(z2, mixed).value == Rat(1, 2));
}

TEST_CASE("module index requires equal spans") {
    ZLattice a = lat(2, {{Rat(1), Rat(0)}});
    ZLattice b = lat(2, {{Rat(0), Rat(1)}});
    CHECK_THROWS((void)module_index(a, b));
}

TEST_CASE("sum and intersection basics") {
    ZLattice z2 = ZLattice::standard(2);
    CHECK(lattice_sum(z2, z2) == z2);
    CHECK(lattice_intersect(z2, z2) == z2);
    ZLattice two = z2.scaled(Rat(2)), three = z2.scaled(Rat(3));
    CHECK(lattice_sum(two, three) == z2);
    CHECK(lattice_intersect(two, three) == z2.scaled(Rat(6)));
}

TEST_CASE("index relation [a : a^b] = [a+b : b] on random pairs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        ZLattice a = random_full_lattice(2, rng);
        ZLattice b = random_full_lattice(2, rng);
        ZLattice s = lattice_sum(a, b), i = lattice_intersect(a, b);
        CHECK(module_index(a, i).value == module_index(s, b).value);
        CHECK(module_index(b, i).value == module_index(s, a).value);
        CHECK(s.contains(a));
        CHECK(a.contains(i));
    }
}

TEST_CASE("index multiplicativity along chains") {
    std::mt19937_64 rng(12);
    ZLattice l1 = ZLattice::standard(3);
    for (int t = 0; t < 40; ++t) {
        ZLattice l2 = random_sublattice(l1, rng);
        ZLattice l3 = random_sublattice(l2, rng);
        Rat i13 = module_index(l1, l3).value;
        CHECK(i13 == module_index(l1, l2).value * module_index(l2, l3).value);
    }
}

TEST_CASE("block index via direct sums (exact-rows diagram)") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 25; ++t) {
        ZLattice m1 = random_full_lattice(2, rng);
        ZLattice m3 = random_full_lattice(2, rng);
        ZLattice n1 = random_sublattice(m1, rng);
        ZLattice n3 = random_sublattice(m3, rng);
        // couple the summands with an off-diagonal block: still exact rows
        ZLattice m2 = direct_sum(m1, m3);
        // embed n1 in the first block, n3 shifted into the second with a tie
        RatMatrix top = RatMatrix::hstack(n1.basis(), n3.basis() * Rat(0));
        RatMatrix bottom = RatMatrix::hstack(n1.basis(), n3.basis());
        ZLattice n2(4, RatMatrix::vstack(top, bottom));
        CHECK(module_index(m2, n2).value ==
              module_index(m1, n1).value * module_index(m3, n3).value);
    }
}

TEST_CASE("dual basics") {
    ZLattice z3 = ZLattice::standard(3);
    CHECK(dual(z3) == z3);
    ZLattice l = lat(2, {{Rat(2), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(dual(l) == lat(2, {{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1)}}));
    CHECK_THROWS((void)dual(lat(2, {{Rat(1), Rat(0)}})));
}

TEST_CASE("dual reverses indices and inclusions") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 40; ++t) {
        ZLattice m = random_full_lattice(3, rng);
        ZLattice n = random_full_lattice(3, rng);
        CHECK(module_index(m, n).value == module_index(dual(n), dual(m)).value);
        CHECK(dual(dual(m)) == m);
        ZLattice s = random_sublattice(m, rng);
        CHECK(dual(s).contains(dual(m)));
    }
}

TEST_CASE("min_overlattice on C2: maximal order over the group ring") {
    auto g = grp("C2");
    OrderDesc zg = group_ring_order(g);
    OrderDesc mx = maximal_order_abelian(g);
    ModuleAction act = mx.left_action();
    ZLattice grown = min_overlattice(act, zg.lattice());
    CHECK(grown == mx.lattice());
    CHECK(module_index(grown, zg.lattice()).value == Rat(2));
    // already stable input is a fixed point
    CHECK(min_overlattice(act, mx.lattice()) == mx.lattice());
}

TEST_CASE("max_sublattice on C2: the conductor") {
    auto g = grp("C2");
    OrderDesc zg = group_ring_order(g);
    OrderDesc mx = maximal_order_abelian(g);
    ZLattice sub = max_sublattice(mx.left_action(), zg.lattice());
    // conductor = span{1+g, 1-g} = 2M, index 2 under Z[C2]
    CHECK(module_index(zg.lattice(), sub).value == Rat(2));
    CHECK(sub == mx.lattice().scaled(Rat(2)));
    CHECK(max_sublattice(mx.left_action(), mx.lattice()) == mx.lattice());
}

TEST_CASE("overlattice and sublattice operators are idempotent on random stable input") {
    auto g = grp("C3");
    OrderDesc mx = maximal_order_abelian(g);
    ModuleAction act = mx.left_action();
    std::mt19937_64 rng(15);
    for (int t = 0; t < 25; ++t) {
        ZLattice x = random_full_lattice(3, rng);
        ZLattice up = min_overlattice(act, x);
        CHECK(min_overlattice(act, up) == up);
        CHECK(up.contains(x));
        ZLattice down = max_sublattice(act, x);
        CHECK(max_sublattice(act, down) == down);
        CHECK(x.contains(down));
        CHECK(min_overlattice(act, down) == down);
    }
}

// the dual of a left lattice is a right lattice; in coordinates the right
// action of gamma on functionals is left multiplication by invol(gamma)
static ModuleAction dual_side_action(const OrderDesc& o) {
    RatMatrix inv_rows = o.lattice().basis() * o.algebra().involution_matrix();
    return diagonal_left_action(o.algebra(), inv_rows, 1);
}

TEST_CASE("dualsubover: (Gamma X)^dual = (X^dual)^Gamma via the involution") {
    std::vector<std::shared_ptr<const FinGroup>> gs;
    for (const char* spec : {"C2", "C3", "C4", "C6"}) gs.push_back(grp(spec));
    gs.push_back(grp("s3.json"));
    for (const auto& g : gs) {
        OrderDesc mx = maximal_order(g);
        ModuleAction rhs_act = dual_side_action(mx);
        std::mt19937_64 rng(16);
        for (int t = 0; t < 10; ++t) {
            ZLattice x = random_full_lattice(g->size(), rng);
            ZLattice gx = min_overlattice(mx.left_action(), x);
            ZLattice rhs = max_sublattice(rhs_act, dual(x));
            CHECK(dual(gx) == rhs);
            CHECK(module_index(gx, x).value == module_index(dual(x), rhs).value);
        }
    }
}

TEST_CASE("bddbyconductor: [GX : ^GX] divides [Gamma : J]^n") {
    for (const char* spec : {"C2", "C3", "C2xC2"}) {
        auto g = grp(spec);
        OrderDesc zg = group_ring_order(g);
        OrderDesc mx = maximal_order_abelian(g);
        ZLattice j = conductor(mx, zg);
        Rat gamma_over_j = module_index(mx.lattice(), j).value;
        std::mt19937_64 rng(17);
        for (std::size_t n : {1u, 2u}) {
            ModuleAction mact = mx.left_action(n);
            ModuleAction lact = zg.left_action(n);
            for (int t = 0; t < 8; ++t) {
                ZLattice x0 = random_full_lattice(g->size() * n, rng);
                ZLattice x = min_overlattice(lact, x0);  // Lambda-stable
                ZLattice up = min_overlattice(mact, x);
                ZLattice down = max_sublattice(mact, x);
                Rat ratio = module_index(up, down).value;
                Rat bound = gamma_over_j;
                for (std::size_t k = 1; k < n; ++k) bound *= gamma_over_j;
                CHECK(rat_divides(ratio, bound));
            }
        }
    }
}

TEST_CASE("frohlich: both [MX : X] and [X : ^MX] divide [M : Lambda]^n") {
    for (const char* spec : {"C2", "C3", "C4", "C2xC2", "C6"}) {
        auto g = grp(spec);
        OrderDesc zg = group_ring_order(g);
        OrderDesc mx = maximal_order_abelian(g);
        Rat m_over_l = module_index(mx.lattice(), zg.lattice()).value;
        std::mt19937_64 rng(18);
        for (std::size_t n : {1u, 2u}) {
            Rat bound(1);
            for (std::size_t k = 0; k < n; ++k) bound *= m_over_l;
            ModuleAction mact = mx.left_action(n);
            ModuleAction lact = zg.left_action(n);
            for (int t = 0; t < 8; ++t) {
                ZLattice x0 = random_full_lattice(g->size() * n, rng);
                ZLattice x = min_overlattice(lact, x0);
                CHECK(rat_divides(module_index(min_overlattice(mact, x), x).value, bound));
                CHECK(rat_divides(module_index(x, max_sublattice(mact, x)).value, bound));
            }
        }
    }
}

TEST_CASE("non-full lattices: sums, intersections, indices in a subspace") {
    ZLattice a = lat(3, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(2), Rat(0)}});
    ZLattice b = lat(3, {{Rat(2), Rat(0), Rat(2)}, {Rat(0), Rat(1), Rat(0)}});
    ZLattice s = lattice_sum(a, b);
    ZLattice i = lattice_intersect(a, b);
    CHECK(s.rank() == 2);
    CHECK(i.rank() == 2);
    CHECK(module_index(a, i).value == module_index(s, b).value);
}
