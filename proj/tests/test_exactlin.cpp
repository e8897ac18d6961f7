#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latfree/ratmatrix.hpp"

#include <random>

using namespace latfree;

namespace {

RatMatrix int_mat(const std::vector<std::vector<long>>& rows, long den = 1) {
    std::vector<std::vector<Int>> r;
    for (const auto& row : rows) {
        std::vector<Int> x;
        for (long v : row) x.emplace_back(v);
        r.push_back(std::move(x));
    }
    return RatMatrix::from_int_rows(r, Int(den));
}

// independent determinant oracle: cofactor expansion over rationals
Rat det_cofactor(const RatMatrix& m) {
    std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rat acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        std::vector<std::vector<Rat>> sub(n - 1, std::vector<Rat>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                sub[i - 1][cc++] = m.at(i, k);
            }
        }
        Rat term = m.at(0, j) * det_cofactor(RatMatrix::from_rows(sub));
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::vector<std::vector<long>> rows(n, std::vector<long>(n));
    for (auto& r : rows)
        for (auto& v : r) v = lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    return int_mat(rows);
}

// random unimodular matrix: product of elementary row operations
RatMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    RatMatrix m = RatMatrix::identity(n);
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        long f = static_cast<long>(rng() % 5) - 2;
        for (std::size_t k = 0; k < n; ++k) rows[i][k] += Rat(f) * rows[j][k];
    }
    return RatMatrix::from_rows(rows);
}

}  // namespace

TEST_CASE("hnf on the 2x2 example") {
    RatMatrix m = int_mat({{2, 0}, {1, 1}});
    auto [h, u] = m.hnf();
    CHECK(h == int_mat({{1, 1}, {0, 2}}));
    CHECK(u * m == h);
    CHECK(rat_abs(h.det()) == rat_abs(m.det()));
    CHECK(rat_abs(u.det()) == Rat(1));
}

TEST_CASE("hnf of the identity is the identity") {
    for (std::size_t n : {1u, 3u, 5u}) {
        RatMatrix id = RatMatrix::identity(n);
        auto [h, u] = id.hnf();
        CHECK(h == id);
        CHECK(u == id);
    }
}

TEST_CASE("hnf transform and determinant invariance on random matrices") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        RatMatrix m = random_int_matrix(rng, 5, -9, 9);
        if (m.det() == 0) continue;
        auto [h, u] = m.hnf();
        CHECK(u * m == h);
        CHECK(rat_abs(h.det()) == rat_abs(det_cofactor(m)));
        CHECK(rat_abs(u.det()) == Rat(1));
        // idempotence
        auto [h2, u2] = h.hnf();
        CHECK(h2 == h);
    }
}

TEST_CASE("hnf rejects rank-deficient input naming a dependent row") {
    RatMatrix m = int_mat({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK_THROWS_AS((void)m.hnf(), rank_deficient_error);
    try {
        (void)m.hnf();
    } catch (const rank_deficient_error& e) {
        CHECK(e.dependent_row >= 1);  // row 1 duplicates row 0 up to scale
    }
}

TEST_CASE("det examples") {
    CHECK(RatMatrix::identity(4).det() == Rat(1));
    RatMatrix d = RatMatrix::from_rows({{Rat(1, 2), Rat(0)}, {Rat(0), Rat(3)}});
    CHECK(d.det() == Rat(3, 2));
    // 4x4 character matrix of C2 x C2 (rows: characters, entries +-1)
    RatMatrix x = int_mat({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}});
    CHECK(rat_abs(x.det()) == Rat(16));
    CHECK(rat_abs(det_cofactor(x)) == Rat(16));
}

TEST_CASE("det is multiplicative on random samples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        RatMatrix a = random_int_matrix(rng, 4, -5, 5);
        RatMatrix b = random_int_matrix(rng, 4, -5, 5);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("solve_left examples") {
    RatMatrix id = RatMatrix::identity(3);
    RatMatrix b = int_mat({{1, 2, 3}, {4, 5, 6}});
    CHECK(id.solve_left(b) == b);

    RatMatrix a = int_mat({{2, 0}, {0, 2}});
    RatMatrix rhs = int_mat({{1, 1}});
    RatMatrix x = a.solve_left(rhs);
    CHECK(x == RatMatrix::from_rows({{Rat(1, 2), Rat(1, 2)}}));
    CHECK(x * a == rhs);
}

TEST_CASE("solve_left round trip through a random unimodular matrix") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        RatMatrix a = random_unimodular(rng, 4);
        RatMatrix m = random_int_matrix(rng, 4, -4, 4);
        RatMatrix b = m * a;
        CHECK(a.solve_left(b) == m);
    }
}

TEST_CASE("solve_left reports the offending row on inconsistent systems") {
    RatMatrix a = int_mat({{1, 0, 0}, {0, 1, 0}});
    RatMatrix b = int_mat({{1, 2, 0}, {0, 0, 5}});
    try {
        (void)a.solve_left(b);
        CHECK(false);
    } catch (const inconsistent_system_error& e) {
        CHECK(e.offending_row == 1);
    }
}

TEST_CASE("left kernel is saturated and annihilates") {
    RatMatrix m = int_mat({{1, 2}, {2, 4}, {0, 1}});
    RatMatrix k = m.left_kernel();
    CHECK(k.rows() == 1);
    CHECK((k * m).is_zero());
    // saturated: the kernel vector has coprime entries
    Int g(0);
    for (std::size_t j = 0; j < k.cols(); ++j) g = int_gcd(g, k.num(0, j));
    CHECK(g == 1);
}

TEST_CASE("inverse round trip") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix a = random_int_matrix(rng, 3, -6, 6);
        if (a.det() == 0) continue;
        CHECK(a.inverse() * a == RatMatrix::identity(3));
        CHECK(a * a.inverse() == RatMatrix::identity(3));
    }
}

TEST_CASE("canonical form: minimal denominator") {
    RatMatrix m = RatMatrix::from_rows({{Rat(2, 4), Rat(1, 2)}});
    CHECK(m.den() == 2);
    CHECK(m.num(0, 0) == 1);
    RatMatrix w = RatMatrix::from_rows({{Rat(2), Rat(4)}});
    CHECK(w.den() == 1);
}
