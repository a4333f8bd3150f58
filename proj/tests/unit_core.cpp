#include <random>

#include "delone/catalog.hpp"
#include "delone/enumerate.hpp"
#include "delone/gram_auto.hpp"
#include "delone/linalg.hpp"
#include "delone/rational.hpp"
#include "delone/regularity.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "property_suites.hpp"

using namespace delone;

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_str(parse_rat("3/4")) == "3/4");
    CHECK(rat_str(parse_rat("-6/8")) == "-3/4");
    CHECK(rat_str(parse_rat("7")) == "7");
    CHECK(parse_rat("0/5") == 0);
    CHECK_THROWS(parse_rat(""));
    CHECK_THROWS(parse_rat("1.5"));
    CHECK_THROWS(parse_rat("2/0"));
    CHECK_THROWS(parse_rat("a/b"));
}

TEST_CASE("integer rounding helpers") {
    CHECK(floor_int(rat(7, 2)) == 3);
    CHECK(floor_int(rat(-7, 2)) == -4);
    CHECK(ceil_int(rat(7, 2)) == 4);
    CHECK(ceil_int(rat(-7, 2)) == -3);
    CHECK(round_nearest(rat(5, 4)) == 1);
    CHECK(round_nearest(rat(7, 4)) == 2);
    CHECK(isqrt(Int(48)) == 6);
    CHECK(isqrt(Int(49)) == 7);
    CHECK(isqrt(Int(0)) == 0);
}

TEST_CASE("square root brackets") {
    for (long n : {2L, 3L, 5L, 48L, 1000L}) {
        Rat x = rat(n, 7);
        Rat lb = sqrt_lb(x), ub = sqrt_ub(x);
        CHECK(lb * lb <= x);
        CHECK(ub * ub >= x);
        Rat lo, hi;
        sqrt_interval(x, 40, lo, hi);
        CHECK(lo * lo <= x);
        CHECK(hi * hi >= x);
        CHECK(hi - lo <= Rat(Int(1), Int(1) << 40));
    }
    // exact squares collapse to a point
    Rat lo, hi;
    sqrt_interval(rat(9, 4), 10, lo, hi);
    CHECK(lo <= rat(3, 2));
    CHECK(hi >= rat(3, 2));
}

TEST_CASE("surd comparison") {
    // 1 + sqrt(2) vs rationals around 2.41421...
    CHECK(cmp_surd(rat(24, 10), Rat(1), Rat(1), Rat(2)) > 0);
    CHECK(cmp_surd(rat(25, 10), Rat(1), Rat(1), Rat(2)) < 0);
    // 3 - sqrt(2) ~ 1.5857
    CHECK(cmp_surd(rat(158, 100), Rat(3), Rat(-1), Rat(2)) > 0);
    CHECK(cmp_surd(rat(159, 100), Rat(3), Rat(-1), Rat(2)) < 0);
    CHECK(cmp_surd(Rat(2), Rat(2), Rat(0), Rat(5)) == 0);
}

TEST_CASE("prime factor counting and square splitting") {
    CHECK(omega_with_multiplicity(Int(1)) == 0);
    CHECK(omega_with_multiplicity(Int(8)) == 3);
    CHECK(omega_with_multiplicity(Int(48)) == 5);
    CHECK(omega_with_multiplicity(Int(3840)) == 10);
    Int root, sf;
    split_square(Int(48), root, sf);
    CHECK(root == 4);
    CHECK(sf == 3);
    split_square(Int(49), root, sf);
    CHECK(root == 7);
    CHECK(sf == 1);
    split_square(Int(0), root, sf);
    CHECK(sf == 0);
}

TEST_CASE("certified binary logarithm brackets") {
    Rat lo, hi;
    log2_interval(Rat(8), 30, lo, hi);
    CHECK(lo <= 3);
    CHECK(hi >= 3);
    CHECK(hi - lo <= rat(1, 1000));
    log2_interval(rat(1, 4), 30, lo, hi);
    CHECK(lo <= -2);
    CHECK(hi >= -2);
    // log2(5/4) = 0.32192...
    log2_interval(rat(5, 4), 40, lo, hi);
    CHECK(lo > rat(321, 1000));
    CHECK(hi < rat(323, 1000));
    CHECK(lo <= hi);
}

TEST_CASE("determinant, inverse, and solver") {
    RMat a = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
    CHECK(det(a) == 5);
    RMat inv = inverse(a);
    RMat id = rmat_mul(a, inv);
    CHECK(id == rmat_identity(2));
    auto s = solve(a, RVec{Rat(3), Rat(4)});
    REQUIRE(s.has_value());
    CHECK((*s)[0] == 1);
    CHECK((*s)[1] == 1);
    RMat sing = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(det(sing) == 0);
    CHECK(!solve(sing, RVec{Rat(1), Rat(0)}).has_value());
    CHECK(rank(sing) == 1);
}

TEST_CASE("ldl reconstruction on random positive definite forms") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int it = 0; it < 20; ++it) {
        int d = 1 + (it % 4);
        RMat a(d, RVec(d));
        for (auto& row : a)
            for (auto& v : row) v = Rat(static_cast<long>(entry(rng)));
        RMat g(d, RVec(d, Rat(0)));  // a^T a + I is positive definite
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) g[i][j] += a[k][i] * a[k][j];
            g[i][i] += 1;
        }
        Ldl f = ldl_decompose(g);
        for (int i = 0; i < d; ++i) CHECK(f.diag[i] > 0);
        // rebuild U^T D U
        RMat back(d, RVec(d, Rat(0)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    back[i][j] += f.upper[k][i] * f.diag[k] * f.upper[k][j];
        CHECK(back == g);
    }
}

TEST_CASE("hermite and smith forms") {
    // columns (2,0) and (0,3): already a staircase
    IMat h = hnf_basis({{Int(2), Int(0)}, {Int(0), Int(3)}});
    REQUIRE(h.size() == 2);
    CHECK(h[0][0] == 2);
    CHECK(h[1][1] == 3);
    CHECK(!hnf_is_identity(h, 2));
    // unimodular columns give the identity
    IMat u = hnf_basis({{Int(2), Int(1)}, {Int(1), Int(1)}});
    CHECK(hnf_is_identity(u, 2));
    // dependent columns are dropped
    IMat r = hnf_basis({{Int(1), Int(2)}, {Int(2), Int(4)}});
    REQUIRE(r.size() == 2);
    CHECK(r[0].size() == 1);
    auto s = snf_diagonal({{Int(2), Int(0)}, {Int(0), Int(3)}});
    REQUIRE(s.size() == 2);
    CHECK(s[0] == 1);
    CHECK(s[1] == 6);
    auto s2 = snf_diagonal({{Int(2), Int(0)}, {Int(0), Int(4)}});
    CHECK(s2[0] == 2);
    CHECK(s2[1] == 4);
    IMat b = {{Int(3), Int(1)}, {Int(1), Int(2)}};
    CHECK(det_bareiss(b) == 5);
}

TEST_CASE("gram matrix preparation") {
    RMat g = {{Rat(1), rat(1, 2)}, {rat(1, 2), Rat(1)}};
    GramMatrix gm(g);
    CHECK(gm.scale == 2);
    CHECK(gm.scaled[0][1] == 1);
    CHECK(form_value(gm, RVec{Rat(1), Rat(-1)}) == 1);
    CHECK(form_value(gm, RVec{Rat(1), Rat(1)}) == 3);
    CHECK_THROWS(GramMatrix({{Rat(1), Rat(2)}, {Rat(2), Rat(1)}}));   // not PD
    CHECK_THROWS(GramMatrix({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}));   // not symmetric
}

TEST_CASE("site distances") {
    PeriodicSet z2 = catalog_make("z2");
    Site a = z2.origin(0);
    Site b{0, {3, 4}};
    CHECK(sq_dist(z2, a, b) == 25);
    // translation invariance
    Site a2{0, {1, -2}};
    Site b2{0, {4, 2}};
    CHECK(sq_dist(z2, a2, b2) == 25);
    PeriodicSet d3 = catalog_make("d3_plus");
    Site h{1, {0, 0, 0}};
    CHECK(sq_dist(d3, d3.origin(0), h) == rat(3, 4));
}

TEST_CASE("ball enumeration ground truth") {
    PeriodicSet z2 = catalog_make("z2");
    CHECK(enumerate_in_ball(z2, z2.origin(0), Rat(1)).size() == 5);
    CHECK(enumerate_in_ball(z2, z2.origin(0), Rat(2)).size() == 9);
    CHECK(enumerate_in_ball(z2, z2.origin(0), rat(1, 2)).size() == 1);
    PeriodicSet hex = catalog_make("hexagonal");
    CHECK(enumerate_in_ball(hex, hex.origin(0), Rat(1)).size() == 7);
    PeriodicSet z3 = catalog_make("z3");
    CHECK(enumerate_in_ball(z3, z3.origin(0), Rat(1)).size() == 7);
    CHECK(enumerate_in_ball(z3, z3.origin(0), Rat(2)).size() == 19);
    // members arrive sorted by distance and the center is first
    auto ball = enumerate_in_ball(z2, z2.origin(0), Rat(4));
    CHECK(ball.front().sq_dist == 0);
    for (size_t i = 1; i < ball.size(); ++i) CHECK(ball[i - 1].sq_dist <= ball[i].sq_dist);
}

TEST_CASE("shortest distances and breakpoints") {
    CHECK(shortest_nonzero_sq_dist(catalog_make("z2")) == 1);
    CHECK(shortest_nonzero_sq_dist(catalog_make("d3_plus")) == rat(3, 4));
    CHECK(shortest_nonzero_sq_dist(catalog_make("two_orbit")) == rat(1, 36));
    CHECK(shortest_nonzero_sq_dist(catalog_make("d5_plus")) == 1);
    auto bz2 = distance_breakpoints(catalog_make("z2"), Rat(2));
    REQUIRE(bz2.size() == 2);
    CHECK(bz2[0] == 1);
    CHECK(bz2[1] == 2);
    auto bhex = distance_breakpoints(catalog_make("hexagonal"), Rat(3));
    REQUIRE(bhex.size() == 2);
    CHECK(bhex[0] == 1);
    CHECK(bhex[1] == 3);
    auto bd3 = distance_breakpoints(catalog_make("d3_plus"), Rat(1));
    REQUIRE(bd3.size() == 2);
    CHECK(bd3[0] == rat(3, 4));
    CHECK(bd3[1] == 1);
}

TEST_CASE("queries near arbitrary points") {
    PeriodicSet z2 = catalog_make("z2");
    RVec center{rat(1, 2), rat(1, 2)};
    CHECK(nearest_site_sq_dist(z2, center) == rat(1, 2));
    auto near = enumerate_near_point(z2, center, rat(1, 2));
    CHECK(near.size() == 4);  // the four corners
    PeriodicSet d5 = catalog_make("d5_plus");
    RVec deep{rat(1, 2), rat(1, 2), rat(1, 4), Rat(0), Rat(0)};
    CHECK(nearest_site_sq_dist(d5, deep) == rat(9, 16));
    RVec half{rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2), Rat(0)};
    CHECK(nearest_site_sq_dist(d5, half) == rat(1, 4));
}

TEST_CASE("surd-radius enumeration agrees with rational filtering") {
    PeriodicSet z2 = catalog_make("z2");
    // radius^2 = 2 + sqrt(2) ~ 3.414: strictly between the breakpoints 3 and 4
    auto surd = enumerate_in_ball_surd(z2, z2.origin(0), Rat(2), Rat(1), Rat(2));
    auto outer = enumerate_in_ball(z2, z2.origin(0), Rat(4));
    size_t expected = 0;
    for (const auto& b : outer)
        if (b.sq_dist <= 3) ++expected;
    CHECK(surd.size() == expected);
    // a rational surd behaves exactly like the plain ball
    auto plain = enumerate_in_ball_surd(z2, z2.origin(0), Rat(2), Rat(0), Rat(0));
    CHECK(plain.size() == enumerate_in_ball(z2, z2.origin(0), Rat(2)).size());
}

TEST_CASE("lattice symmetry groups") {
    CHECK(gram_automorphisms(catalog_make("z1").gram).order == 2);
    CHECK(gram_automorphisms(catalog_make("z2").gram).order == 8);
    CHECK(gram_automorphisms(catalog_make("hexagonal").gram).order == 12);
    CHECK(gram_automorphisms(catalog_make("z3").gram).order == 48);
    CHECK(gram_automorphisms(catalog_make("z4").gram).order == 384);
    GramMatrix stretched(RMat{{Rat(1), Rat(0)}, {Rat(0), Rat(9)}});
    CHECK(gram_automorphisms(stretched).order == 4);  // axis flips only
}

TEST_CASE("lattice symmetry groups match the box search") {
    for (const char* name : {"z1", "z2", "hexagonal", "z3"}) {
        GramAutoGroup g = gram_automorphisms(catalog_make(name).gram);
        CHECK(g.order == oracle::gram_auto_count_box(catalog_make(name).gram, 2));
    }
}

TEST_CASE("symmetry group elements form a group") {
    GramAutoGroup g = gram_automorphisms(catalog_make("hexagonal").gram);
    REQUIRE(g.elements.size() == 12);
    auto contains = [&](const IMat& u) {
        for (const auto& e : g.elements)
            if (e == u) return true;
        return false;
    };
    for (const auto& a : g.elements)
        for (const auto& b : g.elements) CHECK(contains(imat_mul(a, b)));
    for (const auto& gen : g.generators) CHECK(contains(gen));
}

TEST_CASE("enumeration fuzzing against the box scan") {
    auto r = suites::suite_enumeration_vs_box(110, 987654321ull);
    INFO(r.detail);
    CHECK(r.ok);
    CHECK(r.cases >= 100);
}
