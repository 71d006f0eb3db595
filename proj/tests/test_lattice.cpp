#include <catch2/catch_amalgamated.hpp>

#include "toric/config.hpp"
#include "toric/faces.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

const IntMat kTwistedCubic = {{1, 1, 1, 1}, {0, 1, 2, 3}};
const IntMat kThreeByFive = {{1, 1, 1, 1, 1}, {0, 3, 4, 5, 6}, {0, 0, 7, 8, 9}};
const IntMat kPaperGale = {{2, 4}, {-1, -2}, {-5, -9}, {1, 0}, {3, 7}};
const IntMat kTriangle = {
    {5, 0, 0, 2, 1, 0}, {0, 5, 0, 1, 4, 2}, {0, 0, 5, 2, 0, 3}};
const IntMat kFalseEmpty = {{1, 3, 2, 4}, {1, 4, 5, 2}};

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("check_configuration accepts pointed configurations") {
    auto cfg = check_configuration({{7, 9, 13, 15}});
    CHECK(cfg.d == 1);
    CHECK(cfg.n == 4);
    for (const Int& g : cfg.grading) CHECK(g >= 1);

    auto tc = check_configuration(kTwistedCubic);
    CHECK(tc.d == 2);
    for (int j = 0; j < tc.n; ++j) {
        Rat s = 0;
        for (int i = 0; i < tc.d; ++i) s += tc.grading_y[i] * Rat(tc.a[i][j]);
        CHECK(s == Rat(tc.grading[j]));
    }
}

TEST_CASE("check_configuration rejects bad input") {
    CHECK_THROWS_AS(check_configuration({{1, 2}, {2, 4}}), RankDeficientError);
    try {
        check_configuration({{1, -1}});
        FAIL("expected NotPointedError");
    } catch (const NotPointedError& e) {
        REQUIRE(e.counterexample.size() == 2);
        CHECK(e.counterexample == iv({1, 1}));
    }
}

TEST_CASE("gale dual spans the saturated kernel lattice") {
    auto tc = check_configuration(kTwistedCubic);
    auto g = gale_dual(tc);
    REQUIRE(g.k == 2);
    CHECK(in_column_lattice(g, iv({1, -2, 1, 0})));
    CHECK(in_column_lattice(g, iv({2, -3, 0, 1})));
    CHECK_FALSE(in_column_lattice(g, iv({1, 0, 0, 0})));

    auto idcfg = check_configuration({{1, 0}, {0, 1}});
    CHECK(gale_dual(idcfg).k == 0);

    auto c345 = check_configuration({{3, 4, 5}});
    auto g345 = gale_dual(c345);
    CHECK(in_column_lattice(g345, iv({4, -3, 0})));
    CHECK(in_column_lattice(g345, iv({0, 5, -4})));
}

TEST_CASE("gale_dual_from validates") {
    auto cfg = check_configuration(kThreeByFive);
    auto g = gale_dual_from(cfg, kPaperGale);
    CHECK(g.k == 2);
    IntMat unsaturated = kPaperGale;
    for (auto& row : unsaturated)
        for (auto& x : row) x *= 2;
    CHECK_THROWS(gale_dual_from(cfg, unsaturated));
}

TEST_CASE("fiber enumeration matches the paper degree-17 example") {
    auto cfg = check_configuration({{3, 4, 5}});
    auto f = enumerate_fiber(cfg, iv({17}));
    std::vector<IntVec> expect = {iv({0, 3, 1}), iv({1, 1, 2}), iv({3, 2, 0}),
                                  iv({4, 0, 1})};
    CHECK(f.points == expect);

    CHECK(enumerate_fiber(cfg, iv({0})).points ==
          std::vector<IntVec>{iv({0, 0, 0})});

    auto c6 = check_configuration({{6, 13, 19}});
    auto f57 = enumerate_fiber(c6, iv({57}));
    for (long j = 0; j <= 3; ++j) {
        IntVec p = iv({j, j, 3 - j});
        CHECK(std::count(f57.points.begin(), f57.points.end(), p) == 1);
    }
}

TEST_CASE("fiber enumeration equals brute force box search") {
    auto cfg = check_configuration(kFalseEmpty);
    IntVec b = iv({11, 13});
    auto f = enumerate_fiber(cfg, b);
    std::vector<IntVec> brute;
    for (long u0 = 0; u0 <= 13; ++u0)
        for (long u1 = 0; u1 <= 5; ++u1)
            for (long u2 = 0; u2 <= 6; ++u2)
                for (long u3 = 0; u3 <= 4; ++u3) {
                    IntVec u = iv({u0, u1, u2, u3});
                    if (matvec(cfg.a, u) == b) brute.push_back(u);
                }
    std::sort(brute.begin(), brute.end());
    CHECK(f.points == brute);
    CHECK_FALSE(f.points.empty());
}

TEST_CASE("Q polytope lattice points: the 3x5 example") {
    auto cfg = check_configuration(kThreeByFive);
    auto g = gale_dual_from(cfg, kPaperGale);
    RatVec omega = {Rat(1000), Rat(100), Rat(10), Rat(1), Rat(0)};

    QPolytope q{g, iv({0, 0, 0, 4, 3}), {0, 1}, omega};
    auto wb = omega_b(q);
    CHECK(wb[0] == Rat(1851));
    CHECK(wb[1] == Rat(3710));

    auto pts = lattice_points(q);
    std::vector<IntVec> expect = {iv({0, 0}), iv({1, 0}), iv({3, -1})};
    CHECK(pts == expect);

    QPolytope q0{g, iv({0, 0, 0, 4, 3}), {}, omega};
    CHECK(lattice_points(q0) == std::vector<IntVec>{iv({0, 0})});

    QPolytope qz{g, IntVec(5, 0), {}, omega};
    CHECK(lattice_points(qz) == std::vector<IntVec>{iv({0, 0})});
}

TEST_CASE("m_of_z on the 3x5 example") {
    auto cfg = check_configuration(kThreeByFive);
    auto g = gale_dual_from(cfg, kPaperGale);
    IntVec u = iv({0, 0, 0, 4, 3});
    CHECK(m_of_z(u, iv({1, 0}), g) == iv({2, 0, 0, 0, 0}));
    CHECK(m_of_z(u, iv({3, -1}), g) == iv({2, 0, 0, 0, 0}));
    CHECK(m_of_z(u, iv({0, 0}), g) == IntVec(5, 0));
}

TEST_CASE("m_of_z support stays inside sigma") {
    auto cfg = check_configuration(kThreeByFive);
    auto g = gale_dual_from(cfg, kPaperGale);
    RatVec omega = {Rat(1000), Rat(100), Rat(10), Rat(1), Rat(0)};
    IndexSet sigma = {0, 1};
    QPolytope q{g, iv({0, 0, 0, 4, 3}), sigma, omega};
    for (const IntVec& z : lattice_points(q)) {
        IntVec m = m_of_z(q.u, z, g);
        CHECK(subset(support(m), sigma));
        CHECK(is_nonnegative(add(sub(q.u, sub(q.u, m)), IntVec(5, 0))));
        // u + m_z - B z is nonnegative
        IntVec bz(5, 0);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 2; ++j) bz[i] += g.b[i][j] * z[j];
        CHECK(is_nonnegative(sub(add(q.u, m), bz)));
    }
}

TEST_CASE("relaxing rows never removes lattice points") {
    auto cfg = check_configuration(kThreeByFive);
    auto g = gale_dual_from(cfg, kPaperGale);
    RatVec omega = {Rat(1000), Rat(100), Rat(10), Rat(1), Rat(0)};
    IntVec u = iv({0, 0, 0, 4, 3});
    QPolytope small{g, u, {0}, omega};
    QPolytope big{g, u, {0, 1}, omega};
    auto ps = lattice_points(small);
    auto pb = lattice_points(big);
    for (const IntVec& z : ps)
        CHECK(std::count(pb.begin(), pb.end(), z) == 1);
}

TEST_CASE("faces of the triangle cone") {
    auto cfg = check_configuration(kTriangle);
    auto faces = proper_faces(cfg);
    std::set<IndexSet> got;
    for (const auto& f : faces) got.insert(f.indices);
    std::set<IndexSet> expect = {{0, 1, 4}, {1, 2, 5}, {0, 2}, {0}, {1}, {2}, {}};
    CHECK(got == expect);
    // supporting functionals are valid
    for (const auto& f : faces) {
        for (int j = 0; j < cfg.n; ++j) {
            Int s = 0;
            for (int i = 0; i < cfg.d; ++i) s += f.support_functional[i] * cfg.a[i][j];
            if (f.indices.count(j))
                CHECK(s == 0);
            else
                CHECK(s < 0);
        }
    }
}

TEST_CASE("faces of falseempty and the identity") {
    auto cfg = check_configuration(kFalseEmpty);
    std::set<IndexSet> got;
    for (const auto& f : proper_faces(cfg)) got.insert(f.indices);
    CHECK(got == std::set<IndexSet>{{2}, {3}, {}});

    auto id2 = check_configuration({{1, 0}, {0, 1}});
    std::set<IndexSet> gid;
    for (const auto& f : faces_of_cone(id2)) gid.insert(f.indices);
    CHECK(gid == std::set<IndexSet>{{}, {0}, {1}, {0, 1}});
}

TEST_CASE("face sets are closed under intersection") {
    for (const IntMat& m : {kTriangle, kThreeByFive}) {
        auto cfg = check_configuration(m);
        auto faces = faces_of_cone(cfg);
        std::set<IndexSet> all;
        for (const auto& f : faces) all.insert(f.indices);
        for (const auto& f : faces)
            for (const auto& g : faces)
                CHECK(all.count(set_intersect(f.indices, g.indices)) == 1);
    }
}

TEST_CASE("smoothness of vertices") {
    IntMat smoothex = {{1, 1, 1, 1, 1}, {0, 3, 4, 5, 5}, {0, 1, 1, 1, 2}};
    auto cfg = check_configuration(smoothex);
    CHECK_FALSE(is_smooth_face(cfg, {0}));  // vertex (0,0)
    CHECK_FALSE(is_smooth_face(cfg, {3}));  // vertex (5,1)
    CHECK_FALSE(is_smooth_face(cfg, {4}));  // vertex (5,2)

    // unit simplex at height one: every vertex smooth
    auto simplex = check_configuration({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}});
    CHECK(is_smooth_face(simplex, {0}));
    CHECK(is_smooth_face(simplex, {1}));
    CHECK(is_smooth_face(simplex, {2}));

    CHECK_THROWS_AS(is_smooth_face(check_configuration({{3, 4, 5}}), {0}),
                    NotGradedError);
}
