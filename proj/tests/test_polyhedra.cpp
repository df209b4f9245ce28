#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace ordcone;
using Catch::Matchers::ContainsSubstring;

namespace {

// constraint in internal form: linear . x + constant >= 0
AffineFunctional geq0(QVector linear, Rational constant) {
    AffineFunctional f;
    f.linear = std::move(linear);
    f.constant = std::move(constant);
    return f;
}

// constraint a . x <= b
AffineFunctional leq(const QVector& a, const Rational& b) {
    return geq0(q_scale(Rational(-1), a), b);
}

bool witness_satisfies(const ConvexDomain& d, const QVector& w) {
    for (const AffineFunctional& f : d.constraints())
        if (f(w) < 0) return false;
    return true;
}

ConvexDomain random_system(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dim_d(1, 3);
    std::uniform_int_distribution<std::size_t> count_d(1, 6);
    std::uniform_int_distribution<int> entry(-3, 3);
    const std::size_t dim = dim_d(rng);
    std::vector<AffineFunctional> cs;
    const std::size_t count = count_d(rng);
    for (std::size_t i = 0; i < count; ++i) {
        QVector lin(dim, Rational(0));
        for (std::size_t j = 0; j < dim; ++j) lin[j] = entry(rng);
        cs.push_back(geq0(std::move(lin), entry(rng)));
    }
    return ConvexDomain(dim, std::move(cs));
}

}  // namespace

TEST_CASE("eliminate_variable on pinned systems") {
    SECTION("triangle, eliminate y") {
        const ConvexDomain d(
            2, {leq({1, 1}, 1), geq0({1, 0}, 0), geq0({0, 1}, 0)});
        const ConvexDomain e = eliminate_variable(d, 1);
        REQUIRE(e.dimension() == 1);
        CHECK(e.contains({Rational(0)}));
        CHECK(e.contains({Rational(1)}));
        CHECK(e.contains({Rational(1, 2)}));
        CHECK_FALSE(e.contains({Rational(-1, 12)}));
        CHECK_FALSE(e.contains({Rational(13, 12)}));
    }
    SECTION("whole plane stays whole line") {
        const ConvexDomain e = eliminate_variable(ConvexDomain::whole_space(2), 0);
        CHECK(e.dimension() == 1);
        CHECK(e.constraints().empty());
    }
    SECTION("infeasible y-band projects to infeasible line") {
        const ConvexDomain d(2, {geq0({0, 1}, -1), geq0({0, -1}, 0)});  // y >= 1, y <= 0
        const ConvexDomain e = eliminate_variable(d, 1);
        CHECK(e.dimension() == 1);
        CHECK_FALSE(is_satisfiable(e).satisfiable);
    }
    SECTION("index out of range") {
        CHECK_THROWS_AS(eliminate_variable(ConvexDomain::whole_space(2), 2), std::out_of_range);
    }
}

TEST_CASE("is_satisfiable on pinned systems") {
    SECTION("empty system") {
        const SatResult r = is_satisfiable(ConvexDomain::whole_space(2));
        REQUIRE(r.satisfiable);
        CHECK(*r.witness == QVector{0, 0});
    }
    SECTION("x <= 0, x >= 1") {
        const ConvexDomain d(1, {geq0({-1}, 0), geq0({1}, -1)});
        const SatResult r = is_satisfiable(d);
        CHECK_FALSE(r.satisfiable);
        CHECK_FALSE(r.witness.has_value());
    }
    SECTION("triangle witness passes substitution") {
        const ConvexDomain d(2, {leq({1, 1}, 1), geq0({1, 0}, 0), geq0({0, 1}, 0)});
        const SatResult r = is_satisfiable(d);
        REQUIRE(r.satisfiable);
        CHECK(witness_satisfies(d, *r.witness));
    }
}

TEST_CASE("project on pinned systems") {
    SECTION("keep all coordinates is the identity") {
        const ConvexDomain d(2, {leq({1, 1}, 1), geq0({1, 0}, 0)});
        const ConvexDomain p = project(d, {0, 1});
        REQUIRE(p.dimension() == 2);
        CHECK(p.constraints().size() == d.constraints().size());
    }
    SECTION("unit square onto x") {
        const ConvexDomain square(2, {geq0({1, 0}, 0), leq({1, 0}, 1), geq0({0, 1}, 0),
                                      leq({0, 1}, 1)});
        const ConvexDomain p = project(square, {0});
        REQUIRE(p.dimension() == 1);
        CHECK(p.contains({Rational(0)}));
        CHECK(p.contains({Rational(1)}));
        CHECK_FALSE(p.contains({Rational(-1, 4)}));
        CHECK_FALSE(p.contains({Rational(5, 4)}));
    }
    SECTION("half-plane onto y is the whole line") {
        const ConvexDomain d(2, {geq0({1, -1}, 0)});  // x - y >= 0
        const ConvexDomain p = project(d, {1});
        REQUIRE(p.dimension() == 1);
        CHECK(p.constraints().empty());
        CHECK(p.contains({Rational(-5)}));
    }
    SECTION("keep index out of range") {
        CHECK_THROWS_AS(project(ConvexDomain::whole_space(2), {2}), std::out_of_range);
    }
}

TEST_CASE("separate_from_origin on pinned systems") {
    SECTION("x >= 1") {
        const QVector p = separate_from_origin(ConvexDomain(1, {geq0({1}, -1)}));
        CHECK(p == QVector{1});
    }
    SECTION("x + y >= 2") {
        const QVector p = separate_from_origin(ConvexDomain(2, {geq0({1, 1}, -2)}));
        CHECK(p == QVector{Rational(1, 2), Rational(1, 2)});
    }
    SECTION("third constraint is the violated one") {
        const ConvexDomain d(2, {geq0({1, 0}, 0), geq0({0, 1}, 0), geq0({1, 1}, -3)});
        const QVector p = separate_from_origin(d);
        CHECK(p == QVector{Rational(1, 3), Rational(1, 3)});
    }
    SECTION("errors") {
        CHECK_THROWS_WITH(separate_from_origin(ConvexDomain(1, {geq0({-1}, 0), geq0({1}, -1)})),
                          ContainsSubstring("empty domain"));
        CHECK_THROWS_WITH(separate_from_origin(ConvexDomain::whole_space(1)),
                          ContainsSubstring("origin not separated"));
    }
}

TEST_CASE("separate_on_hyperplane on pinned systems") {
    SECTION("a inside D fails the precondition") {
        const ConvexDomain d(1, {geq0({1}, -1), geq0({-1}, 1)});  // {1}
        CHECK_THROWS_WITH(separate_on_hyperplane(d, {Rational(1)}, {Rational(1)}),
                          ContainsSubstring("not separated"));
    }
    SECTION("segment in x+y=1 versus (2,-1)") {
        const ConvexDomain d(2, {geq0({1, 0}, 0), geq0({0, 1}, 0), geq0({1, 1}, -1),
                                 geq0({-1, -1}, 1)});
        const QVector r{1, 1};
        const QVector a{2, -1};
        const QVector p = separate_on_hyperplane(d, r, a);
        CHECK(q_dot(p, a) == 0);
        CHECK(q_dot(p, QVector{1, 0}) >= 1);
        CHECK(q_dot(p, QVector{0, 1}) >= 1);
    }
    SECTION("point in the 3-simplex hyperplane") {
        const ConvexDomain d(3, {geq0({1, 0, 0}, -1), geq0({-1, 0, 0}, 1), geq0({0, 1, 0}, 0),
                                 geq0({0, -1, 0}, 0), geq0({0, 0, 1}, 0), geq0({0, 0, -1}, 0)});
        const QVector r{1, 1, 1};
        const QVector a{0, 1, 0};
        const QVector p = separate_on_hyperplane(d, r, a);
        CHECK(q_dot(p, a) == 0);
        CHECK(q_dot(p, QVector{1, 0, 0}) >= 1);
    }
    SECTION("r . a != 1 is rejected") {
        const ConvexDomain d(2, {geq0({1, 0}, -1), geq0({-1, 0}, 1)});
        CHECK_THROWS_WITH(separate_on_hyperplane(d, {Rational(1), Rational(0)},
                                                 {Rational(2), Rational(0)}),
                          ContainsSubstring("r . a != 1"));
    }
}

TEST_CASE("hull_to_halfspaces on pinned hulls") {
    SECTION("segment {0,1}") {
        const ConvexDomain d = hull_to_halfspaces(VPolytope(1, {{Rational(0)}, {Rational(1)}}));
        CHECK(d.contains({Rational(0)}));
        CHECK(d.contains({Rational(1)}));
        CHECK(d.contains({Rational(1, 2)}));
        CHECK_FALSE(d.contains({Rational(-1, 12)}));
        CHECK_FALSE(d.contains({Rational(9, 8)}));
    }
    SECTION("triangle agrees with convex-combination membership on a grid") {
        const VPolytope tri(2, {{0, 0}, {1, 0}, {0, 1}});
        const ConvexDomain d = hull_to_halfspaces(tri);
        for (int i = -6; i <= 12; ++i) {
            if (std::gcd(i, 6) < 2 && i != 0) continue;  // denominators <= 3 only
            for (int j = -6; j <= 12; ++j) {
                if (std::gcd(j, 6) < 2 && j != 0) continue;
                const QVector x{Rational(i, 6), Rational(j, 6)};
                CHECK(d.contains(x) == hull_membership(x, tri));
            }
        }
    }
    SECTION("single point pins both coordinates") {
        const ConvexDomain d = hull_to_halfspaces(VPolytope(2, {{2, 5}}));
        CHECK(d.contains({2, 5}));
        CHECK_FALSE(d.contains({2, Rational(21, 4)}));
        CHECK_FALSE(d.contains({Rational(9, 4), 5}));
        const SatResult r = is_satisfiable(d);
        REQUIRE(r.satisfiable);
        CHECK(*r.witness == QVector{2, 5});
    }
    SECTION("empty hull is rejected") {
        CHECK_THROWS_WITH(hull_to_halfspaces(VPolytope(2, {})), ContainsSubstring("empty hull"));
    }
}

TEST_CASE("halfspaces_to_hull on pinned systems") {
    SECTION("interval") {
        const VPolytope v = halfspaces_to_hull(ConvexDomain(1, {geq0({1}, 0), leq({1}, 1)}));
        CHECK(v.points() == std::vector<QVector>{{Rational(0)}, {Rational(1)}});
    }
    SECTION("unit square") {
        const ConvexDomain square(2, {geq0({1, 0}, 0), leq({1, 0}, 1), geq0({0, 1}, 0),
                                      leq({0, 1}, 1)});
        const VPolytope v = halfspaces_to_hull(square);
        CHECK(v.points() ==
              std::vector<QVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});  // lexicographic
    }
    SECTION("triangle") {
        const ConvexDomain t(2, {geq0({1, 0}, 0), geq0({0, 1}, 0), leq({1, 1}, 1)});
        const VPolytope v = halfspaces_to_hull(t);
        CHECK(v.points() == std::vector<QVector>{{0, 0}, {0, 1}, {1, 0}});
    }
    SECTION("unbounded is rejected, empty gives the empty polytope") {
        CHECK_THROWS_WITH(halfspaces_to_hull(ConvexDomain(2, {geq0({1, 0}, 0), geq0({0, 1}, 0)})),
                          ContainsSubstring("not a polytope"));
        const VPolytope v = halfspaces_to_hull(ConvexDomain(1, {geq0({-1}, 0), geq0({1}, -1)}));
        CHECK(v.points().empty());
    }
}

TEST_CASE("is_bounded") {
    CHECK_FALSE(is_bounded(ConvexDomain(2, {geq0({1, 0}, 0), geq0({0, 1}, 0)})));
    CHECK(is_bounded(ConvexDomain(2, {geq0({1, 0}, 0), leq({1, 0}, 1), geq0({0, 1}, 0),
                                      leq({0, 1}, 1)})));
    CHECK(is_bounded(ConvexDomain(1, {geq0({-1}, 0), geq0({1}, -1)})));  // empty counts as bounded
}

TEST_CASE("hull_membership") {
    CHECK(hull_membership({Rational(1, 2)}, VPolytope(1, {{0}, {1}})));
    const VPolytope tri(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK_FALSE(hull_membership({1, 1}, tri));
    CHECK(hull_membership({Rational(1, 3), Rational(1, 3)}, tri));
}

TEST_CASE("property: witness validity and elimination preserves satisfiability") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 60; ++t) {
        const ConvexDomain d = random_system(rng);
        const SatResult r = is_satisfiable(d);
        if (r.satisfiable) CHECK(witness_satisfies(d, *r.witness));
        for (std::size_t j = 0; j < d.dimension(); ++j)
            CHECK(is_satisfiable(eliminate_variable(d, j)).satisfiable == r.satisfiable);
    }
}

TEST_CASE("property: projection matches fiber satisfiability on the grid") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> entry(-3, 3);
    int done = 0;
    while (done < 20) {
        const ConvexDomain d = random_system(rng);
        if (d.dimension() < 2) continue;
        ++done;
        const std::vector<std::size_t> keep{0};
        const ConvexDomain p = project(d, keep);
        const auto pscaled = oracle::scale_constraints(p);
        const auto dscaled = oracle::scale_constraints(d);
        for (std::int64_t k : oracle::grid_numerators()) {
            bool in_projection = true;
            for (const auto& c : pscaled)
                if (c.constant + c.coeff[0] * k < 0) {
                    in_projection = false;
                    break;
                }
            std::vector<oracle::FiberRow> rows;
            for (const auto& c : dscaled) {
                oracle::FiberRow row;
                row.constant = c.constant + c.coeff[0] * k;
                for (std::size_t j = 1; j < d.dimension(); ++j)
                    row.coeff.push_back(12 * c.coeff[j]);
                rows.push_back(std::move(row));
            }
            const bool fiber = oracle::fiber_feasible(std::move(rows), d.dimension() - 1);
            CHECK(in_projection == fiber);
        }
    }
}

TEST_CASE("property: V to H to V roundtrip preserves the hull") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::size_t> dim_d(1, 3);
    std::uniform_int_distribution<std::size_t> count_d(1, 6);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int t = 0; t < 30; ++t) {
        const std::size_t dim = dim_d(rng);
        std::vector<QVector> pts;
        const std::size_t count = count_d(rng);
        for (std::size_t i = 0; i < count; ++i) {
            QVector p(dim, Rational(0));
            for (std::size_t j = 0; j < dim; ++j) p[j] = entry(rng);
            pts.push_back(std::move(p));
        }
        const VPolytope v(dim, pts);
        const VPolytope w = halfspaces_to_hull(hull_to_halfspaces(v));
        for (const QVector& p : v.points()) CHECK(hull_membership(p, w));
        for (const QVector& p : w.points()) CHECK(hull_membership(p, v));
    }
}

TEST_CASE("property: separation functional is >= 1 on all vertices") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> dim_d(1, 3);
    std::uniform_int_distribution<std::size_t> count_d(1, 5);
    std::uniform_int_distribution<int> entry(-3, 3);
    int done = 0;
    while (done < 20) {
        const std::size_t dim = dim_d(rng);
        std::vector<QVector> pts;
        const std::size_t count = count_d(rng);
        for (std::size_t i = 0; i < count; ++i) {
            QVector p(dim, Rational(0));
            for (std::size_t j = 0; j < dim; ++j) p[j] = entry(rng);
            pts.push_back(std::move(p));
        }
        const VPolytope v(dim, pts);
        if (hull_membership(QVector(dim, Rational(0)), v)) continue;
        ++done;
        const ConvexDomain d = hull_to_halfspaces(v);
        const QVector p = separate_from_origin(d);
        const VPolytope w = halfspaces_to_hull(d);
        for (const QVector& vertex : w.points()) CHECK(q_dot(p, vertex) >= 1);
    }
}
