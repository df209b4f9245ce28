#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace ordcone;
using Catch::Matchers::ContainsSubstring;

namespace {

IntVector iv(std::initializer_list<long long> xs) {
    IntVector v(xs.size());
    std::size_t i = 0;
    for (long long x : xs) v[i++] = x;
    return v;
}

FinGenMonoid two_gen() { return FinGenMonoid(2, {iv({2, 0}), iv({1, 1})}); }

FinGenMonoid quadrant() { return FinGenMonoid(2, {iv({1, 0}), iv({0, 1})}); }

FinGenMonoid seven_gen() {
    return FinGenMonoid(2, {iv({2, 0}), iv({1, 1}), iv({0, 2}), iv({3, 0}), iv({2, 1}),
                            iv({1, 2}), iv({0, 3})});
}

FinGenMonoid two_three() { return FinGenMonoid(1, {iv({2}), iv({3})}); }

std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

IntVector recompose(const FinGenMonoid& m, const MembershipCertificate& cert) {
    IntVector sum(m.dimension());
    for (std::size_t i = 0; i < m.gens().size(); ++i)
        if (cert.coefficients[i] != 0) sum += m.gens()[i] * cert.coefficients[i];
    return sum;
}

FinGenMonoid random_monoid(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> dim_d(1, 3);
    std::uniform_int_distribution<std::size_t> count_d(1, 4);
    std::uniform_int_distribution<int> entry(0, 3);
    const std::size_t dim = dim_d(rng);
    std::vector<IntVector> gens;
    const std::size_t count = count_d(rng);
    while (gens.size() < count) {
        IntVector g(dim);
        for (std::size_t i = 0; i < dim; ++i) g[i] = entry(rng);
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    return FinGenMonoid(dim, std::move(gens));
}

IntVector random_element(std::mt19937_64& rng, const FinGenMonoid& m, int max_coeff) {
    std::uniform_int_distribution<int> coeff(0, max_coeff);
    IntVector x(m.dimension());
    for (const IntVector& g : m.gens()) {
        const int c = coeff(rng);
        if (c != 0) x += g * Int(c);
    }
    return x;
}

}  // namespace

TEST_CASE("FinGenMonoid construction validates generators") {
    CHECK_THROWS_WITH(FinGenMonoid(2, {iv({1, -1})}), ContainsSubstring("nonnegative"));
    CHECK_THROWS_WITH(FinGenMonoid(2, {iv({0, 0})}), ContainsSubstring("nonzero"));
    CHECK_THROWS_WITH(FinGenMonoid(2, {iv({1})}), ContainsSubstring("dimension"));
}

TEST_CASE("contains on pinned instances") {
    SECTION("(3,1) with certificate (1,1)") {
        const auto r = contains(two_gen(), iv({3, 1}));
        REQUIRE(r.first);
        REQUIRE(r.second.has_value());
        CHECK(r.second->coefficients == std::vector<Int>{1, 1});
    }
    SECTION("(1,0) is not reachable") {
        const auto r = contains(two_gen(), iv({1, 0}));
        CHECK_FALSE(r.first);
        CHECK_FALSE(r.second.has_value());
    }
    SECTION("seven generators contain (4,2)") {
        const auto r = contains(seven_gen(), iv({4, 2}));
        REQUIRE(r.first);
        CHECK(recompose(seven_gen(), *r.second) == iv({4, 2}));
    }
    SECTION("negative coordinate is immediately rejected") {
        const auto r = contains(two_gen(), iv({-1, 0}));
        CHECK_FALSE(r.first);
        CHECK_FALSE(r.second.has_value());
    }
    SECTION("dimension mismatch") {
        CHECK_THROWS_WITH(contains(two_gen(), iv({1})), ContainsSubstring("dimension mismatch"));
    }
}

TEST_CASE("algebraic order") {
    CHECK(algebraic_leq(seven_gen(), iv({2, 1}), iv({2, 1})));
    CHECK(algebraic_leq(quadrant(), iv({1, 0}), iv({2, 1})));
    CHECK_FALSE(algebraic_leq(seven_gen(), iv({2, 0}), iv({3, 0})));
}

TEST_CASE("minimal elements on pinned instances") {
    CHECK(as_set(minimal_elements(two_three())) == as_set({iv({2}), iv({3})}));
    CHECK(as_set(minimal_elements(FinGenMonoid(2, {iv({1, 1}), iv({2, 2})}))) ==
          as_set({iv({1, 1})}));
    CHECK(as_set(minimal_elements(seven_gen())) == as_set(seven_gen().gens()));
}

TEST_CASE("upward closure basis on pinned instances") {
    CHECK(upward_closure_basis(quadrant(), {iv({2, 1})}) == std::vector<IntVector>{iv({2, 1})});
    CHECK(upward_closure_basis(quadrant(), {iv({1, 1}), iv({2, 2}), iv({0, 3})}) ==
          std::vector<IntVector>{iv({1, 1}), iv({0, 3})});
    CHECK(upward_closure_basis(quadrant(), {iv({2, 2}), iv({1, 1})}) ==
          std::vector<IntVector>{iv({1, 1})});
    CHECK_THROWS_WITH(upward_closure_basis(two_gen(), {iv({1, 0})}),
                      ContainsSubstring("not in monoid"));
}

TEST_CASE("interval on pinned instances") {
    CHECK(interval(quadrant(), iv({1, 2}), iv({1, 2})) == std::vector<IntVector>{iv({1, 2})});
    CHECK(interval(quadrant(), iv({0, 0}), iv({1, 1})) ==
          std::vector<IntVector>{iv({0, 0}), iv({0, 1}), iv({1, 0}), iv({1, 1})});
    CHECK(interval(seven_gen(), iv({0, 0}), iv({2, 2})) ==
          std::vector<IntVector>{iv({0, 0}), iv({0, 2}), iv({1, 1}), iv({2, 0}), iv({2, 2})});
    CHECK_THROWS_WITH(interval(seven_gen(), iv({0, 0}), iv({1, 0})),
                      ContainsSubstring("empty interval precondition"));
}

TEST_CASE("saturation Hilbert basis on pinned instances") {
    CHECK(as_set(saturation_hilbert_basis(quadrant())) == as_set({iv({1, 0}), iv({0, 1})}));
    CHECK(as_set(saturation_hilbert_basis(two_three())) == as_set({iv({1})}));
    CHECK(as_set(saturation_hilbert_basis(FinGenMonoid(2, {iv({2, 0}), iv({1, 1}), iv({0, 2})}))) ==
          as_set({iv({1, 0}), iv({0, 1})}));
    SECTION("dimension bound") {
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < 5; ++i) {
            IntVector e(5);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
        CHECK_THROWS_WITH(saturation_hilbert_basis(FinGenMonoid(5, std::move(gens))),
                          ContainsSubstring("saturation bound exceeded"));
    }
}

TEST_CASE("unperforation on pinned instances") {
    SECTION("quadrant") {
        const PerforationResult r = is_unperforated(quadrant());
        CHECK(r.unperforated);
        CHECK_FALSE(r.witness.has_value());
    }
    SECTION("seven generators") {
        const PerforationResult r = is_unperforated(seven_gen());
        REQUIRE_FALSE(r.unperforated);
        CHECK(*r.witness == iv({1, 0}));
        CHECK(*r.multiplier == 2);
    }
    SECTION("<2,3>") {
        const PerforationResult r = is_unperforated(two_three());
        REQUIRE_FALSE(r.unperforated);
        CHECK(*r.witness == iv({1}));
        CHECK(*r.multiplier == 2);
    }
}

TEST_CASE("rational cone membership") {
    CHECK(cone_membership_rational(two_gen(), QVector{0, 0}));
    CHECK(cone_membership_rational(two_gen(), QVector{1, Rational(1, 2)}));
    CHECK_FALSE(cone_membership_rational(two_gen(), QVector{-1, 0}));
}

TEST_CASE("non-Archimedean witness search on pinned instances") {
    CHECK_FALSE(non_archimedean_witness(quadrant(), 4, 6).has_value());
    SECTION("seven generators") {
        const auto w = non_archimedean_witness(seven_gen(), 4, 6);
        REQUIRE(w.has_value());
        CHECK(w->a == iv({-1, 0}));
        CHECK(w->b == iv({2, 0}));
        CHECK(w->period == 2);
        // certificate conditions
        const FinGenMonoid m = seven_gen();
        CHECK_FALSE(contains(m, -w->a).first);
        CHECK(contains(m, -(w->a * w->period)).first);
        for (Int r = 0; r < w->period; ++r) CHECK(contains(m, w->b - w->a * r).first);
    }
    SECTION("<2,3>") {
        const auto w = non_archimedean_witness(two_three(), 4, 6);
        REQUIRE(w.has_value());
        CHECK(w->a == iv({-1}));
        CHECK(w->b == iv({2}));
        CHECK(w->period == 2);
    }
}

TEST_CASE("property: contains agrees with the breadth-first oracle") {
    std::mt19937_64 rng(8080);
    for (int t = 0; t < 25; ++t) {
        const FinGenMonoid m = random_monoid(rng);
        IntVector v(m.dimension());
        // iterate all vectors with coordinates in [0,6]
        while (true) {
            CHECK(contains(m, v).first == oracle::member_oracle(m, v));
            std::size_t i = m.dimension();
            bool done = true;
            while (i-- > 0) {
                if (++v[i] <= 6) {
                    done = false;
                    break;
                }
                v[i] = 0;
            }
            if (done) break;
        }
    }
}

TEST_CASE("property: certificates recompose exactly") {
    std::mt19937_64 rng(9090);
    for (int t = 0; t < 50; ++t) {
        const FinGenMonoid m = random_monoid(rng);
        const IntVector x = random_element(rng, m, 3);
        const auto r = contains(m, x);
        REQUIRE(r.first);
        CHECK(recompose(m, *r.second) == x);
    }
}

TEST_CASE("property: weak Archimedean bound") {
    std::mt19937_64 rng(1010);
    for (int t = 0; t < 40; ++t) {
        const FinGenMonoid m = random_monoid(rng);
        std::uniform_int_distribution<std::size_t> pick(0, m.gens().size() - 1);
        const IntVector a = m.gens()[pick(rng)];
        const IntVector b = random_element(rng, m, 3);
        bool escaped = false;
        const Int nmax = b.coordinate_sum() + 1;
        for (Int n = 1; n <= nmax && !escaped; ++n)
            if (!algebraic_leq(m, a * n, b)) escaped = true;
        CHECK(escaped);
    }
}

TEST_CASE("property: greedy descent terminates within the coordinate-sum bound") {
    std::mt19937_64 rng(2020);
    for (int t = 0; t < 40; ++t) {
        const FinGenMonoid m = random_monoid(rng);
        IntVector x = random_element(rng, m, 3);
        const Int bound = x.coordinate_sum();
        Int steps = 0;
        while (!x.is_zero()) {
            bool stepped = false;
            for (const IntVector& g : m.gens()) {
                const IntVector next = x - g;
                if (next.is_componentwise_nonnegative() && contains(m, next).first) {
                    x = next;
                    stepped = true;
                    break;
                }
            }
            REQUIRE(stepped);
            ++steps;
            REQUIRE(steps <= bound);
        }
    }
}

TEST_CASE("property: minimal elements generate the monoid") {
    std::mt19937_64 rng(3030);
    for (int t = 0; t < 30; ++t) {
        const FinGenMonoid m = random_monoid(rng);
        const auto mins = minimal_elements(m);
        const FinGenMonoid mm(m.dimension(), mins);
        for (const IntVector& g : m.gens()) {
            const auto r = contains(mm, g);
            REQUIRE(r.first);
            CHECK(recompose(mm, *r.second) == g);
        }
    }
}

TEST_CASE("property: upward closure basis keeps the same upward set") {
    std::mt19937_64 rng(4040);
    for (int t = 0; t < 30; ++t) {
        const FinGenMonoid m = random_monoid(rng);
        std::vector<IntVector> x;
        for (int i = 0; i < 5; ++i) x.push_back(random_element(rng, m, 2));
        const auto y = upward_closure_basis(m, x);
        for (const IntVector& xe : x) {
            bool dominated = false;
            for (const IntVector& ye : y)
                if (algebraic_leq(m, ye, xe)) {
                    dominated = true;
                    break;
                }
            CHECK(dominated);
        }
        for (const IntVector& ye : y) {
            bool present = false;
            for (const IntVector& xe : x)
                if (xe == ye) present = true;
            CHECK(present);
        }
    }
}

TEST_CASE("property: interval matches the brute-force box oracle") {
    std::mt19937_64 rng(6060);
    for (int t = 0; t < 20; ++t) {
        const FinGenMonoid m = random_monoid(rng);
        const IntVector a = random_element(rng, m, 1);
        const IntVector d = random_element(rng, m, 2);
        const IntVector b = a + d;
        const auto result = interval(m, a, b);
        // oracle: scan the componentwise box [a, b]
        std::vector<IntVector> expected;
        IntVector x = a;
        while (true) {
            if (oracle::member_oracle(m, x - a) && oracle::member_oracle(m, b - x))
                expected.push_back(x);
            std::size_t i = m.dimension();
            bool done = true;
            while (i-- > 0) {
                if (++x[i] <= b[i]) {
                    done = false;
                    break;
                }
                x[i] = a[i];
            }
            if (done) break;
        }
        std::sort(expected.begin(), expected.end());
        CHECK(result == expected);
    }
}

TEST_CASE("property: unperforated monoids admit no witness") {
    std::mt19937_64 rng(7070);
    int checked = 0;
    for (int t = 0; t < 40 && checked < 12; ++t) {
        const FinGenMonoid m = random_monoid(rng);
        if (!is_unperforated(m).unperforated) continue;
        ++checked;
        CHECK_FALSE(non_archimedean_witness(m, 4, 6).has_value());
    }
    CHECK(checked > 0);
}
