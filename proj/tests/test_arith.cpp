#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace rnfq;
using namespace rnfq::testutil;

TEST_CASE("floor_frac on rationals") {
    auto [f1, r1] = floor_frac(make_rat(7, 3));
    CHECK(f1 == 2);
    CHECK(r1 == make_rat(1, 3));
    auto [f2, r2] = floor_frac(make_rat(-7, 3));
    CHECK(f2 == -3);
    CHECK(r2 == make_rat(2, 3));
    // nested floors collapse: floor(floor(17/4)/2) == floor(17/8)
    CHECK(floor_div(floor_rat(make_rat(17, 4)), 2) == floor_rat(make_rat(17, 8)));
    CHECK(floor_div(floor_rat(make_rat(17, 4)), 2) == 2);
}

TEST_CASE("gcd and lcm lists") {
    CHECK(gcd_many({6, 9, 18}) == 3);
    CHECK(lcm_many({6, 9, 18}) == 18);
    CHECK(gcd_many({}) == 0);
    CHECK(gcd_many({0, 0}) == 0);
    CHECK(gcd_many({-4, 6}) == 2);
    CHECK_THROWS_AS(lcm_many({}), Error);
    CHECK_THROWS_AS(lcm_many({2, 0}), Error);
}

TEST_CASE("bezout determinism and identity") {
    auto b = bezout(3, 5);
    CHECK(b.u == 2);
    CHECK(b.v == -1);
    CHECK(b.g == 1);
    auto b2 = bezout(1, 7);
    CHECK(b2.u == 1);
    CHECK(b2.v == 0);
    auto b3 = bezout(6, 9);
    CHECK(b3.g == 3);
    CHECK(b3.u * 6 + b3.v * 9 == 3);
    CHECK(abs(b3.u) * 2 * b3.g <= 9);
    CHECK_THROWS_AS(bezout(0, 0), Error);
    Rng rng(7);
    for (int it = 0; it < 500; ++it) {
        Int a = rnd(rng, -50, 50), b4 = rnd(rng, -50, 50);
        if (a == 0 && b4 == 0) continue;
        auto z = bezout(a, b4);
        CHECK(z.u * a + z.v * b4 == z.g);
        CHECK(z.g == gcd_int(a, b4));
        CHECK(z.g >= 0);
    }
}

TEST_CASE("crt_solve") {
    auto r1 = crt_solve({{1, 3}, {1, 3}});
    REQUIRE(r1);
    CHECK(r1->residue == 1);
    CHECK(r1->modulus == 3);
    CHECK(!crt_solve({{1, 2}, {0, 2}}));
    auto r2 = crt_solve({{2, 3}, {3, 5}});
    REQUIRE(r2);
    CHECK(r2->residue == 8);
    CHECK(r2->modulus == 15);
    // brute-force oracle on random systems
    Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        std::vector<Congruence> sys;
        Int lcm = 1;
        for (int k = 0; k < 3; ++k) {
            Int m = rnd(rng, 1, 12);
            sys.push_back({rnd(rng, -10, 10), m});
            lcm = lcm_int(lcm, m);
        }
        std::optional<Int> brute;
        for (Int x = 0; x < lcm; ++x) {
            bool ok = true;
            for (const auto& c : sys) ok = ok && mod_floor(x - c.residue, c.modulus) == 0;
            if (ok) { brute = x; break; }
        }
        auto got = crt_solve(sys);
        CHECK(static_cast<bool>(got) == static_cast<bool>(brute));
        if (got && brute) {
            CHECK(got->modulus == lcm);
            CHECK(mod_floor(got->residue, lcm) == *brute);
        }
    }
}

TEST_CASE("lcm_via_complements evaluates the complement-gcd quotient") {
    CHECK(lcm_via_complements({2, 3, 6}, {1, 1, 1}) == 6);
    CHECK(lcm_via_complements({3, 3, 3, 3}, {1, 2, 1, 2}) == 3);
    CHECK(lcm_via_complements({6, 9, 18}, {5, 1, 1}) == 18);
    CHECK_THROWS_AS(lcm_via_complements({4, 2}, {2, 1}), Error);   // non-coprime
    CHECK_THROWS_AS(lcm_via_complements({2, 3}, {1, 1}), Error);   // non-integral sum
}

TEST_CASE("floor and gcd identities on random samples") {
    Rng rng(23);
    for (int it = 0; it < 1000; ++it) {
        // floor(floor(a)/n) == floor(a/n); ceil((m+1)/n) == floor(m/n)+1;
        // floor((-1-m)/n) == -1-floor(m/n)
        Rat a = make_rat(rnd(rng, -400, 400), rnd(rng, 1, 40));
        Int n = rnd(rng, 1, 25);
        Int m = rnd(rng, -300, 300);
        CHECK(floor_div(floor_rat(a), n) == floor_rat(a / n));
        CHECK(ceil_rat(make_rat(m + 1, n)) == floor_div(m, n) + 1);
        CHECK(floor_div(-1 - m, n) == -1 - floor_div(m, n));
    }
    for (int it = 0; it < 1000; ++it) {
        // gcd(m_i / gcd(k, m_i)) == gcd(m_i) / gcd(k, m_1..m_r)
        Int k = rnd(rng, -60, 60);
        std::vector<Int> ms, scaled;
        for (int i = 0; i < 4; ++i) {
            Int m = rnd(rng, 1, 120);
            ms.push_back(m);
            scaled.push_back(m / gcd_int(k, m));
        }
        std::vector<Int> all = ms;
        all.push_back(k);
        CHECK(gcd_many(scaled) == gcd_many(ms) / gcd_many(all));
        // lcm(m/m_i) == m / gcd(m_i) for any common multiple m
        Int m = lcm_many(ms) * rnd(rng, 1, 4);
        std::vector<Int> comp;
        for (const auto& mi : ms) comp.push_back(m / mi);
        CHECK(lcm_many(comp) == m / gcd_many(ms));
    }
}

TEST_CASE("lcm_via_complements equals lcm_many on admissible tuples") {
    Rng rng(37);
    int done = 0;
    while (done < 1000) {
        auto S = random_surface(rng, 5, 12, true);
        std::vector<Int> ds, qs;
        for (const auto& [d, q] : S.pairs()) {
            ds.push_back(d);
            qs.push_back(q);
        }
        CHECK(lcm_via_complements(ds, qs) == lcm_many(ds));
        ++done;
    }
}
