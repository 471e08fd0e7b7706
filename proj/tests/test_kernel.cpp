#include "atomlab/kernel.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace atomlab;

namespace {

MonoidValue pq(long n, long d) { return MonoidValue::puiseux(Rational(n, d)); }

std::vector<Presentation> sample_families(int depth) {
    return {
        Presentation::explicit_gens({Rational(1), Rational(2, 3), Rational(5, 7)}),
        Presentation::grams(depth),
        Presentation::gp(3, depth),
        Presentation::cyclic_sq(Rational(2, 3), depth),
        Presentation::pair_primes(depth),
        Presentation::intersect_g(1, depth),
        Presentation::intersect_g(2, depth),
    };
}

} // namespace

TEST_CASE("generators come out in canonical index order") {
    auto grams = Presentation::grams(3).generators();
    CHECK(grams == std::vector<MonoidValue>{pq(1, 6), pq(1, 20), pq(1, 56)});
    auto pp = Presentation::pair_primes(4).generators();
    CHECK(pp == std::vector<MonoidValue>{pq(1, 10), pq(1, 21), pq(1, 55), pq(1, 91)});
    auto sq = Presentation::cyclic_sq(Rational(2, 3), 2).generators();
    CHECK(sq == std::vector<MonoidValue>{pq(1, 1), pq(2, 3), pq(4, 9)});
    CHECK(Presentation::rank_two_p(3).generators().size() == 3 * 4 + 4);
    CHECK(Presentation::zaks(4).generators().size() == 3 + 2 * 4);
}

TEST_CASE("membership worked examples") {
    MonoidKernel pp(Presentation::pair_primes(4));
    CHECK(pp.member(pq(1, 2)));
    CHECK(pp.member(pq(0, 1)));
    MonoidKernel grams(Presentation::grams(3));
    CHECK(grams.member(pq(0, 1)));
    CHECK_FALSE(grams.member(pq(1, 9)));
    CHECK(grams.member(pq(1, 7))); // 1/7 = 8 * (1/56)
    CHECK_FALSE(grams.member(pq(-1, 2)));
    CHECK_FALSE(grams.member(pq(1, 11))); // needs depth 4
    CHECK(MonoidKernel(Presentation::grams(4)).member(pq(1, 11)));
    CHECK_THROWS_AS(grams.member(MonoidValue::rank_two(1, Rational(0))), TagMismatch);
}

TEST_CASE("member and divides agree with the exhaustive oracle") {
    for (const Presentation& pres : sample_families(4)) {
        MonoidKernel k(pres);
        std::vector<MonoidValue> grid;
        for (long d = 1; d <= 9; ++d)
            for (long n = 0; n <= 2 * d; ++n) grid.push_back(pq(n, d));
        int checked = 0;
        for (const MonoidValue& v : grid) {
            bool got = k.member(v);
            bool want = oracles::member_oracle(pres, v);
            CHECK_MESSAGE(got == want, pres.str(), " member(", v.str(), ")");
            ++checked;
        }
        CHECK(checked > 100);
        // divides on a small pair grid
        for (std::size_t i = 0; i < grid.size(); i += 7)
            for (std::size_t j = 0; j < grid.size(); j += 11) {
                MonoidValue diff = grid[j].minus(grid[i]);
                bool want = !diff.rational().is_negative() && oracles::member_oracle(pres, diff);
                CHECK(k.divides(grid[i], grid[j]) == want);
            }
    }
}

TEST_CASE("divides worked examples") {
    MonoidKernel pp(Presentation::pair_primes(4));
    CHECK(pp.divides(pq(1, 5), pq(1, 2))); // 1/2 = 1/5 + 3*(1/10)
    CHECK(pp.divides(pq(1, 2), pq(1, 2)));
    MonoidKernel grams(Presentation::grams(3));
    CHECK_FALSE(grams.divides(pq(1, 2), pq(1, 6)));
}

TEST_CASE("divisibility is antisymmetric") {
    MonoidKernel k(Presentation::grams(4));
    std::vector<MonoidValue> members;
    for (long d = 1; d <= 8; ++d)
        for (long n = 0; n <= d; ++n)
            if (k.member(pq(n, d))) members.push_back(pq(n, d));
    for (const MonoidValue& a : members)
        for (const MonoidValue& b : members)
            if (k.divides(a, b) && k.divides(b, a)) CHECK(a == b);
}

TEST_CASE("membership is monotone in depth") {
    for (int depth = 2; depth <= 4; ++depth) {
        MonoidKernel shallow(Presentation::pair_primes(depth));
        MonoidKernel deep(Presentation::pair_primes(depth + 1));
        for (long d = 1; d <= 12; ++d)
            for (long n = 0; n <= d; ++n)
                if (shallow.member(pq(n, d))) CHECK(deep.member(pq(n, d)));
    }
}

TEST_CASE("atoms match the published atom sets") {
    MonoidKernel pp(Presentation::pair_primes(5));
    auto pp_atoms = pp.atoms();
    auto pp_gens = Presentation::pair_primes(5).generators();
    std::sort(pp_gens.begin(), pp_gens.end());
    CHECK(pp_atoms == pp_gens);

    MonoidKernel sq(Presentation::cyclic_sq(Rational(2, 3), 4));
    auto sq_atoms = sq.atoms();
    CHECK(sq_atoms.size() == 5); // q^0 .. q^4

    MonoidKernel r2(Presentation::rank_two_p(3));
    auto r2_atoms = r2.atoms();
    auto r2_gens = Presentation::rank_two_p(3).generators();
    std::sort(r2_gens.begin(), r2_gens.end());
    CHECK(r2_atoms == r2_gens);
}

TEST_CASE("atoms are generators and are not redundant") {
    for (const Presentation& pres : sample_families(3)) {
        MonoidKernel k(pres);
        auto gens = pres.generators();
        for (const MonoidValue& a : k.atoms()) {
            CHECK(std::find(gens.begin(), gens.end(), a) != gens.end());
            // dropping the atom from the generator set loses the atom itself
            std::vector<Rational> rest;
            for (const MonoidValue& g : gens)
                if (g != a) rest.push_back(g.rational());
            if (rest.empty()) continue;
            CHECK_FALSE(oracles::member_oracle_q(rest, a.rational()));
        }
    }
}

TEST_CASE("factorizations worked examples") {
    MonoidKernel sq(Presentation::cyclic_sq(Rational(2, 3), 2));
    auto facts = sq.factorizations(pq(2, 1));
    REQUIRE(facts.size() == 3);
    std::set<Int> lengths;
    for (const auto& f : facts) {
        lengths.insert(f.length());
        CHECK(f.total(ValueTag::PuiseuxQ) == pq(2, 1)); // re-sums exactly
    }
    CHECK(lengths == std::set<Int>{2, 3, 4});

    MonoidKernel grams(Presentation::grams(3));
    auto f16 = grams.factorizations(pq(1, 6));
    REQUIRE(f16.size() == 1);
    CHECK(f16[0].atom_multiset.at(pq(1, 6)) == 1);

    auto f0 = grams.factorizations(pq(0, 1));
    REQUIRE(f0.size() == 1);
    CHECK(f0[0].atom_multiset.empty());

    CHECK_THROWS_AS(grams.factorizations(pq(1, 9)), NotAMember);
}

TEST_CASE("length sets") {
    MonoidKernel grams(Presentation::grams(3));
    CHECK(grams.length_set(pq(0, 1)) == std::set<Int>{0});
    // frozen from the exhaustive oracle: 2/3 = 4*(1/6) = 1/6 + 10*(1/20)
    //                                        = 1/6 + 5*(1/20) + 14*(1/56) = 1/6 + 28*(1/56)
    CHECK(grams.length_set(pq(2, 3)) == std::set<Int>{4, 11, 20, 29});

    MonoidKernel sq(Presentation::cyclic_sq(Rational(2, 3), 2));
    std::set<Int> l2 = sq.length_set(pq(2, 1));
    std::set<Int> window;
    for (const Int& l : l2)
        if (l >= 1 && l <= 4) window.insert(l);
    CHECK(window == std::set<Int>{2, 3, 4});
}

TEST_CASE("factorizations re-sum to their input across families") {
    Presentation r2p = Presentation::rank_two_p(2);
    MonoidKernel r2(r2p);
    // beta_1 + (2/5) + (2/5): rational part -1/5 + 4/5 = 3/5
    MonoidValue target = MonoidValue::rank_two(1, Rational(3, 5));
    auto r2f = r2.factorizations(target);
    CHECK(!r2f.empty());
    for (const auto& f : r2f) CHECK(f.total(ValueTag::RankTwo) == target);

    MonoidKernel z(Presentation::zaks(3));
    MonoidValue uv = Presentation::zaks(3).zaks_u() + Presentation::zaks(3).zaks_v();
    auto zf = z.factorizations(uv);
    CHECK(zf.size() == 4);
    for (const auto& f : zf) CHECK(f.total(ValueTag::IntVec, 6) == uv);
}

TEST_CASE("common divisors") {
    MonoidKernel pp(Presentation::pair_primes(8));
    auto cds = pp.common_divisors({pq(1, 2), pq(1, 3)});
    REQUIRE(cds.size() == 1);
    CHECK(cds[0].is_zero());

    MonoidKernel grams(Presentation::grams(3));
    auto single = grams.common_divisors({pq(2, 3)});
    CHECK(std::find(single.begin(), single.end(), pq(0, 1)) != single.end());
    CHECK(std::find(single.begin(), single.end(), pq(2, 3)) != single.end());

    auto pair = grams.common_divisors({pq(1, 2), MonoidValue::puiseux(Rational(1, 2) + Rational(1, 6))});
    CHECK(std::find(pair.begin(), pair.end(), pq(1, 2)) != pair.end());

    CHECK_THROWS_AS(pp.common_divisors({pq(1, 7)}), NotAMember);
}

TEST_CASE("zaks membership via the integer-cone kernel") {
    Presentation z = Presentation::zaks(4);
    MonoidKernel k(z);
    CHECK(k.member(z.zaks_u()));
    CHECK_FALSE(k.member(MonoidValue::zero(ValueTag::IntVec, 7).minus(z.zaks_u())));
    MonoidValue uv = z.zaks_u() + z.zaks_v();
    CHECK(k.member(uv));
    CHECK(k.member(uv) == oracles::member_oracle(z, uv));
    // two distinct expressions: {u, v} and {n*w, x_n, y_n}
    auto facts = k.factorizations(uv);
    CHECK(facts.size() == 5);
    CHECK_THROWS_AS(k.member(MonoidValue::int_vec({Int(1), Int(0)})), TagMismatch);
}

TEST_CASE("rank-two membership agrees with naive enumeration") {
    Presentation r2 = Presentation::rank_two_p(2);
    MonoidKernel k(r2);
    std::mt19937_64 rng(7);
    std::vector<MonoidValue> probes;
    probes.push_back(MonoidValue::rank_two(1, Rational(-1, 5)));
    probes.push_back(MonoidValue::rank_two(0, Rational(2, 5)));
    probes.push_back(MonoidValue::rank_two(0, Rational(1, 5)));
    probes.push_back(MonoidValue::rank_two(1, Rational(0)));
    probes.push_back(MonoidValue::rank_two(1, Rational(2, 17)));
    probes.push_back(MonoidValue::rank_two(2, Rational(-2, 5)));
    probes.push_back(MonoidValue::rank_two(0, Rational(4, 5)));
    probes.push_back(MonoidValue::rank_two(0, Rational(39, 85)));
    for (const MonoidValue& v : probes)
        CHECK_MESSAGE(k.member(v) == oracles::member_oracle(r2, v), "probe ", v.str());
}

TEST_CASE("budget exhaustion raises") {
    MonoidKernel pp(Presentation::pair_primes(8));
    Budget tiny{5, 0};
    CHECK_THROWS_AS(pp.member(pq(1, 2), &tiny), BudgetExhausted);
}
