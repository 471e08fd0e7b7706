#include "atomlab/algebra.hpp"

#include <doctest.h>

#include <random>

using namespace atomlab;

namespace {

MonoidValue pq(long n, long d) { return MonoidValue::puiseux(Rational(n, d)); }

PolyExpr random_poly(const FieldSpec& f, std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> num(0, 6), den(1, 6), coeff(-5, 5);
    PolyExpr p(f, ValueTag::PuiseuxQ);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        p.add_term(pq(num(rng), den(rng)), FieldValue(f, Rational(coeff(rng))));
    return p;
}

} // namespace

TEST_CASE("field arithmetic in QQ and GF(p)") {
    FieldSpec gf5 = FieldSpec::GF(5);
    FieldValue a(gf5, Rational(7));   // 2 mod 5
    FieldValue b(gf5, Rational(2, 3)); // 2 * 3^{-1} = 2*2 = 4 mod 5
    CHECK(a.value() == Rational(2));
    CHECK(b.value() == Rational(4));
    CHECK((a * b).value() == Rational(3));
    CHECK((b / b).value() == Rational(1));
    CHECK_THROWS_AS(FieldValue(gf5, Rational(1, 5)), std::domain_error);
    CHECK_THROWS_AS(FieldSpec::GF(6), std::invalid_argument);
    CHECK(FieldSpec::parse("GF(5)") == gf5);
    CHECK(FieldSpec::parse("QQ") == FieldSpec::QQ());
}

TEST_CASE("ring laws hold exactly") {
    std::mt19937_64 rng(41);
    for (const FieldSpec& f : {FieldSpec::QQ(), FieldSpec::GF(5)}) {
        for (int i = 0; i < 60; ++i) {
            PolyExpr a = random_poly(f, rng), b = random_poly(f, rng), c = random_poly(f, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a - a == PolyExpr(f, ValueTag::PuiseuxQ));
        }
    }
}

TEST_CASE("degree and order are additive under multiplication") {
    std::mt19937_64 rng(42);
    for (const FieldSpec& f : {FieldSpec::QQ(), FieldSpec::GF(5)}) {
        int done = 0;
        while (done < 250) {
            PolyExpr a = random_poly(f, rng), b = random_poly(f, rng);
            if (a.is_zero() || b.is_zero()) continue;
            PolyExpr ab = a * b;
            REQUIRE_FALSE(ab.is_zero()); // integral domain
            CHECK(ab.deg() == a.deg() + b.deg());
            CHECK(ab.ord() == a.ord() + b.ord());
            ++done;
        }
    }
}

TEST_CASE("binomial tower identity over QQ and GF(5)") {
    for (const FieldSpec& f : {FieldSpec::QQ(), FieldSpec::GF(5)}) {
        Int pow = 1;
        for (int n = 0; n <= 5; ++n) {
            Int p3 = pow * 3; // 3^{n+1}
            PolyExpr lhs(f, ValueTag::PuiseuxQ);
            lhs.add_term(MonoidValue::puiseux(Rational(1, pow)), FieldValue::one(f));
            lhs.add_term(pq(0, 1), -FieldValue::one(f));
            PolyExpr a(f, ValueTag::PuiseuxQ);
            a.add_term(MonoidValue::puiseux(Rational(1, p3)), FieldValue::one(f));
            a.add_term(pq(0, 1), -FieldValue::one(f));
            PolyExpr b(f, ValueTag::PuiseuxQ);
            b.add_term(MonoidValue::puiseux(Rational(2, p3)), FieldValue::one(f));
            b.add_term(MonoidValue::puiseux(Rational(1, p3)), FieldValue::one(f));
            b.add_term(pq(0, 1), FieldValue::one(f));
            CHECK(poly_mul(a, b) == lhs);
            pow = p3;
        }
    }
}

TEST_CASE("units of the monoid algebra") {
    FieldSpec f = FieldSpec::QQ();
    CHECK(is_unit(PolyExpr::constant(f, FieldValue(f, Rational(5)))));
    CHECK_FALSE(is_unit(PolyExpr::monomial(f, pq(1, 6), FieldValue::one(f))));
    PolyExpr xp1 = PolyExpr::monomial(f, pq(1, 1), FieldValue::one(f));
    xp1.add_term(pq(0, 1), FieldValue::one(f));
    CHECK_FALSE(is_unit(xp1));
    CHECK((PolyExpr::monomial(f, pq(1, 2), FieldValue::one(f)) *
           PolyExpr::monomial(f, pq(1, 2), FieldValue::one(f)))
              .deg() == pq(1, 1));
}

TEST_CASE("localized units") {
    FieldSpec f = FieldSpec::QQ();
    PolyExpr one = PolyExpr::constant(f, FieldValue::one(f));
    PolyExpr x = PolyExpr::monomial(f, pq(1, 1), FieldValue::one(f));
    PolyExpr xhalf = PolyExpr::monomial(f, pq(1, 2), FieldValue::one(f));
    CHECK(is_unit_localized(LocalizedElement(x + one, one)));
    CHECK_FALSE(is_unit_localized(LocalizedElement(xhalf, one)));
    PolyExpr x2p3 = x * x + PolyExpr::constant(f, FieldValue(f, Rational(3)));
    CHECK(is_unit_localized(LocalizedElement(x2p3, x + one)));
    CHECK_THROWS_AS(LocalizedElement(one, xhalf), std::invalid_argument);
}

TEST_CASE("division by leading-term elimination") {
    FieldSpec f = FieldSpec::QQ();
    Presentation nat = Presentation::explicit_gens({Rational(1)});
    PolyExpr one = PolyExpr::constant(f, FieldValue::one(f));
    PolyExpr x = PolyExpr::monomial(f, pq(1, 1), FieldValue::one(f));

    DivisionResult r = divides_in_algebra(nat, x - one, x * x - one);
    REQUIRE(r.verdict == DivisionResult::Verdict::Yes);
    CHECK(*r.quotient == x + one);
    CHECK((x - one) * *r.quotient == x * x - one);

    // rational exponents: X^{1/3} - 1 divides X - 1 once the monoid allows 1/9 steps
    Presentation ninths = Presentation::explicit_gens({Rational(1, 9)});
    PolyExpr xthird = PolyExpr::monomial(f, pq(1, 3), FieldValue::one(f));
    DivisionResult r2 = divides_in_algebra(ninths, xthird - one, x - one);
    REQUIRE(r2.verdict == DivisionResult::Verdict::Yes);
    CHECK((xthird - one) * *r2.quotient == x - one);

    PolyExpr xhalf = PolyExpr::monomial(f, pq(1, 2), FieldValue::one(f));
    DivisionResult r3 = divides_in_algebra(ninths, xhalf, xthird);
    CHECK(r3.verdict == DivisionResult::Verdict::No);

    DivisionResult r4 = divides_in_algebra(nat, x - one, x);
    CHECK(r4.verdict == DivisionResult::Verdict::No);

    CHECK_THROWS_AS(divides_in_algebra(nat, PolyExpr(f, ValueTag::PuiseuxQ), x),
                    std::invalid_argument);

    Budget tiny{2, 0};
    PolyExpr big = (x + one) * (x * x + one) * (x * x * x - one);
    DivisionResult r5 = divides_in_algebra(nat, x + one, big, &tiny);
    CHECK(r5.verdict == DivisionResult::Verdict::Unknown);
}

TEST_CASE("difference trick for common divisors") {
    FieldSpec f = FieldSpec::QQ();
    PolyExpr one = PolyExpr::constant(f, FieldValue::one(f));
    PolyExpr x = PolyExpr::monomial(f, pq(1, 1), FieldValue::one(f));
    auto [ok, c] = common_divisor_units_only(x - one, x + one);
    CHECK(ok);
    CHECK(c->value() == Rational(2));
    auto [same, c2] = common_divisor_units_only(x + one, x + one);
    CHECK_FALSE(same);
    auto [shared, c3] = common_divisor_units_only(x - one, x * x - one);
    CHECK_FALSE(shared);
}

TEST_CASE("b0 anchor for the localization argument") {
    FieldSpec f = FieldSpec::QQ();
    Presentation grams = Presentation::grams(3);
    PolyExpr fpoly(f, ValueTag::PuiseuxQ);
    fpoly.add_term(pq(1, 6), FieldValue::one(f));
    fpoly.add_term(pq(1, 2), FieldValue::one(f));
    CHECK(theorem59_b0(grams, fpoly, pq(1, 6)) == pq(1, 6));

    PolyExpr single = PolyExpr::monomial(f, pq(1, 20), FieldValue::one(f));
    CHECK(theorem59_b0(grams, single, pq(1, 20)) == pq(1, 20));

    PolyExpr with_const(f, ValueTag::PuiseuxQ);
    with_const.add_term(pq(0, 1), FieldValue::one(f));
    with_const.add_term(pq(1, 6), FieldValue::one(f));
    CHECK(theorem59_b0(grams, with_const, pq(1, 6)) == pq(1, 6)); // 0 is excluded

    CHECK_THROWS_AS(theorem59_b0(grams, single, pq(1, 6)), std::invalid_argument);
}

TEST_CASE("localization chains") {
    FieldSpec f = FieldSpec::QQ();
    Presentation grams = Presentation::grams(6);
    std::vector<LocalizedElement> chain;
    Int pow = 2;
    for (int n = 1; n <= 6; ++n) {
        chain.push_back(
            LocalizedElement::whole(PolyExpr::monomial(f, MonoidValue::puiseux(Rational(1, pow)),
                                                       FieldValue::one(f))));
        pow *= 2;
    }
    CHECK(localization_chain_check(grams, chain));

    // the binomial chain lives in F[M] itself and stays strict there
    Presentation g3 = Presentation::gp(3, 6);
    std::vector<LocalizedElement> binomial;
    Int p3 = 1;
    for (int n = 0; n <= 4; ++n) {
        PolyExpr e(f, ValueTag::PuiseuxQ);
        e.add_term(MonoidValue::puiseux(Rational(1, p3)), FieldValue::one(f));
        e.add_term(pq(0, 1), -FieldValue::one(f));
        binomial.push_back(LocalizedElement::whole(std::move(e)));
        p3 *= 3;
    }
    CHECK(localization_chain_check(g3, binomial));

    // a constant repeated chain has unit quotients
    std::vector<LocalizedElement> constant(
        3, LocalizedElement::whole(PolyExpr::constant(f, FieldValue(f, Rational(2)))));
    CHECK_FALSE(localization_chain_check(grams, constant));
}

TEST_CASE("intersection normal form and antimatter splitting") {
    Presentation g1 = Presentation::intersect_g(1, 4);
    Presentation g2 = Presentation::intersect_g(2, 4);
    FieldSpec f = FieldSpec::QQ();

    PolyExpr xhalf = PolyExpr::monomial(f, pq(1, 2), FieldValue::one(f));
    auto nf = intersection_normal_form(LocalizedElement::whole(xhalf), g1,
                                       LocalizedElement::whole(xhalf), g2);
    CHECK(nf.q == Rational(1, 2));
    CHECK(nf.is_unit_pair);

    PolyExpr one = PolyExpr::constant(f, FieldValue::one(f));
    auto nf0 = intersection_normal_form(LocalizedElement::whole(one), g1,
                                        LocalizedElement::whole(one), g2);
    CHECK(nf0.q == Rational(0));
    CHECK(nf0.is_unit_pair);

    PolyExpr mixed = xhalf + PolyExpr::monomial(f, pq(1, 1), FieldValue::one(f));
    auto nfm = intersection_normal_form(LocalizedElement::whole(mixed), g1,
                                        LocalizedElement::whole(mixed), g2);
    CHECK(nfm.q == Rational(1, 2));
    CHECK(nfm.is_unit_pair); // cofactor 1 + X^{1/2} has nonzero constant term

    // mu agrees across sides whenever the fractions agree
    PolyExpr s = PolyExpr::constant(f, FieldValue(f, Rational(3))) + xhalf;
    LocalizedElement e1(xhalf * s, s);
    auto nf2 = intersection_normal_form(e1, g1, LocalizedElement::whole(xhalf), g2);
    CHECK(nf2.q == Rational(1, 2));

    PolyExpr other = PolyExpr::monomial(f, pq(1, 4), FieldValue::one(f));
    CHECK_THROWS_AS(intersection_normal_form(LocalizedElement::whole(xhalf), g1,
                                             LocalizedElement::whole(other), g2),
                    std::invalid_argument);

    CHECK(antimatter_split(Rational(1, 2), g1) == std::make_pair(Rational(1, 4), Rational(1, 4)));
    CHECK(antimatter_split(Rational(1), g1) == std::make_pair(Rational(1, 2), Rational(1, 2)));
    CHECK(antimatter_split(Rational(3, 4), g1) == std::make_pair(Rational(3, 8), Rational(3, 8)));
    CHECK_THROWS_AS(antimatter_split(Rational(0), g1), NotAMember);
    CHECK_THROWS_AS(antimatter_split(Rational(1, 6), g1), NotAMember);
}

TEST_CASE("rank-2 embedding round-trips") {
    Presentation r2 = Presentation::rank_two_p(3);
    FieldSpec f = FieldSpec::QQ();

    PolyExpr ybeta = PolyExpr::monomial(f, r2.beta_atom(0), FieldValue::one(f));
    RankTwoEmbedding e = rank2_embed(ybeta);
    CHECK(e.x_deg() == 1);
    CHECK(e.columns.at(1).at(Rational(0)) == FieldValue::one(f));

    PolyExpr y2 = PolyExpr::monomial(f, MonoidValue::rank_two(2, Rational(1, 5)), FieldValue::one(f));
    RankTwoEmbedding e2 = rank2_embed(y2);
    CHECK(e2.x_deg() == 2);
    CHECK(e2.columns.at(2).count(Rational(1, 5)) == 1);

    PolyExpr yb1 = PolyExpr::monomial(f, r2.beta_atom(1), FieldValue::one(f));
    RankTwoEmbedding e3 = rank2_embed(yb1);
    CHECK(e3.columns.at(1).count(Rational(-1, 5)) == 1); // negative exponent in the ambient ring

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> beta(0, 3), num(-6, 6), den(1, 6), coeff(-4, 4);
    for (int i = 0; i < 50; ++i) {
        PolyExpr p(f, ValueTag::RankTwo);
        for (int t = 0; t < 4; ++t)
            p.add_term(MonoidValue::rank_two(beta(rng), Rational(num(rng), den(rng))),
                       FieldValue(f, Rational(coeff(rng))));
        CHECK(rank2_unembed(rank2_embed(p)) == p);
    }
}

TEST_CASE("zaks algebra words") {
    Presentation z = Presentation::zaks(4);
    CHECK(zaks_algebra_map(z, z.zaks_u() + z.zaks_v()).str() == "U*V");
    CHECK(zaks_algebra_map(z, z.zaks_y(2)).str() == "U*V*W^-2*X2^-1");
    CHECK(zaks_algebra_map(z, MonoidValue::zero(ValueTag::IntVec, 7)).str() == "1");
    CHECK_THROWS_AS(
        zaks_algebra_map(z, MonoidValue::zero(ValueTag::IntVec, 7).minus(z.zaks_u())),
        NotAMember);
}

TEST_CASE("polynomial text round trip") {
    FieldSpec f = FieldSpec::QQ();
    PolyExpr p(f, ValueTag::PuiseuxQ);
    p.add_term(pq(1, 2), FieldValue(f, Rational(3)));
    p.add_term(pq(0, 1), FieldValue(f, Rational(1)));
    std::string s = p.str();
    CHECK(s == "QQ: 3*X^{1/2} + 1*X^{0/1}");
    CHECK(PolyExpr::parse(s) == p);
    CHECK(PolyExpr::parse("GF(5): 7*X^{1/2}").coeff(pq(1, 2)).value() == Rational(2));
}
