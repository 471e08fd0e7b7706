#include "atomlab/primes.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace atomlab;

TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        Rational a(Int(num(rng)), Int(den(rng)));
        Rational b(Int(num(rng)), Int(den(rng)));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("rational invariants and text form") {
    Rational r(Int(6), Int(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0).str() == "0/1");
    CHECK(Rational(3, 10).str() == "3/10");
    CHECK(Rational::parse("3/10") == Rational(3, 10));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("nth_prime across all sequence kinds") {
    CHECK(PrimeSeq::all_primes().nth(1) == 2);
    CHECK(PrimeSeq::odd_primes().nth(3) == 7);
    CHECK(PrimeSeq::excluding(2).nth(4) == 11);
    CHECK(PrimeSeq::excluding(5).nth(3) == 7); // 2, 3, 7
    CHECK(PrimeSeq::sparse().nth(2) == 17);
    auto xs = PrimeSeq::explicit_list({Int(5), Int(11), Int(31)});
    CHECK(xs.nth(2) == 11);
    CHECK_THROWS_AS(xs.nth(4), std::out_of_range);
    CHECK_THROWS_AS(PrimeSeq::all_primes().nth(0), std::invalid_argument);
}

TEST_CASE("prime sequences are strictly increasing and prime") {
    for (auto seq : {PrimeSeq::all_primes(), PrimeSeq::odd_primes(), PrimeSeq::excluding(7)}) {
        Int prev = 0;
        for (std::size_t n = 1; n <= 10000; ++n) {
            Int p = seq.nth(n);
            CHECK(p > prev);
            prev = p;
        }
        // primality spot-checked against trial division on a stride
        for (std::size_t n = 1; n <= 10000; n += 997) CHECK(oracles::is_prime_oracle(seq.nth(n)));
        CHECK(oracles::is_prime_oracle(seq.nth(10000)));
    }
}

TEST_CASE("index_of inverts nth") {
    PrimeSeq odd = PrimeSeq::odd_primes();
    CHECK(odd.index_of(7) == 3);
    CHECK(odd.index_of(2) == 0);
    CHECK(odd.index_of(9) == 0);
    CHECK(PrimeSeq::sparse().index_of(67) == 3);
}

TEST_CASE("sparse prime sequence and its 1/3 certificate") {
    CHECK(sparse_prime_sequence(3) == std::vector<Int>{5, 17, 67});
    CHECK(sparse_prime_sequence(1) == std::vector<Int>{5});
    // 1/5 + tail 1/12 < 1/3
    CHECK(sparse_certificate_bound({Int(5)}) == Rational(1, 5) + Rational(1, 12));
    CHECK(sparse_certificate_bound({Int(5)}) < Rational(1, 3));
    // count = 4: exact partial sum stays below 1/3
    auto four = sparse_prime_sequence(4);
    Rational partial;
    for (const Int& p : four) partial += Rational(1, p);
    CHECK(partial < Rational(1, 3));
    CHECK(four[3] == 257);
}

TEST_CASE("sparse certificate holds for every prefix up to 100") {
    auto primes = sparse_prime_sequence(100);
    Rational partial;
    Int four_k = 1;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        CHECK(primes[k] > (k ? primes[k - 1] : Int(1)));
        CHECK(is_prime(primes[k]));
        partial += Rational(1, primes[k]);
        four_k *= 4;
        CHECK(partial + Rational(1, 3 * four_k) < Rational(1, 3));
    }
}

TEST_CASE("is_prime agrees with trial division") {
    for (Int n = 0; n < 2000; ++n) CHECK(is_prime(n) == oracles::is_prime_oracle(n));
    CHECK(is_prime(Int(1000000007)));
    CHECK_FALSE(is_prime(Int(1000000007) * Int(998244353)));
}
