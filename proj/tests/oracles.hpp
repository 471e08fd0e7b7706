#pragma once

// Independent reference implementations used as test oracles. These stay
// deliberately naive: plain coefficient enumeration with no congruence
// filtering, memoization, or decomposition shortcuts, so they share no code
// path with the library's deciders.

#include "atomlab/presentation.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracles {

using atomlab::Int;
using atomlab::MonoidValue;
using atomlab::Presentation;
using atomlab::Rational;

// Trial division all the way up to sqrt(n).
inline bool is_prime_oracle(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Exhaustive bounded-coefficient enumeration over cleared denominators.
// Requires the cleared weights to fit in int64 (true for all depth <= 5
// test presentations).
inline bool member_oracle_q(const std::vector<Rational>& gens, const Rational& target) {
    if (target.is_negative()) return false;
    Int lcm = 1;
    for (const Rational& g : gens) lcm = lcm / gcd(lcm, g.den()) * g.den();
    if (lcm % target.den() != 0) return false;
    std::vector<std::int64_t> w;
    for (const Rational& g : gens)
        w.push_back((g.num() * (lcm / g.den())).convert_to<std::int64_t>());
    std::int64_t t = (target.num() * (lcm / target.den())).convert_to<std::int64_t>();

    // plain DFS over all coefficient tuples with residual pruning
    std::vector<std::int64_t> stack;
    std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t i,
                                                             std::int64_t rest) -> bool {
        if (rest == 0) return true;
        if (i == w.size()) return false;
        for (std::int64_t c = 0; c * w[i] <= rest; ++c)
            if (rec(i + 1, rest - c * w[i])) return true;
        return false;
    };
    return rec(0, t);
}

inline bool member_oracle(const Presentation& pres, const MonoidValue& v) {
    switch (pres.value_tag()) {
    case atomlab::ValueTag::PuiseuxQ: {
        std::vector<Rational> gens;
        for (const MonoidValue& g : pres.generators()) gens.push_back(g.rational());
        return member_oracle_q(gens, v.rational());
    }
    case atomlab::ValueTag::RankTwo: {
        // enumerate multiplicities over all generators, matching the beta
        // coordinate first and the rational value exactly
        auto gens = pres.generators();
        long n0 = v.beta_coeff().convert_to<long>();
        if (n0 < 0) return false;
        std::function<bool(std::size_t, long, Rational)> rec =
            [&](std::size_t i, long beta_rest, Rational q_rest) -> bool {
            if (i == gens.size()) return beta_rest == 0 && q_rest.is_zero();
            long gb = gens[i].beta_coeff().convert_to<long>();
            Rational gq = gens[i].rational();
            for (long c = 0;; ++c) {
                long nb = beta_rest - c * gb;
                Rational nq = q_rest - Rational(c) * gq;
                if (nb < 0) break;
                // positive-value pruning only for nonnegative-part generators
                if (gb == 0 && gq > Rational(0) && nq.is_negative()) break;
                if (rec(i + 1, nb, nq)) return true;
                if (gb == 0 && gq.is_zero()) break;
                if (c > 64) break; // B-atoms: bounded by beta_rest anyway
            }
            return false;
        };
        return rec(0, n0, v.rational());
    }
    case atomlab::ValueTag::IntVec: {
        auto gens = pres.generators();
        const auto& target = v.entries();
        // bound every multiplicity by min(U,V) totals for y's, and by the
        // coordinate totals for the rest
        Int cap = 0;
        for (const Int& e : target)
            if (e > 0) cap += e;
        long capl = cap.convert_to<long>() + 4;
        std::function<bool(std::size_t, std::vector<Int>)> rec = [&](std::size_t i,
                                                                     std::vector<Int> rest) -> bool {
            bool zero = true;
            for (const Int& e : rest)
                if (e != 0) zero = false;
            if (zero) return true;
            if (i == gens.size()) return false;
            const auto& g = gens[i].entries();
            for (long c = 0; c <= capl; ++c) {
                std::vector<Int> next = rest;
                bool fits = true;
                for (std::size_t k = 0; k < next.size(); ++k) {
                    next[k] = rest[k] - Int(c) * g[k];
                    // U and V coordinates can never be overdrawn
                    if (k < 2 && next[k] < 0) fits = false;
                }
                if (!fits) break;
                if (rec(i + 1, next)) return true;
            }
            return false;
        };
        return rec(0, target);
    }
    }
    return false;
}

// Longest strictly ascending chain of principal ideals from b, stepping by
// atoms, with oracle membership; used against certified length bounds.
inline long longest_chain_oracle(const Presentation& pres, const std::vector<MonoidValue>& atoms,
                                 const MonoidValue& b, long cap) {
    if (cap <= 0) return 0;
    long best = 0;
    for (const MonoidValue& a : atoms) {
        MonoidValue diff = b.minus(a);
        if (!diff.admissible()) continue;
        if (pres.value_tag() == atomlab::ValueTag::PuiseuxQ && diff.rational().is_negative())
            continue;
        if (!member_oracle(pres, diff)) continue;
        best = std::max(best, 1 + longest_chain_oracle(pres, atoms, diff, cap - 1));
        if (best >= cap) return best;
    }
    return best;
}

} // namespace oracles
