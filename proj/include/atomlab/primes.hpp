#pragma once

#include "atomlab/rational.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace atomlab {

/// Deterministic primality check. Trial division for small candidates,
/// Miller-Rabin with a fixed witness set otherwise (the 13-witness set is
/// proven deterministic below 3.3e24; above that the same fixed witnesses
/// plus the first 25 primes are used, well past anything at desk scale).
bool is_prime(const Int& n);

enum class PrimeSeqKind {
    AllPrimes,       // 2, 3, 5, 7, ...
    OddPrimes,       // 3, 5, 7, 11, ...
    Excluding,       // all primes except a fixed p
    Sparse,          // p_n = smallest prime > ratio^n (default ratio 4)
    ExplicitList,    // caller-supplied strictly increasing primes
};

/// A strictly increasing infinite (or caller-bounded) sequence of primes with
/// a synchronized append-only cached prefix. Indices are 1-based.
class PrimeSeq {
public:
    static PrimeSeq all_primes();
    static PrimeSeq odd_primes();
    static PrimeSeq excluding(const Int& p);
    static PrimeSeq sparse(unsigned ratio = 4);
    static PrimeSeq explicit_list(std::vector<Int> primes);

    PrimeSeqKind kind() const { return kind_; }
    Int excluded() const { return excluded_; }
    unsigned ratio() const { return ratio_; }

    /// n-th term, n >= 1. Deterministic and cached.
    Int nth(std::size_t n) const;

    /// 1-based index of p in the sequence, or 0 if p is not a term.
    /// Only meaningful for monotone kinds (all terms >= first term).
    std::size_t index_of(const Int& p) const;

    std::string str() const;

private:
    PrimeSeq(PrimeSeqKind k) : kind_(k), state_(std::make_shared<State>()) {}

    struct State {
        std::mutex mu;
        std::vector<Int> cache;
    };

    void extend_to(std::size_t n) const;
    Int next_term(const Int& prev, std::size_t idx) const;

    PrimeSeqKind kind_;
    Int excluded_ = 0;
    unsigned ratio_ = 4;
    std::vector<Int> explicit_;
    std::shared_ptr<State> state_;
};

/// The first `count` primes p_1 < ... < p_count with p_n the smallest prime
/// exceeding 4^n. Together with the geometric tail bound sum_{n>count} 4^{-n}
/// this certifies sum 1/p_n < 1/3.
std::vector<Int> sparse_prime_sequence(std::size_t count);

/// Exact certificate value: (sum of 1/p_n over the list) + tail, where
/// tail = 4^{-count}/3 bounds the reciprocals of all later terms.
Rational sparse_certificate_bound(const std::vector<Int>& primes);

} // namespace atomlab
