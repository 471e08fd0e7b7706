#include "atomlab/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace atomlab {

namespace {

Int mod_pow(Int base, Int exp, const Int& m) {
    Int result = 1;
    base %= m;
    while (exp > 0) {
        if ((exp & 1) != 0) result = (result * base) % m;
        exp >>= 1;
        base = (base * base) % m;
    }
    return result;
}

// One Miller-Rabin round; n odd, n > 2, d*2^r = n-1 with d odd.
bool witness_passes(const Int& n, const Int& a, const Int& d, unsigned r) {
    Int x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

constexpr unsigned kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                     29, 31, 37, 41, 43, 47, 53, 59, 61,
                                     67, 71, 73, 79, 83, 89, 97};

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 97 * 97) return true;

    Int d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (unsigned a : kSmallPrimes) {
        if (!witness_passes(n, Int(a), d, r)) return false;
    }
    return true;
}

PrimeSeq PrimeSeq::all_primes() { return PrimeSeq(PrimeSeqKind::AllPrimes); }

PrimeSeq PrimeSeq::odd_primes() { return PrimeSeq(PrimeSeqKind::OddPrimes); }

PrimeSeq PrimeSeq::excluding(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeSeq: excluded value must be prime");
    PrimeSeq s(PrimeSeqKind::Excluding);
    s.excluded_ = p;
    return s;
}

PrimeSeq PrimeSeq::sparse(unsigned ratio) {
    if (ratio < 4) throw std::invalid_argument("PrimeSeq: sparse ratio must be >= 4 for the 1/3 certificate");
    PrimeSeq s(PrimeSeqKind::Sparse);
    s.ratio_ = ratio;
    return s;
}

PrimeSeq PrimeSeq::explicit_list(std::vector<Int> primes) {
    if (primes.empty()) throw std::invalid_argument("PrimeSeq: empty explicit list");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) throw std::invalid_argument("PrimeSeq: non-prime in explicit list");
        if (i > 0 && primes[i] <= primes[i - 1])
            throw std::invalid_argument("PrimeSeq: explicit list must be strictly increasing");
    }
    PrimeSeq s(PrimeSeqKind::ExplicitList);
    s.explicit_ = std::move(primes);
    return s;
}

Int PrimeSeq::next_term(const Int& prev, std::size_t idx) const {
    switch (kind_) {
    case PrimeSeqKind::AllPrimes:
    case PrimeSeqKind::OddPrimes:
    case PrimeSeqKind::Excluding: {
        Int c = prev + 1;
        while (!is_prime(c) || (kind_ == PrimeSeqKind::Excluding && c == excluded_)) ++c;
        return c;
    }
    case PrimeSeqKind::Sparse: {
        Int floor = 1;
        for (std::size_t i = 0; i < idx; ++i) floor *= ratio_;
        Int c = floor + 1;
        while (!is_prime(c)) ++c;
        return c;
    }
    case PrimeSeqKind::ExplicitList:
        if (idx > explicit_.size())
            throw std::out_of_range("PrimeSeq: explicit list exhausted at index " + std::to_string(idx));
        return explicit_[idx - 1];
    }
    throw std::logic_error("PrimeSeq: bad kind");
}

void PrimeSeq::extend_to(std::size_t n) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto& cache = state_->cache;
    while (cache.size() < n) {
        Int prev;
        if (cache.empty()) {
            switch (kind_) {
            case PrimeSeqKind::AllPrimes: prev = 1; break;
            case PrimeSeqKind::OddPrimes: prev = 2; break;
            case PrimeSeqKind::Excluding: prev = 1; break;
            default: prev = 0; break;
            }
        } else {
            prev = cache.back();
        }
        cache.push_back(next_term(prev, cache.size() + 1));
    }
}

Int PrimeSeq::nth(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("PrimeSeq: indices are 1-based");
    extend_to(n);
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->cache[n - 1];
}

std::size_t PrimeSeq::index_of(const Int& p) const {
    for (std::size_t i = 1;; ++i) {
        Int t;
        try {
            t = nth(i);
        } catch (const std::out_of_range&) {
            return 0;
        }
        if (t == p) return i;
        if (t > p) return 0;
    }
}

std::string PrimeSeq::str() const {
    switch (kind_) {
    case PrimeSeqKind::AllPrimes: return "all-primes";
    case PrimeSeqKind::OddPrimes: return "odd-primes";
    case PrimeSeqKind::Excluding: return "primes-excluding(" + excluded_.str() + ")";
    case PrimeSeqKind::Sparse: return "sparse(" + std::to_string(ratio_) + ")";
    case PrimeSeqKind::ExplicitList: {
        std::string out = "explicit(";
        for (std::size_t i = 0; i < explicit_.size(); ++i) {
            if (i) out += ",";
            out += explicit_[i].str();
        }
        return out + ")";
    }
    }
    return "?";
}

std::vector<Int> sparse_prime_sequence(std::size_t count) {
    if (count == 0) throw std::invalid_argument("sparse_prime_sequence: count must be >= 1");
    PrimeSeq s = PrimeSeq::sparse();
    std::vector<Int> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) out.push_back(s.nth(n));
    return out;
}

Rational sparse_certificate_bound(const std::vector<Int>& primes) {
    Rational sum;
    for (const Int& p : primes) sum += Rational(1, p);
    // sum_{n > k} 4^{-n} = 4^{-k}/3
    Int four_k = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) four_k *= 4;
    return sum + Rational(1, 3 * four_k);
}

} // namespace atomlab
