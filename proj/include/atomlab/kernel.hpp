#pragma once

#include "atomlab/presentation.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace atomlab {

struct NotAMember : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Search budget in knapsack node expansions. Deterministic and
/// machine-independent.
struct Budget {
    std::uint64_t limit = 1'000'000;
    std::uint64_t used = 0;

    void tick(std::uint64_t n = 1) {
        used += n;
        if (used > limit) throw BudgetExhausted("search budget exhausted");
    }
};

/// A multiset of atoms whose weighted sum is the factored element.
struct Factorization {
    std::map<MonoidValue, Int> atom_multiset;

    Int length() const {
        Int n = 0;
        for (const auto& [a, m] : atom_multiset) n += m;
        return n;
    }
    MonoidValue total(ValueTag tag, std::size_t vec_len = 0) const {
        MonoidValue sum = MonoidValue::zero(tag, vec_len);
        for (const auto& [a, m] : atom_multiset)
            for (Int i = 0; i < m; ++i) sum = sum + a;
        return sum;
    }
    bool operator<(const Factorization& o) const { return atom_multiset < o.atom_multiset; }
    bool operator==(const Factorization& o) const { return atom_multiset == o.atom_multiset; }
};

/// Exact bounded-knapsack solver over a fixed list of positive rationals.
/// After clearing denominators by the lcm, coefficients are bounded by
/// value/generator; the search is depth-first with memoization on the
/// residual value, stepping each coefficient through the residue class that
/// keeps the residual representable by the remaining generators.
class QSolver {
public:
    explicit QSolver(std::vector<Rational> gens);

    bool member(const Rational& target, Budget* budget) const;
    std::vector<std::vector<Int>> enumerate(const Rational& target, Budget* budget) const;
    const std::vector<Rational>& gens() const { return gens_; }

private:
    bool feasible(std::size_t level, const Int& residual, Budget* budget) const;
    void enumerate_rec(std::size_t level, const Int& residual, std::vector<Int>& coeffs,
                       std::vector<std::vector<Int>>& out, Budget* budget) const;

    std::vector<Rational> gens_;   // processing order: descending denominator
    Int lcm_;                      // lcm of generator denominators
    std::vector<Int> weights_;     // g_i * lcm
    std::vector<Int> moduli_;      // lcm / lcm(den of generators after level i)
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::size_t, Int>, bool> memo_;
};

/// Decision kernel for a truncated presentation: membership, divisibility,
/// atoms, factorizations, length sets, and common divisors. All verdicts are
/// exact for the depth-N truncated monoid (a sound under-approximation of the
/// full monoid; exact for decomposition-backed families via `decompose`).
class MonoidKernel {
public:
    explicit MonoidKernel(Presentation pres);

    const Presentation& pres() const { return pres_; }

    bool member(const MonoidValue& v, Budget* budget = nullptr) const;
    bool divides(const MonoidValue& a, const MonoidValue& b, Budget* budget = nullptr) const;

    std::vector<MonoidValue> atoms(Budget* budget = nullptr) const;
    std::vector<Factorization> factorizations(const MonoidValue& b, Budget* budget = nullptr) const;
    std::set<Int> length_set(const MonoidValue& b, Budget* budget = nullptr) const;
    std::vector<MonoidValue> common_divisors(const std::vector<MonoidValue>& s,
                                             Budget* budget = nullptr) const;

    /// Smallest nonzero common divisor of all elements of s, if any.
    std::optional<MonoidValue> smallest_common_divisor(const std::vector<MonoidValue>& s,
                                                       Budget* budget = nullptr) const;

private:
    void check_tag(const MonoidValue& v) const;
    bool member_rank_two(const MonoidValue& v, Budget* budget) const;
    bool member_int_vec(const MonoidValue& v, Budget* budget) const;
    std::vector<Factorization> factorizations_rank_two(const MonoidValue& b, Budget* budget) const;
    std::vector<Factorization> factorizations_int_vec(const MonoidValue& b, Budget* budget) const;
    const QSolver& gen_solver() const;
    const QSolver& atom_solver(Budget* budget) const;

    Presentation pres_;
    std::vector<MonoidValue> generators_;
    mutable std::mutex mu_;
    mutable std::unique_ptr<QSolver> gen_solver_;
    mutable std::unique_ptr<QSolver> atom_solver_;
    mutable std::optional<std::vector<MonoidValue>> atoms_;
};

} // namespace atomlab
