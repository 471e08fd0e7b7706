#pragma once

#include "atomlab/kernel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace atomlab {

/// Parametric extension rules: each asserts a closed-form next term, so a
/// finite certificate stands for an infinite strictly ascending chain.
enum class ChainRule {
    None,
    GramsHalving,    // next = b - gd(b)*(P-1)/P, valid while gd(b) != 0
    PairPrimesShift, // next = b - 1/p_k + 1/p_{k+2}; param carries k
    SqRelation,      // next = b*q (terms d(q)*q^n)
    Rank2Beta,       // next = phi*beta_{m+s} plus unchanged rest; param carries m
};

std::string chain_rule_name(ChainRule r);
ChainRule chain_rule_from_name(const std::string& name);

/// A machine-checkable strictly ascending chain of principal ideals
/// (b_i + M)_i: terms decrease by nonzero members, so each inclusion is
/// strict. The optional rule extends the chain indefinitely; validation
/// spot-checks three further steps.
struct ChainCertificate {
    MonoidValue start = MonoidValue::puiseux(Rational(0));
    std::vector<MonoidValue> terms;
    std::vector<MonoidValue> quotients;
    ChainRule rule = ChainRule::None;
    Int rule_param = 0; // active index at terms.back() for the indexed rules
};

/// Applies the rule once; nullopt when the rule does not apply to the term.
std::optional<std::pair<MonoidValue, Int>> apply_chain_rule(const Presentation& pres, ChainRule rule,
                                                            const MonoidValue& term,
                                                            const Int& param);

/// True iff every quotient is a nonzero member and the parametric rule (when
/// present) produces three further valid steps. Membership is checked exactly
/// for decomposition-backed families, otherwise at a truncation deep enough
/// to cover every denominator in play.
bool validate_chain(const Presentation& pres, const ChainCertificate& cert,
                    Budget* budget = nullptr);

enum class SatisfiesReason { BoundedLengthSet, GdZero, ExhaustedCertified };
std::string satisfies_reason_name(SatisfiesReason r);

/// Three-valued ACCP judgment for a single element, with evidence: a
/// validating chain certificate for Fails, a checkable reason (and, when
/// computed, a length bound relative to the stated depth) for Satisfies.
struct AccpVerdict {
    enum class Kind { Satisfies, Fails, Unknown };
    Kind kind = Kind::Unknown;
    SatisfiesReason reason = SatisfiesReason::ExhaustedCertified;
    std::optional<ChainCertificate> cert;
    std::optional<Int> length_bound;
    int depth = 0;
    std::string note;

    bool satisfies() const { return kind == Kind::Satisfies; }
    bool fails() const { return kind == Kind::Fails; }
};

AccpVerdict accp_element(const Presentation& pres, const MonoidValue& b, Budget* budget = nullptr);

/// Factors an ACCP element into atoms by iterated atom extraction.
Factorization factor_accp_element(const Presentation& pres, const MonoidValue& b,
                                  Budget* budget = nullptr);

struct WeakAccpWitness {
    enum class Status { Found, RefutedExhaustive, Unknown };
    Status status = Status::Unknown;
    MonoidValue d = MonoidValue::puiseux(Rational(0));
    MonoidValue s = MonoidValue::puiseux(Rational(0));
    std::optional<AccpVerdict> residual_verdict;
    std::string evidence;
    int depth = 0;
};

/// Searches for a common divisor d of S with s - d satisfying ACCP for some
/// s in S. Uses the min-gd recipe for greatest-divisor families; otherwise
/// enumerates common divisors in increasing value order. RefutedExhaustive
/// requires a completeness argument for the enumeration.
WeakAccpWitness weak_accp_witness(const Presentation& pres, const std::vector<MonoidValue>& s,
                                  Budget* budget = nullptr);

/// True iff the only common divisor of b and c at the presentation's depth
/// is 0.
bool gcd_is_zero(const Presentation& pres, const MonoidValue& b, const MonoidValue& c,
                 Budget* budget = nullptr);

/// The strongly-atomic construction for the pair-primes monoid: peel maximal
/// joint multiples of 1/q_N and 1/q_{N-1}, then subtract smallest common
/// divisors until none remain. Requires depth >= 10.
MonoidValue strong_common_divisor(const Presentation& pres, const MonoidValue& x,
                                  const MonoidValue& y, Budget* budget = nullptr);

enum class Flag { True, False, Unknown };
std::string flag_name(Flag f);

/// Four-class taxonomy report. Flags always respect the implication chain
/// ACCP => weak-ACCP => strongly atomic => atomic.
struct TaxonomyReport {
    Flag accp = Flag::Unknown;
    Flag weak_accp = Flag::Unknown;
    Flag strongly_atomic = Flag::Unknown;
    Flag atomic = Flag::Unknown;
    int depth = 0;
    std::vector<std::string> evidence;
    std::optional<ChainCertificate> accp_chain;

    bool consistent() const;
};

TaxonomyReport classify(const Presentation& pres, Budget* budget = nullptr);

} // namespace atomlab
