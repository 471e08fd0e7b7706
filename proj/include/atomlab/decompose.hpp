#pragma once

#include "atomlab/poly.hpp"
#include "atomlab/presentation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace atomlab {

struct Budget; // kernel.hpp

/// Raised when no coefficient tuple within the stated ranges reconstructs the
/// input; doubles as a non-membership certificate for the full monoid.
struct NotDecomposable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// b = q_part + sum_n coeffs[n]/(P^n p_n), with q_part in < 1/P^n > and
/// coeffs[n] in [0, p_n - 1].
struct GramsDecomposition {
    Rational q_part;
    std::map<int, Int> coeffs; // index -> c_n, only nonzero entries

    Rational reconstruct(const Presentation& fam) const;
};

/// Unique decomposition for the Grams-shaped families (Grams, Gp,
/// IntersectG1/G2). Exact for the full infinitely generated monoid.
GramsDecomposition grams_decompose(const Presentation& fam, const Rational& b);

/// Greatest divisor of b in the valuation submonoid N = < 1/P^n >: the q_part
/// of the decomposition.
Rational gd(const Presentation& fam, const Rational& b);

/// Exact full-monoid membership via decomposability.
bool grams_member(const Presentation& fam, const Rational& b);

/// q = n0 + sum_i coeffs[i]/p_i over the sparse primes, coeffs[i] in
/// [0, p_i - 1], n0 >= 0.
struct PDecomposition {
    Int n0;
    std::map<int, Int> coeffs;

    Rational reconstruct(const PrimeSeq& seq) const;
};

PDecomposition p_decompose(const Rational& q);
PDecomposition p_decompose(const Rational& q, const PrimeSeq& seq);
bool p_member(const Rational& q);
/// u divides v in P (exact): v - u is in P.
bool p_divides(const Rational& u, const Rational& v);

/// r = beta + n + sum_i coeffs[i]/p_i with coeffs[i] in [-1, p_i - 2], n >= 0.
struct ShiftedDecomposition {
    Int n;
    std::map<int, Int> coeffs;

    Rational reconstruct(const PrimeSeq& seq) const; // rational part relative to beta
};

/// Unique shifted decomposition of r in B + <A> (beta coefficient must be 1).
ShiftedDecomposition shifted_decompose(const Presentation& rank2, const MonoidValue& r);

/// The beta coefficient n0 of r = n0*beta + q.
Int phi(const MonoidValue& r);

/// psi(r) = n + sum_i max(coeffs[i], 0)/p_i from the shifted decomposition;
/// always an element of P (asserted via p_decompose).
Rational psi(const Presentation& rank2, const MonoidValue& r);

// --- <A>-span machinery over the sparse primes -----------------------------

/// Raw coefficient vector indexed by sparse-prime position (1-based).
using CoeffVec = std::map<int, Int>;

/// An A-generator in coordinates: one copy of 1/p_j for each j in `support`,
/// plus one extra copy of 1/p_{doubled} (doubled must lie in support).
struct AVector {
    std::vector<int> support; // sorted ascending
    int doubled = 0;

    Rational value(const PrimeSeq& seq) const;
    bool operator<(const AVector& o) const {
        return std::tie(support, doubled) < std::tie(o.support, o.doubled);
    }
    bool operator==(const AVector& o) const {
        return support == o.support && doubled == o.doubled;
    }
};

/// Exact decision: can the coefficient vector be written as a sum of
/// A-vectors, coordinate for coordinate? Optionally emits one witness.
bool a_vector_decomposable(const CoeffVec& s, Budget* budget,
                           std::vector<AVector>* witness = nullptr);

/// Enumerates all A-vector multisets with the given column sums.
void a_vector_enumerate(const CoeffVec& s, Budget* budget,
                        std::vector<std::vector<AVector>>& out);

struct ASpanCheck {
    bool condition_met = false;          // two distinct indices with coeff >= 2
    std::vector<AVector> witness;        // nonempty iff condition_met
};

/// The sufficient condition for q = sum coeffs[i]/p_i to lie in <A>: two
/// distinct indices with coefficient >= 2. When met, also produces an
/// explicit A-factorization witness of the coefficient vector.
ASpanCheck in_A_span_sufficient(const CoeffVec& coeffs, Budget* budget = nullptr);

/// Truncated <A>-membership of a rational (indices <= depth), allowing
/// integer carries (p_i copies of 1/p_i amounting to 1).
bool a_span_member(const Presentation& rank2, const Rational& q, Budget* budget = nullptr);

/// All A-vector multisets summing to q with indices <= depth.
std::vector<std::vector<AVector>> a_span_enumerate(const Presentation& rank2, const Rational& q,
                                                   Budget* budget = nullptr);

/// Smallest verified N <= ell + 2 with phi(r)*beta_N dividing r, verified via
/// the <A>-span sufficient condition on r - phi(r)*beta_N (or a zero
/// residual). Requires phi(r) >= 2.
int beta_divisor_threshold(const Presentation& rank2, const MonoidValue& r,
                           Budget* budget = nullptr);

/// Minimum over the support of f of the greatest divisor in M = < 1/2^n > of
/// each exponent, computed in the side's monoid (IntersectG1/G2, Grams, Gp).
Rational mu(const PolyExpr& f, const Presentation& side);

} // namespace atomlab
