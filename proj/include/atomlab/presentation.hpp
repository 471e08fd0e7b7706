#pragma once

#include "atomlab/monoid_value.hpp"
#include "atomlab/primes.hpp"

#include <string>
#include <vector>

namespace atomlab {

enum class Family {
    Explicit,    // caller-supplied positive rational generators
    Grams,       // < 1/(2^n p_n) >, p_n the odd primes
    Gp,          // < 1/(p^n p_n) >, p_n the primes other than p, n >= 1
    CyclicSq,    // S_q = < q^n | 0 <= n <= depth >, q in (0,1), 1/q not integer
    PairPrimes,  // < 1/q_n >, q_n = p_n p_{n+2} over all primes
    RankTwoP,    // < A union B > over the sparse primes, with formal beta
    IntersectG1, // < 1/(2^n p_n) >, p_n = odd primes at odd positions
    IntersectG2, // < 1/(2^n p_n) >, p_n = odd primes at even positions
    Zaks,        // exponent monoid of the Zaks domain, integer vectors
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// A monoid family descriptor: which construction, its parameters, and a
/// truncation depth N (the number of generator indices retained). All search
/// verdicts downstream are relative to the depth-N finitely generated
/// sub-approximation.
class Presentation {
public:
    static Presentation explicit_gens(std::vector<Rational> gens, int depth = 0);
    static Presentation grams(int depth);
    static Presentation gp(const Int& p, int depth);
    static Presentation cyclic_sq(const Rational& q, int depth);
    static Presentation pair_primes(int depth);
    static Presentation rank_two_p(int depth);
    static Presentation intersect_g(int side, int depth);
    static Presentation zaks(int depth);

    Family family() const { return family_; }
    int depth() const { return depth_; }
    const Rational& q() const { return q_; }
    const Int& base_prime() const { return base_prime_; }
    const std::vector<Rational>& explicit_generators() const { return explicit_; }

    ValueTag value_tag() const;

    /// Prime sequence backing the family (Grams/Gp/PairPrimes/RankTwoP/
    /// Intersect*); throws for families without one.
    const PrimeSeq& prime_seq() const;

    /// The first `depth` generators in canonical index order. For RankTwoP:
    /// the A-atoms with indices <= depth (ascending value) followed by
    /// beta, beta_1, ..., beta_depth. For Zaks: u, v, w, x_1..x_N, y_1..y_N.
    std::vector<MonoidValue> generators() const;

    /// A copy of this presentation truncated at a (usually deeper) depth.
    Presentation with_depth(int depth) const;

    /// True if membership at this presentation is exact for the full
    /// infinitely generated monoid (decomposition-backed families, and
    /// Explicit where the truncation is the whole monoid).
    bool has_exact_membership() const;

    // RankTwoP helpers.
    /// rational part of beta_ell = beta - sum_{i<=ell} 1/p_i (0 for ell = 0).
    Rational beta_drop(int ell) const;
    MonoidValue beta_atom(int ell) const;

    // Zaks helpers (vectors of length depth+3, coordinates U,V,W,d_1..d_N).
    MonoidValue zaks_u() const;
    MonoidValue zaks_v() const;
    MonoidValue zaks_w() const;
    MonoidValue zaks_x(int n) const;
    MonoidValue zaks_y(int n) const;

    std::string str() const;

private:
    Presentation(Family f, int depth) : family_(f), depth_(depth) {}

    Family family_;
    int depth_;
    Rational q_;               // CyclicSq
    Int base_prime_ = 0;       // Gp (2 for Grams/Intersect*)
    std::vector<Rational> explicit_;
    std::shared_ptr<PrimeSeq> seq_;
};

} // namespace atomlab
