#include "atomlab/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace atomlab {

std::string family_name(Family f) {
    switch (f) {
    case Family::Explicit: return "explicit";
    case Family::Grams: return "grams";
    case Family::Gp: return "gp";
    case Family::CyclicSq: return "cyclic-sq";
    case Family::PairPrimes: return "pair-primes";
    case Family::RankTwoP: return "rank2";
    case Family::IntersectG1: return "intersect-g1";
    case Family::IntersectG2: return "intersect-g2";
    case Family::Zaks: return "zaks";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "explicit") return Family::Explicit;
    if (name == "grams") return Family::Grams;
    if (name == "gp") return Family::Gp;
    if (name == "cyclic-sq") return Family::CyclicSq;
    if (name == "pair-primes" || name == "pairprimes") return Family::PairPrimes;
    if (name == "rank2") return Family::RankTwoP;
    if (name == "intersect-g1") return Family::IntersectG1;
    if (name == "intersect-g2") return Family::IntersectG2;
    if (name == "zaks") return Family::Zaks;
    throw std::invalid_argument("unknown family '" + name + "'");
}

namespace {

void require_depth(int depth) {
    if (depth < 1) throw std::invalid_argument("Presentation: depth must be >= 1");
}

// Odd primes at odd (side 1) or even (side 2) positions, interleaved so that
// p_n < q_n < p_{n+1} holds between the two sides.
std::vector<Int> interleaved_primes(int side, std::size_t count) {
    PrimeSeq odd = PrimeSeq::odd_primes();
    std::vector<Int> out;
    for (std::size_t n = 1; n <= count; ++n)
        out.push_back(odd.nth(2 * n - (side == 1 ? 1 : 0)));
    return out;
}

} // namespace

Presentation Presentation::explicit_gens(std::vector<Rational> gens, int depth) {
    if (gens.empty()) throw std::invalid_argument("Presentation: explicit generator list is empty");
    std::set<Rational> seen;
    for (const Rational& g : gens) {
        if (g <= Rational(0)) throw std::invalid_argument("Presentation: explicit generators must be > 0");
        if (!seen.insert(g).second)
            throw std::invalid_argument("Presentation: explicit generators must be pairwise distinct");
    }
    if (depth == 0) depth = static_cast<int>(gens.size());
    require_depth(depth);
    if (depth > static_cast<int>(gens.size()))
        throw std::invalid_argument("Presentation: depth exceeds explicit generator count");
    Presentation p(Family::Explicit, depth);
    p.explicit_ = std::move(gens);
    return p;
}

Presentation Presentation::grams(int depth) {
    require_depth(depth);
    Presentation p(Family::Grams, depth);
    p.base_prime_ = 2;
    p.seq_ = std::make_shared<PrimeSeq>(PrimeSeq::odd_primes());
    return p;
}

Presentation Presentation::gp(const Int& prime, int depth) {
    require_depth(depth);
    if (!is_prime(prime)) throw std::invalid_argument("Presentation: Gp base must be prime");
    Presentation p(Family::Gp, depth);
    p.base_prime_ = prime;
    p.seq_ = std::make_shared<PrimeSeq>(PrimeSeq::excluding(prime));
    return p;
}

Presentation Presentation::cyclic_sq(const Rational& q, int depth) {
    require_depth(depth);
    if (!(q > Rational(0) && q < Rational(1)))
        throw std::invalid_argument("Presentation: cyclic-sq needs q in (0,1)");
    if (q.num() == 1)
        throw std::invalid_argument("Presentation: cyclic-sq needs 1/q not an integer");
    Presentation p(Family::CyclicSq, depth);
    p.q_ = q;
    return p;
}

Presentation Presentation::pair_primes(int depth) {
    require_depth(depth);
    Presentation p(Family::PairPrimes, depth);
    p.seq_ = std::make_shared<PrimeSeq>(PrimeSeq::all_primes());
    return p;
}

Presentation Presentation::rank_two_p(int depth) {
    require_depth(depth);
    Presentation p(Family::RankTwoP, depth);
    p.seq_ = std::make_shared<PrimeSeq>(PrimeSeq::sparse());
    return p;
}

Presentation Presentation::intersect_g(int side, int depth) {
    require_depth(depth);
    if (side != 1 && side != 2) throw std::invalid_argument("Presentation: intersect side must be 1 or 2");
    Presentation p(side == 1 ? Family::IntersectG1 : Family::IntersectG2, depth);
    p.base_prime_ = 2;
    p.seq_ = std::make_shared<PrimeSeq>(
        PrimeSeq::explicit_list(interleaved_primes(side, static_cast<std::size_t>(depth) + 64)));
    return p;
}

Presentation Presentation::zaks(int depth) {
    require_depth(depth);
    return Presentation(Family::Zaks, depth);
}

ValueTag Presentation::value_tag() const {
    switch (family_) {
    case Family::RankTwoP: return ValueTag::RankTwo;
    case Family::Zaks: return ValueTag::IntVec;
    default: return ValueTag::PuiseuxQ;
    }
}

const PrimeSeq& Presentation::prime_seq() const {
    if (!seq_) throw std::logic_error("Presentation: family has no prime sequence");
    return *seq_;
}

Rational Presentation::beta_drop(int ell) const {
    Rational drop;
    for (int i = 1; i <= ell; ++i) drop += Rational(1, prime_seq().nth(i));
    return -drop;
}

MonoidValue Presentation::beta_atom(int ell) const {
    return MonoidValue::rank_two(1, beta_drop(ell));
}

MonoidValue Presentation::zaks_u() const {
    std::vector<Int> v(static_cast<std::size_t>(depth_) + 3, Int(0));
    v[0] = 1;
    return MonoidValue::int_vec(std::move(v));
}

MonoidValue Presentation::zaks_v() const {
    std::vector<Int> v(static_cast<std::size_t>(depth_) + 3, Int(0));
    v[1] = 1;
    return MonoidValue::int_vec(std::move(v));
}

MonoidValue Presentation::zaks_w() const {
    std::vector<Int> v(static_cast<std::size_t>(depth_) + 3, Int(0));
    v[2] = 1;
    return MonoidValue::int_vec(std::move(v));
}

MonoidValue Presentation::zaks_x(int n) const {
    if (n < 1 || n > depth_) throw std::out_of_range("Presentation: zaks index out of range");
    std::vector<Int> v(static_cast<std::size_t>(depth_) + 3, Int(0));
    v[static_cast<std::size_t>(n) + 2] = 1;
    return MonoidValue::int_vec(std::move(v));
}

MonoidValue Presentation::zaks_y(int n) const {
    // Y_n = U V W^{-n} X_n^{-1}, i.e. u + v - n*w - x_n as an exponent vector.
    if (n < 1 || n > depth_) throw std::out_of_range("Presentation: zaks index out of range");
    std::vector<Int> v(static_cast<std::size_t>(depth_) + 3, Int(0));
    v[0] = 1;
    v[1] = 1;
    v[2] = -n;
    v[static_cast<std::size_t>(n) + 2] = -1;
    return MonoidValue::int_vec(std::move(v));
}

std::vector<MonoidValue> Presentation::generators() const {
    std::vector<MonoidValue> out;
    switch (family_) {
    case Family::Explicit:
        for (int i = 0; i < depth_; ++i)
            out.push_back(MonoidValue::puiseux(explicit_[static_cast<std::size_t>(i)]));
        return out;
    case Family::Grams:
    case Family::Gp:
    case Family::IntersectG1:
    case Family::IntersectG2: {
        Int pk = 1;
        for (int n = 1; n <= depth_; ++n) {
            pk *= base_prime_;
            out.push_back(MonoidValue::puiseux(Rational(1, pk * prime_seq().nth(static_cast<std::size_t>(n)))));
        }
        return out;
    }
    case Family::CyclicSq: {
        Rational pow(1);
        out.push_back(MonoidValue::puiseux(pow));
        for (int n = 1; n <= depth_; ++n) {
            pow = pow * q_;
            out.push_back(MonoidValue::puiseux(pow));
        }
        return out;
    }
    case Family::PairPrimes:
        for (int n = 1; n <= depth_; ++n) {
            Int qn = prime_seq().nth(static_cast<std::size_t>(n)) *
                     prime_seq().nth(static_cast<std::size_t>(n) + 2);
            out.push_back(MonoidValue::puiseux(Rational(1, qn)));
        }
        return out;
    case Family::RankTwoP: {
        // A-atoms with indices <= depth: sum over a nonempty subset J of
        // {1..depth} of 1/p_j, plus one extra 1/p_{j'} with j' in J.
        std::vector<Rational> a_atoms;
        const int n = depth_;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Rational base;
            for (int j = 0; j < n; ++j)
                if (mask & (1u << j)) base += Rational(1, prime_seq().nth(static_cast<std::size_t>(j) + 1));
            for (int j = 0; j < n; ++j)
                if (mask & (1u << j))
                    a_atoms.push_back(base + Rational(1, prime_seq().nth(static_cast<std::size_t>(j) + 1)));
        }
        std::sort(a_atoms.begin(), a_atoms.end());
        for (const Rational& a : a_atoms) out.push_back(MonoidValue::rank_two(0, a));
        for (int ell = 0; ell <= depth_; ++ell) out.push_back(beta_atom(ell));
        return out;
    }
    case Family::Zaks: {
        out.push_back(zaks_u());
        out.push_back(zaks_v());
        out.push_back(zaks_w());
        for (int i = 1; i <= depth_; ++i) out.push_back(zaks_x(i));
        for (int i = 1; i <= depth_; ++i) out.push_back(zaks_y(i));
        return out;
    }
    }
    throw std::logic_error("Presentation: bad family");
}

Presentation Presentation::with_depth(int depth) const {
    require_depth(depth);
    switch (family_) {
    case Family::Explicit: return explicit_gens(explicit_, std::min<int>(depth, static_cast<int>(explicit_.size())));
    case Family::Grams: return grams(depth);
    case Family::Gp: return gp(base_prime_, depth);
    case Family::CyclicSq: return cyclic_sq(q_, depth);
    case Family::PairPrimes: return pair_primes(depth);
    case Family::RankTwoP: return rank_two_p(depth);
    case Family::IntersectG1: return intersect_g(1, depth);
    case Family::IntersectG2: return intersect_g(2, depth);
    case Family::Zaks: return zaks(depth);
    }
    throw std::logic_error("Presentation: bad family");
}

bool Presentation::has_exact_membership() const {
    switch (family_) {
    case Family::Explicit: // the truncation is the whole monoid
    case Family::Grams:
    case Family::Gp:
    case Family::IntersectG1:
    case Family::IntersectG2:
        return true;
    default:
        return false;
    }
}

std::string Presentation::str() const {
    std::string s = family_name(family_);
    switch (family_) {
    case Family::Gp: s += "(p=" + base_prime_.str() + ")"; break;
    case Family::CyclicSq: s += "(q=" + q_.str() + ")"; break;
    case Family::Explicit: {
        s += "(";
        for (std::size_t i = 0; i < explicit_.size(); ++i) {
            if (i) s += ",";
            s += explicit_[i].str();
        }
        s += ")";
        break;
    }
    default: break;
    }
    return s + "@" + std::to_string(depth_);
}

} // namespace atomlab
