#include "atomlab/decompose.hpp"

#include "atomlab/kernel.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace atomlab {

namespace {

Int mod_norm(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int t = 0, new_t = 1, r = m, new_r = mod_norm(a, m);
    while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("mod_inverse: not invertible");
    return mod_norm(t, m);
}

void check_grams_family(const Presentation& fam) {
    switch (fam.family()) {
    case Family::Grams:
    case Family::Gp:
    case Family::IntersectG1:
    case Family::IntersectG2:
        return;
    default:
        throw std::invalid_argument("expected a Grams-shaped family, got " + fam.str());
    }
}

// Distinct odd prime factors of n (n's 2- and base-prime parts removed by
// the caller); trial division is fine at desk scale.
std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

void budget_tick(Budget* budget, std::uint64_t n = 1) {
    if (budget) budget->tick(n);
}

} // namespace

Rational GramsDecomposition::reconstruct(const Presentation& fam) const {
    Rational sum = q_part;
    Int pk;
    for (const auto& [n, c] : coeffs) {
        pk = 1;
        for (int i = 0; i < n; ++i) pk *= fam.base_prime();
        sum += Rational(c, pk * fam.prime_seq().nth(static_cast<std::size_t>(n)));
    }
    return sum;
}

GramsDecomposition grams_decompose(const Presentation& fam, const Rational& b) {
    check_grams_family(fam);
    if (b.is_negative()) throw NotDecomposable("negative value");
    const Int P = fam.base_prime();
    const PrimeSeq& seq = fam.prime_seq();

    GramsDecomposition out;
    Rational rest = b;

    Int den = b.den();
    // strip the base-prime part; every other prime factor must be a sequence
    // term and be cleared by the unique coefficient in [0, p_n - 1]
    while (den % P == 0) den /= P;
    for (const Int& ell : prime_factors(den)) {
        std::size_t n = seq.index_of(ell);
        if (n == 0) throw NotDecomposable("denominator prime " + ell.str() + " outside the sequence");
        if (rest.den() % (ell * ell) == 0)
            throw NotDecomposable("denominator not squarefree in " + ell.str());
        // rest - c/(P^n ell) must clear ell: with rest = a/(ell*d'),
        // c = a * P^n * (d')^{-1}  (mod ell)
        Int pk = 1;
        for (std::size_t i = 0; i < n; ++i) pk *= P;
        Int dprime = rest.den() / ell;
        Int c = mod_norm(rest.num() * pk % ell * mod_inverse(dprime, ell), ell);
        if (c != 0) {
            out.coeffs[static_cast<int>(n)] = c;
            rest -= Rational(c, pk * ell);
        }
    }
    // what remains must be a nonnegative element of < 1/P^n >
    if (rest.is_negative()) throw NotDecomposable("coefficient subtraction went negative");
    Int d = rest.den();
    while (d % P == 0) d /= P;
    if (d != 1) throw NotDecomposable("q-part denominator is not a power of " + P.str());
    out.q_part = rest;
    return out;
}

Rational gd(const Presentation& fam, const Rational& b) { return grams_decompose(fam, b).q_part; }

bool grams_member(const Presentation& fam, const Rational& b) {
    try {
        grams_decompose(fam, b);
        return true;
    } catch (const NotDecomposable&) {
        return false;
    }
}

Rational PDecomposition::reconstruct(const PrimeSeq& seq) const {
    Rational sum(n0);
    for (const auto& [i, c] : coeffs) sum += Rational(c, seq.nth(static_cast<std::size_t>(i)));
    return sum;
}

PDecomposition p_decompose(const Rational& q, const PrimeSeq& seq) {
    if (q.is_negative()) throw NotDecomposable("negative value");
    PDecomposition out;
    Rational rest = q;
    for (const Int& ell : prime_factors(q.den())) {
        std::size_t i = seq.index_of(ell);
        if (i == 0) throw NotDecomposable("denominator prime " + ell.str() + " outside the sequence");
        if (rest.den() % (ell * ell) == 0)
            throw NotDecomposable("denominator not squarefree in " + ell.str());
        Int dprime = rest.den() / ell;
        Int c = mod_norm(rest.num() % ell * mod_inverse(dprime, ell), ell);
        if (c != 0) {
            out.coeffs[static_cast<int>(i)] = c;
            rest -= Rational(c, ell);
        }
    }
    if (rest.is_negative() || !rest.is_integer()) throw NotDecomposable("integer part not in N_0");
    out.n0 = rest.num();
    return out;
}

PDecomposition p_decompose(const Rational& q) {
    PrimeSeq seq = PrimeSeq::sparse();
    return p_decompose(q, seq);
}

bool p_member(const Rational& q) {
    try {
        p_decompose(q);
        return true;
    } catch (const NotDecomposable&) {
        return false;
    }
}

bool p_divides(const Rational& u, const Rational& v) { return p_member(v - u); }

Rational ShiftedDecomposition::reconstruct(const PrimeSeq& seq) const {
    Rational sum(n);
    for (const auto& [i, c] : coeffs) sum += Rational(c, seq.nth(static_cast<std::size_t>(i)));
    return sum;
}

ShiftedDecomposition shifted_decompose(const Presentation& rank2, const MonoidValue& r) {
    if (r.tag() != ValueTag::RankTwo) throw TagMismatch("shifted_decompose: RankTwo value expected");
    if (r.beta_coeff() != 1)
        throw PreconditionViolated("shifted_decompose: beta coefficient must be 1");
    const PrimeSeq& seq = rank2.prime_seq();

    ShiftedDecomposition out;
    Rational rest = r.rational();
    for (const Int& ell : prime_factors(rest.den())) {
        std::size_t i = seq.index_of(ell);
        if (i == 0) throw NotDecomposable("denominator prime " + ell.str() + " outside the sequence");
        if (rest.den() % (ell * ell) == 0)
            throw NotDecomposable("denominator not squarefree in " + ell.str());
        Int dprime = rest.den() / ell;
        Int t = mod_norm(rest.num() % ell * mod_inverse(dprime, ell), ell);
        // residue class mapped into [-1, p_i - 2]
        Int ni = (t == ell - 1) ? Int(-1) : t;
        if (ni != 0) {
            out.coeffs[static_cast<int>(i)] = ni;
            rest -= Rational(ni, ell);
        }
    }
    if (rest.is_negative() || !rest.is_integer())
        throw NotDecomposable("integer part not in N_0");
    out.n = rest.num();
    return out;
}

Int phi(const MonoidValue& r) {
    if (r.tag() != ValueTag::RankTwo) throw TagMismatch("phi: RankTwo value expected");
    return r.beta_coeff();
}

Rational psi(const Presentation& rank2, const MonoidValue& r) {
    ShiftedDecomposition d = shifted_decompose(rank2, r);
    Rational out(d.n);
    for (const auto& [i, c] : d.coeffs)
        if (c > 0) out += Rational(c, rank2.prime_seq().nth(static_cast<std::size_t>(i)));
    // image lies in P by construction
    p_decompose(out, rank2.prime_seq());
    return out;
}

Rational AVector::value(const PrimeSeq& seq) const {
    Rational v;
    for (int j : support) v += Rational(1, seq.nth(static_cast<std::size_t>(j)));
    v += Rational(1, seq.nth(static_cast<std::size_t>(doubled)));
    return v;
}

namespace {

std::string coeff_key(const CoeffVec& s) {
    std::ostringstream os;
    for (const auto& [i, c] : s) os << i << ":" << c << ",";
    return os.str();
}

// Cover-first search: the smallest surviving index must be covered by some
// A-vector; enumerate the vectors covering it (subsets of the support
// containing it, with a doubled index of remaining coefficient >= 2).
struct AVectorSearch {
    Budget* budget;
    std::map<std::string, bool> memo;

    bool decomposable(const CoeffVec& s, std::vector<AVector>* witness) {
        if (s.empty()) return true;
        budget_tick(budget);
        std::string key = coeff_key(s);
        if (!witness) {
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        bool ok = false;
        int i0 = s.begin()->first;
        std::vector<int> support;
        for (const auto& [i, c] : s) support.push_back(i);
        // subsets of support containing i0
        std::vector<int> rest(support.begin() + 1, support.end());
        std::size_t m = rest.size();
        for (std::uint64_t mask = 0; mask < (1ull << m) && !ok; ++mask) {
            AVector v;
            v.support.push_back(i0);
            for (std::size_t j = 0; j < m; ++j)
                if (mask & (1ull << j)) v.support.push_back(rest[j]);
            for (int dbl : v.support) {
                if (s.at(dbl) < 2) continue;
                v.doubled = dbl;
                CoeffVec next = s;
                for (int j : v.support) {
                    Int take = (j == dbl) ? 2 : 1;
                    next[j] -= take;
                    if (next[j] == 0) next.erase(j);
                }
                if (decomposable(next, witness)) {
                    if (witness) witness->push_back(v);
                    ok = true;
                    break;
                }
            }
        }
        memo[key] = ok;
        return ok;
    }

    void enumerate(const CoeffVec& s, std::vector<AVector>& acc, const AVector* last_at_same_index,
                   int last_index, std::vector<std::vector<AVector>>& out) {
        if (s.empty()) {
            out.push_back(acc);
            return;
        }
        budget_tick(budget);
        if (!decomposable(s, nullptr)) return;
        int i0 = s.begin()->first;
        std::vector<int> support;
        for (const auto& [i, c] : s) support.push_back(i);
        std::vector<int> rest(support.begin() + 1, support.end());
        std::size_t m = rest.size();
        std::vector<AVector> moves;
        for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
            AVector v;
            v.support.push_back(i0);
            for (std::size_t j = 0; j < m; ++j)
                if (mask & (1ull << j)) v.support.push_back(rest[j]);
            for (int dbl : v.support) {
                if (s.at(dbl) < 2) continue;
                v.doubled = dbl;
                moves.push_back(v);
            }
        }
        std::sort(moves.begin(), moves.end());
        for (const AVector& v : moves) {
            // canonical ordering: vectors consumed at the same active index
            // are taken in non-decreasing order, so every multiset is
            // produced exactly once
            if (last_at_same_index && i0 == last_index && v < *last_at_same_index) continue;
            CoeffVec next = s;
            for (int j : v.support) {
                Int take = (j == v.doubled) ? 2 : 1;
                next[j] -= take;
                if (next[j] == 0) next.erase(j);
            }
            acc.push_back(v);
            enumerate(next, acc, &v, i0, out);
            acc.pop_back();
        }
    }
};

} // namespace

bool a_vector_decomposable(const CoeffVec& s, Budget* budget, std::vector<AVector>* witness) {
    for (const auto& [i, c] : s)
        if (c < 0) return false;
    CoeffVec clean;
    for (const auto& [i, c] : s)
        if (c > 0) clean[i] = c;
    AVectorSearch search{budget, {}};
    bool ok = search.decomposable(clean, witness);
    if (ok && witness) std::reverse(witness->begin(), witness->end());
    return ok;
}

void a_vector_enumerate(const CoeffVec& s, Budget* budget, std::vector<std::vector<AVector>>& out) {
    for (const auto& [i, c] : s)
        if (c < 0) return;
    CoeffVec clean;
    for (const auto& [i, c] : s)
        if (c > 0) clean[i] = c;
    AVectorSearch search{budget, {}};
    std::vector<AVector> acc;
    search.enumerate(clean, acc, nullptr, -1, out);
}

ASpanCheck in_A_span_sufficient(const CoeffVec& coeffs, Budget* budget) {
    ASpanCheck out;
    int hits = 0;
    for (const auto& [i, c] : coeffs) {
        if (c < 0) return out; // not a nonnegative vector; condition cannot apply
        if (c >= 2) ++hits;
    }
    if (hits < 2) return out;
    out.condition_met = true;
    if (!a_vector_decomposable(coeffs, budget, &out.witness))
        throw std::logic_error("in_A_span_sufficient: condition met but witness search failed");
    return out;
}

namespace {

// Canonical sparse-prime coefficients of q restricted to indices <= depth;
// nullopt when q has a prime outside the truncated sequence or is negative.
std::optional<PDecomposition> p_decompose_truncated(const Presentation& rank2, const Rational& q) {
    if (q.is_negative()) return std::nullopt;
    try {
        PDecomposition d = p_decompose(q, rank2.prime_seq());
        for (const auto& [i, c] : d.coeffs)
            if (i > rank2.depth()) return std::nullopt;
        return d;
    } catch (const NotDecomposable&) {
        return std::nullopt;
    }
}

// All raw coefficient vectors for q at truncation: canonical coefficients
// plus carries k_i >= 0 with sum k_i = n0 (each carry turns one unit of the
// integer part into p_i copies of 1/p_i).
template <typename Fn>
bool for_each_raw_vector(const Presentation& rank2, const Rational& q, Budget* budget, Fn&& fn) {
    auto dec = p_decompose_truncated(rank2, q);
    if (!dec) return false;
    const int n = rank2.depth();
    std::vector<Int> carry(static_cast<std::size_t>(n) + 1, Int(0));
    // enumerate compositions of n0 into carry[1..n]
    std::function<bool(int, Int)> rec = [&](int idx, Int remaining) -> bool {
        budget_tick(budget);
        if (idx == n) {
            carry[static_cast<std::size_t>(n)] = remaining;
            CoeffVec raw;
            for (const auto& [i, c] : dec->coeffs) raw[i] = c;
            for (int i = 1; i <= n; ++i) {
                if (carry[static_cast<std::size_t>(i)] == 0) continue;
                raw[i] += carry[static_cast<std::size_t>(i)] *
                          rank2.prime_seq().nth(static_cast<std::size_t>(i));
            }
            return fn(raw);
        }
        for (Int k = 0; k <= remaining; ++k) {
            carry[static_cast<std::size_t>(idx)] = k;
            if (rec(idx + 1, remaining - k)) return true;
        }
        return false;
    };
    return rec(1, dec->n0);
}

} // namespace

bool a_span_member(const Presentation& rank2, const Rational& q, Budget* budget) {
    if (rank2.family() != Family::RankTwoP)
        throw std::invalid_argument("a_span_member: rank-two presentation expected");
    if (q.is_zero()) return true;
    return for_each_raw_vector(rank2, q, budget,
                               [&](const CoeffVec& raw) { return a_vector_decomposable(raw, budget); });
}

std::vector<std::vector<AVector>> a_span_enumerate(const Presentation& rank2, const Rational& q,
                                                   Budget* budget) {
    std::vector<std::vector<AVector>> out;
    if (q.is_zero()) {
        out.emplace_back();
        return out;
    }
    for_each_raw_vector(rank2, q, budget, [&](const CoeffVec& raw) {
        a_vector_enumerate(raw, budget, out);
        return false; // keep going: collect every carry assignment
    });
    return out;
}

int beta_divisor_threshold(const Presentation& rank2, const MonoidValue& r, Budget* budget) {
    Int f = phi(r);
    if (f < 2) throw PreconditionViolated("beta_divisor_threshold: phi(r) >= 2 required");
    const PrimeSeq& seq = rank2.prime_seq();

    // Write the rational part as sum n_i/p_i with integer n_i >= -phi: take
    // the canonical residue classes t_i in [0, p_i), then repay any negative
    // integer leftover by borrowing p_i from coordinates that can spare it.
    std::map<int, Int> raw;
    Rational rest = r.rational();
    for (const Int& ell : prime_factors(rest.den())) {
        std::size_t i = seq.index_of(ell);
        if (i == 0)
            throw NotDecomposable("beta_divisor_threshold: denominator prime outside the sequence");
        Int dprime = rest.den() / ell;
        Int t = mod_norm(rest.num() % ell * mod_inverse(dprime, ell), ell);
        raw[static_cast<int>(i)] = t;
        rest -= Rational(t, ell);
    }
    if (!rest.is_integer())
        throw NotDecomposable("beta_divisor_threshold: rational part not over the sparse primes");
    Int m = rest.num();
    if (m > 0) {
        raw[1] += m * seq.nth(1); // m units as m*p_1 copies of 1/p_1
        m = 0;
    }
    for (auto& [i, t] : raw) {
        if (m >= 0) break;
        Int pi = seq.nth(static_cast<std::size_t>(i));
        if (t >= pi - f) {
            t -= pi;
            m += 1;
        }
    }
    if (m < 0)
        throw NotDecomposable("beta_divisor_threshold: no representation with n_i >= -phi(r)");

    int ell_max = 0;
    for (const auto& [i, c] : raw)
        if (c != 0) ell_max = std::max(ell_max, i);

    for (int N = 1; N <= ell_max + 2; ++N) {
        // residual r - phi*beta_N has raw coefficients n_i + phi for i <= N,
        // n_i for i > N (must vanish), phi alone for bare indices <= N
        CoeffVec residual;
        bool valid = true;
        for (int i = 1; i <= N; ++i) residual[i] = f;
        for (const auto& [i, c] : raw) {
            if (i <= N) {
                residual[i] += c;
                if (residual[i] < 0) valid = false;
            } else if (c != 0) {
                valid = false;
            }
        }
        if (!valid) continue;

        bool zero_residual = true;
        for (const auto& [i, c] : residual)
            if (c != 0) zero_residual = false;
        if (zero_residual) return N; // divides with quotient 0

        if (in_A_span_sufficient(residual, budget).condition_met) return N;
    }
    // N = ell+2 always meets the condition: two bare indices carry phi >= 2
    throw std::logic_error("beta_divisor_threshold: no N <= ell+2 verified");
}

Rational mu(const PolyExpr& f, const Presentation& side) {
    if (f.is_zero()) throw ZeroPolynomial("mu of zero polynomial");
    check_grams_family(side);
    bool first = true;
    Rational best;
    for (const auto& [e, c] : f.terms()) {
        if (e.tag() != ValueTag::PuiseuxQ) throw TagMismatch("mu: rational exponents expected");
        Rational g = gd(side, e.rational()); // throws NotDecomposable if outside the side
        if (first || g < best) {
            best = g;
            first = false;
        }
    }
    return best;
}

} // namespace atomlab
