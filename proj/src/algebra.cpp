#include "atomlab/algebra.hpp"

#include <algorithm>

namespace atomlab {

DivisionResult divides_in_algebra(const Presentation& pres, const PolyExpr& f, const PolyExpr& g,
                                  Budget* budget) {
    DivisionResult out;
    if (f.is_zero()) throw std::invalid_argument("divides_in_algebra: division by the zero polynomial");
    if (g.is_zero()) {
        out.verdict = DivisionResult::Verdict::Yes;
        out.quotient = PolyExpr(f.field(), f.tag(), f.vec_len());
        return out;
    }
    if (f.field() != g.field()) throw std::invalid_argument("divides_in_algebra: field mismatch");

    MonoidKernel kernel(pres);
    PolyExpr r = g;
    PolyExpr h(f.field(), f.tag(), f.vec_len());
    const MonoidValue& fdeg = f.deg();
    const FieldValue flead = f.coeff(fdeg);
    while (!r.is_zero()) {
        if (budget) {
            try {
                budget->tick();
            } catch (const BudgetExhausted&) {
                out.verdict = DivisionResult::Verdict::Unknown;
                out.reason = "division budget exhausted";
                return out;
            }
        }
        const MonoidValue& rdeg = r.deg();
        MonoidValue delta = rdeg.minus(fdeg);
        if (!delta.admissible()) {
            out.verdict = DivisionResult::Verdict::No;
            out.reason = "leading exponent difference " + delta.str() + " is inadmissible";
            return out;
        }
        bool member;
        try {
            member = kernel.member(delta, budget);
        } catch (const BudgetExhausted&) {
            out.verdict = DivisionResult::Verdict::Unknown;
            out.reason = "exponent-membership subproblem exceeded the budget";
            return out;
        }
        if (!member) {
            out.verdict = DivisionResult::Verdict::No;
            out.reason = "forced quotient exponent " + delta.str() + " is not in the monoid";
            return out;
        }
        FieldValue c = r.coeff(rdeg) / flead;
        PolyExpr term = PolyExpr::monomial(f.field(), delta, c);
        h = h + term;
        r = r - term * f;
    }
    if (!(f * h == g)) throw std::logic_error("divides_in_algebra: verification failed");
    out.verdict = DivisionResult::Verdict::Yes;
    out.quotient = std::move(h);
    return out;
}

bool is_unit_localized(const LocalizedElement& e) { return !e.num.constant_term().is_zero(); }

bool localization_chain_check(const Presentation& pres, const std::vector<LocalizedElement>& chain,
                              Budget* budget) {
    if (chain.empty()) return false;
    bool localized_mode = false;
    for (const LocalizedElement& e : chain)
        if (!(e.den.is_unit() && e.den.constant_term() == FieldValue::one(e.den.field())))
            localized_mode = true;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        // quotient of e_i by e_{i+1} on cross-multiplied numerators
        PolyExpr lhs = chain[i].num * chain[i + 1].den;
        DivisionResult div = divides_in_algebra(pres, chain[i + 1].num, lhs, budget);
        if (div.verdict != DivisionResult::Verdict::Yes) return false;
        const PolyExpr& h = *div.quotient;
        if (h.is_zero()) return false;
        if (localized_mode) {
            // quotient h / den_i is a unit of F[M]_S iff h(0) != 0
            if (!h.constant_term().is_zero()) return false;
        } else {
            // chain lives in F[M]; strictness needs a nonconstant quotient
            if (h.is_unit()) return false;
        }
    }
    return true;
}

std::pair<bool, std::optional<FieldValue>> common_divisor_units_only(const PolyExpr& f,
                                                                     const PolyExpr& g) {
    PolyExpr diff = g - f;
    if (!diff.is_zero() && diff.is_unit()) return {true, diff.constant_term()};
    PolyExpr diff2 = f - g;
    if (!diff2.is_zero() && diff2.is_unit()) return {true, diff2.constant_term()};
    return {false, std::nullopt};
}

MonoidValue theorem59_b0(const Presentation& pres, const PolyExpr& f, const MonoidValue& m_j,
                         Budget* budget) {
    auto supp = f.supp();
    if (std::find(supp.begin(), supp.end(), m_j) == supp.end())
        throw std::invalid_argument("theorem59_b0: m_j must lie in supp f");
    MonoidKernel kernel(pres);
    std::optional<MonoidValue> best;
    for (const MonoidValue& m : supp) {
        if (m.is_zero()) continue; // the anchor is strictly positive
        if (!kernel.divides(m, m_j, budget)) continue;
        if (!best || m < *best) best = m;
    }
    return best ? *best : m_j;
}

IntersectionNormalForm intersection_normal_form(const LocalizedElement& e1,
                                                const Presentation& side1,
                                                const LocalizedElement& e2,
                                                const Presentation& side2) {
    // same element of the fraction field: num1*den2 == num2*den1
    if (!(e1.num * e2.den == e2.num * e1.den))
        throw std::invalid_argument("intersection_normal_form: cross-multiplication identity fails");
    Rational q1 = mu(e1.num, side1);
    Rational q2 = mu(e2.num, side2);
    if (q1 != q2)
        throw MuMismatch("mu disagrees between the two sides: " + q1.str() + " vs " + q2.str());

    IntersectionNormalForm out;
    out.q = q1;
    // case split on r = min { shifted support exponent with gd = 0 }
    std::optional<Rational> r;
    for (const auto& [e, c] : e1.num.terms()) {
        Rational shifted = e.rational() - q1;
        if (gd(side1, shifted).is_zero())
            if (!r || shifted < *r) r = shifted;
    }
    if (!r) throw std::logic_error("intersection_normal_form: no gd-zero exponent after the shift");
    out.min_gd_zero_exponent = *r;
    out.is_unit_pair = r->is_zero();
    return out;
}

std::pair<Rational, Rational> antimatter_split(const Rational& q, const Presentation& pres) {
    if (q <= Rational(0)) throw NotAMember("antimatter_split: q must be positive");
    Rational half = q / Rational(2);
    // both halves must lie in < 1/2^n >, i.e. be dyadic
    Int d = half.den();
    while (d % 2 == 0) d /= 2;
    if (d != 1) throw NotAMember("antimatter_split: q/2 = " + half.str() + " is not dyadic");
    if (!grams_member(pres, half))
        throw NotAMember("antimatter_split: q/2 is not a member of the side monoid");
    return {half, half};
}

Int RankTwoEmbedding::x_deg() const {
    if (columns.empty()) throw ZeroPolynomial("x_deg of zero embedding");
    return columns.rbegin()->first;
}

Int RankTwoEmbedding::x_ord() const {
    if (columns.empty()) throw ZeroPolynomial("x_ord of zero embedding");
    return columns.begin()->first;
}

RankTwoEmbedding rank2_embed(const PolyExpr& f) {
    if (f.tag() != ValueTag::RankTwo) throw TagMismatch("rank2_embed: rank-two exponents expected");
    RankTwoEmbedding out;
    out.field = f.field();
    for (const auto& [e, c] : f.terms()) out.columns[e.beta_coeff()][e.rational()] = c;
    return out;
}

PolyExpr rank2_unembed(const RankTwoEmbedding& e) {
    PolyExpr out(e.field, ValueTag::RankTwo);
    for (const auto& [n0, col] : e.columns)
        for (const auto& [q, c] : col) out.add_term(MonoidValue::rank_two(n0, q), c);
    return out;
}

std::string ZaksWord::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i].first;
        if (factors[i].second != 1) out += "^" + factors[i].second.str();
    }
    return out;
}

ZaksWord zaks_algebra_map(const Presentation& zaks, const MonoidValue& monomial, Budget* budget) {
    if (zaks.family() != Family::Zaks)
        throw std::invalid_argument("zaks_algebra_map: Zaks presentation expected");
    MonoidKernel kernel(zaks);
    if (!kernel.member(monomial, budget))
        throw NotAMember("zaks_algebra_map: exponent vector is not in the monoid");
    ZaksWord out;
    const auto& e = monomial.entries();
    if (e[0] != 0) out.factors.emplace_back("U", e[0]);
    if (e[1] != 0) out.factors.emplace_back("V", e[1]);
    if (e[2] != 0) out.factors.emplace_back("W", e[2]);
    for (std::size_t i = 3; i < e.size(); ++i)
        if (e[i] != 0) out.factors.emplace_back("X" + std::to_string(i - 2), e[i]);
    return out;
}

} // namespace atomlab
