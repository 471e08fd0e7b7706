#pragma once

#include "atomlab/chains.hpp"
#include "atomlab/decompose.hpp"
#include "atomlab/kernel.hpp"
#include "atomlab/poly.hpp"

#include <map>
#include <optional>
#include <string>

namespace atomlab {

struct MuMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact division attempt by leading-term elimination over the ordered
/// exponent monoid. Quotient terms are forced over a field; Unknown arises
/// only from budget exhaustion in exponent-membership subcalls.
struct DivisionResult {
    enum class Verdict { Yes, No, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<PolyExpr> quotient; // set when Yes; g == f * quotient holds
    std::string reason;
};

DivisionResult divides_in_algebra(const Presentation& pres, const PolyExpr& f, const PolyExpr& g,
                                  Budget* budget = nullptr);

/// Fraction with denominator in S = { f in F[M] : f(0) != 0 }.
struct LocalizedElement {
    PolyExpr num;
    PolyExpr den;

    LocalizedElement(PolyExpr n, PolyExpr d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero() || den.constant_term().is_zero())
            throw std::invalid_argument("LocalizedElement: denominator must have nonzero constant term");
    }
    static LocalizedElement whole(PolyExpr n) {
        PolyExpr one = PolyExpr::constant(n.field(), FieldValue::one(n.field()), n.tag(), n.vec_len());
        return LocalizedElement(std::move(n), std::move(one));
    }
};

/// Units of F[M]_S: fractions whose numerator also has nonzero constant term.
bool is_unit_localized(const LocalizedElement& e);

/// Validates that consecutive quotients exist and are nonunits. Chains whose
/// entries all have denominator 1 are read as chains of F[M] itself
/// (nonunit = nonconstant quotient); otherwise nonunits of the localization.
bool localization_chain_check(const Presentation& pres, const std::vector<LocalizedElement>& chain,
                              Budget* budget = nullptr);

/// True when g - f is a nonzero constant, so every common divisor of f and g
/// divides that constant and is a unit. Emits the constant used.
std::pair<bool, std::optional<FieldValue>> common_divisor_units_only(const PolyExpr& f,
                                                                     const PolyExpr& g);

/// b0 = min { m in supp f : 0 < m and m divides m_j in M }, the ACCP anchor
/// for localization chain arguments; falls back to m_j itself.
MonoidValue theorem59_b0(const Presentation& pres, const PolyExpr& f, const MonoidValue& m_j,
                         Budget* budget = nullptr);

/// Normal form of an element of L1 cap L2 presented on both sides: the common
/// monomial shift q = mu(num) and whether the cofactor is a unit pair.
struct IntersectionNormalForm {
    Rational q;
    bool is_unit_pair = false;
    Rational min_gd_zero_exponent; // the r of the case analysis, shifted support
};

IntersectionNormalForm intersection_normal_form(const LocalizedElement& e1,
                                                const Presentation& side1,
                                                const LocalizedElement& e2,
                                                const Presentation& side2);

/// q in <1/2^n> \ {0} splits as q/2 + q/2 with both halves members and both
/// monomial factors nonunits; no element of the intersection is irreducible.
std::pair<Rational, Rational> antimatter_split(const Rational& q, const Presentation& pres);

/// Image of f in F[X;Q][x] under Y^{n0*beta + q} -> X^q x^{n0}. Columns are
/// indexed by the x-degree n0; X-exponents may be negative rationals.
struct RankTwoEmbedding {
    FieldSpec field;
    std::map<Int, std::map<Rational, FieldValue>> columns; // x-degree -> X-poly

    Int x_deg() const;
    Int x_ord() const;
};

RankTwoEmbedding rank2_embed(const PolyExpr& f);
PolyExpr rank2_unembed(const RankTwoEmbedding& e);

/// The word Z^m = U^a V^b W^c prod X_n^{d_n} for a Zaks-monoid exponent
/// vector; requires membership.
struct ZaksWord {
    std::vector<std::pair<std::string, Int>> factors; // symbol -> exponent, nonzero only
    std::string str() const;
};

ZaksWord zaks_algebra_map(const Presentation& zaks, const MonoidValue& monomial,
                          Budget* budget = nullptr);

} // namespace atomlab
