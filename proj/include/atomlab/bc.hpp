#pragma once

#include "atomlab/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace atomlab {

struct ZeroDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInR : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of F[x,y] in canonical sparse form; the zero polynomial is the
/// empty map.
class BivariatePoly {
public:
    explicit BivariatePoly(FieldSpec field = FieldSpec::QQ()) : field_(field) {}

    static BivariatePoly monomial(const FieldSpec& field, long i, long j, const FieldValue& c);
    static BivariatePoly constant(const FieldSpec& field, const FieldValue& c) {
        return monomial(field, 0, 0, c);
    }
    static BivariatePoly x(const FieldSpec& field = FieldSpec::QQ()) {
        return monomial(field, 1, 0, FieldValue::one(field));
    }
    static BivariatePoly y(const FieldSpec& field = FieldSpec::QQ()) {
        return monomial(field, 0, 1, FieldValue::one(field));
    }

    const FieldSpec& field() const { return field_; }
    const std::map<std::pair<long, long>, FieldValue>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long i, long j, const FieldValue& c);

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly operator-() const;
    bool operator==(const BivariatePoly& o) const {
        return field_ == o.field_ && terms_ == o.terms_;
    }
    bool operator!=(const BivariatePoly& o) const { return !(*this == o); }

    /// x-adic and y-adic valuations (minimum exponents); zero polynomial has
    /// no valuation and throws.
    long x_valuation() const;
    long y_valuation() const;
    /// Exact division by x^a y^b; requires valuations >= a, b.
    BivariatePoly shift_down(long a, long b) const;
    /// Membership in S: divisible by neither x nor y.
    bool in_s() const { return !is_zero() && x_valuation() == 0 && y_valuation() == 0; }

    /// "3*x^2*y + 1"
    std::string str() const;

private:
    FieldSpec field_;
    std::map<std::pair<long, long>, FieldValue> terms_;
};

/// Element of K = Frac(F[x,y]) in normal form (unit_num/unit_den)*x^j*y^k
/// with both unit parts in S; j and k are the x- and y-adic valuations.
class NormalForm2 {
public:
    static NormalForm2 zero(const FieldSpec& field = FieldSpec::QQ());
    static NormalForm2 one(const FieldSpec& field = FieldSpec::QQ());
    /// x^j y^k with unit parts 1.
    static NormalForm2 monomial(long j, long k, const FieldSpec& field = FieldSpec::QQ());

    bool is_zero() const { return zero_; }
    const BivariatePoly& unit_num() const { return unit_num_; }
    const BivariatePoly& unit_den() const { return unit_den_; }
    long j() const { return j_; }
    long k() const { return k_; }
    const FieldSpec& field() const { return field_; }

    NormalForm2 operator+(const NormalForm2& o) const;
    NormalForm2 operator-(const NormalForm2& o) const;
    NormalForm2 operator*(const NormalForm2& o) const;
    NormalForm2 operator/(const NormalForm2& o) const;
    NormalForm2 operator-() const;
    NormalForm2 inverse() const;
    bool operator==(const NormalForm2& o) const;
    bool operator!=(const NormalForm2& o) const { return !(*this == o); }

    std::string str() const;

    friend NormalForm2 normal_form(const BivariatePoly& num, const BivariatePoly& den);

private:
    explicit NormalForm2(FieldSpec field)
        : zero_(true), unit_num_(field), unit_den_(field), j_(0), k_(0), field_(field) {}

    bool zero_;
    BivariatePoly unit_num_;
    BivariatePoly unit_den_;
    long j_, k_;
    FieldSpec field_;
};

/// Factor the maximal x- and y-powers out of num and den; total on K.
NormalForm2 normal_form(const BivariatePoly& num, const BivariatePoly& den);

/// D = S^{-1} F[x,y]: both valuations nonnegative (zero belongs everywhere).
bool in_D(const NormalForm2& h);
/// D1 = D[y/x^2]: k >= 0 and j + 2k >= 0.
bool in_D1(const NormalForm2& h);
/// D2 = D[x/y^2]: j >= 0 and k + 2j >= 0.
bool in_D2(const NormalForm2& h);

/// Constructive expansion h = d * t^i with d in D and t the adjoined
/// fraction (y/x^2 for D1, x/y^2 for D2).
struct DExpansion {
    long power = 0;
    NormalForm2 d = NormalForm2::zero();
};
std::optional<DExpansion> d1_expansion(const NormalForm2& h);
std::optional<DExpansion> d2_expansion(const NormalForm2& h);

/// Element of K[X]: finite map degree -> nonzero coefficient.
class KPoly {
public:
    explicit KPoly(FieldSpec field = FieldSpec::QQ()) : field_(field) {}

    static KPoly constant(const NormalForm2& c);
    static KPoly monomial(unsigned deg, const NormalForm2& c);
    /// X and X - 1 over the given field.
    static KPoly var_x(const FieldSpec& field = FieldSpec::QQ());
    static KPoly var_x_minus_1(const FieldSpec& field = FieldSpec::QQ());

    const FieldSpec& field() const { return field_; }
    const std::map<unsigned, NormalForm2>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    unsigned degree() const;
    NormalForm2 coeff(unsigned d) const;

    void add_term(unsigned deg, const NormalForm2& c);

    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly scaled(const NormalForm2& c) const;
    bool operator==(const KPoly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }
    bool operator!=(const KPoly& o) const { return !(*this == o); }

    NormalForm2 eval0() const; // g(0)
    NormalForm2 eval1() const; // g(1)

    /// Exact polynomial division in K[X]; returns (quotient, remainder).
    static std::pair<KPoly, KPoly> divrem(const KPoly& num, const KPoly& den);

    std::string str() const;

private:
    FieldSpec field_;
    std::map<unsigned, NormalForm2> coeffs_;
};

/// Membership in the pullback: g(0) in D1 and g(1) in D2.
bool in_R(const KPoly& g);

/// ACCP predicate for elements of R: f satisfies ACCP iff not both f(0) = 0
/// and f(1) = 0 (equivalently X(X-1) does not divide f in K[X]).
bool accp_element_bc(const KPoly& f);

/// Largest n with (X(X-1))^n dividing w in K[X].
long xx1_multiplicity(const KPoly& w);

struct BcDivisorReport {
    bool early_exit = false;
    KPoly d;
    long m = 0;
    long n_exponent = 0; // the N of the monomial prefactors
    std::vector<KPoly> quotients;
    std::size_t s_index = 0; // index into W whose quotient satisfies ACCP
};

/// The weak-ACCP common-divisor construction for the BC-domain: either some
/// w already satisfies ACCP (d = 1), or d = (x/y^2)^N X^m (y/x^2)^N (X-1)^m
/// with all quotients verified in R and one quotient satisfying ACCP.
BcDivisorReport weak_accp_divisor_bc(const std::vector<KPoly>& w);

} // namespace atomlab
