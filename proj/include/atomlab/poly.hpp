#pragma once

#include "atomlab/monoid_value.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace atomlab {

struct ZeroPolynomial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals or a prime field GF(p).
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    Int p = 0;

    static FieldSpec QQ() { return FieldSpec{}; }
    static FieldSpec GF(const Int& p);

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const { return kind == Kind::Rationals ? "QQ" : "GF(" + p.str() + ")"; }
    static FieldSpec parse(const std::string& s);
};

/// A field element tagged with its field; GF(p) values are kept in [0, p).
class FieldValue {
public:
    FieldValue() = default;
    FieldValue(FieldSpec spec, Rational v);

    static FieldValue zero(const FieldSpec& spec) { return FieldValue(spec, Rational(0)); }
    static FieldValue one(const FieldSpec& spec) { return FieldValue(spec, Rational(1)); }

    const FieldSpec& spec() const { return spec_; }
    const Rational& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    FieldValue operator+(const FieldValue& o) const;
    FieldValue operator-(const FieldValue& o) const;
    FieldValue operator*(const FieldValue& o) const;
    FieldValue operator/(const FieldValue& o) const;
    FieldValue operator-() const;
    FieldValue inverse() const;

    bool operator==(const FieldValue& o) const { return spec_ == o.spec_ && v_ == o.v_; }
    bool operator!=(const FieldValue& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check(const FieldValue& o) const {
        if (spec_ != o.spec_) throw std::invalid_argument("FieldValue: field mismatch");
    }

    FieldSpec spec_;
    Rational v_;
};

/// An element of F[M]: a finite map from monoid exponents to nonzero field
/// coefficients, exponents totally ordered by value. deg/ord/supp are the
/// max/min/key-set of the exponent map.
class PolyExpr {
public:
    PolyExpr(FieldSpec field, ValueTag tag, std::size_t vec_len = 0)
        : field_(field), tag_(tag), vec_len_(vec_len) {}

    static PolyExpr monomial(const FieldSpec& field, const MonoidValue& exponent,
                             const FieldValue& coeff);
    static PolyExpr constant(const FieldSpec& field, const FieldValue& coeff,
                             ValueTag tag = ValueTag::PuiseuxQ, std::size_t vec_len = 0);

    const FieldSpec& field() const { return field_; }
    ValueTag tag() const { return tag_; }
    std::size_t vec_len() const { return vec_len_; }
    const std::map<MonoidValue, FieldValue>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const MonoidValue& deg() const;
    const MonoidValue& ord() const;
    std::vector<MonoidValue> supp() const;
    FieldValue coeff(const MonoidValue& e) const;
    /// Coefficient of the zero exponent (the value at 0 for positive monoids).
    FieldValue constant_term() const;

    /// Units of F[M] for a reduced positive exponent monoid: the nonzero
    /// constants.
    bool is_unit() const { return terms_.size() == 1 && terms_.begin()->first.is_zero(); }

    void add_term(const MonoidValue& e, const FieldValue& c);

    PolyExpr operator+(const PolyExpr& o) const;
    PolyExpr operator-(const PolyExpr& o) const;
    PolyExpr operator*(const PolyExpr& o) const;
    PolyExpr operator-() const;
    PolyExpr scaled(const FieldValue& c) const;
    /// Divides every exponent's value by X^s , i.e. shifts exponents down.
    PolyExpr shift_down(const MonoidValue& s) const;

    bool operator==(const PolyExpr& o) const {
        return field_ == o.field_ && tag_ == o.tag_ && terms_ == o.terms_;
    }
    bool operator!=(const PolyExpr& o) const { return !(*this == o); }

    /// "QQ: 3*X^{1/2} + 2*X^{0/1}" with terms in descending exponent order.
    std::string str() const;
    static PolyExpr parse(const std::string& s);

private:
    void check(const PolyExpr& o) const {
        if (field_ != o.field_) throw std::invalid_argument("PolyExpr: field mismatch");
        if (tag_ != o.tag_) throw TagMismatch("PolyExpr: exponent tag mismatch");
    }

    FieldSpec field_;
    ValueTag tag_;
    std::size_t vec_len_;
    std::map<MonoidValue, FieldValue> terms_;
};

PolyExpr poly_mul(const PolyExpr& f, const PolyExpr& g);
bool is_unit(const PolyExpr& f);

} // namespace atomlab
