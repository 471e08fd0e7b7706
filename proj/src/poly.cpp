#include "atomlab/poly.hpp"

#include "atomlab/primes.hpp"

#include <algorithm>

namespace atomlab {

FieldSpec FieldSpec::GF(const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: GF modulus must be prime");
    FieldSpec s;
    s.kind = Kind::Prime;
    s.p = p;
    return s;
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "QQ") return QQ();
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') return GF(Int(s.substr(3, s.size() - 4)));
    throw std::invalid_argument("FieldSpec: cannot parse '" + s + "'");
}

namespace {

Int mod_norm(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

Int mod_inverse(const Int& a, const Int& p) {
    // extended Euclid; p prime, a != 0 mod p
    Int t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
    while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("FieldValue: not invertible");
    return mod_norm(t, p);
}

} // namespace

FieldValue::FieldValue(FieldSpec spec, Rational v) : spec_(spec), v_(std::move(v)) {
    if (spec_.kind == FieldSpec::Kind::Prime) {
        // reduce num/den mod p
        Int den = mod_norm(v_.den(), spec_.p);
        if (den == 0) throw std::domain_error("FieldValue: denominator vanishes mod p");
        v_ = Rational(mod_norm(v_.num() * mod_inverse(den, spec_.p), spec_.p));
    }
}

FieldValue FieldValue::operator+(const FieldValue& o) const {
    check(o);
    return FieldValue(spec_, v_ + o.v_);
}
FieldValue FieldValue::operator-(const FieldValue& o) const {
    check(o);
    return FieldValue(spec_, v_ - o.v_);
}
FieldValue FieldValue::operator*(const FieldValue& o) const {
    check(o);
    return FieldValue(spec_, v_ * o.v_);
}
FieldValue FieldValue::operator/(const FieldValue& o) const {
    check(o);
    return *this * o.inverse();
}
FieldValue FieldValue::operator-() const { return FieldValue(spec_, -v_); }

FieldValue FieldValue::inverse() const {
    if (is_zero()) throw std::domain_error("FieldValue: zero is not invertible");
    if (spec_.kind == FieldSpec::Kind::Rationals) return FieldValue(spec_, Rational(1) / v_);
    return FieldValue(spec_, Rational(mod_inverse(v_.num(), spec_.p)));
}

std::string FieldValue::str() const {
    if (spec_.kind == FieldSpec::Kind::Prime) return v_.num().str();
    return v_.is_integer() ? v_.num().str() : v_.str();
}

PolyExpr PolyExpr::monomial(const FieldSpec& field, const MonoidValue& exponent,
                            const FieldValue& coeff) {
    std::size_t len = exponent.tag() == ValueTag::IntVec ? exponent.entries().size() : 0;
    PolyExpr p(field, exponent.tag(), len);
    p.add_term(exponent, coeff);
    return p;
}

PolyExpr PolyExpr::constant(const FieldSpec& field, const FieldValue& coeff, ValueTag tag,
                            std::size_t vec_len) {
    PolyExpr p(field, tag, vec_len);
    p.add_term(MonoidValue::zero(tag, vec_len), coeff);
    return p;
}

const MonoidValue& PolyExpr::deg() const {
    if (terms_.empty()) throw ZeroPolynomial("deg of zero polynomial");
    return terms_.rbegin()->first;
}

const MonoidValue& PolyExpr::ord() const {
    if (terms_.empty()) throw ZeroPolynomial("ord of zero polynomial");
    return terms_.begin()->first;
}

std::vector<MonoidValue> PolyExpr::supp() const {
    std::vector<MonoidValue> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

FieldValue PolyExpr::coeff(const MonoidValue& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldValue::zero(field_) : it->second;
}

FieldValue PolyExpr::constant_term() const { return coeff(MonoidValue::zero(tag_, vec_len_)); }

void PolyExpr::add_term(const MonoidValue& e, const FieldValue& c) {
    if (e.tag() != tag_) throw TagMismatch("PolyExpr: exponent tag mismatch");
    if (c.spec() != field_) throw std::invalid_argument("PolyExpr: coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyExpr PolyExpr::operator+(const PolyExpr& o) const {
    check(o);
    PolyExpr out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

PolyExpr PolyExpr::operator-(const PolyExpr& o) const {
    check(o);
    PolyExpr out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

PolyExpr PolyExpr::operator*(const PolyExpr& o) const {
    check(o);
    PolyExpr out(field_, tag_, vec_len_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

PolyExpr PolyExpr::operator-() const {
    PolyExpr out(field_, tag_, vec_len_);
    for (const auto& [e, c] : terms_) out.add_term(e, -c);
    return out;
}

PolyExpr PolyExpr::scaled(const FieldValue& c) const {
    PolyExpr out(field_, tag_, vec_len_);
    for (const auto& [e, k] : terms_) out.add_term(e, k * c);
    return out;
}

PolyExpr PolyExpr::shift_down(const MonoidValue& s) const {
    PolyExpr out(field_, tag_, vec_len_);
    for (const auto& [e, c] : terms_) out.add_term(e.minus(s), c);
    return out;
}

std::string PolyExpr::str() const {
    std::string out = field_.str() + ": ";
    if (terms_.empty()) return out + "0";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        out += it->second.str() + "*X^{" + it->first.str() + "}";
    }
    return out;
}

PolyExpr PolyExpr::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("PolyExpr: missing field tag");
    FieldSpec field = FieldSpec::parse(s.substr(0, colon));
    std::string body = s.substr(colon + 1);

    // split on " + "
    std::vector<std::string> toks;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto plus = body.find(" + ", pos);
        toks.push_back(body.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
        if (plus == std::string::npos) break;
        pos = plus + 3;
    }

    PolyExpr out(field, ValueTag::PuiseuxQ);
    bool tag_known = false;
    for (std::string t : toks) {
        // trim
        while (!t.empty() && t.front() == ' ') t.erase(t.begin());
        while (!t.empty() && t.back() == ' ') t.pop_back();
        if (t.empty() || t == "0") continue;
        auto star = t.find("*X^{");
        FieldValue c = FieldValue::one(field);
        MonoidValue e = MonoidValue::zero(ValueTag::PuiseuxQ);
        if (star == std::string::npos) {
            if (t.rfind("X^{", 0) == 0) {
                e = MonoidValue::parse(t.substr(3, t.size() - 4));
            } else {
                c = FieldValue(field, Rational::parse(t));
            }
        } else {
            c = FieldValue(field, Rational::parse(t.substr(0, star)));
            if (t.back() != '}') throw std::invalid_argument("PolyExpr: unterminated exponent");
            e = MonoidValue::parse(t.substr(star + 4, t.size() - star - 5));
        }
        if (!tag_known) {
            out = PolyExpr(field, e.tag(), e.tag() == ValueTag::IntVec ? e.entries().size() : 0);
            tag_known = true;
        }
        out.add_term(e, c);
    }
    return out;
}

PolyExpr poly_mul(const PolyExpr& f, const PolyExpr& g) { return f * g; }

bool is_unit(const PolyExpr& f) { return f.is_unit(); }

} // namespace atomlab
