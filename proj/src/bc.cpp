#include "atomlab/bc.hpp"

#include <algorithm>

namespace atomlab {

BivariatePoly BivariatePoly::monomial(const FieldSpec& field, long i, long j, const FieldValue& c) {
    BivariatePoly p(field);
    p.add_term(i, j, c);
    return p;
}

void BivariatePoly::add_term(long i, long j, const FieldValue& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("BivariatePoly: exponents must be >= 0");
    if (c.spec() != field_) throw std::invalid_argument("BivariatePoly: field mismatch");
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e.first, e.second, c);
    return out;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    BivariatePoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e.first, e.second, -c);
    return out;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly out(field_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return out;
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly out(field_);
    for (const auto& [e, c] : terms_) out.add_term(e.first, e.second, -c);
    return out;
}

long BivariatePoly::x_valuation() const {
    if (is_zero()) throw std::domain_error("x_valuation of zero polynomial");
    long v = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) v = std::min(v, e.first);
    return v;
}

long BivariatePoly::y_valuation() const {
    if (is_zero()) throw std::domain_error("y_valuation of zero polynomial");
    long v = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) v = std::min(v, e.second);
    return v;
}

BivariatePoly BivariatePoly::shift_down(long a, long b) const {
    BivariatePoly out(field_);
    for (const auto& [e, c] : terms_) out.add_term(e.first - a, e.second - b, c);
    return out;
}

std::string BivariatePoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        const auto& [e, c] = *it;
        bool has_var = e.first != 0 || e.second != 0;
        bool unit_coeff = c == FieldValue::one(field_);
        std::string piece;
        if (!unit_coeff || !has_var) piece += c.str();
        if (e.first != 0) {
            if (!piece.empty()) piece += "*";
            piece += "x";
            if (e.first != 1) piece += "^" + std::to_string(e.first);
        }
        if (e.second != 0) {
            if (!piece.empty()) piece += "*";
            piece += "y";
            if (e.second != 1) piece += "^" + std::to_string(e.second);
        }
        out += piece;
    }
    return out;
}

NormalForm2 NormalForm2::zero(const FieldSpec& field) { return NormalForm2(field); }

NormalForm2 NormalForm2::one(const FieldSpec& field) {
    return monomial(0, 0, field);
}

NormalForm2 NormalForm2::monomial(long j, long k, const FieldSpec& field) {
    NormalForm2 out(field);
    out.zero_ = false;
    out.unit_num_ = BivariatePoly::constant(field, FieldValue::one(field));
    out.unit_den_ = out.unit_num_;
    out.j_ = j;
    out.k_ = k;
    return out;
}

NormalForm2 normal_form(const BivariatePoly& num, const BivariatePoly& den) {
    if (den.is_zero()) throw ZeroDenominator("normal_form: zero denominator");
    NormalForm2 out(num.field());
    if (num.is_zero()) return out;
    long a = num.x_valuation(), b = num.y_valuation();
    long c = den.x_valuation(), d = den.y_valuation();
    out.zero_ = false;
    out.unit_num_ = num.shift_down(a, b);
    out.unit_den_ = den.shift_down(c, d);
    out.j_ = a - c;
    out.k_ = b - d;
    return out;
}

NormalForm2 NormalForm2::operator+(const NormalForm2& o) const {
    if (zero_) return o;
    if (o.zero_) return *this;
    long j = std::min(j_, o.j_), k = std::min(k_, o.k_);
    BivariatePoly xs1 = BivariatePoly::monomial(field_, j_ - j, k_ - k, FieldValue::one(field_));
    BivariatePoly xs2 = BivariatePoly::monomial(field_, o.j_ - j, o.k_ - k, FieldValue::one(field_));
    BivariatePoly num = unit_num_ * o.unit_den_ * xs1 + o.unit_num_ * unit_den_ * xs2;
    BivariatePoly den = unit_den_ * o.unit_den_;
    NormalForm2 out = normal_form(num, den);
    if (!out.zero_) {
        out.j_ += j;
        out.k_ += k;
    }
    return out;
}

NormalForm2 NormalForm2::operator-() const {
    if (zero_) return *this;
    NormalForm2 out = *this;
    out.unit_num_ = -out.unit_num_;
    return out;
}

NormalForm2 NormalForm2::operator-(const NormalForm2& o) const { return *this + (-o); }

NormalForm2 NormalForm2::operator*(const NormalForm2& o) const {
    if (zero_ || o.zero_) return NormalForm2(field_);
    NormalForm2 out(field_);
    out.zero_ = false;
    out.unit_num_ = unit_num_ * o.unit_num_;
    out.unit_den_ = unit_den_ * o.unit_den_;
    out.j_ = j_ + o.j_;
    out.k_ = k_ + o.k_;
    return out;
}

NormalForm2 NormalForm2::inverse() const {
    if (zero_) throw std::domain_error("NormalForm2: zero is not invertible");
    NormalForm2 out(field_);
    out.zero_ = false;
    out.unit_num_ = unit_den_;
    out.unit_den_ = unit_num_;
    out.j_ = -j_;
    out.k_ = -k_;
    return out;
}

NormalForm2 NormalForm2::operator/(const NormalForm2& o) const { return *this * o.inverse(); }

bool NormalForm2::operator==(const NormalForm2& o) const {
    if (zero_ || o.zero_) return zero_ == o.zero_;
    if (j_ != o.j_ || k_ != o.k_) return false; // valuations are canonical
    return unit_num_ * o.unit_den_ == o.unit_num_ * unit_den_;
}

std::string NormalForm2::str() const {
    if (zero_) return "0";
    std::string out = "(" + unit_num_.str() + ")";
    if (!(unit_den_ == BivariatePoly::constant(field_, FieldValue::one(field_))))
        out += "/(" + unit_den_.str() + ")";
    if (j_ != 0) out += "*x^" + std::to_string(j_);
    if (k_ != 0) out += "*y^" + std::to_string(k_);
    return out;
}

bool in_D(const NormalForm2& h) { return h.is_zero() || (h.j() >= 0 && h.k() >= 0); }

bool in_D1(const NormalForm2& h) {
    return h.is_zero() || (h.k() >= 0 && h.j() + 2 * h.k() >= 0);
}

bool in_D2(const NormalForm2& h) {
    return h.is_zero() || (h.j() >= 0 && h.k() + 2 * h.j() >= 0);
}

std::optional<DExpansion> d1_expansion(const NormalForm2& h) {
    if (!in_D1(h)) return std::nullopt;
    DExpansion out;
    if (h.is_zero()) return out;
    long i = std::max(0L, (-h.j() + 1) / 2); // ceil(-j/2)
    out.power = i;
    out.d = h * NormalForm2::monomial(2 * i, -i, h.field()); // h / (y/x^2)^i
    if (!in_D(out.d)) throw std::logic_error("d1_expansion: cofactor left D");
    return out;
}

std::optional<DExpansion> d2_expansion(const NormalForm2& h) {
    if (!in_D2(h)) return std::nullopt;
    DExpansion out;
    if (h.is_zero()) return out;
    long i = std::max(0L, (-h.k() + 1) / 2);
    out.power = i;
    out.d = h * NormalForm2::monomial(-i, 2 * i, h.field());
    if (!in_D(out.d)) throw std::logic_error("d2_expansion: cofactor left D");
    return out;
}

KPoly KPoly::constant(const NormalForm2& c) {
    KPoly out(c.field());
    out.add_term(0, c);
    return out;
}

KPoly KPoly::monomial(unsigned deg, const NormalForm2& c) {
    KPoly out(c.field());
    out.add_term(deg, c);
    return out;
}

KPoly KPoly::var_x(const FieldSpec& field) { return monomial(1, NormalForm2::one(field)); }

KPoly KPoly::var_x_minus_1(const FieldSpec& field) {
    KPoly out = var_x(field);
    out.add_term(0, -NormalForm2::one(field));
    return out;
}

unsigned KPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

NormalForm2 KPoly::coeff(unsigned d) const {
    auto it = coeffs_.find(d);
    return it == coeffs_.end() ? NormalForm2::zero(field_) : it->second;
}

void KPoly::add_term(unsigned deg, const NormalForm2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(deg, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

KPoly KPoly::operator+(const KPoly& o) const {
    KPoly out = *this;
    for (const auto& [d, c] : o.coeffs_) out.add_term(d, c);
    return out;
}

KPoly KPoly::operator-(const KPoly& o) const {
    KPoly out = *this;
    for (const auto& [d, c] : o.coeffs_) out.add_term(d, -c);
    return out;
}

KPoly KPoly::operator*(const KPoly& o) const {
    KPoly out(field_);
    for (const auto& [d1, c1] : coeffs_)
        for (const auto& [d2, c2] : o.coeffs_) out.add_term(d1 + d2, c1 * c2);
    return out;
}

KPoly KPoly::scaled(const NormalForm2& c) const {
    KPoly out(field_);
    for (const auto& [d, k] : coeffs_) out.add_term(d, k * c);
    return out;
}

NormalForm2 KPoly::eval0() const { return coeff(0); }

NormalForm2 KPoly::eval1() const {
    NormalForm2 out = NormalForm2::zero(field_);
    for (const auto& [d, c] : coeffs_) out = out + c;
    return out;
}

std::pair<KPoly, KPoly> KPoly::divrem(const KPoly& num, const KPoly& den) {
    if (den.is_zero()) throw std::domain_error("KPoly: division by zero");
    KPoly q(num.field_), r = num;
    unsigned dd = den.degree();
    NormalForm2 lead = den.coeff(dd);
    while (!r.is_zero() && r.degree() >= dd) {
        unsigned shift = r.degree() - dd;
        NormalForm2 c = r.coeff(r.degree()) / lead;
        KPoly term = KPoly::monomial(shift, c);
        q = q + term;
        r = r - term * den;
    }
    return {q, r};
}

std::string KPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        out += "(" + it->second.str() + ")";
        if (it->first > 0) {
            out += "*X";
            if (it->first > 1) out += "^" + std::to_string(it->first);
        }
    }
    return out;
}

bool in_R(const KPoly& g) { return in_D1(g.eval0()) && in_D2(g.eval1()); }

bool accp_element_bc(const KPoly& f) {
    if (!in_R(f)) throw NotInR("accp_element_bc: element is not in R");
    return !(f.eval0().is_zero() && f.eval1().is_zero());
}

long xx1_multiplicity(const KPoly& w) {
    if (w.is_zero()) throw std::domain_error("xx1_multiplicity of zero");
    KPoly xx1 = KPoly::var_x(w.field()) * KPoly::var_x_minus_1(w.field());
    long m = 0;
    KPoly cur = w;
    for (;;) {
        auto [q, r] = KPoly::divrem(cur, xx1);
        if (!r.is_zero()) return m;
        cur = q;
        ++m;
    }
}

BcDivisorReport weak_accp_divisor_bc(const std::vector<KPoly>& w) {
    if (w.empty()) throw std::invalid_argument("weak_accp_divisor_bc: empty set");
    const FieldSpec field = w.front().field();
    BcDivisorReport out;
    out.d = KPoly(field);
    for (const KPoly& f : w) {
        if (f.is_zero()) throw std::invalid_argument("weak_accp_divisor_bc: zero element");
        if (!in_R(f)) throw NotInR("weak_accp_divisor_bc: element outside R");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (accp_element_bc(w[i])) {
            out.early_exit = true;
            out.d = KPoly::constant(NormalForm2::one(field));
            out.quotients = w;
            out.s_index = i;
            return out;
        }
    }

    // m = max joint multiplicity of X(X-1)
    long m = xx1_multiplicity(w.front());
    for (const KPoly& f : w) m = std::min(m, xx1_multiplicity(f));
    out.m = m;

    KPoly xx1 = KPoly::var_x(field) * KPoly::var_x_minus_1(field);
    KPoly xx1_m = KPoly::constant(NormalForm2::one(field));
    for (long i = 0; i < m; ++i) xx1_m = xx1_m * xx1;

    // split each w = c_w X^m (X-1)^m h_w with h_w in D[X]: c_w is the monomial
    // x^J y^K of minimal coefficient valuations
    long n_exp = 0;
    for (const KPoly& f : w) {
        auto [e, r] = KPoly::divrem(f, xx1_m);
        if (!r.is_zero()) throw std::logic_error("weak_accp_divisor_bc: multiplicity split failed");
        long jmin = 0, kmin = 0;
        bool first = true;
        for (const auto& [deg, c] : e.coeffs()) {
            if (first) {
                jmin = c.j();
                kmin = c.k();
                first = false;
            } else {
                jmin = std::min(jmin, c.j());
                kmin = std::min(kmin, c.k());
            }
        }
        n_exp = std::max(n_exp, std::max(0L, -std::min(jmin, kmin)));
    }
    out.n_exponent = n_exp;

    // d(X) = (x/y^2)^N X^m (y/x^2)^N (X-1)^m = x^{-N} y^{-N} X^m (X-1)^m
    out.d = xx1_m.scaled(NormalForm2::monomial(-n_exp, -n_exp, field));

    // the two factors individually satisfy the ACCP predicate in R
    KPoly xm(field), x1m(field);
    {
        KPoly xs = KPoly::var_x(field), x1s = KPoly::var_x_minus_1(field);
        KPoly acc1 = KPoly::constant(NormalForm2::monomial(n_exp, -2 * n_exp, field));
        KPoly acc2 = KPoly::constant(NormalForm2::monomial(-2 * n_exp, n_exp, field));
        for (long i = 0; i < m; ++i) {
            acc1 = acc1 * xs;
            acc2 = acc2 * x1s;
        }
        xm = acc1;
        x1m = acc2;
        if (!in_R(xm) || !in_R(x1m))
            throw std::logic_error("weak_accp_divisor_bc: monomial factor left R");
        if (!accp_element_bc(xm) || !accp_element_bc(x1m))
            throw std::logic_error("weak_accp_divisor_bc: monomial factor fails the ACCP predicate");
    }

    bool found_s = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto [q, r] = KPoly::divrem(w[i], out.d);
        if (!r.is_zero()) throw std::logic_error("weak_accp_divisor_bc: quotient not exact");
        if (!in_R(q)) throw std::logic_error("weak_accp_divisor_bc: quotient left R");
        out.quotients.push_back(q);
        if (!found_s && accp_element_bc(q)) {
            out.s_index = i;
            found_s = true;
        }
    }
    if (!found_s)
        throw std::logic_error("weak_accp_divisor_bc: no quotient satisfies ACCP (maximality of m)");
    return out;
}

} // namespace atomlab
