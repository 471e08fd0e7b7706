#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace atomlab {

using Int = boost::multiprecision::cpp_int;

/// Exact nonnegative-or-signed rational, always in lowest terms with a
/// positive denominator. Zero is 0/1. The universal element type for
/// Puiseux-monoid values and field coefficients.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    }
    explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}

    Int num() const { return numerator(v_); }
    Int den() const { return denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return denominator(v_) == 1; }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(v_ / o.v_);
    }
    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    /// Largest integer <= value.
    Int floor() const {
        Int q = numerator(v_) / denominator(v_);
        if (v_ < 0 && q * denominator(v_) != numerator(v_)) --q;
        return q;
    }

    /// Serializes as "num/den" in lowest terms ("3/10", "0/1").
    std::string str() const {
        return numerator(v_).str() + "/" + denominator(v_).str();
    }

    /// Accepts "num/den" or a bare integer "num".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            Int n(s.substr(0, slash));
            Int d(s.substr(slash + 1));
            return Rational(n, d);
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

private:
    boost::multiprecision::cpp_rational v_;
};

inline Rational operator*(const Int& k, const Rational& r) { return Rational(k) * r; }

} // namespace atomlab
