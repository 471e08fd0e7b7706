#pragma once

#include "atomlab/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace atomlab {

struct TagMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ValueTag {
    PuiseuxQ, // nonnegative rational
    RankTwo,  // n0*beta + q with beta a formal transcendental > 1
    IntVec,   // integer exponent vector (Zaks)
};

/// Carrier of all monoid elements: a tagged union over rationals, rank-2
/// pairs, and integer exponent vectors. Values are immutable.
///
/// The total order is compatible with addition per tag: rational value for
/// PuiseuxQ, lexicographic (beta_coeff, rational_part) for RankTwo (beta is
/// compared symbolically, i.e. treated as larger than any rational in play),
/// lexicographic entries for IntVec.
class MonoidValue {
public:
    static MonoidValue puiseux(Rational q) {
        MonoidValue v(ValueTag::PuiseuxQ);
        v.rational_ = std::move(q);
        return v;
    }
    static MonoidValue rank_two(Int beta_coeff, Rational rational_part) {
        if (beta_coeff < 0) throw std::invalid_argument("MonoidValue: beta coefficient must be >= 0");
        MonoidValue v(ValueTag::RankTwo);
        v.beta_ = std::move(beta_coeff);
        v.rational_ = std::move(rational_part);
        return v;
    }
    static MonoidValue int_vec(std::vector<Int> entries) {
        MonoidValue v(ValueTag::IntVec);
        v.vec_ = std::move(entries);
        return v;
    }
    static MonoidValue zero(ValueTag tag, std::size_t vec_len = 0) {
        switch (tag) {
        case ValueTag::PuiseuxQ: return puiseux(Rational());
        case ValueTag::RankTwo: return rank_two(0, Rational());
        case ValueTag::IntVec: return int_vec(std::vector<Int>(vec_len, Int(0)));
        }
        throw std::logic_error("MonoidValue: bad tag");
    }

    ValueTag tag() const { return tag_; }
    const Rational& rational() const { return rational_; }
    const Int& beta_coeff() const { return beta_; }
    const std::vector<Int>& entries() const { return vec_; }

    bool is_zero() const {
        switch (tag_) {
        case ValueTag::PuiseuxQ: return rational_.is_zero();
        case ValueTag::RankTwo: return beta_ == 0 && rational_.is_zero();
        case ValueTag::IntVec:
            for (const Int& e : vec_)
                if (e != 0) return false;
            return true;
        }
        return false;
    }

    MonoidValue operator+(const MonoidValue& o) const {
        check_tag(o);
        switch (tag_) {
        case ValueTag::PuiseuxQ: return puiseux(rational_ + o.rational_);
        case ValueTag::RankTwo: return rank_two(beta_ + o.beta_, rational_ + o.rational_);
        case ValueTag::IntVec: {
            if (vec_.size() != o.vec_.size()) throw TagMismatch("MonoidValue: vector length mismatch");
            std::vector<Int> e(vec_.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = vec_[i] + o.vec_[i];
            return int_vec(std::move(e));
        }
        }
        throw std::logic_error("MonoidValue: bad tag");
    }

    /// Formal difference. For PuiseuxQ/RankTwo the result may violate the
    /// nonnegativity expected of monoid members; membership checks reject it.
    MonoidValue minus(const MonoidValue& o) const {
        check_tag(o);
        switch (tag_) {
        case ValueTag::PuiseuxQ: {
            MonoidValue v(ValueTag::PuiseuxQ);
            v.rational_ = rational_ - o.rational_;
            return v;
        }
        case ValueTag::RankTwo: {
            MonoidValue v(ValueTag::RankTwo);
            v.beta_ = beta_ - o.beta_;
            v.rational_ = rational_ - o.rational_;
            return v;
        }
        case ValueTag::IntVec: {
            if (vec_.size() != o.vec_.size()) throw TagMismatch("MonoidValue: vector length mismatch");
            std::vector<Int> e(vec_.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = vec_[i] - o.vec_[i];
            return int_vec(std::move(e));
        }
        }
        throw std::logic_error("MonoidValue: bad tag");
    }

    /// Componentwise admissibility of a formal difference: the coordinates
    /// that are forced nonnegative for monoid members must be nonnegative.
    bool admissible() const {
        switch (tag_) {
        case ValueTag::PuiseuxQ: return !rational_.is_negative();
        case ValueTag::RankTwo: return beta_ >= 0;
        case ValueTag::IntVec: return vec_.size() >= 2 && vec_[0] >= 0 && vec_[1] >= 0;
        }
        return false;
    }

    bool operator==(const MonoidValue& o) const {
        if (tag_ != o.tag_) return false;
        switch (tag_) {
        case ValueTag::PuiseuxQ: return rational_ == o.rational_;
        case ValueTag::RankTwo: return beta_ == o.beta_ && rational_ == o.rational_;
        case ValueTag::IntVec: return vec_ == o.vec_;
        }
        return false;
    }
    bool operator!=(const MonoidValue& o) const { return !(*this == o); }

    bool operator<(const MonoidValue& o) const {
        check_tag(o);
        switch (tag_) {
        case ValueTag::PuiseuxQ: return rational_ < o.rational_;
        case ValueTag::RankTwo:
            if (beta_ != o.beta_) return beta_ < o.beta_;
            return rational_ < o.rational_;
        case ValueTag::IntVec: return vec_ < o.vec_;
        }
        return false;
    }
    bool operator>(const MonoidValue& o) const { return o < *this; }
    bool operator<=(const MonoidValue& o) const { return !(o < *this); }
    bool operator>=(const MonoidValue& o) const { return !(*this < o); }

    /// "q" for PuiseuxQ, "n0*b+q" for RankTwo, "[a,b,c,d1,...]" for IntVec.
    std::string str() const {
        switch (tag_) {
        case ValueTag::PuiseuxQ: return rational_.str();
        case ValueTag::RankTwo: return beta_.str() + "*b+" + rational_.str();
        case ValueTag::IntVec: {
            std::string out = "[";
            for (std::size_t i = 0; i < vec_.size(); ++i) {
                if (i) out += ",";
                out += vec_[i].str();
            }
            return out + "]";
        }
        }
        return "?";
    }

    static MonoidValue parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("MonoidValue: empty string");
        if (s.front() == '[') {
            if (s.back() != ']') throw std::invalid_argument("MonoidValue: unterminated vector");
            std::vector<Int> entries;
            std::string body = s.substr(1, s.size() - 2);
            std::size_t pos = 0;
            while (pos < body.size()) {
                auto comma = body.find(',', pos);
                std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                entries.emplace_back(tok);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            return int_vec(std::move(entries));
        }
        auto star = s.find("*b+");
        if (star != std::string::npos) {
            Int beta(s.substr(0, star));
            return rank_two(beta, Rational::parse(s.substr(star + 3)));
        }
        return puiseux(Rational::parse(s));
    }

private:
    explicit MonoidValue(ValueTag t) : tag_(t) {}

    void check_tag(const MonoidValue& o) const {
        if (tag_ != o.tag_) throw TagMismatch("MonoidValue: tag mismatch");
    }

    ValueTag tag_;
    Rational rational_;
    Int beta_ = 0;
    std::vector<Int> vec_;
};

} // namespace atomlab
