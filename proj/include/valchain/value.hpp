#pragma once

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "valchain/error.hpp"

namespace valchain {

/// Element of Gamma_v (x) Q together with the absorbing top element "inf".
/// Finite values are exact rationals in lowest terms with positive denominator
/// (mpq canonical form), so equality is structural and bit-exact.
class Value {
public:
    Value() : inf_(false), q_(0) {}
    Value(long n) : inf_(false), q_(n) {}
    Value(long num, long den) : inf_(false), q_(num, den) {
        require(den != 0, errc::division_by_zero, "Value: zero denominator");
        q_.canonicalize();
    }
    explicit Value(const mpq_class& q) : inf_(false), q_(q) { q_.canonicalize(); }

    static Value infinity() {
        Value v;
        v.inf_ = true;
        return v;
    }

    bool is_infinity() const { return inf_; }
    bool is_finite() const { return !inf_; }

    /// Finite part; calling this on infinity is a logic error.
    const mpq_class& rational() const {
        require(!inf_, errc::precondition, "Value: infinity has no rational part");
        return q_;
    }

    Value operator+(const Value& o) const {
        if (inf_ || o.inf_) return infinity();
        return Value(mpq_class(q_ + o.q_));
    }

    Value operator-(const Value& o) const {
        if (o.inf_) fail(errc::undefined_operation, "Value: cannot subtract infinity");
        if (inf_) return infinity();
        return Value(mpq_class(q_ - o.q_));
    }

    /// n * a for a nonnegative integer n; 0 * inf is undefined.
    Value scale(unsigned long n) const {
        if (inf_) {
            require(n != 0, errc::undefined_operation, "Value: 0 * infinity is undefined");
            return infinity();
        }
        return Value(mpq_class(q_ * static_cast<long>(n)));
    }

    Value div(unsigned long n) const {
        require(n != 0, errc::division_by_zero, "Value: division by zero");
        if (inf_) return infinity();
        return Value(mpq_class(q_ / static_cast<long>(n)));
    }

    bool operator==(const Value& o) const {
        if (inf_ != o.inf_) return false;
        return inf_ || q_ == o.q_;
    }
    bool operator!=(const Value& o) const { return !(*this == o); }
    bool operator<(const Value& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return q_ < o.q_;
    }
    bool operator>(const Value& o) const { return o < *this; }
    bool operator<=(const Value& o) const { return !(o < *this); }
    bool operator>=(const Value& o) const { return !(*this < o); }

    /// Canonical rendering: "a/b", "a" when b = 1, "inf".
    std::string str() const {
        if (inf_) return "inf";
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_str();
    }

    static Value parse(const std::string& s);

private:
    bool inf_;
    mpq_class q_;
};

inline Value Value::parse(const std::string& s) {
    if (s == "inf") return Value::infinity();
    if (s.empty()) fail(errc::usage, "Value: empty literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(errc::usage, "Value: bad literal '" + s + "'");
    require(q.get_den() != 0, errc::usage, "Value: zero denominator in '" + s + "'");
    q.canonicalize();
    return Value(q);
}

inline Value min(const Value& a, const Value& b) { return a < b ? a : b; }
inline Value max(const Value& a, const Value& b) { return a < b ? b : a; }

inline Value min(const std::vector<Value>& vs) {
    require(!vs.empty(), errc::precondition, "min over empty sequence");
    Value m = vs.front();
    for (const auto& v : vs)
        if (v < m) m = v;
    return m;
}

enum class ordering { LT, EQ, GT };

inline ordering compare(const Value& a, const Value& b) {
    if (a < b) return ordering::LT;
    if (b < a) return ordering::GT;
    return ordering::EQ;
}

/// Element of Z x (Gamma_v (x) Q) with the lexicographic order, plus "inf".
/// Codomain of the minimal valuation w_{-inf}.
class LexValue {
public:
    LexValue() : inf_(false), d_(0), q_(0) {}
    LexValue(const mpz_class& d, const mpq_class& q) : inf_(false), d_(d), q_(q) { q_.canonicalize(); }
    LexValue(long d, const Value& v) : inf_(false), d_(d), q_(v.rational()) {}

    static LexValue infinity() {
        LexValue v;
        v.inf_ = true;
        return v;
    }

    /// Order-preserving additive embedding gamma -> (0, gamma).
    static LexValue embed(const Value& v) {
        if (v.is_infinity()) return infinity();
        return LexValue(mpz_class(0), v.rational());
    }

    bool is_infinity() const { return inf_; }
    const mpz_class& first() const {
        require(!inf_, errc::precondition, "LexValue: infinity has no components");
        return d_;
    }
    const mpq_class& second() const {
        require(!inf_, errc::precondition, "LexValue: infinity has no components");
        return q_;
    }

    LexValue operator+(const LexValue& o) const {
        if (inf_ || o.inf_) return infinity();
        return LexValue(mpz_class(d_ + o.d_), mpq_class(q_ + o.q_));
    }

    bool operator==(const LexValue& o) const {
        if (inf_ != o.inf_) return false;
        return inf_ || (d_ == o.d_ && q_ == o.q_);
    }
    bool operator!=(const LexValue& o) const { return !(*this == o); }
    bool operator<(const LexValue& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        if (d_ != o.d_) return d_ < o.d_;
        return q_ < o.q_;
    }
    bool operator>(const LexValue& o) const { return o < *this; }
    bool operator<=(const LexValue& o) const { return !(o < *this); }
    bool operator>=(const LexValue& o) const { return !(*this < o); }

    std::string str() const {
        if (inf_) return "inf";
        std::string second = q_.get_den() == 1 ? q_.get_num().get_str() : q_.get_str();
        return "(" + d_.get_str() + "," + second + ")";
    }

private:
    bool inf_;
    mpz_class d_;
    mpq_class q_;
};

inline ordering compare(const LexValue& a, const LexValue& b) {
    if (a < b) return ordering::LT;
    if (b < a) return ordering::GT;
    return ordering::EQ;
}

} // namespace valchain
