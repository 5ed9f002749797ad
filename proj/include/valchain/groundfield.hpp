#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "valchain/error.hpp"
#include "valchain/fp.hpp"
#include "valchain/value.hpp"

namespace valchain {

/// Exact rational ground element of (Q, v_p). Canonical lowest terms with
/// positive denominator (mpq invariant), structural equality.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den) : q_(num, den) {
        require(den != 0, errc::division_by_zero, "Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    const mpq_class& raw() const { return q_; }
    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        require(!o.is_zero(), errc::division_by_zero, "Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }

    /// Canonical "a/b" with "/b" omitted when b = 1.
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_str();
    }

    static Rational parse(const std::string& s) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0)
            fail(errc::usage, "Rational: bad literal '" + s + "'");
        require(q.get_den() != 0, errc::usage, "Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

private:
    mpq_class q_;
};

/// Ground element of (F_p(t), v_t): coprime numerator/denominator in F_p[t],
/// denominator monic and nonzero. Canonical form is unique per element.
class RatFunc {
public:
    RatFunc() : num_(), den_() {}
    explicit RatFunc(FpPoly num) : num_(std::move(num)), den_(FpPoly::constant(num_.p(), 1)) {}
    RatFunc(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
        require(num_.p() == den_.p(), errc::field_mismatch, "RatFunc: mixed characteristics");
        require(!den_.is_zero(), errc::division_by_zero, "RatFunc: zero denominator");
        reduce();
    }

    static RatFunc from_integer(std::uint64_t p, long n) {
        long r = n % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return RatFunc(FpPoly::constant(p, static_cast<std::uint64_t>(r)));
    }

    std::uint64_t p() const { return num_.p(); }
    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.degree() == 0 && num_.lc() == 1 && den_.degree() == 0; }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-() const {
        FpPoly n = num_.scaled(p() - 1); // -1 mod p
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = den_;
        return r;
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        require(!o.is_zero(), errc::division_by_zero, "RatFunc: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Canonical "num|den" with "|den" omitted when den = 1.
    std::string str() const {
        if (den_.degree() == 0 && den_.lc() == 1) return num_.str();
        return num_.str() + "|" + den_.str();
    }

    static RatFunc parse(std::uint64_t p, const std::string& s) {
        auto bar = s.find('|');
        if (bar == std::string::npos) return RatFunc(FpPoly::parse(p, s));
        return RatFunc(FpPoly::parse(p, s.substr(0, bar)), FpPoly::parse(p, s.substr(bar + 1)));
    }

private:
    RatFunc(FpPoly num, FpPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (num_.is_zero()) {
            den_ = FpPoly::constant(den_.p(), 1);
            return;
        }
        FpPoly g = FpPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        const std::uint64_t inv = den_.inv_mod(den_.lc());
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv); // monic denominator
    }

    FpPoly num_;
    FpPoly den_;
};

enum class FieldKind { padic, ratfunc };

/// (Q, v_p): p-adic valuation on exact rationals, value group Z.
class PadicField {
public:
    using Element = Rational;

    PadicField() : p_(2) {}
    explicit PadicField(std::uint64_t p) : p_(p) {
        require(is_prime(p), errc::precondition, "PadicField: p = " + std::to_string(p) + " is not prime");
    }

    static constexpr FieldKind kind() { return FieldKind::padic; }
    std::uint64_t p() const { return p_; }

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_integer(long n) const { return Rational(n); }

    /// v_p(c): the exponent of p in c (negative allowed); v_p(0) = inf.
    Value valuation(const Element& c) const {
        if (c.is_zero()) return Value::infinity();
        const mpz_class p(static_cast<unsigned long>(p_));
        long v = 0;
        mpz_class num = c.raw().get_num();
        mpz_class den = c.raw().get_den();
        while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
            num /= p;
            ++v;
        }
        while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
            den /= p;
            --v;
        }
        return Value(v);
    }

    /// An element of valuation exactly v (p^v); used by fixture generators.
    Element uniformizer_power(long v) const {
        mpz_class p(static_cast<unsigned long>(p_));
        mpz_class num = 1, den = 1;
        for (long i = 0; i < v; ++i) num *= p;
        for (long i = 0; i > v; --i) den *= p;
        return Rational(mpq_class(num, den));
    }

    std::string element_str(const Element& e) const { return e.str(); }
    Element parse_element(const std::string& s) const { return Rational::parse(s); }

    /// Enumerates distinct field elements 0, 1, -1, 2, -2, ... for
    /// evaluation-interpolation.
    Element sample_point(std::size_t i) const {
        if (i == 0) return Rational(0);
        const long k = static_cast<long>((i + 1) / 2);
        return Rational(i % 2 == 1 ? k : -k);
    }

    bool operator==(const PadicField& o) const { return p_ == o.p_; }
    bool operator!=(const PadicField& o) const { return p_ != o.p_; }

private:
    std::uint64_t p_;
};

/// (F_p(t), v_t): order of vanishing at t = 0 on rational functions,
/// value group Z.
class RatFuncField {
public:
    using Element = RatFunc;

    RatFuncField() : p_(2) {}
    explicit RatFuncField(std::uint64_t p) : p_(p) {
        require(is_prime(p), errc::precondition, "RatFuncField: p = " + std::to_string(p) + " is not prime");
    }

    static constexpr FieldKind kind() { return FieldKind::ratfunc; }
    std::uint64_t p() const { return p_; }

    Element zero() const { return RatFunc(FpPoly(p_)); }
    Element one() const { return RatFunc(FpPoly::constant(p_, 1)); }
    Element from_integer(long n) const { return RatFunc::from_integer(p_, n); }

    /// v_t(c) = ord_t(num) - ord_t(den); v_t(0) = inf.
    Value valuation(const Element& c) const {
        if (c.is_zero()) return Value::infinity();
        return Value(static_cast<long>(c.num().order()) - static_cast<long>(c.den().order()));
    }

    Element uniformizer_power(long v) const {
        if (v >= 0) {
            std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(v) + 1, 0);
            coeffs.back() = 1;
            return RatFunc(FpPoly(p_, std::move(coeffs)));
        }
        std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(-v) + 1, 0);
        coeffs.back() = 1;
        return RatFunc(FpPoly::constant(p_, 1), FpPoly(p_, std::move(coeffs)));
    }

    std::string element_str(const Element& e) const { return e.str(); }
    Element parse_element(const std::string& s) const { return RatFunc::parse(p_, s); }

    /// Enumerates distinct polynomials in F_p[t] by base-p digits of i.
    Element sample_point(std::size_t i) const {
        std::vector<std::uint64_t> digits;
        while (i > 0) {
            digits.push_back(i % p_);
            i /= p_;
        }
        return RatFunc(FpPoly(p_, std::move(digits)));
    }

    bool operator==(const RatFuncField& o) const { return p_ == o.p_; }
    bool operator!=(const RatFuncField& o) const { return p_ != o.p_; }

private:
    std::uint64_t p_;
};

template <class F>
Value ground_valuation(const F& field, const typename F::Element& c) {
    return field.valuation(c);
}

} // namespace valchain
