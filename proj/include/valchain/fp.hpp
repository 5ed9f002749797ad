#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valchain/error.hpp"

namespace valchain {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Dense polynomial over F_p in the variable t, canonical representatives
/// 0..p-1, trailing zeros stripped. Used as numerator/denominator of
/// rational-function ground elements.
class FpPoly {
public:
    FpPoly() : p_(0) {}
    explicit FpPoly(std::uint64_t p) : p_(p) {}
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= p_;
        strip();
    }

    static FpPoly constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }
    static FpPoly t(std::uint64_t p) { return FpPoly(p, {0, 1}); }

    std::uint64_t p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is represented as -1 here; FpPoly is an
    /// internal carrier, the spec's sentinel rule applies to Polynomial<K>.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t lc() const {
        require(!is_zero(), errc::precondition, "FpPoly: lc of zero");
        return c_.back();
    }

    /// Index of the lowest nonzero coefficient (ord_t); precondition: nonzero.
    int order() const {
        require(!is_zero(), errc::precondition, "FpPoly: order of zero");
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return 0; // unreachable
    }

    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const FpPoly& o) const { return !(*this == o); }

    FpPoly operator+(const FpPoly& o) const {
        check_p(o);
        std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (coeff(i) + o.coeff(i)) % p_;
        return FpPoly(p_, std::move(r));
    }

    FpPoly operator-(const FpPoly& o) const {
        check_p(o);
        std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (coeff(i) + p_ - o.coeff(i) % p_) % p_;
        return FpPoly(p_, std::move(r));
    }

    FpPoly operator*(const FpPoly& o) const {
        check_p(o);
        if (is_zero() || o.is_zero()) return FpPoly(p_);
        std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % p_;
        return FpPoly(p_, std::move(r));
    }

    std::pair<FpPoly, FpPoly> divmod(const FpPoly& g) const {
        check_p(g);
        require(!g.is_zero(), errc::division_by_zero, "FpPoly: division by zero");
        FpPoly r = *this;
        FpPoly q(p_);
        const std::uint64_t inv_lc = inv_mod(g.lc());
        while (!r.is_zero() && r.degree() >= g.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
            const std::uint64_t factor = (r.lc() * inv_lc) % p_;
            std::vector<std::uint64_t> mono(shift + 1, 0);
            mono[shift] = factor;
            FpPoly m(p_, std::move(mono));
            q = q + m;
            r = r - m * g;
        }
        return {q, r};
    }

    /// Monic gcd by the Euclidean algorithm.
    static FpPoly gcd(FpPoly a, FpPoly b) {
        require(a.p_ == b.p_, errc::field_mismatch, "FpPoly: gcd over distinct primes");
        while (!b.is_zero()) {
            FpPoly r = a.divmod(b).second;
            a = b;
            b = r;
        }
        if (!a.is_zero()) a = a.scaled(a.inv_mod(a.lc())); // make monic
        return a;
    }

    FpPoly scaled(std::uint64_t s) const {
        std::vector<std::uint64_t> r = c_;
        for (auto& x : r) x = (x * (s % p_)) % p_;
        return FpPoly(p_, std::move(r));
    }

    std::uint64_t inv_mod(std::uint64_t a) const {
        a %= p_;
        require(a != 0, errc::division_by_zero, "FpPoly: inverse of zero mod p");
        // extended Euclid on (a, p)
        std::int64_t t0 = 0, t1 = 1;
        std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a);
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            std::int64_t tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
        }
        std::int64_t inv = t0 % static_cast<std::int64_t>(p_);
        if (inv < 0) inv += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(inv);
    }

    /// Dense rendering "1+0t+1t^2"; zero polynomial renders "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i > 0) out += '+';
            out += std::to_string(c_[i]);
            if (i == 1) out += 't';
            else if (i > 1) out += "t^" + std::to_string(i);
        }
        return out;
    }

    static FpPoly parse(std::uint64_t p, const std::string& s);

private:
    void check_p(const FpPoly& o) const {
        require(p_ == o.p_, errc::field_mismatch, "FpPoly: mixed characteristics");
    }
    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/// Parses the dense rendering produced by str(): terms "c", "ct", "ct^k"
/// joined by '+'; also accepts omitted coefficients like "t^2".
inline FpPoly FpPoly::parse(std::uint64_t p, const std::string& s) {
    require(!s.empty(), errc::usage, "FpPoly: empty literal");
    std::vector<std::uint64_t> coeffs;
    std::size_t i = 0;
    auto set_coeff = [&](std::size_t k, std::uint64_t c) {
        if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
        coeffs[k] = (coeffs[k] + c) % p;
    };
    while (i < s.size()) {
        if (s[i] == '+') {
            ++i;
            continue;
        }
        std::uint64_t c = 1;
        bool saw_digits = false;
        std::uint64_t acc = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            saw_digits = true;
            acc = acc * 10 + static_cast<std::uint64_t>(s[i] - '0');
            ++i;
        }
        if (saw_digits) c = acc;
        std::size_t k = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                require(i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])), errc::usage,
                        "FpPoly: exponent expected in '" + s + "'");
                std::size_t e = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    e = e * 10 + static_cast<std::size_t>(s[i++] - '0');
                k = e;
            }
        } else {
            require(saw_digits, errc::usage, "FpPoly: bad term in '" + s + "'");
        }
        set_coeff(k, c % p);
    }
    return FpPoly(p, std::move(coeffs));
}

} // namespace valchain
