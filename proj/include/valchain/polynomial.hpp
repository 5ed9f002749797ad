#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valchain/error.hpp"
#include "valchain/groundfield.hpp"
#include "valchain/value.hpp"

namespace valchain {

/// Univariate polynomial over a ground field, constant term first, trailing
/// zeros stripped. The zero polynomial has an absent degree (sentinel), never
/// the integer -1.
template <class F>
class Polynomial {
public:
    using Element = typename F::Element;

    explicit Polynomial(const F& field) : field_(field) {}
    Polynomial(const F& field, std::vector<Element> coeffs) : field_(field), c_(std::move(coeffs)) {
        strip();
    }

    static Polynomial zero(const F& field) { return Polynomial(field); }
    static Polynomial constant(const F& field, const Element& c) { return Polynomial(field, {c}); }
    static Polynomial X(const F& field) { return Polynomial(field, {field.zero(), field.one()}); }

    /// Monomial c * X^k.
    static Polynomial monomial(const F& field, const Element& c, std::size_t k) {
        std::vector<Element> v(k + 1, field.zero());
        v[k] = c;
        return Polynomial(field, std::move(v));
    }

    const F& field() const { return field_; }
    const std::vector<Element>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    /// Degree of a polynomial known to be nonzero.
    int degree_strict() const {
        require(!c_.empty(), errc::precondition, "degree of the zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }

    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

    Element lc() const {
        require(!c_.empty(), errc::precondition, "leading coefficient of zero");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }
    bool is_constant() const { return c_.size() <= 1; }

    bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const {
        check_field(o);
        std::vector<Element> r(std::max(c_.size(), o.c_.size()), field_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Polynomial(field_, std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const {
        check_field(o);
        std::vector<Element> r(std::max(c_.size(), o.c_.size()), field_.zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return Polynomial(field_, std::move(r));
    }

    Polynomial operator-() const {
        std::vector<Element> r = c_;
        for (auto& x : r) x = -x;
        return Polynomial(field_, std::move(r));
    }

    Polynomial operator*(const Polynomial& o) const {
        check_field(o);
        if (is_zero() || o.is_zero()) return zero(field_);
        std::vector<Element> r(c_.size() + o.c_.size() - 1, field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Polynomial(field_, std::move(r));
    }

    Polynomial scaled(const Element& s) const {
        std::vector<Element> r = c_;
        for (auto& x : r) x = x * s;
        return Polynomial(field_, std::move(r));
    }

    Polynomial pow(std::size_t k) const {
        Polynomial acc = constant(field_, field_.one());
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    Element eval(const Element& x) const {
        Element acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    std::string str(const std::string& var = "X") const;

private:
    void check_field(const Polynomial& o) const {
        require(field_ == o.field_, errc::field_mismatch, "polynomials over different ground fields");
    }
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    F field_;
    std::vector<Element> c_;
};

/// Exact Euclidean division: f = q*g + r with deg r < deg g.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> poly_divmod(const Polynomial<F>& f, const Polynomial<F>& g) {
    require(!g.is_zero(), errc::division_by_zero, "poly_divmod: division by the zero polynomial");
    const F& field = f.field();
    require(field == g.field(), errc::field_mismatch, "poly_divmod: field mismatch");
    std::vector<typename F::Element> rem(f.coeffs());
    const int dg = g.degree_strict();
    const auto inv_lc = field.one() / g.lc();
    std::vector<typename F::Element> quot;
    if (static_cast<int>(rem.size()) - 1 >= dg)
        quot.assign(rem.size() - static_cast<std::size_t>(dg), field.zero());
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= dg) {
        if (rem[static_cast<std::size_t>(dr)].is_zero()) {
            --dr;
            continue;
        }
        const auto factor = rem[static_cast<std::size_t>(dr)] * inv_lc;
        const std::size_t shift = static_cast<std::size_t>(dr - dg);
        quot[shift] = factor;
        for (int i = 0; i <= dg; ++i)
            rem[shift + static_cast<std::size_t>(i)] =
                rem[shift + static_cast<std::size_t>(i)] - factor * g.coeff(static_cast<std::size_t>(i));
        --dr;
    }
    rem.resize(static_cast<std::size_t>(std::max(dg, 0)));
    return {Polynomial<F>(field, std::move(quot)), Polynomial<F>(field, std::move(rem))};
}

/// g(X) = f(X + a), by Horner: acc <- acc*(X+a) + f_i from the top down.
template <class F>
Polynomial<F> taylor_shift(const Polynomial<F>& f, const typename F::Element& a) {
    if (f.is_zero()) return f;
    const F& field = f.field();
    std::vector<typename F::Element> acc;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        std::vector<typename F::Element> next(acc.size() + 1, field.zero());
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j] = next[j] + acc[j] * a;
            next[j + 1] = next[j + 1] + acc[j];
        }
        next[0] = next[0] + f.coeffs()[i];
        acc = std::move(next);
    }
    return Polynomial<F>(field, std::move(acc));
}

namespace detail {

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rational element_from_mpz(const PadicField&, const mpz_class& z) { return Rational(mpq_class(z)); }

inline RatFunc element_from_mpz(const RatFuncField& f, const mpz_class& z) {
    mpz_class r = z % static_cast<unsigned long>(f.p());
    if (r < 0) r += static_cast<unsigned long>(f.p());
    return RatFunc(FpPoly::constant(f.p(), r.get_ui()));
}

} // namespace detail

/// b-th Hasse derivative: X^n -> C(n,b) X^{n-b}, binomials computed as exact
/// integers then mapped into the ground field (so they reduce mod p over
/// F_p(t)).
template <class F>
Polynomial<F> hasse_derivative(const Polynomial<F>& f, unsigned long b) {
    require(b >= 1, errc::precondition, "hasse_derivative: b must be >= 1");
    const F& field = f.field();
    if (f.is_zero() || static_cast<unsigned long>(f.degree_strict()) < b) return Polynomial<F>::zero(field);
    std::vector<typename F::Element> r;
    r.reserve(f.coeffs().size() - b);
    for (std::size_t n = b; n < f.coeffs().size(); ++n) {
        const auto binom = detail::element_from_mpz(field, detail::binomial(n, b));
        r.push_back(f.coeffs()[n] * binom);
    }
    return Polynomial<F>(field, std::move(r));
}

/// Monic gcd over the ground field (Euclid).
template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    require(a.field() == b.field(), errc::field_mismatch, "poly_gcd: field mismatch");
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.scaled(a.field().one() / a.lc());
    return a;
}

template <class F>
bool is_squarefree(const Polynomial<F>& f) {
    require(!f.is_zero(), errc::precondition, "is_squarefree: zero polynomial");
    if (f.is_constant() || f.degree_strict() == 1) return true;
    auto d = hasse_derivative(f, 1);
    if (d.is_zero()) return false; // inseparable, necessarily not squarefree
    return poly_gcd(f, d).is_constant();
}

namespace detail {

template <class F>
typename F::Element element_pow(const F& field, typename F::Element e, std::size_t k) {
    typename F::Element acc = field.one();
    while (k > 0) {
        if (k & 1) acc = acc * e;
        e = e * e;
        k >>= 1;
    }
    return acc;
}

} // namespace detail

/// Res(f,g) under the convention Res(f,g) = lc(f)^{deg g} * prod_{f(a)=0} g(a),
/// by the Euclidean remainder sequence with the classical lc-power correction.
template <class F>
typename F::Element resultant(const Polynomial<F>& f, const Polynomial<F>& g) {
    require(!f.is_zero() && !g.is_zero(), errc::precondition, "resultant: zero operand");
    const F& field = f.field();
    require(field == g.field(), errc::field_mismatch, "resultant: field mismatch");
    Polynomial<F> a = f, b = g;
    typename F::Element acc = field.one();
    bool negate = false;
    while (true) {
        const int da = a.degree_strict();
        const int db = b.degree_strict();
        if (db == 0) {
            acc = acc * detail::element_pow(field, b.lc(), static_cast<std::size_t>(da));
            break;
        }
        if (da < db) {
            if ((da & 1) && (db & 1)) negate = !negate;
            std::swap(a, b);
            continue;
        }
        auto r = poly_divmod(a, b).second;
        if (r.is_zero()) return field.zero(); // common factor
        const int dr = r.degree_strict();
        acc = acc * detail::element_pow(field, b.lc(), static_cast<std::size_t>(da - dr));
        if ((da & 1) && (db & 1)) negate = !negate;
        a = b;
        b = r;
    }
    return negate ? -acc : acc;
}

/// One segment of a Newton polygon: horizontal length copies of root
/// valuation -slope.
struct NewtonSegment {
    Value slope;
    int length = 0;
    bool operator==(const NewtonSegment& o) const { return slope == o.slope && length == o.length; }
};

struct NewtonPolygon {
    std::vector<NewtonSegment> segments; // lower hull, slopes strictly increasing
    std::vector<Value> root_valuations;  // size = deg f; inf entries for the X-power factor
};

/// Lower convex hull of (i, v(a_i)); each segment of slope s and length l
/// contributes l roots of valuation -s. An X^k factor contributes k roots of
/// valuation inf.
template <class F>
NewtonPolygon newton_polygon(const F& field, const Polynomial<F>& f) {
    require(!f.is_zero(), errc::precondition, "newton_polygon: zero polynomial");
    NewtonPolygon np;
    int ord = 0;
    while (f.coeff(static_cast<std::size_t>(ord)).is_zero()) ++ord;
    for (int i = 0; i < ord; ++i) np.root_valuations.push_back(Value::infinity());
    const int deg = f.degree_strict();
    if (ord == deg) return np; // monomial: only the X-power factor

    struct Pt {
        long x;
        mpq_class y;
    };
    std::vector<Pt> hull;
    auto cross_nonpositive = [](const Pt& a, const Pt& b, const Pt& c) {
        // (b-a) x (c-a) <= 0 means b is on or above segment ac: drop it.
        mpq_class cr = mpq_class(b.x - a.x) * (c.y - a.y) - (b.y - a.y) * mpq_class(c.x - a.x);
        return cr <= 0;
    };
    for (int i = ord; i <= deg; ++i) {
        const auto ci = f.coeff(static_cast<std::size_t>(i));
        if (ci.is_zero()) continue;
        Pt p{i, field.valuation(ci).rational()};
        while (hull.size() >= 2 && cross_nonpositive(hull[hull.size() - 2], hull.back(), p)) hull.pop_back();
        hull.push_back(std::move(p));
    }
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        const long dx = hull[k + 1].x - hull[k].x;
        mpq_class slope = (hull[k + 1].y - hull[k].y) / dx;
        NewtonSegment seg{Value(slope), static_cast<int>(dx)};
        np.segments.push_back(seg);
        Value rv = Value(mpq_class(-slope));
        for (long i = 0; i < dx; ++i) np.root_valuations.push_back(rv);
    }
    return np;
}

namespace detail {

// Coefficient as a CLI literal: rationals plain ("3/2"), rational functions
// plain when they are integer constants, braced otherwise ("{1+1t|1+t}").
inline std::string coeff_literal(const PadicField&, const Rational& e) { return e.str(); }

inline std::string coeff_literal(const RatFuncField&, const RatFunc& e) {
    const bool integral = e.den().degree() == 0 && e.num().degree() <= 0;
    return integral ? e.str() : "{" + e.str() + "}";
}

} // namespace detail

template <class F>
std::string Polynomial<F>::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string term;
        if (i == 0) {
            term = detail::coeff_literal(field_, c_[i]);
        } else {
            if (!c_[i].is_one()) term = detail::coeff_literal(field_, c_[i]);
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}

} // namespace valchain
