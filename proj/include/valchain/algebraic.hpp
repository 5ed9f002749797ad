#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "valchain/error.hpp"
#include "valchain/polynomial.hpp"

namespace valchain {

/// Henselian-irreducibility certificate for an algebraic element. The checked
/// variants (eisenstein, single-slope-coprime) also certify that K(theta)/K is
/// totally ramified, which makes per-root distance slices conjugate-independent.
enum class Certificate { degree_one, eisenstein, single_slope_coprime, asserted };

inline std::string certificate_name(Certificate c) {
    switch (c) {
        case Certificate::degree_one: return "degree-one";
        case Certificate::eisenstein: return "eisenstein";
        case Certificate::single_slope_coprime: return "single-slope-coprime";
        case Certificate::asserted: return "asserted";
    }
    return "?";
}

inline Certificate certificate_from_name(const std::string& s) {
    if (s == "degree-one") return Certificate::degree_one;
    if (s == "eisenstein") return Certificate::eisenstein;
    if (s == "single-slope-coprime") return Certificate::single_slope_coprime;
    if (s == "asserted") return Certificate::asserted;
    fail(errc::usage, "unknown certificate '" + s + "'");
}

/// A root theta in the algebraic closure, represented by a monic squarefree
/// minimal polynomial asserted irreducible over the henselization.
template <class F>
class AlgebraicElement {
public:
    AlgebraicElement(Polynomial<F> minpoly, Certificate cert)
        : minpoly_(std::move(minpoly)), cert_(cert) {
        require(minpoly_.is_monic(), errc::precondition, "AlgebraicElement: minpoly must be monic");
        require(minpoly_.degree_strict() >= 1, errc::precondition,
                "AlgebraicElement: minpoly must have degree >= 1");
        require(is_squarefree(minpoly_), errc::precondition,
                "AlgebraicElement: minpoly is not squarefree (gcd with derivative is nonconstant)");
        validate_certificate();
    }

    /// Degree-one element X - a.
    static AlgebraicElement rational(const F& field, const typename F::Element& a) {
        return AlgebraicElement(Polynomial<F>(field, {-a, field.one()}), Certificate::degree_one);
    }

    const Polynomial<F>& minpoly() const { return minpoly_; }
    const F& field() const { return minpoly_.field(); }
    Certificate certificate() const { return cert_; }
    int degree() const { return minpoly_.degree_strict(); }

    /// v-bar of any root, from the Newton polygon of the minimal polynomial.
    /// Requires all conjugates to share one valuation (single hull segment).
    Value root_valuation() const {
        auto np = newton_polygon(field(), minpoly_);
        for (const auto& v : np.root_valuations)
            require(v == np.root_valuations.front(), errc::ambiguity,
                    "root valuation is conjugate-dependent for " + minpoly_.str());
        return np.root_valuations.front();
    }

    bool operator==(const AlgebraicElement& o) const {
        return minpoly_ == o.minpoly_ && cert_ == o.cert_;
    }
    bool operator!=(const AlgebraicElement& o) const { return !(*this == o); }

private:
    void validate_certificate() {
        const int n = minpoly_.degree_strict();
        const F& k = field();
        switch (cert_) {
            case Certificate::degree_one:
                require(n == 1, errc::precondition, "degree-one certificate on degree " + std::to_string(n));
                break;
            case Certificate::eisenstein: {
                require(k.valuation(minpoly_.coeff(0)) == Value(1), errc::precondition,
                        "eisenstein: constant term must have valuation 1");
                for (int i = 1; i < n; ++i) {
                    const auto ci = minpoly_.coeff(static_cast<std::size_t>(i));
                    if (!ci.is_zero())
                        require(k.valuation(ci) >= Value(1), errc::precondition,
                                "eisenstein: middle coefficient with valuation < 1");
                }
                break;
            }
            case Certificate::single_slope_coprime: {
                auto np = newton_polygon(k, minpoly_);
                require(np.segments.size() == 1, errc::precondition,
                        "single-slope-coprime: Newton polygon has more than one segment");
                const mpq_class& s = np.segments.front().slope.rational();
                require(s.get_den() == static_cast<unsigned long>(n), errc::precondition,
                        "single-slope-coprime: slope denominator differs from the degree");
                break;
            }
            case Certificate::asserted:
                break;
        }
    }

    Polynomial<F> minpoly_;
    Certificate cert_;
};

template <class F>
using CandidateSet = std::vector<AlgebraicElement<F>>;

/// The multiset {v-bar(theta_i - eta_j)} over all root pairs of F and G,
/// computed as the Newton-polygon root valuations of
/// R(Y) = Res_Z(F(Z), G(Z+Y)); common roots surface as stripped Y-powers and
/// contribute inf entries. Never touches roots themselves.
template <class F>
std::vector<Value> mutual_valuations(const Polynomial<F>& f, const Polynomial<F>& g) {
    require(!f.is_zero() && !g.is_zero(), errc::precondition, "mutual_valuations: zero operand");
    require(f.field() == g.field(), errc::field_mismatch, "mutual_valuations: field mismatch");
    require(f.is_constant() || is_squarefree(f), errc::precondition,
            "mutual_valuations: first operand not squarefree");
    require(g.is_constant() || is_squarefree(g), errc::precondition,
            "mutual_valuations: second operand not squarefree");
    const F& field = f.field();
    const std::size_t m = static_cast<std::size_t>(f.degree_strict());
    const std::size_t n = static_cast<std::size_t>(g.degree_strict());
    const std::size_t D = m * n;
    if (D == 0) return {};

    // Evaluation-interpolation: R has exact degree D with leading coefficient
    // lc(f)^n lc(g)^m, so D+1 points determine it.
    std::vector<typename F::Element> xs, ys;
    xs.reserve(D + 1);
    ys.reserve(D + 1);
    for (std::size_t k = 0; k <= D; ++k) {
        xs.push_back(field.sample_point(k));
        ys.push_back(resultant(f, taylor_shift(g, xs.back())));
    }

    // Lagrange: master = prod (Y - x_k); per-point quotient by synthetic division.
    auto master = Polynomial<F>::constant(field, field.one());
    for (const auto& x : xs) master = master * Polynomial<F>(field, {-x, field.one()});
    auto R = Polynomial<F>::zero(field);
    for (std::size_t k = 0; k <= D; ++k) {
        auto q = poly_divmod(master, Polynomial<F>(field, {-xs[k], field.one()})).first;
        auto denom = q.eval(xs[k]);
        R = R + q.scaled(ys[k] / denom);
    }
    require(!R.is_zero() && static_cast<std::size_t>(R.degree_strict()) == D, errc::precondition,
            "mutual_valuations: interpolated resultant has unexpected degree");

    auto vals = newton_polygon(field, R).root_valuations;
    std::sort(vals.begin(), vals.end());
    return vals;
}

namespace detail {

/// Sum of min(delta, x) over the per-theta slice of the pair multiset, i.e.
/// (sum of capped values)/m, defended by the divisibility check that makes the
/// slice independent of the chosen conjugate.
inline Value capped_slice_sum(const std::vector<Value>& multiset, const Value& delta, int m,
                              const std::string& what) {
    std::map<std::string, std::pair<Value, long>> counts;
    for (const auto& v : multiset) {
        Value capped = min(delta, v);
        auto [it, inserted] = counts.try_emplace(capped.str(), capped, 0L);
        ++it->second.second;
    }
    Value sum(0);
    for (const auto& [key, vc] : counts) {
        require(vc.second % m == 0, errc::ambiguity,
                what + ": capped distance " + key + " has multiplicity " + std::to_string(vc.second) +
                    " not divisible by the degree " + std::to_string(m) +
                    "; per-root values are conjugate-dependent");
        sum = sum + vc.first.scale(static_cast<unsigned long>(vc.second / m));
    }
    return sum;
}

/// Maximum of the per-theta slice (uncapped), same defense.
inline Value slice_max(const std::vector<Value>& multiset, int m, const std::string& what) {
    require(!multiset.empty(), errc::precondition, what + ": empty multiset");
    std::map<std::string, std::pair<Value, long>> counts;
    for (const auto& v : multiset) {
        auto [it, inserted] = counts.try_emplace(v.str(), v, 0L);
        ++it->second.second;
    }
    Value best = multiset.front();
    for (const auto& [key, vc] : counts) {
        require(vc.second % m == 0, errc::ambiguity,
                what + ": distance " + key + " has multiplicity " + std::to_string(vc.second) +
                    " not divisible by the degree " + std::to_string(m) +
                    "; per-root maxima are conjugate-dependent");
        if (vc.first > best) best = vc.first;
    }
    return best;
}

} // namespace detail

/// v-bar(theta - eta) for roots theta of a and eta of b: the (well-defined)
/// maximum of the per-theta slice of the mutual multiset.
template <class F>
Value algebraic_distance(const AlgebraicElement<F>& a, const AlgebraicElement<F>& b) {
    auto m = mutual_valuations(a.minpoly(), b.minpoly());
    return detail::slice_max(m, a.degree(), "distance(" + a.minpoly().str() + ", " + b.minpoly().str() + ")");
}

/// w-bar_{theta,delta}(f) = v(lc f) + sum over roots beta of f (with
/// multiplicity) of min(delta, v-bar(theta - beta)).
template <class F>
Value minimal_pair_eval(const AlgebraicElement<F>& theta, const Value& delta, const Polynomial<F>& f) {
    require(delta.is_finite(), errc::precondition, "minimal_pair_eval: delta must be finite");
    require(!f.is_zero(), errc::precondition, "minimal_pair_eval: zero polynomial");
    require(theta.field() == f.field(), errc::field_mismatch, "minimal_pair_eval: field mismatch");
    const F& field = f.field();
    const int m = theta.degree();

    // Multiplicity bookkeeping: roots(f) = roots(f / gcd(f, f')) + roots(gcd),
    // recursively; each layer is squarefree and goes through the resultant.
    std::function<Value(const Polynomial<F>&)> root_sum = [&](const Polynomial<F>& g) -> Value {
        if (g.is_constant()) return Value(0);
        auto d = hasse_derivative(g, 1);
        require(!d.is_zero(), errc::unsupported_input,
                "minimal_pair_eval: inseparable factor (zero derivative) in " + g.str());
        auto h = poly_gcd(g, d);
        if (h.is_constant()) {
            auto mset = mutual_valuations(theta.minpoly(), g);
            return detail::capped_slice_sum(mset, delta, m, "minimal_pair_eval(" + g.str() + ")");
        }
        return root_sum(poly_divmod(g, h).first) + root_sum(h);
    };

    return field.valuation(f.lc()) + root_sum(f);
}

/// delta(f) with respect to w-bar_{theta,delta}: min(delta, max of
/// v-bar(theta - beta) over roots beta of f).
template <class F>
Value optimal_value(const AlgebraicElement<F>& theta, const Value& delta, const Polynomial<F>& f) {
    require(delta.is_finite(), errc::precondition, "optimal_value: delta must be finite");
    require(!f.is_zero() && !f.is_constant(), errc::precondition,
            "optimal_value: polynomial must be nonconstant");
    require(theta.field() == f.field(), errc::field_mismatch, "optimal_value: field mismatch");
    auto d = hasse_derivative(f, 1);
    require(!d.is_zero(), errc::unsupported_input, "optimal_value: inseparable polynomial " + f.str());
    auto radical = poly_divmod(f, poly_gcd(f, d)).first;
    auto mset = mutual_valuations(theta.minpoly(), radical);
    return min(delta, detail::slice_max(mset, theta.degree(), "optimal_value(" + f.str() + ")"));
}

/// Certified lower bound for delta_K(theta) over a finite candidate probe.
template <class F>
std::pair<Value, AlgebraicElement<F>> delta_K_probe(const AlgebraicElement<F>& theta,
                                                    const CandidateSet<F>& candidates) {
    require(theta.degree() >= 2, errc::precondition,
            "delta_K_probe: no candidates of degree < 1 are possible");
    require(!candidates.empty(), errc::precondition, "delta_K_probe: empty candidate set");
    std::optional<std::pair<Value, AlgebraicElement<F>>> best;
    for (const auto& beta : candidates) {
        require(beta.degree() < theta.degree(), errc::precondition,
                "delta_K_probe: candidate of degree >= deg theta: " + beta.minpoly().str());
        Value d = algebraic_distance(theta, beta);
        if (!best || d > best->first) best = {d, beta};
    }
    return *best;
}

/// Candidate-relative distinguished-pair verdict.
template <class F>
struct PairVerdict {
    bool verified = false;                         // verified-up-to-candidates
    Value gap;                                     // computed v-bar(theta - alpha)
    std::optional<AlgebraicElement<F>> witness;    // refuting candidate, if any
    std::string reason;
};

template <class F>
PairVerdict<F> check_distinguished_pair(const AlgebraicElement<F>& theta, const AlgebraicElement<F>& alpha,
                                        const CandidateSet<F>& candidates) {
    require(theta.degree() > alpha.degree(), errc::precondition,
            "check_distinguished_pair: deg theta must exceed deg alpha");
    PairVerdict<F> verdict;
    verdict.gap = algebraic_distance(theta, alpha);
    for (const auto& beta : candidates) {
        require(beta.degree() < theta.degree(), errc::precondition,
                "check_distinguished_pair: candidate of degree >= deg theta");
        const Value d = algebraic_distance(theta, beta);
        if (d > verdict.gap) {
            verdict.witness = beta;
            verdict.reason = "candidate " + beta.minpoly().str() + " attains distance " + d.str() +
                             " > " + verdict.gap.str();
            return verdict;
        }
        if (beta.degree() < alpha.degree() && d >= verdict.gap) {
            verdict.witness = beta;
            verdict.reason = "candidate " + beta.minpoly().str() + " of lower degree attains distance " +
                             d.str() + " >= " + verdict.gap.str();
            return verdict;
        }
    }
    verdict.verified = true;
    return verdict;
}

} // namespace valchain
