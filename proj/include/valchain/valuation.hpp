#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "valchain/algebraic.hpp"
#include "valchain/error.hpp"
#include "valchain/polynomial.hpp"
#include "valchain/value.hpp"

namespace valchain {

/// [f_0, ..., f_n] with f = sum f_i Q^i and deg f_i < deg Q, by repeated
/// division. Reconstruction is exact by construction.
template <class F>
std::vector<Polynomial<F>> q_expansion(const Polynomial<F>& f, const Polynomial<F>& q) {
    require(q.is_monic(), errc::precondition, "q_expansion: non-monic Q");
    require(q.degree_strict() >= 1, errc::precondition, "q_expansion: constant Q");
    std::vector<Polynomial<F>> out;
    Polynomial<F> rest = f;
    if (rest.is_zero()) return {rest};
    while (!rest.is_zero()) {
        auto [quot, rem] = poly_divmod(rest, q);
        out.push_back(rem);
        rest = quot;
    }
    return out;
}

template <class F>
struct IValuation {
    virtual ~IValuation() = default;
    virtual Value eval(const Polynomial<F>& f) const = 0;
    /// Degree of the valuation: the degree of its key polynomials of minimal
    /// degree.
    virtual int kp_degree() const = 0;
    virtual const F& field() const = 0;
    virtual std::string kind() const = 0;
};

/// Depth-zero valuation defined by the pair (a, gamma):
/// f = sum c_i (X-a)^i evaluates to min v(c_i) + i*gamma.
template <class F>
class PairValuation final : public IValuation<F> {
public:
    PairValuation(const F& field, typename F::Element center, Value weight)
        : field_(field), center_(std::move(center)), weight_(std::move(weight)) {
        require(weight_.is_finite(), errc::precondition, "PairValuation: weight must be finite");
    }

    const typename F::Element& center() const { return center_; }
    const Value& weight() const { return weight_; }

    Value eval(const Polynomial<F>& f) const override {
        if (f.is_zero()) return Value::infinity();
        auto shifted = taylor_shift(f, center_);
        Value best = Value::infinity();
        for (std::size_t i = 0; i < shifted.coeffs().size(); ++i) {
            const auto& c = shifted.coeffs()[i];
            if (c.is_zero()) continue;
            Value term = field_.valuation(c) + weight_.scale(static_cast<unsigned long>(i));
            if (term < best) best = term;
        }
        return best;
    }

    int kp_degree() const override { return 1; }
    const F& field() const override { return field_; }
    std::string kind() const override { return "pair"; }

    bool operator==(const PairValuation& o) const {
        return field_ == o.field_ && center_ == o.center_ && weight_ == o.weight_;
    }

private:
    F field_;
    typename F::Element center_;
    Value weight_;
};

/// The minimal valuation w_{-inf}(f) = (-deg f, v(lc f)) with values in
/// Z x (Gamma_v (x) Q) ordered lexicographically.
template <class F>
class MinimalValuation {
public:
    explicit MinimalValuation(const F& field) : field_(field) {}

    LexValue eval(const Polynomial<F>& f) const {
        if (f.is_zero()) return LexValue::infinity();
        const Value v = field_.valuation(f.lc());
        return LexValue(mpz_class(-f.degree_strict()), v.rational());
    }

    const F& field() const { return field_; }

private:
    F field_;
};

enum class KeyPolyRoute { degree_equal, psi_membership };

/// Inductive valuation: a depth-zero base plus ordinary augmentation steps
/// (phi_i, gamma_i). Evaluation expands recursively, each expansion
/// coefficient evaluated at the previous stage.
template <class F>
class InductiveValuation final : public IValuation<F> {
public:
    struct Step {
        Polynomial<F> phi;
        Value gamma;
        KeyPolyRoute route;
        bool operator==(const Step& o) const { return phi == o.phi && gamma == o.gamma; }
    };

    explicit InductiveValuation(PairValuation<F> base) : base_(std::move(base)) {}
    InductiveValuation(PairValuation<F> base, std::vector<Step> steps)
        : base_(std::move(base)), steps_(std::move(steps)) {
        for (std::size_t i = 0; i < steps_.size(); ++i) check_step(i);
    }

    const PairValuation<F>& base() const { return base_; }
    const std::vector<Step>& steps() const { return steps_; }
    std::size_t depth() const { return steps_.size(); }

    Value eval(const Polynomial<F>& f) const override { return eval_stage(steps_.size(), f); }

    /// The stage valuation w_i (i = 0 is the depth-zero base).
    Value eval_stage(std::size_t stage, const Polynomial<F>& f) const {
        if (stage == 0) return base_.eval(f);
        if (f.is_zero()) return Value::infinity();
        const Step& s = steps_[stage - 1];
        Value best = Value::infinity();
        std::size_t i = 0;
        for (const auto& coeff : q_expansion(f, s.phi)) {
            if (!coeff.is_zero()) {
                Value term = eval_stage(stage - 1, coeff) + s.gamma.scale(static_cast<unsigned long>(i));
                if (term < best) best = term;
            }
            ++i;
        }
        return best;
    }

    int kp_degree() const override {
        return steps_.empty() ? 1 : steps_.back().phi.degree_strict();
    }
    const F& field() const override { return base_.field(); }
    std::string kind() const override { return "inductive"; }

    bool operator==(const InductiveValuation& o) const {
        return base_ == o.base_ && steps_ == o.steps_;
    }

private:
    void check_step(std::size_t i) {
        const Step& s = steps_[i];
        require(s.phi.is_monic(), errc::precondition, "augmentation key must be monic");
        require(s.phi.field() == base_.field(), errc::field_mismatch, "augmentation key over wrong field");
        require(s.gamma.is_finite(), errc::precondition, "augmentation value must be finite");
        const Value prev = eval_stage(i, s.phi);
        require(s.gamma > prev, errc::inadmissible_augmentation,
                "gamma = " + s.gamma.str() + " must exceed the previous stage value " + prev.str() +
                    " of " + s.phi.str());
    }

    PairValuation<F> base_;
    std::vector<Step> steps_;
};

/// Certification of phi as a key polynomial for w, restricted to the two
/// constructive routes. Returns the route or fails with an explanation.
template <class F, class W>
KeyPolyRoute certify_key_poly(const W& w, const Polynomial<F>& phi) {
    require(phi.is_monic(), errc::certification, "key polynomial must be monic: " + phi.str());
    const int dw = w.kp_degree();
    const int dp = phi.degree_strict();
    if (dp == dw) return KeyPolyRoute::degree_equal;
    if (dp > dw && dp % dw == 0) return KeyPolyRoute::psi_membership;
    fail(errc::certification,
         "cannot certify " + phi.str() + " as a key polynomial: degree " + std::to_string(dp) +
             " is neither deg(w) = " + std::to_string(dw) + " nor a proper multiple of it");
}

template <class F>
InductiveValuation<F> augment(const PairValuation<F>& w, const Polynomial<F>& phi, const Value& gamma) {
    const KeyPolyRoute route = certify_key_poly(w, phi);
    const Value prev = w.eval(phi);
    require(gamma > prev, errc::inadmissible_augmentation,
            "gamma = " + gamma.str() + " must exceed w(phi) = " + prev.str());
    return InductiveValuation<F>(w, {{phi, gamma, route}});
}

template <class F>
InductiveValuation<F> augment(const InductiveValuation<F>& w, const Polynomial<F>& phi,
                              const Value& gamma) {
    const KeyPolyRoute route = certify_key_poly(w, phi);
    const Value prev = w.eval(phi);
    require(gamma > prev, errc::inadmissible_augmentation,
            "gamma = " + gamma.str() + " must exceed w(phi) = " + prev.str());
    auto steps = w.steps();
    steps.push_back({phi, gamma, route});
    return InductiveValuation<F>(w.base(), std::move(steps));
}

/// Valuation defined by a minimal pair (theta, delta): the restriction of
/// w-bar_{theta,delta} to K[X], evaluated through the root formula.
template <class F>
class MinimalPairValuation final : public IValuation<F> {
public:
    MinimalPairValuation(AlgebraicElement<F> theta, Value delta)
        : theta_(std::move(theta)), delta_(std::move(delta)) {
        require(delta_.is_finite(), errc::precondition, "MinimalPairValuation: delta must be finite");
    }

    const AlgebraicElement<F>& theta() const { return theta_; }
    const Value& delta() const { return delta_; }

    Value eval(const Polynomial<F>& f) const override {
        if (f.is_zero()) return Value::infinity();
        return minimal_pair_eval(theta_, delta_, f);
    }

    int kp_degree() const override { return theta_.degree(); }
    const F& field() const override { return theta_.field(); }
    std::string kind() const override { return "minimal-pair"; }

private:
    AlgebraicElement<F> theta_;
    Value delta_;
};

template <class F>
class TruncationValuation;

/// Value-semantic handle over an immutable valuation of any kind.
template <class F>
class Valuation {
public:
    Valuation(PairValuation<F> w) : impl_(std::make_shared<PairValuation<F>>(std::move(w))) {}
    Valuation(InductiveValuation<F> w) : impl_(std::make_shared<InductiveValuation<F>>(std::move(w))) {}
    Valuation(MinimalPairValuation<F> w)
        : impl_(std::make_shared<MinimalPairValuation<F>>(std::move(w))) {}
    explicit Valuation(std::shared_ptr<const IValuation<F>> impl) : impl_(std::move(impl)) {}

    Value operator()(const Polynomial<F>& f) const { return impl_->eval(f); }
    Value eval(const Polynomial<F>& f) const { return impl_->eval(f); }
    int kp_degree() const { return impl_->kp_degree(); }
    const F& field() const { return impl_->field(); }
    std::string kind() const { return impl_->kind(); }

    template <class T>
    const T* as() const {
        return dynamic_cast<const T*>(impl_.get());
    }
    const std::shared_ptr<const IValuation<F>>& impl() const { return impl_; }

private:
    std::shared_ptr<const IValuation<F>> impl_;
};

/// Q-truncation w_Q(f) = min_i { w(f_i) + i w(Q) } over the Q-expansion.
template <class F>
class TruncationValuation final : public IValuation<F> {
public:
    TruncationValuation(Valuation<F> base, Polynomial<F> truncator)
        : base_(std::move(base)), q_(std::move(truncator)), q_value_(base_.eval(q_)) {}

    const Valuation<F>& base() const { return base_; }
    const Polynomial<F>& truncator() const { return q_; }
    const Value& truncator_value() const { return q_value_; }

    Value eval(const Polynomial<F>& f) const override {
        if (f.is_zero()) return Value::infinity();
        Value best = Value::infinity();
        std::size_t i = 0;
        for (const auto& coeff : q_expansion(f, q_)) {
            if (!coeff.is_zero()) {
                Value term = base_.eval(coeff) + q_value_.scale(static_cast<unsigned long>(i));
                if (term < best) best = term;
            }
            ++i;
        }
        return best;
    }

    int kp_degree() const override { return q_.degree_strict(); }
    const F& field() const override { return base_.field(); }
    std::string kind() const override { return "truncation"; }

private:
    Valuation<F> base_;
    Polynomial<F> q_;
    Value q_value_;
};

/// Shallow ABKP certification for truncators: monic, and degree comparable by
/// divisibility with deg(w). Monic linear polynomials always pass.
template <class F>
void certify_truncator(const Valuation<F>& w, const Polynomial<F>& q) {
    require(q.is_monic(), errc::certification, "truncator must be monic: " + q.str());
    const int dq = q.degree_strict();
    require(dq >= 1, errc::certification, "truncator must be nonconstant");
    const int dw = w.kp_degree();
    require(dq % dw == 0 || dw % dq == 0, errc::certification,
            "cannot certify truncator " + q.str() + ": degree " + std::to_string(dq) +
                " is not divisibility-comparable with deg(w) = " + std::to_string(dw));
}

template <class F>
TruncationValuation<F> truncate(const Valuation<F>& w, const Polynomial<F>& q) {
    certify_truncator(w, q);
    return TruncationValuation<F>(w, q);
}

template <class F>
TruncationValuation<F> truncate(const InductiveValuation<F>& w, const Polynomial<F>& q) {
    return truncate(Valuation<F>(w), q);
}

template <class F>
TruncationValuation<F> truncate(const PairValuation<F>& w, const Polynomial<F>& q) {
    return truncate(Valuation<F>(w), q);
}

/// epsilon(w, f) = max over b >= 1 with nonzero Hasse derivative of
/// (w(f) - w(d_b f)) / b. On tame inputs this equals the optimal value
/// delta(f).
template <class F>
Value epsilon(const Valuation<F>& w, const Polynomial<F>& f) {
    require(!f.is_zero() && !f.is_constant(), errc::precondition, "epsilon: f must be nonconstant");
    const Value wf = w.eval(f);
    std::optional<Value> best;
    const unsigned long degf = static_cast<unsigned long>(f.degree_strict());
    for (unsigned long b = 1; b <= degf; ++b) {
        auto d = hasse_derivative(f, b);
        if (d.is_zero()) continue;
        Value term = (wf - w.eval(d)).div(b);
        if (!best || term > *best) best = term;
    }
    return *best; // b = deg f always contributes (top Hasse derivative is 1)
}

/// f ~_w g: w(f - g) > w(f) = w(g).
template <class F>
bool w_equivalent(const Valuation<F>& w, const Polynomial<F>& f, const Polynomial<F>& g) {
    require(!f.is_zero() && !g.is_zero(), errc::precondition, "w_equivalent: zero operand");
    const Value wf = w.eval(f);
    if (wf != w.eval(g)) return false;
    return w.eval(f - g) > wf;
}

} // namespace valchain
