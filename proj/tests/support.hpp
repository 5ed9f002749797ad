#pragma once

#include <random>
#include <vector>

#include "valchain/groundfield.hpp"
#include "valchain/polynomial.hpp"

namespace testsupport {

using namespace valchain;

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, long max_num = 20, long max_den = 12) {
    const long num = rand_int(rng, -max_num, max_num);
    const long den = rand_int(rng, 1, max_den);
    return Rational(num, den);
}

inline Value rand_value(Rng& rng) { return Value(rand_int(rng, -20, 20), rand_int(rng, 1, 12)); }

/// Random polynomial over (Q, v_p) with small integer-ish coefficients.
inline Polynomial<PadicField> rand_poly(Rng& rng, const PadicField& field, int max_deg,
                                        long coeff_range = 20) {
    const int deg = static_cast<int>(rand_int(rng, 0, max_deg));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(Rational(rand_int(rng, -coeff_range, coeff_range)));
    return Polynomial<PadicField>(field, std::move(c));
}

inline Polynomial<PadicField> rand_nonzero_poly(Rng& rng, const PadicField& field, int max_deg,
                                                long coeff_range = 20) {
    for (;;) {
        auto f = rand_poly(rng, field, max_deg, coeff_range);
        if (!f.is_zero()) return f;
    }
}

inline Polynomial<PadicField> rand_monic_poly(Rng& rng, const PadicField& field, int deg,
                                              long coeff_range = 20) {
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.push_back(Rational(rand_int(rng, -coeff_range, coeff_range)));
    c.push_back(Rational(1));
    return Polynomial<PadicField>(field, std::move(c));
}

inline Polynomial<RatFuncField> rand_poly(Rng& rng, const RatFuncField& field, int max_deg) {
    const int deg = static_cast<int>(rand_int(rng, 0, max_deg));
    std::vector<RatFunc> c;
    for (int i = 0; i <= deg; ++i) {
        // random F_p[t] numerator of degree <= 2, denominator 1 or t+const
        std::vector<std::uint64_t> num;
        const int nd = static_cast<int>(rand_int(rng, 0, 2));
        for (int j = 0; j <= nd; ++j)
            num.push_back(static_cast<std::uint64_t>(rand_int(rng, 0, static_cast<long>(field.p()) - 1)));
        c.push_back(RatFunc(FpPoly(field.p(), num)));
    }
    return Polynomial<RatFuncField>(field, std::move(c));
}

} // namespace testsupport
