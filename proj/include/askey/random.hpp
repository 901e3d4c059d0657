#pragma once

// Seeded random elements.

#include "askey/delta.hpp"
#include "askey/laurent.hpp"
#include "askey/ratq.hpp"
#include "askey/tensor.hpp"

#include <algorithm>
#include <random>

namespace askey::gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random element of Z[q, q^-1] with small coefficients.
inline RatQ random_laurent_q(Rng& rng, int max_terms = 3) {
    RatQ r;
    const int n = uniform(rng, 1, max_terms);
    for (int i = 0; i < n; ++i) r += RatQ(uniform(rng, -4, 4)).mul_q_pow(uniform(rng, -3, 3));
    return r;
}

/// Random element of Q(q); about a third have a nontrivial denominator.
inline RatQ random_ratq(Rng& rng) {
    RatQ num = random_laurent_q(rng);
    if (uniform(rng, 0, 2) != 0) return num;
    RatQ den = random_laurent_q(rng, 2);
    if (den.is_zero()) return num;
    return num / den;
}

inline LaurentABC random_abc(Rng& rng, int max_terms = 3) {
    LaurentABC r;
    const int n = uniform(rng, 1, max_terms);
    for (int i = 0; i < n; ++i)
        r.add_term({uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)}, random_laurent_q(rng, 2));
    return r;
}

/// Sum of products of x, y, z with Laurent coefficients; lies in U' (x) Laurent.
inline TensorElement random_uprime(Rng& rng) {
    const UElement gens[3] = {u::x(), u::y(), u::z()};
    TensorElement v;
    const int terms = uniform(rng, 1, 3);
    for (int n = 0; n < terms; ++n) {
        UElement w = u::one();
        const int len = uniform(rng, 0, 3);
        for (int i = 0; i < len; ++i) w = w * gens[uniform(rng, 0, 2)];
        v += tensor(w, random_abc(rng, 2));
    }
    return v;
}

inline TensorElement random_tensor(Rng& rng) {
    TensorElement v;
    const int terms = uniform(rng, 1, 3);
    for (int n = 0; n < terms; ++n)
        v.add_term({uniform(rng, 0, 2), uniform(rng, -2, 2), uniform(rng, 0, 2)}, random_abc(rng, 2));
    return v;
}

/// Small elements of Delta: A, B, C exponents at most 1 and at most one central letter.
inline DeltaElement random_delta(Rng& rng) {
    DeltaElement d;
    const int terms = uniform(rng, 1, 2);
    for (int n = 0; n < terms; ++n)
        d.add_term({uniform(rng, 0, 1), uniform(rng, 0, 1), uniform(rng, 0, 1), 0,
                    uniform(rng, 0, 1) * uniform(rng, 0, 1), 0},
                   random_laurent_q(rng, 1));
    return d;
}

/// Homogeneous element of U of degree deg.
inline UElement random_homogeneous(Rng& rng, int deg) {
    UElement v;
    for (int i = 0; i < 3; ++i) {
        const int t = uniform(rng, std::max(0, -deg), 2);
        v.add_term({t + deg, uniform(rng, -2, 2), t}, random_laurent_q(rng, 2));
    }
    return v;
}

} // namespace askey::gen
