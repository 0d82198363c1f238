#pragma once

#include <random>
#include <vector>

#include "sl2cas/polymatrix.hpp"
#include "sl2cas/ratfunc.hpp"
#include "sl2cas/skew.hpp"

namespace testutil {

using namespace sl2cas;

inline Rational random_rational(std::mt19937_64& rng, long span = 6) {
    const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
    const long den = 1 + static_cast<long>(rng() % 4);
    return make_rational(Int(num), Int(den));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long span = 6) {
    Rational q = random_rational(rng, span);
    while (is_zero(q)) q = random_rational(rng, span);
    return q;
}

inline UniPoly random_poly(std::mt19937_64& rng, int maxDeg, long span = 4) {
    const int deg = static_cast<int>(rng() % (maxDeg + 1));
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = random_rational(rng, span);
    return UniPoly(c);
}

inline UniPoly random_nonzero_poly(std::mt19937_64& rng, int maxDeg, long span = 4) {
    UniPoly p = random_poly(rng, maxDeg, span);
    while (p.is_zero()) p = random_poly(rng, maxDeg, span);
    return p;
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, int maxDeg = 2) {
    return RatFunc(random_poly(rng, maxDeg), random_nonzero_poly(rng, maxDeg));
}

inline SkewElement random_skew(std::mt19937_64& rng, int minDeg, int maxDeg, int terms = 3) {
    SkewElement a;
    for (int t = 0; t < terms; ++t) {
        const int d = minDeg + static_cast<int>(rng() % (maxDeg - minDeg + 1));
        a += SkewElement::term(random_ratfunc(rng, 1), d);
    }
    return a;
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int maxDeg,
                                long span = 3) {
    PolyMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_poly(rng, maxDeg, span);
    return m;
}

// Product of a few elementary transvections, swaps and unit scalings.
inline PolyMatrix random_unimodular(std::mt19937_64& rng, int n, int ops = 4) {
    PolyMatrix m = PolyMatrix::identity(n);
    if (n < 2) {
        m.scale_row(0, random_nonzero_rational(rng, 3));
        return m;
    }
    for (int t = 0; t < ops; ++t) {
        const int i = static_cast<int>(rng() % n);
        int j = static_cast<int>(rng() % n);
        while (j == i) j = static_cast<int>(rng() % n);
        switch (rng() % 3) {
            case 0:
                m.add_row_multiple(i, j, random_poly(rng, 2, 2));
                break;
            case 1:
                m.swap_rows(i, j);
                break;
            default:
                m.scale_row(i, random_nonzero_rational(rng, 3));
                break;
        }
    }
    return m;
}

}  // namespace testutil
