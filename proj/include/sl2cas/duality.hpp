#pragma once

#include "sl2cas/casimir.hpp"
#include "sl2cas/skew.hpp"

namespace sl2cas {

/// Dual representation on the dual module: in the dual basis the raising
/// matrix is A_{-1}(z+1)^T. The double dual is the original on the nose.
CasimirRep dual_rep(const CasimirRep& rep);

struct DualPair {
    CasimirRep primal;
    CasimirRep dual;
};

DualPair dual_pair(const CasimirRep& rep);

// Expected Smith-type swap under duality: S+(i,j,k) <-> S-(k,j,i) and
// S0(l,m) <-> S0(m,l).
SmithType dual_type(const SmithType& t);

// The operator (pi_mu(z+1) shift)^m applied to a rational function; negative
// powers divide by pi_mu(z) pi_mu(z-1) ... and so leave Q[z].
RatFunc casimir_shift_power(const RatFunc& f, int m, const Rational& mu);

/// Dual generator of alpha = sum_{i=0}^n a_i(z) X^i with a_0 a_n != 0:
/// coefficient i of the dual is (pi_mu(z+1) shift)^{2i-n} applied to
/// a_{n-i}(z). `raw` is the exact solution (rational-function coefficients,
/// involutive on the nose); `normalized` clears denominators by the monic
/// left unit `clearing` and scales the top coefficient monic, landing in A+.
struct AlphaDual {
    SkewElement raw;
    SkewElement normalized;
    UniPoly clearing;
};

AlphaDual dual_alpha(const SkewElement& alpha, const Rational& mu);

// Independent oracle for dual_alpha: solves the pairing matrices A(z) on
// span{1, ..., X^n} compatible with the recursion pi_mu(z+1) a_{i,j-1}(z+1)
// = a_{i+1,j}(z) and with {., alpha} = 0, then tests {alphaStar, .} = 0.
// Expects the raw (unnormalised) dual; returns false on zero input or when
// no pairing matrix exists.
bool duality_pairing_check(const SkewElement& alpha, const SkewElement& alphaStarRaw,
                           const Rational& mu);

}  // namespace sl2cas
