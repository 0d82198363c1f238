#pragma once

#include <vector>

#include "sl2cas/polymatrix.hpp"

namespace sl2cas {

/// Smith decomposition M = U * S * V with U, V unimodular over Q[z] and S
/// diagonal, monic invariant factors s_1 | s_2 | ... on the main diagonal
/// (rectangular matrices keep the shape of M, zeros elsewhere).
struct SmithForm {
    PolyMatrix U, S, V;
    std::vector<UniPoly> invariant_factors() const;
};

SmithForm smith_normal_form(const PolyMatrix& m);

// Independent route: d_k = monic gcd of all k x k minors, s_k = d_k / d_{k-1}.
std::vector<UniPoly> invariant_factors_oracle(const PolyMatrix& m);

// det(M) is a nonzero constant.
bool is_unimodular(const PolyMatrix& m);

// Diagonal complement of a divisor chain under pi_mu: returns diagonal T with
// s_i(z) * t_i(z+1) = pi_mu(z+1); requires every s_i to divide pi_mu(z+1).
PolyMatrix casimir_complement(const std::vector<UniPoly>& factors, const Rational& mu);

}  // namespace sl2cas
