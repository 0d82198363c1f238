#pragma once

#include <cstdint>
#include <optional>

#include "sl2cas/casimir.hpp"
#include "sl2cas/skew.hpp"

namespace sl2cas {

/// Quotient module A/(A alpha) for alpha with constant nonzero ends,
/// realized on the basis 1, X, ..., X^{n-1} where the raising action is the
/// companion matrix of alpha.
struct QuotientModule {
    SkewElement alpha;
    Rational mu;
    int rank;
    CasimirRep rep;
};

// alpha = X^n - p(z) X^{n-1} - a0 with n >= 2, deg(p) >= 1, a0 != 0; the
// quotient is a rank-n representation of Smith type S0(n, 0).
QuotientModule build_family(int n, const UniPoly& p, const Rational& a0, const Rational& mu);

// Matrix of left multiplication by X on A/(A alpha) w.r.t. 1, X, ..., X^{n-1};
// requires alpha in A+ with nonzero constant end coefficients.
PolyMatrix companion_matrix(const SkewElement& alpha);

struct FinGenReport {
    bool finitelyGenerated;  // both end coefficients are nonzero constants
    int yDegBound;           // degree of the X^0 coefficient (-1 when zero)
    int xDegBound;           // degree of the top coefficient
};

// Finite-generation criterion for A/(A alpha); alpha must be a nonzero
// element of A+.
FinGenReport is_finitely_generated(const SkewElement& alpha);

// Coordinates of a mod (A alpha) w.r.t. the basis 1, X, ..., X^{n-1};
// requires a in A.
std::vector<UniPoly> reduce_mod_alpha(const SkewElement& a, const QuotientModule& q);

struct OrbitResult {
    int rank;
    PolyMatrix basis;  // n x rank, saturated, closed under both actions
};

// Applies all words of length <= wordLen in the raising/lowering operators
// to v, spans over Q[z], saturates (torsion-free closure via the Smith form
// of the stacked matrix) and closes up. Full rank means the orbit generates
// the whole module.
OrbitResult orbit_submodule(const CasimirRep& rep, const std::vector<UniPoly>& v, int wordLen);

struct FalsifierWitness {
    std::vector<UniPoly> generator;
    PolyMatrix basis;   // n x k embedding, intertwining verified
    PolyMatrix subA1;   // induced raising matrix on the submodule
    int rank;
};

struct FalsifierVerdict {
    enum class Outcome { NoCounterexample, ProperSubmodule };
    Outcome outcome = Outcome::NoCounterexample;
    std::optional<FalsifierWitness> witness;
    int degBound = 0;
    int wordLen = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    long candidatesTried = 0;
};

// Semi-deciding simplicity probe: scans a deterministic candidate set (the
// standard basis, every vector with entries of degree <= degBound and
// coefficients in {-1,0,1}, then `samples` seeded pseudorandom vectors) and
// reports the first candidate whose orbit closure is a proper submodule.
// NoCounterexample is evidence within the recorded bounds, not a proof.
FalsifierVerdict simplicity_falsifier(const CasimirRep& rep, int degBound, int wordLen,
                                      long samples, std::uint64_t seed = 0, int jobs = 1);

struct SubQuotient {
    CasimirRep sub;
    CasimirRep quotient;
    SmithType subType;
    SmithType quotientType;
};

// Splits rep along an injective intertwining embedding B (n x k): solves the
// induced raising matrix on the submodule, forms the quotient action on a
// Smith-derived complement basis, and classifies both. Rejects embeddings
// that do not intertwine (reporting the residual) and torsion quotients.
SubQuotient submodule_quotient(const CasimirRep& rep, const PolyMatrix& b);

// Solves A1(z) B(z+1) = B(z) A'(z) for A'; empty when B does not intertwine
// with a polynomial matrix.
std::optional<PolyMatrix> solve_intertwiner(const PolyMatrix& a1, const PolyMatrix& b);

}  // namespace sl2cas
