#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2cas/smith.hpp"

namespace sl2cas {

enum class SmithKind { Minus, Zero, Plus };

/// Discrete invariant of a polynomial Casimir representation, read off the
/// invariant factors of the raising matrix: S+(i,j,k) and S-(i,j,k) carry a
/// middle run of j > 0 copies of alpha_mu(z+1) resp. beta_mu(z+1) between i
/// ones and k copies of pi_mu(z+1); S0(l,m) has no middle run.
struct SmithType {
    SmithKind kind;
    int i, j, k;  // S0(l, m) stores l, m in i, j with k = 0
    // Set when mu = -1/2 collapses the plus and minus patterns; ignored by
    // comparisons.
    bool degenerate = false;

    static SmithType plus(int i, int j, int k) { return {SmithKind::Plus, i, j, k}; }
    static SmithType zero(int l, int m) { return {SmithKind::Zero, l, m, 0}; }
    static SmithType minus(int i, int j, int k) { return {SmithKind::Minus, i, j, k}; }

    int rank() const { return i + j + k; }
    std::vector<UniPoly> diagonal(const Rational& mu) const;
    std::string to_string() const;

    friend bool operator==(const SmithType& a, const SmithType& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j && a.k == b.k;
    }
    friend bool operator!=(const SmithType& a, const SmithType& b) { return !(a == b); }
};

/// Polynomial Casimir representation of semi-level mu on Q[z]^n: L_0 acts as
/// multiplication by z, L_1 as A1(z) followed by the shift, and the lowering
/// matrix is derived data, A_{-1}(z) = pi_mu(z) A1(z-1)^{-1}.
class CasimirRep {
public:
    // Validates the divisibility criterion: the n-th invariant factor of A1
    // must divide pi_mu(z+1). Throws std::domain_error otherwise.
    CasimirRep(const Rational& mu, PolyMatrix a1);

    const Rational& mu() const { return mu_; }
    int rank() const { return a1_.rows(); }
    const PolyMatrix& a1() const { return a1_; }
    const SmithForm& smith() const { return smith_; }

    PolyMatrix a_minus1() const;

    // Raising/lowering action on coordinate vectors.
    std::vector<UniPoly> raise(const std::vector<UniPoly>& v) const;
    std::vector<UniPoly> lower(const std::vector<UniPoly>& v) const;

    bool operator==(const CasimirRep& o) const { return mu_ == o.mu_ && a1_ == o.a1_; }

private:
    Rational mu_;
    PolyMatrix a1_;
    SmithForm smith_;
};

inline CasimirRep rep_from_phi(const Rational& mu, const PolyMatrix& a1) {
    return CasimirRep(mu, a1);
}

struct VerificationReport {
    bool casimirLeft = false;     // A_{-1}(z) A_1(z-1) = pi_mu(z) Id
    bool casimirRight = false;    // A_1(z) A_{-1}(z+1) = pi_mu(z+1) Id
    bool commutator = false;      // difference of the two products = -2z Id
    bool scalarIsConstant = false;
    Rational casimirScalar;       // (2 mu + 1)^2 on every valid representation
    Rational level;               // lambda = 2 mu
    std::optional<SmithType> smithType;
    PolyMatrix tMatrix;           // diagonal complement: S(z) T(z+1) = pi_mu(z+1) Id
    bool all_ok() const { return casimirLeft && casimirRight && commutator && scalarIsConstant; }
};

VerificationReport verify_rep(const CasimirRep& rep);

// Checks an explicitly given raising/lowering pair (used for corrupted or
// external data; verify_rep passes the derived pair).
VerificationReport verify_matrices(const Rational& mu, const PolyMatrix& a1,
                                   const PolyMatrix& aMinus1);

// Classifies the invariant factors of the raising matrix against the three
// patterns; a valid representation matches exactly one.
SmithType smith_type(const CasimirRep& rep);

// All Smith types of rank n, emitted as the minus, zero, plus families in
// lexicographic index order; (n+1)^2 in total.
std::vector<SmithType> enumerate_smith_types(int n);

// Diagonal realization rho(L_1) = S(z) followed by the shift.
CasimirRep realize_type(const SmithType& type, const Rational& mu);

enum class Rank1Type { I, II, III, IV };

// The four rank-one representations: gamma pi_mu(z+1), gamma alpha_mu(z+1),
// gamma beta_mu(z+1), gamma. Requires gamma != 0.
CasimirRep rank1_catalog(const Rational& mu, const Rational& gamma, Rank1Type type);

// Q-basis of C[z]-linear phi with deg <= degBound and phi(z) A1(z) =
// A1(z) phi(z+1); these are exactly the module endomorphisms.
std::vector<PolyMatrix> endomorphism_basis(const CasimirRep& rep, int degBound);

struct Rank1IdealReport {
    std::vector<UniPoly> ideals;     // monic nonconstant generators of invariant ideals
    std::vector<UniPoly> undecided;  // factors without rational roots, reported not searched
};

// Invariant-ideal search for rank-one representations: (f) is invariant iff
// f(z) | A1(z) f(z+1) and f(z) | A_{-1}(z) f(z-1); candidate roots are
// integer shifts of the rational roots of A1 * A_{-1}.
Rank1IdealReport rank1_invariant_ideals(const CasimirRep& rep);

// Weak-equivalence action: A1 -> g(z) A1(z) h(z+1)^{-1} for unimodular g, h.
CasimirRep rep_transform(const CasimirRep& rep, const PolyMatrix& g, const PolyMatrix& h);

// Searches deg <= degBound for a unimodular g with g(z) A1(z) = B1(z) g(z+1),
// i.e. an equivalence from rep a to rep b.
std::optional<PolyMatrix> find_equivalence(const CasimirRep& a, const CasimirRep& b, int degBound);

}  // namespace sl2cas
