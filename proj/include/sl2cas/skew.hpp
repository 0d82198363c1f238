#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2cas/ratfunc.hpp"

namespace sl2cas {

/// Element of the skew Laurent algebra B = Q(z)[X, X^-1; shift], stored as a
/// finite degree -> coefficient map (no zero coefficients kept). The product
/// twists coefficients past powers of X:  X^i * f(z) = f(z+i) * X^i.
class SkewElement {
public:
    SkewElement() = default;

    static SkewElement x_pow(int k);
    static SkewElement scalar(const RatFunc& f);
    static SkewElement term(const RatFunc& coeff, int degree);
    // Y = pi_mu(z) X^-1, the lowering generator at semi-level mu, and its
    // powers Y^i = pi_mu(z) pi_mu(z-1) ... pi_mu(z-i+1) X^-i.
    static SkewElement y(const Rational& mu);
    static SkewElement y_pow(const Rational& mu, int i);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(int degree) const;

    std::optional<int> bottom_degree() const;
    std::optional<int> top_degree() const;
    // n - m over the nonzero degree window [m, n]; empty for zero.
    std::optional<int> length() const;

    SkewElement operator-() const;
    SkewElement& operator+=(const SkewElement& o);
    SkewElement& operator-=(const SkewElement& o);
    SkewElement& operator*=(const SkewElement& o);
    SkewElement& operator*=(const RatFunc& s);

    friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
    friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
    friend SkewElement operator*(SkewElement a, const SkewElement& b) { return a *= b; }
    friend SkewElement operator*(SkewElement a, const RatFunc& s) { return a *= s; }
    friend SkewElement operator*(const RatFunc& s, SkewElement a) { return a *= s; }

    bool operator==(const SkewElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const SkewElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void set(int degree, RatFunc f);
    std::map<int, RatFunc> terms_;
};

struct SkewDivision {
    SkewElement quotient;
    SkewElement remainder;
};

// Right division a = q*b + r, eliminating the leading term of the dividend
// while its top degree is at least the divisor's (quotient degrees stay
// nonnegative relative to b). Division by zero is a domain error.
SkewDivision right_divide(const SkewElement& a, const SkewElement& b);

// Mirror: a = b*q + r.
SkewDivision left_divide(const SkewElement& a, const SkewElement& b);

// Membership in the left ideal B*b. Both elements are normalised by a unit
// power of X before dividing, so the test is exact even when a reaches below
// b's degree window. Returns the quotient when a = q*b.
std::optional<SkewElement> in_left_ideal(const SkewElement& a, const SkewElement& b);

/// Graded presentation of an element of the subalgebra A: polynomial
/// coefficients on Y^i (i >= 1) and on X^j (j >= 0).
struct APresentation {
    std::vector<UniPoly> yPart;  // yPart[i-1] multiplies Y^i
    std::vector<UniPoly> xPart;  // xPart[j] multiplies X^j
    Rational mu;
};

bool is_in_a(const SkewElement& a, const Rational& mu);
bool is_in_a_plus(const SkewElement& a);

// Throws std::domain_error naming the offending degree when a is not in A.
APresentation to_a_presentation(const SkewElement& a, const Rational& mu);
SkewElement from_a_presentation(const APresentation& p);

}  // namespace sl2cas
