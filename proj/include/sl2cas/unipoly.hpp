#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sl2cas/rational.hpp"

namespace sl2cas {

/// Univariate polynomial in z over Q, dense ascending coefficients with no
/// trailing zeros. The empty coefficient list is the zero polynomial.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& constant);  // NOLINT: implicit by design
    UniPoly(int constant) : UniPoly(Rational(constant)) {}
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly z();
    static UniPoly monomial(const Rational& coeff, int degree);

    // degree() is -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const;

    Rational coeff(int i) const;
    const Rational& leading_coeff() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    UniPoly monic() const;
    UniPoly pow(int e) const;
    Rational eval(const Rational& at) const;

    // p(z) -> p(z + k), the k-th power of the shift automorphism.
    UniPoly shift(int k) const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> c_;
};

// Division with remainder in Q[z]; throws std::domain_error on zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

bool divides(const UniPoly& d, const UniPoly& a);

// Monic gcd; both inputs zero is a domain error.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly lcm(const UniPoly& a, const UniPoly& b);

inline UniPoly poly_shift(const UniPoly& p, int k) { return p.shift(k); }
inline bool is_zero(const UniPoly& p) { return p.is_zero(); }

// The Casimir polynomial pi_mu(z) = (z + mu)(z - mu - 1) and its two linear
// factors alpha_mu(z) = z + mu, beta_mu(z) = z - mu - 1.
UniPoly pi_mu(const Rational& mu);
UniPoly alpha_mu(const Rational& mu);
UniPoly beta_mu(const Rational& mu);

// Rational roots with multiplicities (degree <= 2 is solved exactly; for
// higher degree, rational root extraction by trial division of the ends).
std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p);

}  // namespace sl2cas
