#pragma once

#include <string>

#include "sl2cas/unipoly.hpp"

namespace sl2cas {

/// Element of Q(z), kept reduced with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Rational& constant) : num_(constant), den_(Rational(1)) {}  // NOLINT
    RatFunc(int constant) : RatFunc(Rational(constant)) {}
    RatFunc(const UniPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
    RatFunc(UniPoly num, UniPoly den);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    // Throws std::domain_error if the denominator is nonconstant.
    const UniPoly& as_polynomial() const;

    RatFunc operator-() const;
    RatFunc inverse() const;
    RatFunc shift(int k) const { return RatFunc(num_.shift(k), den_.shift(k)); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void reduce();
    UniPoly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace sl2cas
