#include "sl2cas/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace sl2cas {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    const UniPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const Rational lead = den_.leading_coeff();
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

const UniPoly& RatFunc::as_polynomial() const {
    if (!is_polynomial())
        throw std::domain_error("rational function " + to_string() + " is not polynomial");
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace sl2cas
