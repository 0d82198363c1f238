#include "sl2cas/skew.hpp"

#include <stdexcept>

namespace sl2cas {

SkewElement SkewElement::x_pow(int k) { return term(RatFunc(1), k); }

SkewElement SkewElement::scalar(const RatFunc& f) { return term(f, 0); }

SkewElement SkewElement::term(const RatFunc& coeff, int degree) {
    SkewElement e;
    e.set(degree, coeff);
    return e;
}

SkewElement SkewElement::y(const Rational& mu) { return y_pow(mu, 1); }

SkewElement SkewElement::y_pow(const Rational& mu, int i) {
    if (i < 0) throw std::domain_error("negative power of Y");
    UniPoly prod(Rational(1));
    for (int j = 0; j < i; ++j) prod *= pi_mu(mu).shift(-j);
    return term(RatFunc(prod), -i);
}

void SkewElement::set(int degree, RatFunc f) {
    if (f.is_zero())
        terms_.erase(degree);
    else
        terms_[degree] = std::move(f);
}

RatFunc SkewElement::coeff(int degree) const {
    const auto it = terms_.find(degree);
    return it == terms_.end() ? RatFunc(0) : it->second;
}

std::optional<int> SkewElement::bottom_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> SkewElement::top_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

std::optional<int> SkewElement::length() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first - terms_.begin()->first;
}

SkewElement SkewElement::operator-() const {
    SkewElement r;
    for (const auto& [d, f] : terms_) r.terms_.emplace(d, -f);
    return r;
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
    for (const auto& [d, f] : o.terms_) set(d, coeff(d) + f);
    return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
    for (const auto& [d, f] : o.terms_) set(d, coeff(d) - f);
    return *this;
}

SkewElement& SkewElement::operator*=(const SkewElement& o) {
    SkewElement out;
    for (const auto& [i, f] : terms_)
        for (const auto& [j, g] : o.terms_) out.set(i + j, out.coeff(i + j) + f * g.shift(i));
    terms_ = std::move(out.terms_);
    return *this;
}

SkewElement& SkewElement::operator*=(const RatFunc& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, f] : terms_) f = s * f;
    return *this;
}


std::string SkewElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + it->second.to_string() + ")";
        if (it->first != 0) s += "*X^" + std::to_string(it->first);
    }
    return s;
}

SkewDivision right_divide(const SkewElement& a, const SkewElement& b) {
    if (b.is_zero()) throw std::domain_error("skew division by zero");
    SkewElement q, r(a);
    const int nb = *b.top_degree();
    const RatFunc lb = b.coeff(nb);
    while (!r.is_zero() && *r.top_degree() >= nb) {
        const int na = *r.top_degree();
        const int k = na - nb;
        // t = c X^k with c chosen so t*b cancels the top term of r.
        const RatFunc c = r.coeff(na) / lb.shift(k);
        const SkewElement t = SkewElement::term(c, k);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

SkewDivision left_divide(const SkewElement& a, const SkewElement& b) {
    if (b.is_zero()) throw std::domain_error("skew division by zero");
    SkewElement q, r(a);
    const int nb = *b.top_degree();
    const RatFunc lb = b.coeff(nb);
    while (!r.is_zero() && *r.top_degree() >= nb) {
        const int na = *r.top_degree();
        const int k = na - nb;
        // b * (c X^k) has top term lb(z) c(z+nb) X^na.
        const RatFunc c = (r.coeff(na) / lb).shift(-nb);
        const SkewElement t = SkewElement::term(c, k);
        q += t;
        r -= b * t;
    }
    return {q, r};
}

std::optional<SkewElement> in_left_ideal(const SkewElement& a, const SkewElement& b) {
    if (b.is_zero()) throw std::domain_error("membership in the zero ideal");
    if (a.is_zero()) return SkewElement{};
    // Any quotient q with a = q*b has bottom degree bot(a) - bot(b); shifting
    // a up by X^N makes that nonnegative, where right division is complete.
    const int shift = std::max(0, *b.bottom_degree() - *a.bottom_degree());
    const SkewDivision div = right_divide(SkewElement::x_pow(shift) * a, b);
    if (!div.remainder.is_zero()) return std::nullopt;
    return SkewElement::x_pow(-shift) * div.quotient;
}

bool is_in_a_plus(const SkewElement& a) {
    for (const auto& [d, f] : a.terms())
        if (d < 0 || !f.is_polynomial()) return false;
    return true;
}

bool is_in_a(const SkewElement& a, const Rational& mu) {
    for (const auto& [d, f] : a.terms()) {
        if (d >= 0) {
            if (!f.is_polynomial()) return false;
            continue;
        }
        UniPoly prod(Rational(1));
        for (int j = 0; j < -d; ++j) prod *= pi_mu(mu).shift(-j);
        if (!(f / RatFunc(prod)).is_polynomial()) return false;
    }
    return true;
}

APresentation to_a_presentation(const SkewElement& a, const Rational& mu) {
    APresentation out;
    out.mu = mu;
    for (const auto& [d, f] : a.terms()) {
        if (d >= 0) {
            if (!f.is_polynomial())
                throw std::domain_error("not in A: coefficient at X^" + std::to_string(d) +
                                        " is not polynomial");
            if (static_cast<int>(out.xPart.size()) <= d) out.xPart.resize(d + 1);
            out.xPart[d] = f.as_polynomial();
            continue;
        }
        const int i = -d;
        UniPoly prod(Rational(1));
        for (int j = 0; j < i; ++j) prod *= pi_mu(mu).shift(-j);
        const RatFunc p = f / RatFunc(prod);
        if (!p.is_polynomial())
            throw std::domain_error("not in A: coefficient at X^" + std::to_string(d) +
                                    " is not divisible by the pi_mu product");
        if (static_cast<int>(out.yPart.size()) < i) out.yPart.resize(i);
        out.yPart[i - 1] = p.as_polynomial();
    }
    return out;
}

SkewElement from_a_presentation(const APresentation& p) {
    SkewElement out;
    for (std::size_t j = 0; j < p.xPart.size(); ++j)
        out += SkewElement::term(RatFunc(p.xPart[j]), static_cast<int>(j));
    for (std::size_t i = 0; i < p.yPart.size(); ++i)
        out += SkewElement::scalar(RatFunc(p.yPart[i])) *
               SkewElement::y_pow(p.mu, static_cast<int>(i) + 1);
    return out;
}

}  // namespace sl2cas
