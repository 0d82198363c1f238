#include "sl2cas/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2cas {

UniPoly::UniPoly(const Rational& constant) {
    if (!sl2cas::is_zero(constant)) c_.push_back(constant);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::z() { return monomial(1, 1); }

UniPoly UniPoly::monomial(const Rational& coeff, int degree) {
    if (degree < 0) throw std::domain_error("monomial with negative degree");
    if (sl2cas::is_zero(coeff)) return {};
    std::vector<Rational> c(degree + 1, Rational(0));
    c.back() = coeff;
    UniPoly p;
    p.c_ = std::move(c);
    return p;
}

void UniPoly::normalize() {
    while (!c_.empty() && sl2cas::is_zero(c_.back())) c_.pop_back();
}

bool UniPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

const Rational& UniPoly::leading_coeff() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
    if (sl2cas::is_zero(s)) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    UniPoly r(*this);
    const Rational inv = Rational(1) / leading_coeff();
    return r *= inv;
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    UniPoly acc(Rational(1)), base(*this);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational UniPoly::eval(const Rational& at) const {
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * at + *it;
    return v;
}

UniPoly UniPoly::shift(int k) const {
    if (k == 0 || is_zero()) return *this;
    // Horner in z + k.
    const UniPoly base = UniPoly::z() + UniPoly(Rational(k));
    UniPoly out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        out *= base;
        out += UniPoly(*it);
    }
    return out;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (sl2cas::is_zero(a)) continue;
        const bool lead = s.empty();
        std::string mag = sl2cas::to_string(sgn(a) < 0 ? Rational(-a) : a);
        if (!lead) s += sgn(a) < 0 ? " - " : " + ";
        else if (sgn(a) < 0) s += "-";
        if (i == 0) {
            s += mag;
        } else {
            if (mag != "1") s += mag + "*";
            s += (i == 1) ? "z" : "z^" + std::to_string(i);
        }
    }
    return s;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly q, r(a);
    const int db = b.degree();
    const Rational lb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= db) {
        const UniPoly t = UniPoly::monomial(r.leading_coeff() / lb, r.degree() - db);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

bool divides(const UniPoly& d, const UniPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    UniPoly x(a), y(b);
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return ((a * b) / gcd(a, b)).monic();
}

UniPoly pi_mu(const Rational& mu) { return alpha_mu(mu) * beta_mu(mu); }

UniPoly alpha_mu(const Rational& mu) { return UniPoly::z() + UniPoly(mu); }

UniPoly beta_mu(const Rational& mu) { return UniPoly::z() - UniPoly(mu + 1); }

namespace {

std::vector<Int> positive_divisors(Int n) {
    n = abs(n);
    std::vector<Int> divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

// Candidate rational roots p/q of an integer polynomial: p | a_0, q | a_n.
std::vector<Rational> root_candidates(const UniPoly& p) {
    Int scale = 1;
    for (const auto& c : p.coeffs()) scale = lcm(scale, c.get_den());
    std::vector<Int> ic;
    for (const auto& c : p.coeffs()) ic.push_back(Int(c * scale));
    std::size_t low = 0;
    while (low < ic.size() && sgn(ic[low]) == 0) ++low;
    std::vector<Rational> out{Rational(0)};
    if (low >= ic.size()) return out;
    for (const Int& num : positive_divisors(ic[low]))
        for (const Int& den : positive_divisors(ic.back())) {
            Rational cand = make_rational(num, den);
            out.push_back(cand);
            out.push_back(-cand);
        }
    return out;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<std::pair<Rational, int>> roots;
    auto record = [&roots](const Rational& r) {
        for (auto& [root, mult] : roots)
            if (root == r) {
                ++mult;
                return;
            }
        roots.emplace_back(r, 1);
    };
    UniPoly f = p;
    while (f.degree() >= 1) {
        if (f.degree() == 1) {
            record(-f.coeff(0) / f.coeff(1));
            break;
        }
        if (f.degree() == 2) {
            const Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
            const Rational disc = b * b - 4 * a * c;
            Rational s;
            if (!rational_sqrt(disc, s)) break;
            record((-b + s) / (2 * a));
            record((-b - s) / (2 * a));
            break;
        }
        bool found = false;
        for (const Rational& cand : root_candidates(f)) {
            if (sl2cas::is_zero(f.eval(cand))) {
                record(cand);
                f = f / (UniPoly::z() - UniPoly(cand));
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return roots;
}

}  // namespace sl2cas
