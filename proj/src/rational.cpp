#include "sl2cas/rational.hpp"

#include <stdexcept>

namespace sl2cas {

Rational make_rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto parse_int = [&text](const std::string& digits) {
        try {
            return Int(digits);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational literal '" + text + "'");
        }
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    const Int n = parse_int(text.substr(0, slash));
    const Int d = parse_int(text.substr(slash + 1));
    if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return make_rational(n, d);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool rational_sqrt(const Rational& q, Rational& root) {
    if (sgn(q) < 0) return false;
    if (sgn(q) == 0) {
        root = 0;
        return true;
    }
    Int num = q.get_num(), den = q.get_den();
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn != num || rd * rd != den) return false;
    root = make_rational(rn, rd);
    return true;
}

}  // namespace sl2cas
