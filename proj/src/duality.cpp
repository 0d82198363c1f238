#include "sl2cas/duality.hpp"

#include <stdexcept>

#include "sl2cas/linalg.hpp"

namespace sl2cas {

CasimirRep dual_rep(const CasimirRep& rep) {
    return CasimirRep(rep.mu(), rep.a_minus1().shift(1).transpose());
}

DualPair dual_pair(const CasimirRep& rep) { return {rep, dual_rep(rep)}; }

SmithType dual_type(const SmithType& t) {
    switch (t.kind) {
        case SmithKind::Plus:
            return SmithType::minus(t.k, t.j, t.i);
        case SmithKind::Minus:
            return SmithType::plus(t.k, t.j, t.i);
        case SmithKind::Zero:
            return SmithType::zero(t.j, t.i);
    }
    return t;
}

RatFunc casimir_shift_power(const RatFunc& f, int m, const Rational& mu) {
    RatFunc out = f.shift(m);
    if (m >= 0) {
        for (int s = 1; s <= m; ++s) out *= RatFunc(pi_mu(mu).shift(s));
    } else {
        for (int s = 0; s < -m; ++s) out /= RatFunc(pi_mu(mu).shift(-s));
    }
    return out;
}

AlphaDual dual_alpha(const SkewElement& alpha, const Rational& mu) {
    if (alpha.is_zero()) throw std::domain_error("dual of the zero element");
    if (!is_in_a_plus(alpha))
        throw std::domain_error(
            "dual_alpha expects an element of A+ (polynomial coefficients, "
            "nonnegative degrees)");
    const int n = *alpha.top_degree();
    if (alpha.coeff(0).is_zero() || alpha.coeff(n).is_zero())
        throw std::domain_error("dual_alpha requires nonzero coefficients at X^0 and X^" +
                                std::to_string(n) + "; the formula degenerates otherwise");

    AlphaDual result;
    UniPoly clearing(1);
    for (int i = 0; i <= n; ++i) {
        const RatFunc c = casimir_shift_power(alpha.coeff(n - i), 2 * i - n, mu);
        result.raw += SkewElement::term(c, i);
        clearing = lcm(clearing, c.den());
    }
    result.clearing = clearing;
    const SkewElement cleared = RatFunc(clearing) * result.raw;
    const RatFunc top = cleared.coeff(n);
    const Rational scale = Rational(1) / top.num().leading_coeff();
    result.normalized = RatFunc(scale) * cleared;
    return result;
}

bool duality_pairing_check(const SkewElement& alpha, const SkewElement& alphaStarRaw,
                           const Rational& mu) {
    if (alpha.is_zero() || alphaStarRaw.is_zero()) return false;
    if (*alpha.bottom_degree() < 0 || *alphaStarRaw.bottom_degree() < 0) return false;
    if (*alpha.length() != *alphaStarRaw.length()) return false;
    const int n = std::max(*alpha.top_degree(), *alphaStarRaw.top_degree());

    // Pairing matrices compatible with the recursion are a_{ij}(z) =
    // (pi shift)^i applied to c_{i-j}; in untwisted coordinates the condition
    // {., alpha} = 0 is a linear system over Q(z) for the diagonals c.
    std::vector<RatFunc> v(n + 1), w(n + 1);
    for (int j = 0; j <= n; ++j) {
        v[j] = casimir_shift_power(alpha.coeff(j), -j, mu);
        w[j] = casimir_shift_power(alphaStarRaw.coeff(j), -j, mu);
    }
    const int unknowns = 2 * n + 1;  // c_{-n} .. c_n
    std::vector<std::vector<RatFunc>> rows(n + 1, std::vector<RatFunc>(unknowns, RatFunc(0)));
    for (int i = 0; i <= n; ++i)
        for (int d = i - n; d <= i; ++d) rows[i][d + n] = v[i - d];
    const auto kernels = kernel_basis(std::move(rows), unknowns);
    if (kernels.empty()) return false;

    // {alphaStar, .} = 0 against every admissible pairing matrix.
    for (const auto& c : kernels)
        for (int j = 0; j <= n; ++j) {
            RatFunc sum(0);
            for (int i = 0; i <= n; ++i) sum += w[i] * c[i - j + n];
            if (!sum.is_zero()) return false;
        }
    return true;
}

}  // namespace sl2cas
