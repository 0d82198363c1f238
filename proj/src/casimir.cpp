#include "sl2cas/casimir.hpp"

#include <algorithm>
#include <stdexcept>

#include "sl2cas/linalg.hpp"

namespace sl2cas {

std::vector<UniPoly> SmithType::diagonal(const Rational& mu) const {
    std::vector<UniPoly> d;
    const UniPoly pi1 = pi_mu(mu).shift(1);
    switch (kind) {
        case SmithKind::Plus:
            d.assign(i, UniPoly(1));
            d.insert(d.end(), j, alpha_mu(mu).shift(1));
            d.insert(d.end(), k, pi1);
            break;
        case SmithKind::Minus:
            d.assign(i, UniPoly(1));
            d.insert(d.end(), j, beta_mu(mu).shift(1));
            d.insert(d.end(), k, pi1);
            break;
        case SmithKind::Zero:
            d.assign(i, UniPoly(1));
            d.insert(d.end(), j, pi1);
            break;
    }
    return d;
}

std::string SmithType::to_string() const {
    switch (kind) {
        case SmithKind::Plus:
            return "S+(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                   ")";
        case SmithKind::Minus:
            return "S-(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                   ")";
        case SmithKind::Zero:
            return "S0(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return {};
}

CasimirRep::CasimirRep(const Rational& mu, PolyMatrix a1) : mu_(mu), a1_(std::move(a1)) {
    if (a1_.rows() != a1_.cols()) throw std::domain_error("raising matrix must be square");
    smith_ = smith_normal_form(a1_);
    if (rank() == 0) return;
    const UniPoly last = smith_.S.at(rank() - 1, rank() - 1);
    if (last.is_zero())
        throw std::domain_error("not a semi-level-" + sl2cas::to_string(mu_) +
                                " Casimir endomorphism: raising matrix is singular over Q(z)");
    if (!divides(last, pi_mu(mu_).shift(1)))
        throw std::domain_error("not a semi-level-" + sl2cas::to_string(mu_) +
                                " Casimir endomorphism: invariant factor " + last.to_string() +
                                " does not divide pi_mu(z+1) = " +
                                pi_mu(mu_).shift(1).to_string());
}

PolyMatrix CasimirRep::a_minus1() const {
    if (rank() == 0) return {};
    const PolyMatrix t = casimir_complement(smith_.invariant_factors(), mu_);
    return inverse_unimodular(smith_.V.shift(-1)) * t * inverse_unimodular(smith_.U.shift(-1));
}

std::vector<UniPoly> CasimirRep::raise(const std::vector<UniPoly>& v) const {
    return a1_.apply_shifted(v, 1);
}

std::vector<UniPoly> CasimirRep::lower(const std::vector<UniPoly>& v) const {
    return a_minus1().apply_shifted(v, -1);
}

VerificationReport verify_rep(const CasimirRep& rep) {
    return verify_matrices(rep.mu(), rep.a1(), rep.a_minus1());
}

VerificationReport verify_matrices(const Rational& mu, const PolyMatrix& a1,
                                   const PolyMatrix& aMinus1) {
    VerificationReport r;
    const int n = a1.rows();
    r.level = 2 * mu;
    const Rational homothety = (2 * mu + 1) * (2 * mu + 1);
    if (n == 0) {
        r.casimirLeft = r.casimirRight = r.commutator = r.scalarIsConstant = true;
        r.casimirScalar = homothety;
        r.smithType = SmithType::zero(0, 0);
        return r;
    }
    const UniPoly pi = pi_mu(mu);
    const PolyMatrix leftProduct = aMinus1 * a1.shift(-1);
    const PolyMatrix rightProduct = a1 * aMinus1.shift(1);
    r.casimirLeft = leftProduct == pi * PolyMatrix::identity(n);
    r.casimirRight = rightProduct == pi.shift(1) * PolyMatrix::identity(n);
    const UniPoly minusTwoZ = UniPoly::monomial(-2, 1);
    r.commutator = (leftProduct - rightProduct) == minusTwoZ * PolyMatrix::identity(n);

    // C = 4 ((z - 1/2)^2 - L_{-1} L_1), the homothety (2mu+1)^2 when valid.
    const UniPoly zHalf = UniPoly::z() - UniPoly(make_rational(1, 2));
    const PolyMatrix casimir = UniPoly(4) * (zHalf * zHalf * PolyMatrix::identity(n) - leftProduct);
    r.scalarIsConstant = true;
    for (int i = 0; i < n && r.scalarIsConstant; ++i)
        for (int j = 0; j < n && r.scalarIsConstant; ++j) {
            if (i == j)
                r.scalarIsConstant =
                    casimir.at(i, j).is_constant() && casimir.at(i, j) == casimir.at(0, 0);
            else
                r.scalarIsConstant = casimir.at(i, j).is_zero();
        }
    r.casimirScalar = casimir.at(0, 0).coeff(0);

    try {
        const auto factors = smith_normal_form(a1).invariant_factors();
        r.tMatrix = casimir_complement(factors, mu);
        const CasimirRep probe(mu, a1);
        r.smithType = smith_type(probe);
    } catch (const std::domain_error&) {
        // invariant factors incompatible with pi_mu: nothing to report
    }
    return r;
}

SmithType smith_type(const CasimirRep& rep) {
    const auto factors = rep.smith().invariant_factors();
    const int n = rep.rank();
    if (n == 0) return SmithType::zero(0, 0);
    const UniPoly one(1);
    const UniPoly a = alpha_mu(rep.mu()).shift(1);
    const UniPoly b = beta_mu(rep.mu()).shift(1);
    const UniPoly p = pi_mu(rep.mu()).shift(1);
    int idx = 0, ones = 0, middle = 0, pis = 0;
    bool middleIsAlpha = true;
    while (idx < n && factors[idx] == one) ++idx, ++ones;
    if (idx < n && (factors[idx] == a || factors[idx] == b)) {
        middleIsAlpha = factors[idx] == a;
        const UniPoly& run = middleIsAlpha ? a : b;
        while (idx < n && factors[idx] == run) ++idx, ++middle;
    }
    while (idx < n && factors[idx] == p) ++idx, ++pis;
    if (idx != n)
        throw std::logic_error("invariant factors outside the Casimir stratification: " +
                               factors[idx].to_string());
    if (middle == 0) return SmithType::zero(ones, pis);
    SmithType t =
        middleIsAlpha ? SmithType::plus(ones, middle, pis) : SmithType::minus(ones, middle, pis);
    t.degenerate = (a == b);  // mu = -1/2 collapses the two patterns
    return t;
}

std::vector<SmithType> enumerate_smith_types(int n) {
    if (n < 1) throw std::domain_error("rank must be positive");
    std::vector<SmithType> out;
    for (int i = 0; i <= n - 1; ++i)
        for (int j = 1; i + j <= n; ++j) out.push_back(SmithType::minus(i, j, n - i - j));
    for (int l = 0; l <= n; ++l) out.push_back(SmithType::zero(l, n - l));
    for (int i = 0; i <= n - 1; ++i)
        for (int j = 1; i + j <= n; ++j) out.push_back(SmithType::plus(i, j, n - i - j));
    return out;
}

CasimirRep realize_type(const SmithType& type, const Rational& mu) {
    return CasimirRep(mu, PolyMatrix::diagonal(type.diagonal(mu)));
}

CasimirRep rank1_catalog(const Rational& mu, const Rational& gamma, Rank1Type type) {
    if (is_zero(gamma)) throw std::domain_error("gamma must be nonzero");
    UniPoly a1;
    switch (type) {
        case Rank1Type::I:
            a1 = pi_mu(mu).shift(1);
            break;
        case Rank1Type::II:
            a1 = alpha_mu(mu).shift(1);
            break;
        case Rank1Type::III:
            a1 = beta_mu(mu).shift(1);
            break;
        case Rank1Type::IV:
            a1 = UniPoly(1);
            break;
    }
    a1 *= gamma;
    return CasimirRep(mu, PolyMatrix(1, 1, {a1}));
}

namespace {

// Coefficient matrix of phi -> phi(z) A(z) - B(z) phi(z+1) on matrices with
// entry degree <= degBound; kernel vectors are the intertwiners from A to B.
std::vector<PolyMatrix> intertwiner_space(const PolyMatrix& a, const PolyMatrix& b, int degBound) {
    const int n = a.rows();
    const int perEntry = degBound + 1;
    const int unknowns = n * n * perEntry;
    int entryDeg = degBound;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            entryDeg = std::max({entryDeg, a.at(i, j).degree(), b.at(i, j).degree()});
    const int eqPerEntry = 2 * entryDeg + 2;
    std::vector<std::vector<Rational>> rows(n * n * eqPerEntry,
                                            std::vector<Rational>(unknowns, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int d = 0; d < perEntry; ++d) {
                const int col = (i * n + j) * perEntry + d;
                // phi = z^d E_ij contributes z^d row_j(A) to row i ...
                for (int c = 0; c < n; ++c) {
                    const UniPoly term = UniPoly::monomial(1, d) * a.at(j, c);
                    for (int e = 0; e <= term.degree(); ++e)
                        rows[(i * n + c) * eqPerEntry + e][col] += term.coeff(e);
                }
                // ... and -(z+1)^d col_i(B) to column j.
                const UniPoly shifted = UniPoly::monomial(1, d).shift(1);
                for (int rr = 0; rr < n; ++rr) {
                    const UniPoly term = shifted * b.at(rr, i);
                    for (int e = 0; e <= term.degree(); ++e)
                        rows[(rr * n + j) * eqPerEntry + e][col] -= term.coeff(e);
                }
            }
    std::vector<PolyMatrix> space;
    for (const auto& v : kernel_basis(std::move(rows), unknowns)) {
        PolyMatrix phi(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<Rational> coeffs(perEntry);
                for (int d = 0; d < perEntry; ++d) coeffs[d] = v[(i * n + j) * perEntry + d];
                phi.at(i, j) = UniPoly(coeffs);
            }
        space.push_back(std::move(phi));
    }
    return space;
}

int root_multiplicity(UniPoly p, const Rational& root) {
    const UniPoly lin = UniPoly::z() - UniPoly(root);
    int m = 0;
    while (!p.is_zero() && divides(lin, p)) {
        p = p / lin;
        ++m;
    }
    return m;
}

}  // namespace

std::vector<PolyMatrix> endomorphism_basis(const CasimirRep& rep, int degBound) {
    if (degBound < 0) throw std::domain_error("degree bound must be nonnegative");
    return intertwiner_space(rep.a1(), rep.a1(), degBound);
}

Rank1IdealReport rank1_invariant_ideals(const CasimirRep& rep) {
    if (rep.rank() != 1) throw std::domain_error("invariant-ideal search requires rank one");
    Rank1IdealReport report;
    const UniPoly raising = rep.a1().at(0, 0);
    const UniPoly lowering = rep.a_minus1().at(0, 0);
    const UniPoly product = raising * lowering;
    const auto baseRoots = product.is_constant() ? std::vector<std::pair<Rational, int>>{}
                                                 : rational_roots(product);

    UniPoly known(1);
    for (const auto& [root, mult] : baseRoots) known *= (UniPoly::z() - UniPoly(root)).pow(mult);
    const UniPoly leftover = product / known;
    if (!leftover.is_constant()) report.undecided.push_back(leftover.monic());

    if (baseRoots.empty()) return report;
    const int window = 2 * static_cast<int>(baseRoots.size()) + 4;

    // Candidate roots are integer shifts of the base roots; the divisibility
    // conditions couple exponents only along chains of consecutive values.
    std::vector<Rational> candidates;
    for (const auto& [root, mult] : baseRoots)
        for (int k = -window; k <= window; ++k) {
            const Rational v = root + k;
            if (std::find(candidates.begin(), candidates.end(), v) == candidates.end())
                candidates.push_back(v);
        }
    std::sort(candidates.begin(), candidates.end());
    std::vector<std::vector<Rational>> chains;
    for (const Rational& v : candidates) {
        if (!chains.empty() && v - chains.back().back() == 1)
            chains.back().push_back(v);
        else
            chains.push_back({v});
    }

    const int cap = product.degree();
    std::vector<UniPoly> combos{UniPoly(1)};
    for (const auto& chain : chains) {
        const int len = static_cast<int>(chain.size());
        std::vector<int> mRaise(len), mLower(len);
        for (int t = 0; t < len; ++t) {
            mRaise[t] = root_multiplicity(raising, chain[t]);
            mLower[t] = root_multiplicity(lowering, chain[t]);
        }
        // e_t can exceed e_{t-1} only at roots of the raising polynomial and
        // e_{t+1} only at roots of the lowering one.
        std::vector<std::vector<int>> profiles;
        std::vector<int> current(len, 0);
        auto dfs = [&](auto&& self, int t) -> void {
            if (t == len) {
                bool nonZero = false;
                for (int s = 0; s < len; ++s) nonZero = nonZero || current[s] > 0;
                bool ok = nonZero;
                for (int s = 0; ok && s < len; ++s) {
                    const int next = s + 1 < len ? current[s + 1] : 0;
                    ok = current[s] <= mLower[s] + next;
                }
                if (ok) profiles.push_back(current);
                return;
            }
            const int prev = t > 0 ? current[t - 1] : 0;
            const int bound = std::min(cap, prev + mRaise[t]);
            for (int e = 0; e <= bound; ++e) {
                current[t] = e;
                self(self, t + 1);
            }
            current[t] = 0;
        };
        dfs(dfs, 0);
        std::vector<UniPoly> extended = combos;
        for (const auto& profile : profiles) {
            UniPoly f(1);
            for (int t = 0; t < len; ++t)
                if (profile[t] > 0) f *= (UniPoly::z() - UniPoly(chain[t])).pow(profile[t]);
            for (const UniPoly& prefix : combos) extended.push_back(prefix * f);
        }
        combos = std::move(extended);
    }

    for (const UniPoly& f : combos) {
        if (f.is_constant()) continue;
        if (divides(f, raising * f.shift(1)) && divides(f, lowering * f.shift(-1)))
            report.ideals.push_back(f.monic());
    }
    std::sort(report.ideals.begin(), report.ideals.end(), [](const UniPoly& x, const UniPoly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.to_string() < y.to_string();
    });
    report.ideals.erase(std::unique(report.ideals.begin(), report.ideals.end()),
                        report.ideals.end());
    return report;
}

CasimirRep rep_transform(const CasimirRep& rep, const PolyMatrix& g, const PolyMatrix& h) {
    if (!is_unimodular(g)) throw std::domain_error("left transform is not unimodular");
    if (!is_unimodular(h)) throw std::domain_error("right transform is not unimodular");
    return CasimirRep(rep.mu(), g * rep.a1() * inverse_unimodular(h.shift(1)));
}

std::optional<PolyMatrix> find_equivalence(const CasimirRep& a, const CasimirRep& b,
                                           int degBound) {
    if (a.rank() != b.rank() || a.mu() != b.mu()) return std::nullopt;
    const auto space = intertwiner_space(a.a1(), b.a1(), degBound);
    auto usable = [](const PolyMatrix& g) { return !g.empty() && is_unimodular(g); };
    for (const auto& g : space)
        if (usable(g)) return g;
    if (space.size() > 1) {
        PolyMatrix sum = space[0];
        for (std::size_t i = 1; i < space.size(); ++i) sum += space[i];
        if (usable(sum)) return sum;
        for (std::size_t i = 0; i < space.size(); ++i)
            for (std::size_t j = i + 1; j < space.size(); ++j) {
                if (usable(space[i] + space[j])) return space[i] + space[j];
                if (usable(space[i] - space[j])) return space[i] - space[j];
            }
    }
    return std::nullopt;
}

}  // namespace sl2cas
