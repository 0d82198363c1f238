#include "sl2cas/module_lab.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <stdexcept>

#include "sl2cas/linalg.hpp"

namespace sl2cas {

namespace {

bool all_zero(const std::vector<UniPoly>& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix columns_matrix(int n, const std::vector<std::vector<UniPoly>>& cols) {
    PolyMatrix m(n, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    return m;
}

// Torsion-free closure of the column span: the first r columns of U, where r
// is the number of nonzero invariant factors.
PolyMatrix saturate_columns(const PolyMatrix& stack) {
    const SmithForm f = smith_normal_form(stack);
    int r = 0;
    const int bound = std::min(stack.rows(), stack.cols());
    for (int i = 0; i < bound; ++i)
        if (!f.S.at(i, i).is_zero()) ++r;
    return f.U.columns(0, r);
}

PolyMatrix adjugate(const PolyMatrix& m) {
    const int n = m.rows();
    PolyMatrix adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = UniPoly(1);
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> ri, ci;
            for (int t = 0; t < n; ++t) {
                if (t != i) ri.push_back(t);
                if (t != j) ci.push_back(t);
            }
            UniPoly c = m.submatrix(ri, ci).det();
            if ((i + j) % 2 == 1) c = -c;
            adj.at(j, i) = c;
        }
    return adj;
}

bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<UniPoly>> orbit_vectors(const PolyMatrix& a1, const PolyMatrix& am1,
                                                const std::vector<UniPoly>& v, int wordLen) {
    std::vector<std::vector<UniPoly>> all{v}, level{v};
    for (int l = 0; l < wordLen; ++l) {
        std::vector<std::vector<UniPoly>> next;
        next.reserve(2 * level.size());
        for (const auto& u : level) {
            next.push_back(a1.apply_shifted(u, 1));
            next.push_back(am1.apply_shifted(u, -1));
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

}  // namespace

PolyMatrix companion_matrix(const SkewElement& alpha) {
    if (alpha.is_zero() || !is_in_a_plus(alpha))
        throw std::domain_error("companion realization needs a nonzero element of A+");
    const int n = *alpha.top_degree();
    if (n < 1) throw std::domain_error("companion realization needs X-degree at least 1");
    const UniPoly low = alpha.coeff(0).as_polynomial();
    const UniPoly high = alpha.coeff(n).as_polynomial();
    if (!low.is_constant() || low.is_zero() || !high.is_constant())
        throw std::domain_error(
            "companion realization needs nonzero constant end coefficients");
    // X X^i = X^{i+1} for i < n-1 and X X^{n-1} = -(1/a_n) sum_{i<n} a_i X^i.
    const Rational lead = high.coeff(0);
    PolyMatrix a1(n, n);
    for (int i = 0; i + 1 < n; ++i) a1.at(i + 1, i) = UniPoly(1);
    for (int i = 0; i < n; ++i)
        a1.at(i, n - 1) = alpha.coeff(i).as_polynomial() * (Rational(-1) / lead);
    return a1;
}

QuotientModule build_family(int n, const UniPoly& p, const Rational& a0, const Rational& mu) {
    if (n < 2) throw std::domain_error("family needs rank n >= 2 so that p(z) and a0 coexist");
    if (p.degree() < 1) throw std::domain_error("family needs deg(p) >= 1, got " + p.to_string());
    if (is_zero(a0)) throw std::domain_error("family needs a0 != 0");
    SkewElement alpha = SkewElement::x_pow(n) - SkewElement::scalar(RatFunc(a0));
    alpha -= SkewElement::scalar(RatFunc(p)) * SkewElement::x_pow(n - 1);

    CasimirRep rep(mu, companion_matrix(alpha));
    if (smith_type(rep) != SmithType::zero(n, 0))
        throw std::logic_error("family companion matrix must have unit invariant factors");
    return {alpha, mu, n, std::move(rep)};
}

FinGenReport is_finitely_generated(const SkewElement& alpha) {
    if (alpha.is_zero()) throw std::domain_error("finite-generation test on the zero element");
    if (!is_in_a_plus(alpha))
        throw std::domain_error("finite-generation test expects an element of A+");
    const UniPoly low = alpha.coeff(0).as_polynomial();
    const UniPoly high = alpha.coeff(*alpha.top_degree()).as_polynomial();
    FinGenReport r;
    r.yDegBound = low.degree();
    r.xDegBound = high.degree();
    r.finitelyGenerated = low.is_constant() && !low.is_zero() && high.is_constant();
    return r;
}

std::vector<UniPoly> reduce_mod_alpha(const SkewElement& a, const QuotientModule& q) {
    if (!is_in_a(a, q.mu))
        throw std::domain_error("reduction expects an element of A at semi-level " +
                                to_string(q.mu));
    const APresentation pres = to_a_presentation(a, q.mu);
    const int n = q.rank;
    std::vector<UniPoly> acc(n);
    std::vector<UniPoly> basisImage(n);  // class of X^i resp. Y^j, starting at [1]
    basisImage[0] = UniPoly(1);
    for (std::size_t i = 0; i < pres.xPart.size(); ++i) {
        if (!pres.xPart[i].is_zero())
            for (int c = 0; c < n; ++c) acc[c] += pres.xPart[i] * basisImage[c];
        basisImage = q.rep.raise(basisImage);
    }
    basisImage.assign(n, UniPoly());
    basisImage[0] = UniPoly(1);
    const PolyMatrix lowering = q.rep.a_minus1();
    for (std::size_t j = 0; j < pres.yPart.size(); ++j) {
        basisImage = lowering.apply_shifted(basisImage, -1);
        if (!pres.yPart[j].is_zero())
            for (int c = 0; c < n; ++c) acc[c] += pres.yPart[j] * basisImage[c];
    }
    return acc;
}

OrbitResult orbit_submodule(const CasimirRep& rep, const std::vector<UniPoly>& v, int wordLen) {
    const int n = rep.rank();
    if (static_cast<int>(v.size()) != n) throw std::domain_error("vector length mismatch");
    if (all_zero(v)) throw std::domain_error("orbit of the zero vector");
    if (wordLen < 0) throw std::domain_error("negative word length");
    const PolyMatrix a1 = rep.a1();
    const PolyMatrix am1 = rep.a_minus1();
    PolyMatrix basis = saturate_columns(columns_matrix(n, orbit_vectors(a1, am1, v, wordLen)));
    // A saturated span of full rank is the whole module; otherwise keep
    // adjoining images until the rank stabilises, so the result is closed
    // under both actions.
    while (basis.cols() < n) {
        std::vector<std::vector<UniPoly>> cols;
        for (int j = 0; j < basis.cols(); ++j) {
            std::vector<UniPoly> u(n);
            for (int i = 0; i < n; ++i) u[i] = basis.at(i, j);
            cols.push_back(u);
            cols.push_back(a1.apply_shifted(u, 1));
            cols.push_back(am1.apply_shifted(u, -1));
        }
        PolyMatrix grown = saturate_columns(columns_matrix(n, cols));
        if (grown.cols() == basis.cols()) break;
        basis = std::move(grown);
    }
    return {basis.cols(), basis};
}

std::optional<PolyMatrix> solve_intertwiner(const PolyMatrix& a1, const PolyMatrix& b) {
    const int n = b.rows(), k = b.cols();
    if (k == 0 || k > n) return std::nullopt;
    const PolyMatrix rhs = a1 * b.shift(1);
    std::vector<int> sel(k);
    for (int i = 0; i < k; ++i) sel[i] = i;
    std::vector<int> allCols(k);
    for (int i = 0; i < k; ++i) allCols[i] = i;
    do {
        const PolyMatrix bR = b.submatrix(sel, allCols);
        const UniPoly det = bR.det();
        if (det.is_zero()) continue;
        const PolyMatrix num = adjugate(bR) * rhs.submatrix(sel, allCols);
        PolyMatrix candidate(k, k);
        bool polynomial = true;
        for (int i = 0; i < k && polynomial; ++i)
            for (int j = 0; j < k && polynomial; ++j) {
                const auto [quot, rem] = divmod(num.at(i, j), det);
                if (!rem.is_zero())
                    polynomial = false;
                else
                    candidate.at(i, j) = quot;
            }
        if (!polynomial) return std::nullopt;
        if (rhs == b * candidate) return candidate;
        return std::nullopt;
    } while (next_combination(sel, n));
    return std::nullopt;  // no invertible row minor: b is not injective
}

namespace {

// Deterministic candidate stream: standard basis vectors, then every vector
// with entries of degree <= degBound and coefficients in {-1, 0, 1} (base-3
// counter order), then seeded pseudorandom vectors.
class CandidateSet {
public:
    CandidateSet(int n, int degBound, long samples, std::uint64_t seed)
        : n_(n), perEntry_(degBound + 1) {
        const int trits = n_ * perEntry_;
        if (trits > 36) throw std::domain_error("candidate set too large to enumerate");
        tritCount_ = 1;
        for (int i = 0; i < trits; ++i) tritCount_ *= 3;
        std::mt19937_64 rng(seed);
        for (long s = 0; s < samples; ++s) {
            std::vector<UniPoly> v(n_);
            for (int e = 0; e < n_; ++e) {
                std::vector<Rational> coeffs(perEntry_);
                for (int d = 0; d < perEntry_; ++d)
                    coeffs[d] = Rational(static_cast<long>(rng() % 5) - 2);
                v[e] = UniPoly(coeffs);
            }
            sampled_.push_back(std::move(v));
        }
    }

    long total() const { return n_ + tritCount_ + static_cast<long>(sampled_.size()); }

    std::vector<UniPoly> get(long idx) const {
        std::vector<UniPoly> v(n_);
        if (idx < n_) {
            v[idx] = UniPoly(1);
            return v;
        }
        idx -= n_;
        if (idx < tritCount_) {
            long code = idx;
            for (int e = 0; e < n_; ++e) {
                std::vector<Rational> coeffs(perEntry_);
                for (int d = 0; d < perEntry_; ++d) {
                    const long trit = code % 3;
                    code /= 3;
                    coeffs[d] = Rational(trit == 2 ? -1 : trit);
                }
                v[e] = UniPoly(coeffs);
            }
            return v;
        }
        return sampled_[idx - tritCount_];
    }

private:
    int n_, perEntry_;
    long tritCount_ = 0;
    std::vector<std::vector<UniPoly>> sampled_;
};

// Fast full-rank screen: orbit vectors evaluated at an integer point. A full
// evaluated rank certifies full symbolic rank; anything short of that falls
// back to the exact orbit computation.
class OrbitScreen {
public:
    OrbitScreen(const PolyMatrix& a1, const PolyMatrix& am1, int wordLen)
        : n_(a1.rows()), wordLen_(wordLen) {
        std::vector<std::pair<PolyMatrix, int>> level{{PolyMatrix::identity(n_), 0}};
        record(level[0]);
        for (int l = 0; l < wordLen; ++l) {
            std::vector<std::pair<PolyMatrix, int>> next;
            next.reserve(2 * level.size());
            for (const auto& [m, d] : level) {
                next.emplace_back(a1 * m.shift(1), d + 1);
                next.emplace_back(am1 * m.shift(-1), d - 1);
            }
            for (const auto& w : next) record(w);
            level = std::move(next);
        }
    }

    bool certifies_full_rank(const std::vector<UniPoly>& v) const {
        std::vector<std::vector<Rational>> values(2 * wordLen_ + 1, std::vector<Rational>(n_));
        for (int d = -wordLen_; d <= wordLen_; ++d)
            for (int i = 0; i < n_; ++i) values[d + wordLen_][i] = v[i].eval(at_ + d);
        std::vector<std::vector<Rational>> echelon;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::vector<Rational> row(n_, Rational(0));
            const auto& val = values[shifts_[w] + wordLen_];
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) row[i] += words_[w][i * n_ + j] * val[j];
            for (const auto& e : echelon) {
                int p = 0;
                while (p < n_ && is_zero(e[p])) ++p;
                if (p < n_ && !is_zero(row[p])) {
                    const Rational f = row[p] / e[p];
                    for (int j = p; j < n_; ++j) row[j] -= f * e[j];
                }
            }
            if (std::any_of(row.begin(), row.end(),
                            [](const Rational& x) { return !is_zero(x); })) {
                echelon.push_back(std::move(row));
                if (static_cast<int>(echelon.size()) == n_) return true;
            }
        }
        return false;
    }

private:
    void record(const std::pair<PolyMatrix, int>& word) {
        std::vector<Rational> flat(n_ * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) flat[i * n_ + j] = word.first.at(i, j).eval(at_);
        words_.push_back(std::move(flat));
        shifts_.push_back(word.second);
    }

    int n_, wordLen_;
    Rational at_ = 23;  // evaluation point; soundness does not depend on the choice
    std::vector<std::vector<Rational>> words_;
    std::vector<int> shifts_;
};

}  // namespace

FalsifierVerdict simplicity_falsifier(const CasimirRep& rep, int degBound, int wordLen,
                                      long samples, std::uint64_t seed, int jobs) {
    if (degBound < 1 || wordLen < 1 || samples < 0)
        throw std::domain_error("falsifier bounds must be positive");
    const int n = rep.rank();
    FalsifierVerdict verdict;
    verdict.degBound = degBound;
    verdict.wordLen = wordLen;
    verdict.samples = samples;
    verdict.seed = seed;

    const PolyMatrix a1 = rep.a1();
    const PolyMatrix am1 = rep.a_minus1();
    const OrbitScreen screen(a1, am1, wordLen);
    const CandidateSet candidates(n, degBound, samples, seed);
    const long total = candidates.total();

    // Examines [from, to) and returns the first witness index, if any.
    auto scan = [&](long from, long to) -> std::optional<std::pair<long, OrbitResult>> {
        for (long idx = from; idx < to; ++idx) {
            const std::vector<UniPoly> v = candidates.get(idx);
            if (all_zero(v)) continue;
            if (screen.certifies_full_rank(v)) continue;
            const OrbitResult orbit = orbit_submodule(rep, v, wordLen);
            if (orbit.rank < n) return std::make_pair(idx, orbit);
        }
        return std::nullopt;
    };

    std::optional<std::pair<long, OrbitResult>> hit;
    if (jobs <= 1) {
        hit = scan(0, total);
    } else {
        // Chunked ordered reduction: the reported witness is the first in
        // candidate order no matter how many workers run.
        const long chunk = 4096;
        for (long base = 0; base < total && !hit; base += chunk * jobs) {
            std::vector<std::future<std::optional<std::pair<long, OrbitResult>>>> futures;
            for (int w = 0; w < jobs; ++w) {
                const long from = base + w * chunk;
                const long to = std::min(total, from + chunk);
                if (from >= to) break;
                futures.push_back(std::async(std::launch::async, scan, from, to));
            }
            for (auto& f : futures) {
                auto r = f.get();
                if (r && (!hit || r->first < hit->first)) hit = r;
            }
        }
    }

    if (!hit) {
        verdict.candidatesTried = total;
        return verdict;
    }
    const auto& [idx, orbit] = *hit;
    verdict.candidatesTried = idx + 1;
    const auto subA1 = solve_intertwiner(a1, orbit.basis);
    if (!subA1) throw std::logic_error("orbit closure failed the intertwining check");
    verdict.outcome = FalsifierVerdict::Outcome::ProperSubmodule;
    verdict.witness = FalsifierWitness{candidates.get(idx), orbit.basis, *subA1, orbit.rank};
    return verdict;
}

SubQuotient submodule_quotient(const CasimirRep& rep, const PolyMatrix& b) {
    const int n = rep.rank(), k = b.cols();
    if (b.rows() != n || k < 1 || k > n)
        throw std::domain_error("embedding must be n x k with 1 <= k <= n");
    const SmithForm f = smith_normal_form(b);
    for (int i = 0; i < k; ++i)
        if (f.S.at(i, i).is_zero())
            throw std::domain_error("embedding is not injective: rank over Q(z) is below " +
                                    std::to_string(k));
    const auto subA1 = solve_intertwiner(rep.a1(), b);
    if (!subA1) {
        const PolyMatrix residual = rep.a1() * b.shift(1);
        throw std::domain_error(
            "embedding does not intertwine the raising action; A1(z) B(z+1) = " +
            residual.to_string() + " is not B(z) A'(z) for any polynomial A'");
    }
    for (int i = 0; i < k; ++i)
        if (!f.S.at(i, i).is_constant())
            throw std::domain_error("quotient has torsion: embedding has invariant factor " +
                                    f.S.at(i, i).to_string());
    CasimirRep sub(rep.mu(), *subA1);

    // In the basis given by the columns of U the submodule spans the first k
    // vectors; the quotient action is the lower-right block.
    const PolyMatrix transformed = inverse_unimodular(f.U) * rep.a1() * f.U.shift(1);
    for (int i = k; i < n; ++i)
        for (int j = 0; j < k; ++j)
            if (!transformed.at(i, j).is_zero())
                throw std::logic_error("submodule block is not invariant");
    PolyMatrix quotA1(n - k, n - k);
    for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j) quotA1.at(i - k, j - k) = transformed.at(i, j);
    CasimirRep quotient(rep.mu(), quotA1);

    SubQuotient result{sub, quotient, smith_type(sub), smith_type(quotient)};
    if (smith_type(rep) == SmithType::zero(n, 0)) {
        if (result.subType != SmithType::zero(k, 0) ||
            result.quotientType != SmithType::zero(n - k, 0))
            throw std::logic_error("sub/quotient of a unit-type module must have unit type");
    }
    return result;
}

}  // namespace sl2cas
