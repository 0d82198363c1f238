#include "sl2cas/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2cas {

namespace {

// gcd of all numerators over lcm of all denominators; 0 for an all-zero row.
Rational rational_content(const PolyMatrix& m, int index, bool row) {
    Int num(0), den(1);
    const int extent = row ? m.cols() : m.rows();
    for (int k = 0; k < extent; ++k) {
        const UniPoly& p = row ? m.at(index, k) : m.at(k, index);
        for (const Rational& c : p.coeffs()) {
            num = gcd(num, c.get_num());
            den = lcm(den, c.get_den());
        }
    }
    if (sgn(num) == 0) return 0;
    return make_rational(num, den);
}

class SmithWorker {
public:
    explicit SmithWorker(const PolyMatrix& m)
        : s_(m), u_(PolyMatrix::identity(m.rows())), v_(PolyMatrix::identity(m.cols())) {}

    SmithForm run() {
        const int bound = std::min(s_.rows(), s_.cols());
        int rank = 0;
        for (; rank < bound; ++rank)
            if (!clean_pivot(rank)) break;
        enforce_chain(rank);
        make_monic(rank);
        return {u_, s_, v_};
    }

private:
    // Row ops act on S from the left; U absorbs the inverse on its columns.
    void swap_rows(int i, int j) {
        s_.swap_rows(i, j);
        u_.swap_cols(i, j);
    }
    void row_axpy(int dst, int src, const UniPoly& f) {
        s_.add_row_multiple(dst, src, f);
        u_.add_col_multiple(src, dst, -f);
    }
    void scale_row(int i, const Rational& c) {
        s_.scale_row(i, c);
        u_.scale_col(i, Rational(1) / c);
    }
    void swap_cols(int i, int j) {
        s_.swap_cols(i, j);
        v_.swap_rows(i, j);
    }
    void col_axpy(int dst, int src, const UniPoly& f) {
        s_.add_col_multiple(dst, src, f);
        v_.add_row_multiple(src, dst, -f);
    }

    bool find_pivot(int t, int& pi, int& pj) const {
        int best = -1;
        for (int i = t; i < s_.rows(); ++i)
            for (int j = t; j < s_.cols(); ++j) {
                const UniPoly& e = s_.at(i, j);
                if (e.is_zero()) continue;
                if (best < 0 || e.degree() < best) {
                    best = e.degree();
                    pi = i;
                    pj = j;
                }
            }
        return best >= 0;
    }

    // Kannan-style pivoting: bring a minimal-degree entry to (t, t), then
    // reduce its row and column by Euclidean division until both are clear.
    bool clean_pivot(int t) {
        int pi, pj;
        if (!find_pivot(t, pi, pj)) return false;
        swap_rows(t, pi);
        swap_cols(t, pj);
        while (true) {
            bool dirty = false;
            for (int i = t + 1; i < s_.rows(); ++i) {
                if (s_.at(i, t).is_zero()) continue;
                const auto [q, r] = divmod(s_.at(i, t), s_.at(t, t));
                row_axpy(i, t, -q);
                if (!r.is_zero()) dirty = true;
            }
            for (int j = t + 1; j < s_.cols(); ++j) {
                if (s_.at(t, j).is_zero()) continue;
                const auto [q, r] = divmod(s_.at(t, j), s_.at(t, t));
                col_axpy(j, t, -q);
                if (!r.is_zero()) dirty = true;
            }
            if (!dirty) break;
            find_pivot(t, pi, pj);
            swap_rows(t, pi);
            swap_cols(t, pj);
        }
        extract_content(t);
        return true;
    }

    // Keeps coefficient growth in check: pull the rational content of the
    // remaining rows/columns into the unimodular factors.
    void extract_content(int t) {
        for (int i = t + 1; i < s_.rows(); ++i) {
            const Rational c = rational_content(s_, i, true);
            if (sgn(c) != 0 && c != 1) scale_row(i, Rational(1) / c);
        }
        for (int j = t + 1; j < s_.cols(); ++j) {
            const Rational c = rational_content(s_, j, false);
            if (sgn(c) != 0 && c != 1) {
                s_.scale_col(j, Rational(1) / c);
                v_.scale_row(j, c);
            }
        }
    }

    void enforce_chain(int rank) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < rank; ++i) {
                if (divides(s_.at(i, i), s_.at(i + 1, i + 1))) continue;
                fix_pair(i);
                changed = true;
            }
        }
    }

    // 2x2 trick on diagonal positions (i, i+1): fold s_{i+1} into column i
    // and rediagonalise the block, which becomes diag(gcd, lcm) up to units.
    void fix_pair(int i) {
        const int j = i + 1;
        col_axpy(i, j, UniPoly(Rational(1)));
        while (true) {
            int bi = i, bj = i;
            int best = -1;
            for (int r = i; r <= j; ++r)
                for (int c = i; c <= j; ++c) {
                    const UniPoly& e = s_.at(r, c);
                    if (!e.is_zero() && (best < 0 || e.degree() < best)) {
                        best = e.degree();
                        bi = r;
                        bj = c;
                    }
                }
            if (bi != i) swap_rows(i, j);
            if (bj != i) swap_cols(i, j);
            if (!s_.at(j, i).is_zero()) row_axpy(j, i, -(s_.at(j, i) / s_.at(i, i)));
            if (!s_.at(i, j).is_zero()) col_axpy(j, i, -(s_.at(i, j) / s_.at(i, i)));
            if (s_.at(j, i).is_zero() && s_.at(i, j).is_zero()) break;
        }
    }

    void make_monic(int rank) {
        for (int i = 0; i < rank; ++i) {
            const Rational lead = s_.at(i, i).leading_coeff();
            if (lead != 1) scale_row(i, Rational(1) / lead);
        }
    }

    PolyMatrix s_, u_, v_;
};

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

}  // namespace

std::vector<UniPoly> SmithForm::invariant_factors() const {
    std::vector<UniPoly> out;
    const int bound = std::min(S.rows(), S.cols());
    for (int i = 0; i < bound; ++i) out.push_back(S.at(i, i));
    return out;
}

SmithForm smith_normal_form(const PolyMatrix& m) { return SmithWorker(m).run(); }

std::vector<UniPoly> invariant_factors_oracle(const PolyMatrix& m) {
    const int bound = std::min(m.rows(), m.cols());
    std::vector<UniPoly> factors(bound);
    UniPoly prev(Rational(1));
    for (int k = 1; k <= bound; ++k) {
        UniPoly g;
        std::vector<int> rsel(k), csel(k);
        for (int i = 0; i < k; ++i) rsel[i] = i;
        do {
            for (int i = 0; i < k; ++i) csel[i] = i;
            do {
                const UniPoly minor = m.submatrix(rsel, csel).det();
                if (!minor.is_zero()) g = g.is_zero() ? minor.monic() : gcd(g, minor);
                if (g.is_one()) break;
            } while (next_combination(csel, m.cols()));
            if (g.is_one()) break;
        } while (next_combination(rsel, m.rows()));
        if (g.is_zero()) break;  // all k x k minors vanish; remaining factors are 0
        factors[k - 1] = g / prev;
        prev = g;
    }
    return factors;
}

bool is_unimodular(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("unimodularity of a non-square matrix");
    const UniPoly d = m.det();
    return d.is_constant() && !d.is_zero();
}

PolyMatrix casimir_complement(const std::vector<UniPoly>& factors, const Rational& mu) {
    const UniPoly pi = pi_mu(mu);
    std::vector<UniPoly> t;
    t.reserve(factors.size());
    for (const UniPoly& s : factors) {
        const auto [q, r] = divmod(pi.shift(1), s);
        if (!r.is_zero())
            throw std::domain_error("invariant factor " + s.to_string() +
                                    " does not divide pi_mu(z+1)");
        // s_i(z) t_i(z+1) = pi_mu(z+1)  =>  t_i(z) = pi_mu(z) / s_i(z-1)
        t.push_back(q.shift(-1));
    }
    return PolyMatrix::diagonal(t);
}

}  // namespace sl2cas
