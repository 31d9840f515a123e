#include "strangedual/exactalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace strangedual::exactalg {

Int det_bareiss(const IntMat& m) {
    if (!m.is_square()) throw std::invalid_argument("det_bareiss: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMat w = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && w(r, k) == 0) ++r;
            if (r == n) return 0;
            w.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = div_exact(w(k, k) * w(i, j) - w(i, k) * w(k, j), prev);
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign * w(n - 1, n - 1);
}

std::vector<Int> smith_invariant_factors(IntMat m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t k = std::min(rows, cols);
    std::vector<Int> d(k);  // zero-filled; trailing zeros stay for rank deficiency

    for (std::size_t s = 0; s < k; ++s) {
        // Pivot: minimal nonzero absolute value in the trailing block.
        auto pick_pivot = [&]() -> bool {
            std::size_t bi = s, bj = s;
            bool found = false;
            Int best;
            for (std::size_t i = s; i < rows; ++i)
                for (std::size_t j = s; j < cols; ++j) {
                    if (m(i, j) == 0) continue;
                    Int a = abs(m(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        bi = i;
                        bj = j;
                    }
                }
            if (!found) return false;
            m.swap_rows(s, bi);
            m.swap_cols(s, bj);
            return true;
        };

        if (!pick_pivot()) break;  // remaining block is zero

        for (;;) {
            bool dirty = false;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (m(i, s) == 0) continue;
                Int q = m(i, s) / m(s, s);
                if (q != 0)
                    for (std::size_t j = s; j < cols; ++j) m(i, j) -= q * m(s, j);
                if (m(i, s) != 0) dirty = true;  // remainder is strictly smaller
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (m(s, j) == 0) continue;
                Int q = m(s, j) / m(s, s);
                if (q != 0)
                    for (std::size_t i = s; i < rows; ++i) m(i, j) -= q * m(i, s);
                if (m(s, j) != 0) dirty = true;
            }
            if (dirty) {
                pick_pivot();
                continue;
            }
            // Row and column are clear; the pivot must also divide the rest
            // of the block for the invariant-factor chain.
            bool fixed = false;
            for (std::size_t i = s + 1; i < rows && !fixed; ++i)
                for (std::size_t j = s + 1; j < cols && !fixed; ++j)
                    if (m(i, j) % m(s, s) != 0) {
                        for (std::size_t c = s; c < cols; ++c) m(s, c) += m(i, c);
                        fixed = true;
                    }
            if (!fixed) break;
            pick_pivot();
        }
        d[s] = abs(m(s, s));
    }
    return d;
}

namespace {

using RatRow = std::vector<Rat>;
using RatMat = std::vector<RatRow>;

// row_i += f * row_k and col_i += f * col_k (congruence transformation).
void add_sym(RatMat& a, std::size_t i, std::size_t k, const Rat& f) {
    const std::size_t n = a.size();
    for (std::size_t j = 0; j < n; ++j) a[i][j] += f * a[k][j];
    for (std::size_t j = 0; j < n; ++j) a[j][i] += f * a[j][k];
}

void swap_sym(RatMat& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    a[i].swap(a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

Signature signature_of(const IntMat& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("signature_of: matrix not symmetric");
    const std::size_t n = m.rows();

    RatMat a(n, RatRow(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));

    Signature sig;
    std::size_t k = 0;
    while (k < n) {
        if (a[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && a[j][j] == 0) ++j;
            if (j < n) {
                swap_sym(a, k, j);
            } else {
                // Whole remaining diagonal vanishes: either the block is zero
                // or an off-diagonal entry yields a hyperbolic 2x2 pivot.
                std::size_t pi = n, pj = n;
                for (std::size_t i = k; i < n && pi == n; ++i)
                    for (std::size_t jj = i + 1; jj < n; ++jj)
                        if (a[i][jj] != 0) {
                            pi = i;
                            pj = jj;
                            break;
                        }
                if (pi == n) {
                    sig.n_zero += static_cast<int>(n - k);
                    break;
                }
                swap_sym(a, k, pi);  // pj > pi >= k, so pj is untouched
                swap_sym(a, k + 1, pj);
                const Rat b = a[k][k + 1];
                for (std::size_t i = k + 2; i < n; ++i) {
                    Rat alpha = -a[i][k + 1] / b;
                    Rat beta = -a[i][k] / b;
                    add_sym(a, i, k, alpha);
                    add_sym(a, i, k + 1, beta);
                }
                sig.n_plus += 1;
                sig.n_minus += 1;
                k += 2;
                continue;
            }
        }
        const Rat d = a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = -a[i][k] / d;
            add_sym(a, i, k, f);
        }
        if (sgn(d) > 0)
            sig.n_plus += 1;
        else
            sig.n_minus += 1;
        k += 1;
    }
    return sig;
}

IntPoly char_poly(const IntMat& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    // Faddeev-LeVerrier: all divisions are exact over the integers.
    IntMat acc = IntMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMat am = m * acc;
        Int ck = -div_exact(am.trace(), Int(static_cast<long>(k)));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) am(i, i) += ck;
        acc = std::move(am);
    }
    return IntPoly(std::move(c));
}

IntPoly cyclotomic(unsigned d) {
    if (d == 0) throw std::domain_error("cyclotomic: order must be positive");
    std::map<unsigned, IntPoly> phi;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        // t^e - 1 divided by Phi_f for every proper divisor f of e.
        IntPoly p = IntPoly::monomial(1, e) - IntPoly::constant(1);
        for (const auto& [f, pf] : phi) {
            if (e % f != 0) continue;
            auto q = p.divide_exact(pf);
            if (!q) throw std::logic_error("cyclotomic: inexact division");
            p = std::move(*q);
        }
        phi.emplace(e, std::move(p));
    }
    return phi.at(d);
}

std::optional<std::vector<unsigned>> cyclotomic_factorization(IntPoly p, unsigned d_max) {
    if (d_max == 0) throw std::domain_error("cyclotomic_factorization: bound must be positive");
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("cyclotomic_factorization: polynomial must be monic and nonconstant");

    std::vector<unsigned> orders;
    for (unsigned d = 1; d <= d_max && p.degree() > 0; ++d) {
        const IntPoly phi = cyclotomic(d);
        if (phi.degree() > p.degree()) continue;
        for (;;) {
            auto q = p.divide_exact(phi);
            if (!q) break;
            p = std::move(*q);
            orders.push_back(d);
        }
    }
    if (p.degree() != 0) return std::nullopt;
    // Monic quotients of monic polynomials: the residual constant is 1.
    return orders;
}

namespace {

std::vector<Int> sorted_row(const IntMat& m, std::size_t i) {
    std::vector<Int> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    std::sort(row.begin(), row.end());
    return row;
}

bool extend(const IntMat& a, const IntMat& b,
            const std::vector<std::vector<std::size_t>>& candidates,
            std::vector<std::size_t>& pi, std::vector<bool>& used, std::size_t i) {
    const std::size_t n = a.rows();
    if (i == n) return true;
    for (std::size_t j : candidates[i]) {
        if (used[j]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < i && ok; ++k)
            if (a(k, i) != b(pi[k], j)) ok = false;
        if (!ok) continue;
        pi[i] = j;
        used[j] = true;
        if (extend(a, b, candidates, pi, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> perm_congruent(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("perm_congruent: size mismatch");
    if (!a.is_symmetric() || !b.is_symmetric())
        throw std::invalid_argument("perm_congruent: matrices must be symmetric");

    const std::size_t n = a.rows();
    std::vector<std::vector<Int>> rows_b(n);
    for (std::size_t j = 0; j < n; ++j) rows_b[j] = sorted_row(b, j);

    std::vector<std::vector<std::size_t>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<Int> row_a = sorted_row(a, i);
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, i) == b(j, j) && row_a == rows_b[j]) candidates[i].push_back(j);
        if (candidates[i].empty()) return std::nullopt;
    }

    std::vector<std::size_t> pi(n);
    std::vector<bool> used(n, false);
    if (!extend(a, b, candidates, pi, used, 0)) return std::nullopt;
    return pi;
}

}  // namespace strangedual::exactalg
