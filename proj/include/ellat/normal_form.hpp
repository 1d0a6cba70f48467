#pragma once
// Integer matrix normal forms: row-style Hermite normal form and Smith
// normal form with unimodular transforms, plus the kernel/solve helpers
// built on them.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ellat/matrix.hpp"

namespace ellat {

namespace detail {

inline void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace detail

// Row-style Hermite normal form: canonical upper-echelon form with positive
// pivots and entries above each pivot reduced into [0, pivot).  Zero rows
// sink to the bottom.  The row span is preserved, which is what the span
// comparisons in this library rely on.
inline IntMatrix hermite(const IntMatrix& m) {
    IntMatrix h = m;
    const size_t rows = h.rows(), cols = h.cols();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Combine rows r.. until at most one nonzero entry remains in column c.
        for (;;) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i)
                if (h(i, c) != 0 && (best == rows || cmp(abs(h(i, c)), abs(h(best, c))) < 0)) best = i;
            if (best == rows) break;
            if (best != r)
                for (size_t j = 0; j < cols; ++j) swap(h(r, j), h(best, j));
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                Integer q = h(i, c) / h(r, c);  // truncated division
                for (size_t j = 0; j < cols; ++j) h(i, j) -= q * h(r, j);
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0)
            for (size_t j = 0; j < cols; ++j) h(r, j) = -h(r, j);
        for (size_t i = 0; i < r; ++i) {
            Integer q = detail::floor_div(h(i, c), h(r, c));
            if (q == 0) continue;
            for (size_t j = 0; j < cols; ++j) h(i, j) -= q * h(r, j);
        }
        ++r;
    }
    return h;
}

// Canonical matrix for the row span: HNF with zero rows removed.
inline IntMatrix row_span_form(const IntMatrix& m) {
    IntMatrix h = hermite(m);
    size_t r = 0;
    for (size_t i = 0; i < h.rows(); ++i) {
        bool nz = false;
        for (size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) nz = true;
        if (nz) ++r;
    }
    IntMatrix out(r, h.cols());
    size_t k = 0;
    for (size_t i = 0; i < h.rows(); ++i) {
        bool nz = false;
        for (size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) nz = true;
        if (!nz) continue;
        for (size_t j = 0; j < h.cols(); ++j) out(k, j) = h(i, j);
        ++k;
    }
    return out;
}

struct SmithNF {
    IntMatrix d;  // diagonal, nonnegative, divisibility chain
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix v;  // unimodular, cols x cols
    // invariant: u * input * v == d
};

// Smith normal form with transforms.
inline SmithNF smith(const IntMatrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    SmithNF s{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;

    // When the pivot divides the target a plain elimination leaves the pivot
    // row/column untouched; the gcd combine is reserved for the cases where
    // it strictly shrinks the pivot, which is what makes the sweep terminate.
    auto row_combine = [&](size_t t, size_t i, size_t c) {
        Integer a = d(t, c), b = d(i, c);
        if (a != 0 && b % a == 0) {
            const Integer q = b / a;
            for (size_t j = 0; j < cols; ++j) d(i, j) -= q * d(t, j);
            for (size_t j = 0; j < rows; ++j) u(i, j) -= q * u(t, j);
            return;
        }
        Integer g, x, y;
        detail::ext_gcd(a, b, g, x, y);
        Integer ag = a / g, bg = b / g;
        for (size_t j = 0; j < cols; ++j) {
            Integer dt = d(t, j), di = d(i, j);
            d(t, j) = x * dt + y * di;
            d(i, j) = -bg * dt + ag * di;
        }
        for (size_t j = 0; j < rows; ++j) {
            Integer ut = u(t, j), ui = u(i, j);
            u(t, j) = x * ut + y * ui;
            u(i, j) = -bg * ut + ag * ui;
        }
    };
    auto col_combine = [&](size_t t, size_t j, size_t r) {
        Integer a = d(r, t), b = d(r, j);
        if (a != 0 && b % a == 0) {
            const Integer q = b / a;
            for (size_t i = 0; i < rows; ++i) d(i, j) -= q * d(i, t);
            for (size_t i = 0; i < cols; ++i) v(i, j) -= q * v(i, t);
            return;
        }
        Integer g, x, y;
        detail::ext_gcd(a, b, g, x, y);
        Integer ag = a / g, bg = b / g;
        for (size_t i = 0; i < rows; ++i) {
            Integer dt = d(i, t), dj = d(i, j);
            d(i, t) = x * dt + y * dj;
            d(i, j) = -bg * dt + ag * dj;
        }
        for (size_t i = 0; i < cols; ++i) {
            Integer vt = v(i, t), vj = v(i, j);
            v(i, t) = x * vt + y * vj;
            v(i, j) = -bg * vt + ag * vj;
        }
    };

    const size_t nmin = std::min(rows, cols);
    for (size_t t = 0; t < nmin; ++t) {
        // Pull some nonzero entry of the trailing submatrix to (t, t).
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (d(i, j) != 0 &&
                    (pi == rows || cmp(abs(d(i, j)), abs(d(pi, pj))) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        if (pi != t) {
            for (size_t j = 0; j < cols; ++j) swap(d(t, j), d(pi, j));
            for (size_t j = 0; j < rows; ++j) swap(u(t, j), u(pi, j));
        }
        if (pj != t) {
            for (size_t i = 0; i < rows; ++i) swap(d(i, t), d(i, pj));
            for (size_t i = 0; i < cols; ++i) swap(v(i, t), v(i, pj));
        }
        for (;;) {
            for (size_t i = t + 1; i < rows; ++i)
                if (d(i, t) != 0) row_combine(t, i, t);
            bool row_clear = true;
            for (size_t j = t + 1; j < cols; ++j)
                if (d(t, j) != 0) {
                    col_combine(t, j, t);
                    row_clear = false;
                }
            if (row_clear) break;
            bool col_clear = true;
            for (size_t i = t + 1; i < rows; ++i)
                if (d(i, t) != 0) col_clear = false;
            if (col_clear) break;
        }
    }

    // Enforce the divisibility chain.
    for (;;) {
        bool stable = true;
        for (size_t i = 0; i + 1 < nmin; ++i) {
            if (d(i + 1, i + 1) == 0) continue;
            if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) == 0) continue;
            // Couple the two diagonal positions and re-reduce.
            for (size_t j = 0; j < cols; ++j) d(i, j) += d(i + 1, j);
            for (size_t j = 0; j < rows; ++j) u(i, j) += u(i + 1, j);
            for (;;) {
                if (d(i + 1, i) != 0) row_combine(i, i + 1, i);
                if (d(i, i + 1) != 0) col_combine(i, i + 1, i);
                if (d(i + 1, i) == 0 && d(i, i + 1) == 0) break;
            }
            stable = false;
        }
        if (stable) break;
    }

    for (size_t i = 0; i < nmin; ++i)
        if (d(i, i) < 0) {
            for (size_t j = 0; j < cols; ++j) d(i, j) = -d(i, j);
            for (size_t j = 0; j < rows; ++j) u(i, j) = -u(i, j);
        }
    return s;
}

inline std::vector<Integer> smith_diagonal(const IntMatrix& m) {
    SmithNF s = smith(m);
    std::vector<Integer> out;
    const size_t nmin = std::min(m.rows(), m.cols());
    for (size_t i = 0; i < nmin; ++i) out.push_back(s.d(i, i));
    return out;
}

// Basis of the integer solutions of M x = 0 (columns x).  The result spans
// a saturated sublattice, so it extends to a basis of the ambient Z^n.
inline std::vector<IntVec> integer_kernel(const IntMatrix& m) {
    SmithNF s = smith(m);
    const size_t cols = m.cols();
    const size_t nmin = std::min(m.rows(), cols);
    std::vector<IntVec> basis;
    for (size_t j = 0; j < cols; ++j) {
        if (j < nmin && s.d(j, j) != 0) continue;
        IntVec x(cols);
        for (size_t i = 0; i < cols; ++i) x[i] = s.v(i, j);
        basis.push_back(std::move(x));
    }
    return basis;
}

// One integer solution of M x = b, if any.
inline std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
    SmithNF s = smith(m);
    const size_t rows = m.rows(), cols = m.cols();
    const size_t nmin = std::min(rows, cols);
    IntVec c(rows, Integer(0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < rows; ++j) c[i] += s.u(i, j) * b[j];
    IntVec y(cols, Integer(0));
    for (size_t i = 0; i < rows; ++i) {
        if (i < nmin && s.d(i, i) != 0) {
            if (c[i] % s.d(i, i) != 0) return std::nullopt;
            y[i] = c[i] / s.d(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    IntVec x(cols, Integer(0));
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = 0; j < cols; ++j) x[i] += s.v(i, j) * y[j];
    return x;
}

inline IntMatrix stack_rows(const std::vector<IntVec>& rows, size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("stack_rows: ragged input");
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

// Equality of the sublattices spanned by two sets of row vectors.
inline bool same_row_span(const std::vector<IntVec>& a, const std::vector<IntVec>& b, size_t cols) {
    return row_span_form(stack_rows(a, cols)) == row_span_form(stack_rows(b, cols));
}

}  // namespace ellat
