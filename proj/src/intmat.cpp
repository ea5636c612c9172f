#include "tmk/intmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace tmk {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<IVec>& rs) {
    if (rs.empty()) return IntMat();
    IntMat m(rs.size(), rs[0].size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].size() != m.cols) throw Error("DimensionMismatch", "ragged row list");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rs[i][j];
    }
    return m;
}

IVec IntMat::row(std::size_t i) const {
    IVec r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

IntMat mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw Error("DimensionMismatch", "matrix product shape");
    IntMat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

Int det(const IntMat& m) {
    if (m.rows != m.cols) throw Error("DimensionMismatch", "determinant of non-square matrix");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::size_t rank_of(const IntMat& m) {
    std::vector<QVec> rows(m.rows, QVec(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = Rat(m.at(i, j));
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && rows[piv][c] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < m.cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

struct SnfWork {
    IntMat s, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
        for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
        for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(std::size_t dst, std::size_t src, const Int& f) {  // row_dst += f*row_src
        for (std::size_t c = 0; c < s.cols; ++c) s.at(dst, c) += f * s.at(src, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < s.rows; ++r) s.at(r, dst) += f * s.at(r, src);
        for (std::size_t r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
    SnfWork w{m, IntMat::identity(m.rows), IntMat::identity(m.cols)};
    std::size_t n = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < n; ++t) {
        // pivot: minimal absolute value among nonzero entries of the trailing block
        auto find_pivot = [&]() -> std::pair<std::size_t, std::size_t> {
            std::size_t bi = m.rows, bj = m.cols;
            Int best = 0;
            for (std::size_t i = t; i < m.rows; ++i)
                for (std::size_t j = t; j < m.cols; ++j) {
                    const Int& x = w.s.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (bi == m.rows || ax < best) {
                        best = ax;
                        bi = i;
                        bj = j;
                    }
                }
            return {bi, bj};
        };
        auto [pi, pj] = find_pivot();
        if (pi == m.rows) break;  // trailing block is zero
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                if (w.s.at(i, t) == 0) continue;
                Int q = w.s.at(i, t) / w.s.at(t, t);
                if (q != 0) w.add_row(i, t, -q);
                if (w.s.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                if (w.s.at(t, j) == 0) continue;
                Int q = w.s.at(t, j) / w.s.at(t, t);
                if (q != 0) w.add_col(j, t, -q);
                if (w.s.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                auto [qi, qj] = find_pivot();
                w.swap_rows(t, qi);
                w.swap_cols(t, qj);
                continue;
            }
            // pivot must divide the whole trailing block for d1 | d2 | ...
            bool divides = true;
            for (std::size_t i = t + 1; i < m.rows && divides; ++i)
                for (std::size_t j = t + 1; j < m.cols && divides; ++j)
                    if (w.s.at(i, j) % w.s.at(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.s.at(t, t) < 0) w.negate_row(t);
    }
    SnfResult res{w.u, w.s, w.v, {}};
    for (std::size_t t = 0; t < n; ++t)
        if (w.s.at(t, t) != 0) res.factors.push_back(w.s.at(t, t));
    for (std::size_t t = res.factors.size(); t < n; ++t) res.factors.push_back(0);
    return res;
}

HnfResult hermite_normal_form(const IntMat& m) {
    IntMat h = m, u = IntMat::identity(m.rows);
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < h.cols; ++c) h.at(dst, c) += f * h.at(src, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < h.cols; ++c) std::swap(h.at(i, c), h.at(j, c));
        for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < h.cols; ++c) h.at(i, c) = -h.at(i, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols && r < h.rows; ++c) {
        for (;;) {
            std::size_t piv = h.rows;
            Int best = 0;
            for (std::size_t i = r; i < h.rows; ++i) {
                if (h.at(i, c) == 0) continue;
                Int ax = abs(h.at(i, c));
                if (piv == h.rows || ax < best) {
                    best = ax;
                    piv = i;
                }
            }
            if (piv == h.rows) break;
            swap_rows(r, piv);
            bool clean = true;
            for (std::size_t i = r + 1; i < h.rows; ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = h.at(i, c) / h.at(r, c);
                if (q != 0) add_row(i, r, -q);
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < h.rows && h.at(r, c) != 0) {
            if (h.at(r, c) < 0) negate_row(r);
            for (std::size_t i = 0; i < r; ++i) {
                // reduce entries above the pivot into [0, pivot)
                Int q = h.at(i, c) / h.at(r, c);
                if (h.at(i, c) - q * h.at(r, c) < 0) q -= 1;
                if (q != 0) add_row(i, r, -q);
            }
            ++r;
        }
    }
    return {h, u};
}

std::optional<IVec> solve_integer(const IntMat& m, const IVec& b) {
    if (b.size() != m.rows) throw Error("DimensionMismatch", "solve_integer rhs length");
    SnfResult snf = smith_normal_form(m);
    // m x = b  <=>  s y = u b with x = v y
    IVec c(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < m.rows; ++j) s += snf.u.at(i, j) * b[j];
        c[i] = s;
    }
    std::size_t n = std::min(m.rows, m.cols);
    IVec y(m.cols, Int(0));
    for (std::size_t i = 0; i < m.rows; ++i) {
        Int d = i < n ? snf.s.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    IVec x(m.cols);
    for (std::size_t i = 0; i < m.cols; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < m.cols; ++j) s += snf.v.at(i, j) * y[j];
        x[i] = s;
    }
    return x;
}

}  // namespace tmk
