#include "tmk/qlinalg.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "tmk/error.hpp"

namespace tmk {

namespace {

// Gauss-Jordan; returns pivot columns. Mutates rows in place.
std::vector<std::size_t> rref(std::vector<QVec>& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        Rat p = m[r][c];
        for (auto& x : m[r]) x /= p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank_q(const std::vector<QVec>& rows) {
    if (rows.empty()) return 0;
    auto m = rows;
    return rref(m, rows[0].size()).size();
}

std::vector<QVec> nullspace_q(const std::vector<QVec>& rows, std::size_t n) {
    auto m = rows;
    for (auto& r : m)
        if (r.size() != n) throw Error("DimensionMismatch", "nullspace row length");
    auto pivots = rref(m, n);
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<QVec> basis;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        QVec v(n, Rat(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve_q(const std::vector<QVec>& rows, const QVec& rhs) {
    if (rows.size() != rhs.size()) throw Error("DimensionMismatch", "solve_q rhs length");
    if (rows.empty()) return QVec{};
    std::size_t n = rows[0].size();
    auto m = rows;
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
    auto pivots = rref(m, n);
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (m[i][n] != 0) return std::nullopt;
    QVec x(n, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][n];
    return x;
}

Rat det_q(std::vector<QVec> m) {
    std::size_t n = m.size();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Rat p = m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / p;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

std::vector<QVec> AffineFrame::intrinsic(const std::vector<QVec>& pts) const {
    // solve sum_k x_k basis_k = p - origin for every p
    std::size_t k = basis.size();
    std::size_t n = origin.size();
    std::vector<QVec> cols(n, QVec(k));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < k; ++i) cols[j][i] = basis[i][j];
    std::vector<QVec> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        QVec rhs(n);
        for (std::size_t j = 0; j < n; ++j) rhs[j] = p[j] - origin[j];
        auto x = solve_q(cols, rhs);
        if (!x) throw Error("DimensionMismatch", "point outside affine hull");
        out.push_back(*x);
    }
    return out;
}

QVec AffineFrame::lift_normal(const QVec& nu) const {
    // a = sum mu_k basis_k with <a, basis_j> = nu_j: Gram system
    std::size_t k = basis.size();
    std::vector<QVec> gram(k, QVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    auto mu = solve_q(gram, nu);
    if (!mu) throw Error("Internal", "gram solve failed");
    QVec a(origin.size(), Rat(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[j] += (*mu)[i] * basis[i][j];
    return a;
}

void combination_init(std::vector<std::size_t>& idx, std::size_t k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
}

bool combination_next(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<FullDimFacet> full_dim_facets(const std::vector<QVec>& pts, std::size_t k) {
    std::vector<FullDimFacet> out;
    if (pts.size() < k) return out;
    std::map<std::pair<QVec, Rat>, std::vector<std::size_t>> found;
    std::vector<std::size_t> idx;
    combination_init(idx, k);
    do {
        std::vector<QVec> diffs;
        for (std::size_t i = 1; i < k; ++i) {
            QVec d(k);
            for (std::size_t j = 0; j < k; ++j) d[j] = pts[idx[i]][j] - pts[idx[0]][j];
            diffs.push_back(std::move(d));
        }
        if (k > 1 && rank_q(diffs) != k - 1) continue;
        auto ns = nullspace_q(diffs, k);
        if (ns.size() != 1) continue;
        QVec nu = ns[0];
        Rat c = -dot(nu, pts[idx[0]]);
        int sign = 0;
        bool onesided = true;
        for (const auto& p : pts) {
            Rat v = dot(nu, p) + c;
            if (v > 0) {
                if (sign < 0) { onesided = false; break; }
                sign = 1;
            } else if (v < 0) {
                if (sign > 0) { onesided = false; break; }
                sign = -1;
            }
        }
        if (!onesided || sign == 0) continue;
        if (sign < 0) {
            for (auto& x : nu) x = -x;
            c = -c;
        }
        IVec prim = primitive(nu);
        Rat scale = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (nu[j] != 0) { scale = Rat(prim[j]) / nu[j]; break; }
        for (std::size_t j = 0; j < k; ++j) nu[j] = Rat(prim[j]);
        c *= scale;
        auto key = std::make_pair(nu, c);
        if (found.count(key)) continue;
        std::vector<std::size_t> onset;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(nu, pts[i]) + c == 0) onset.push_back(i);
        found.emplace(std::move(key), std::move(onset));
    } while (combination_next(idx, pts.size()));
    for (auto& [key, onset] : found) out.push_back({key.first, key.second, std::move(onset)});
    return out;
}

AffineFrame affine_frame(const std::vector<QVec>& pts) {
    if (pts.empty()) throw Error("EmptyInput", "affine frame of empty point set");
    AffineFrame f;
    f.origin = pts[0];
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec d(pts[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - f.origin[j];
        auto cand = f.basis;
        cand.push_back(d);
        if (rank_q(cand) == cand.size()) f.basis.push_back(std::move(d));
    }
    return f;
}

}  // namespace tmk
