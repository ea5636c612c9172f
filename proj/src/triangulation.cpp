#include "tmk/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tmk/error.hpp"
#include "tmk/linsys.hpp"
#include "tmk/qlinalg.hpp"

namespace tmk {

namespace {

std::vector<QVec> points_q(const PointConfiguration& c) {
    std::vector<QVec> out;
    out.reserve(c.points.size());
    for (const auto& p : c.points) out.push_back(to_qvec(p));
    return out;
}

std::size_t affine_rank(const std::vector<QVec>& pts, const std::vector<int>& idx) {
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        QVec d(pts[idx[0]].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[idx[i]][j] - pts[idx[0]][j];
        diffs.push_back(std::move(d));
    }
    return rank_q(diffs);
}

// pulling triangulation of conv(pts[idx]) at ascending label index
void pull_cell(const std::vector<QVec>& pts, std::vector<int> idx,
               std::vector<std::vector<int>>& out) {
    std::sort(idx.begin(), idx.end());
    std::size_t m = affine_rank(pts, idx);
    if (idx.size() == m + 1) {
        out.push_back(idx);
        return;
    }
    int v = idx[0];
    std::vector<QVec> sub;
    for (int i : idx) sub.push_back(pts[i]);
    AffineFrame frame = affine_frame(sub);
    auto ipts = frame.intrinsic(sub);
    for (const auto& f : full_dim_facets(ipts, m)) {
        std::vector<int> gl;
        for (auto i : f.onset) gl.push_back(idx[i]);
        std::sort(gl.begin(), gl.end());
        if (std::binary_search(gl.begin(), gl.end(), v)) continue;
        std::vector<std::vector<int>> pieces;
        pull_cell(pts, gl, pieces);
        for (auto& s : pieces) {
            s.push_back(v);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
}

// barycentric coordinates of pts[p] w.r.t. the affinely independent pts[cell]
QVec barycentric(const std::vector<QVec>& ipts, const std::vector<int>& cell, int p) {
    std::size_t k = ipts[0].size();
    std::vector<QVec> rows(k + 1, QVec(cell.size()));
    QVec rhs(k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < cell.size(); ++i) rows[j][i] = ipts[cell[i]][j];
        rhs[j] = ipts[p][j];
    }
    for (std::size_t i = 0; i < cell.size(); ++i) rows[k][i] = 1;
    rhs[k] = 1;
    auto lam = solve_q(rows, rhs);
    if (!lam) throw Error("DimensionMismatch", "barycentric solve failed");
    return *lam;
}

}  // namespace

int PointConfiguration::label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name) return static_cast<int>(i);
    throw Error("LabelMismatch", "unknown label '" + name + "'");
}

Subdivision regular_subdivision(const PointConfiguration& c, const WeightVector& wv) {
    if (wv.w.size() != c.size())
        throw Error("DimensionMismatch", "weight vector length != point count");
    auto pts = points_q(c);
    AffineFrame frame = affine_frame(pts);
    std::size_t k = frame.dim();
    auto ipts = frame.intrinsic(pts);
    std::vector<QVec> lifted;
    for (std::size_t i = 0; i < ipts.size(); ++i) {
        QVec l = ipts[i];
        l.push_back(wv.w[i]);
        lifted.push_back(std::move(l));
    }
    Subdivision out;
    AffineFrame lframe = affine_frame(lifted);
    if (lframe.dim() < k + 1) {
        // all lifted points on one hyperplane: trivial subdivision
        std::vector<int> all(c.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        out.cells.push_back(std::move(all));
        return out;
    }
    std::set<std::vector<int>> cells;
    for (const auto& f : full_dim_facets(lifted, k + 1)) {
        if (f.nu[k] <= 0) continue;  // inward normal must have positive last coordinate
        std::vector<int> cell(f.onset.begin(), f.onset.end());
        std::sort(cell.begin(), cell.end());
        cells.insert(std::move(cell));
    }
    out.cells.assign(cells.begin(), cells.end());
    return out;
}

Triangulation refine_to_triangulation(const PointConfiguration& c, const Subdivision& s) {
    auto pts = points_q(c);
    std::set<std::vector<int>> cells;
    for (const auto& cell : s.cells) {
        std::vector<std::vector<int>> pieces;
        pull_cell(pts, cell, pieces);
        cells.insert(pieces.begin(), pieces.end());
    }
    Triangulation out;
    out.cells.assign(cells.begin(), cells.end());
    return out;
}

std::optional<WeightVector> regularity_witness(const PointConfiguration& c,
                                               const Triangulation& t) {
    auto pts = points_q(c);
    AffineFrame frame = affine_frame(pts);
    std::size_t k = frame.dim();
    auto ipts = frame.intrinsic(pts);
    LinearSystem sys;
    sys.num_vars = c.size();
    for (const auto& cell : t.cells) {
        if (cell.size() != k + 1 || affine_rank(pts, cell) != k)
            throw Error("NotTriangulation", "cell is not a full-dimensional simplex");
        for (std::size_t p = 0; p < c.size(); ++p) {
            if (std::binary_search(cell.begin(), cell.end(), static_cast<int>(p))) continue;
            QVec lam = barycentric(ipts, cell, static_cast<int>(p));
            QVec row(c.size(), Rat(0));
            row[p] = 1;
            for (std::size_t i = 0; i < cell.size(); ++i) row[cell[i]] -= lam[i];
            sys.add_gt(std::move(row), Rat(0));
        }
    }
    auto x = lp_feasible(sys);
    if (!x) return std::nullopt;
    return WeightVector{*x};
}

bool weights_induce(const PointConfiguration& c, const WeightVector& wv, const Subdivision& s) {
    auto pts = points_q(c);
    AffineFrame frame = affine_frame(pts);
    std::size_t k = frame.dim();
    auto ipts = frame.intrinsic(pts);
    for (const auto& cell : s.cells) {
        // affine functional h(x) = a.x + b matching the lift on the cell
        std::vector<QVec> rows;
        QVec rhs;
        for (int i : cell) {
            QVec r = ipts[i];
            r.push_back(Rat(1));
            rows.push_back(std::move(r));
            rhs.push_back(wv.w[i]);
        }
        auto h = solve_q(rows, rhs);
        if (!h) return false;  // lifted cell not coplanar
        for (int i : cell) {
            Rat v = -(*h)[k];
            for (std::size_t j = 0; j < k; ++j) v -= (*h)[j] * ipts[i][j];
            if (wv.w[i] + v != 0) return false;
        }
        for (std::size_t p = 0; p < c.size(); ++p) {
            if (std::binary_search(cell.begin(), cell.end(), static_cast<int>(p))) continue;
            Rat hval = (*h)[k];
            for (std::size_t j = 0; j < k; ++j) hval += (*h)[j] * ipts[p][j];
            if (!(wv.w[p] > hval)) return false;
        }
    }
    return true;
}

LtConditionReport check_lt_conditions(const PointConfiguration& c, const Triangulation& t) {
    LtConditionReport rep;
    rep.note = "condition (A) pair index ranges over 3<=j<=5 (labels P_{6+j} exist only for j<=5)";
    std::vector<std::string> expect;
    for (int i = 0; i < 12; ++i) expect.push_back("P" + std::to_string(i));
    expect.push_back("S1");
    expect.push_back("S2");
    if (c.labels != expect) throw Error("LabelMismatch", "expected labels P0..P11, S1, S2");
    const int S1 = 12, S2 = 13;

    std::set<std::vector<int>> cells(t.cells.begin(), t.cells.end());
    rep.t0_present = true;
    for (int drop = 0; drop < 6; ++drop) {
        std::vector<int> simplex;
        for (int i = 0; i < 6; ++i)
            if (i != drop) simplex.push_back(i);
        simplex.push_back(S1);
        simplex.push_back(S2);
        if (!cells.count(simplex)) rep.t0_present = false;
    }

    auto name_of = [&](const std::vector<int>& cell) {
        std::string s;
        for (int i : cell) {
            if (!s.empty()) s += ",";
            s += c.labels[i];
        }
        return s;
    };

    for (const auto& cell : t.cells) {
        std::set<int> in(cell.begin(), cell.end());
        bool is_t0 = in.count(S1) && in.count(S2);
        if (is_t0) {
            // must be one of the six star simplices
            bool found = false;
            for (int drop = 0; drop < 6 && !found; ++drop) {
                std::vector<int> simplex;
                for (int i = 0; i < 6; ++i)
                    if (i != drop) simplex.push_back(i);
                simplex.push_back(S1);
                simplex.push_back(S2);
                found = (cell == simplex);
            }
            if (!found) rep.violators.push_back(name_of(cell));
            continue;
        }
        bool condA = !in.count(S1) && !in.count(6) && !in.count(7) && !in.count(8);
        if (condA) {
            bool pair_missing = false;
            for (int j = 3; j <= 5; ++j)
                if (!in.count(j) && !in.count(6 + j)) pair_missing = true;
            condA = pair_missing;
        }
        bool condB = !in.count(S2) && !in.count(9) && !in.count(10) && !in.count(11);
        if (condB) {
            bool pair_missing = false;
            for (int j = 0; j <= 2; ++j)
                if (!in.count(j) && !in.count(6 + j)) pair_missing = true;
            condB = pair_missing;
        }
        if (!condA && !condB) rep.violators.push_back(name_of(cell));
    }
    rep.pass = rep.t0_present && rep.violators.empty();
    return rep;
}

Triangulation bb_star_triangulation(const Fan& f, const PointConfiguration& c,
                                    const std::string& s1, const std::string& s2) {
    int i1 = c.label_index(s1);
    int i2 = c.label_index(s2);
    // fan ray -> configuration point whose leading coordinates match
    std::vector<int> ray_to_label(f.rays.size(), -1);
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
        for (std::size_t p = 0; p < c.size(); ++p) {
            if (static_cast<int>(p) == i1 || static_cast<int>(p) == i2) continue;
            bool match = true;
            for (std::size_t j = 0; j < f.dim; ++j)
                if (c.points[p][j] != f.rays[r][j]) { match = false; break; }
            if (match) { ray_to_label[r] = static_cast<int>(p); break; }
        }
        if (ray_to_label[r] < 0)
            throw Error("LabelMismatch", "fan ray has no matching configuration point");
    }
    Triangulation out;
    for (const auto& cone : f.max_cones) {
        if (cone_rank(f.rays, cone) != cone.size())
            throw Error("NotSimplicial", "star triangulation needs a simplicial fan");
        std::vector<int> cell;
        for (int r : cone) cell.push_back(ray_to_label[r]);
        cell.push_back(i1);
        cell.push_back(i2);
        std::sort(cell.begin(), cell.end());
        out.cells.push_back(std::move(cell));
    }
    std::sort(out.cells.begin(), out.cells.end());
    return out;
}

std::pair<MonomialIdeal, MonomialIdeal> triangulation_ideals(const PointConfiguration& c,
                                                             const Triangulation& t) {
    if (c.x_labels.empty() && c.u_labels.empty())
        throw Error("LabelMismatch", "configuration has no x/u label partition");
    std::size_t nx = c.x_labels.size(), nu = c.u_labels.size();
    std::set<std::vector<int>> igens, jgens;
    for (const auto& cell : t.cells) {
        std::set<int> in(cell.begin(), cell.end());
        std::vector<int> e(nx + nu, 0);
        bool u_full = true;
        for (std::size_t i = 0; i < nx; ++i)
            if (!in.count(c.x_labels[i])) e[i] = 1;
        for (std::size_t j = 0; j < nu; ++j)
            if (!in.count(c.u_labels[j])) {
                e[nx + j] = 1;
                u_full = false;
            }
        if (u_full) jgens.insert(e);
        igens.insert(std::move(e));
    }
    auto reduce = [](const std::set<std::vector<int>>& gens) {
        MonomialIdeal out;
        for (const auto& g : gens) {
            bool keep = true;
            for (const auto& h : gens) {
                if (h == g) continue;
                bool divides = true;
                for (std::size_t i = 0; i < g.size(); ++i)
                    if (h[i] > g[i]) { divides = false; break; }
                if (divides) { keep = false; break; }
            }
            if (keep) out.gens.push_back(g);
        }
        return out;
    };
    return {reduce(igens), reduce(jgens)};
}

std::optional<QVec> interpolate_bounds(const QVec& L, const QVec& R, const Rat& C) {
    if (L.size() != R.size()) throw Error("DimensionMismatch", "bound vectors differ in length");
    for (std::size_t i = 0; i < L.size(); ++i)
        if (L[i] > R[i]) throw Error("BoundsInverted", "lower bound exceeds upper bound");
    Rat sl = 0, sr = 0;
    for (const auto& x : L) sl += x;
    for (const auto& x : R) sr += x;
    if (C < sl || C > sr) return std::nullopt;
    Rat x = sr == sl ? Rat(0) : (C - sl) / (sr - sl);
    QVec a(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) a[i] = L[i] + x * (R[i] - L[i]);
    return a;
}

Rat relative_volume(const PointConfiguration& c, const std::vector<std::vector<int>>& cells) {
    auto pts = points_q(c);
    AffineFrame frame = affine_frame(pts);
    std::size_t k = frame.dim();
    auto ipts = frame.intrinsic(pts);
    Rat total = 0;
    for (const auto& cell : cells) {
        std::vector<std::vector<int>> pieces;
        if (cell.size() == k + 1)
            pieces.push_back(cell);
        else
            pull_cell(pts, cell, pieces);
        for (const auto& s : pieces) {
            std::vector<QVec> m;
            for (std::size_t i = 1; i < s.size(); ++i) {
                QVec d(k);
                for (std::size_t j = 0; j < k; ++j) d[j] = ipts[s[i]][j] - ipts[s[0]][j];
                m.push_back(std::move(d));
            }
            Rat d = det_q(m);
            total += d < 0 ? -d : d;
        }
    }
    return total;
}

}  // namespace tmk
