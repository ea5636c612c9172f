#include "tmk/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tmk/error.hpp"
#include "tmk/qlinalg.hpp"

namespace tmk {

namespace {

// orientation fix: make the inequality <n,x> >= -c hold on all points
void orient_inward(IVec& n, Rat& c, const std::vector<QVec>& pts) {
    for (const auto& p : pts) {
        Rat v = dot(n, p) + c;
        if (v > 0) return;
        if (v < 0) {
            for (auto& x : n) x = -x;
            c = -c;
            return;
        }
    }
}

}  // namespace

bool Polytope::is_lattice() const {
    for (const auto& v : vertices)
        if (!is_integral(v)) return false;
    return true;
}

Polytope hull(const std::vector<QVec>& points) {
    if (points.empty()) throw Error("EmptyInput", "hull of empty point set");
    std::size_t dim = points[0].size();
    for (const auto& p : points)
        if (p.size() != dim) throw Error("DimensionMismatch", "hull input dimensions differ");
    std::vector<QVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope out;
    out.dim = dim;

    AffineFrame frame = affine_frame(pts);
    std::size_t k = frame.dim();

    // affine hull equations <a, x> = b
    for (const auto& a : nullspace_q(frame.basis, dim)) {
        IVec ai = primitive(a);
        Rat b = dot(ai, frame.origin);
        out.equations.emplace_back(std::move(ai), std::move(b));
    }
    std::sort(out.equations.begin(), out.equations.end());

    if (k == 0) {
        out.vertices = {pts[0]};
        return out;
    }

    auto ipts = frame.intrinsic(pts);
    auto ifacets = full_dim_facets(ipts, k);

    // vertices: active intrinsic normals span the intrinsic space
    std::vector<char> is_vertex(pts.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<QVec> active;
        for (const auto& f : ifacets)
            if (std::binary_search(f.onset.begin(), f.onset.end(), i)) active.push_back(f.nu);
        if (rank_q(active) == k) is_vertex[i] = 1;
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (is_vertex[i]) out.vertices.push_back(pts[i]);

    for (const auto& f : ifacets) {
        QVec a = frame.lift_normal(f.nu);
        IVec n = primitive(a);
        Rat c = -dot(n, pts[f.onset[0]]);
        orient_inward(n, c, out.vertices);
        out.facets.push_back({std::move(n), std::move(c)});
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

std::pair<Polytope, bool> polar_dual(const Polytope& p) {
    if (!p.equations.empty() || p.vertices.empty())
        throw Error("OriginNotInterior", "polar dual needs a full-dimensional polytope");
    for (const auto& f : p.facets)
        if (f.offset <= 0)
            throw Error("OriginNotInterior", "origin is not strictly interior");
    Polytope d;
    d.dim = p.dim;
    for (const auto& f : p.facets) {
        QVec v(p.dim);
        for (std::size_t j = 0; j < p.dim; ++j) v[j] = Rat(f.normal[j]) / f.offset;
        d.vertices.push_back(std::move(v));
    }
    std::sort(d.vertices.begin(), d.vertices.end());
    for (const auto& v : p.vertices) {
        IVec n = primitive(v);
        // v = s * n with s > 0; <v, y> >= -1  <=>  <n, y> >= -1/s
        Rat s = 0;
        for (std::size_t j = 0; j < p.dim; ++j)
            if (n[j] != 0) { s = v[j] / Rat(n[j]); break; }
        d.facets.push_back({std::move(n), Rat(1) / s});
    }
    std::sort(d.facets.begin(), d.facets.end());
    bool reflexive = p.is_lattice() && d.is_lattice();
    return {std::move(d), reflexive};
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.dim != q.dim) throw Error("DimensionMismatch", "minkowski sum dimensions differ");
    std::vector<QVec> sums;
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices) {
            QVec s(p.dim);
            for (std::size_t j = 0; j < p.dim; ++j) s[j] = a[j] + b[j];
            sums.push_back(std::move(s));
        }
    return hull(sums);
}

Polytope polytope_from_inequalities(std::size_t dim,
                                    const std::vector<std::pair<QVec, Rat>>& ineqs) {
    std::set<QVec> verts;
    std::vector<std::size_t> idx;
    if (ineqs.size() < dim) throw Error("Unbounded", "too few inequalities for a polytope");
    combination_init(idx, dim);
    do {
        std::vector<QVec> rows;
        QVec rhs;
        for (auto i : idx) {
            rows.push_back(ineqs[i].first);
            rhs.push_back(ineqs[i].second);
        }
        if (rank_q(rows) != dim) continue;
        auto x = solve_q(rows, rhs);
        if (!x) continue;
        bool ok = true;
        for (const auto& [a, b] : ineqs)
            if (dot(a, *x) < b) { ok = false; break; }
        if (ok) verts.insert(*x);
    } while (combination_next(idx, ineqs.size()));
    if (verts.empty()) throw Error("EmptyPolytope", "inequality system has no vertices");
    return hull(std::vector<QVec>(verts.begin(), verts.end()));
}

NefPartition nef_partition_dual(const NefPartition& nef) {
    if (nef.parts.empty()) throw Error("EmptyInput", "empty nef partition");
    std::size_t dim = nef.parts[0].dim;
    QVec origin(dim, Rat(0));
    for (const auto& part : nef.parts) {
        if (part.dim != dim) throw Error("DimensionMismatch", "nef partition dimensions differ");
        if (!contains(part, origin))
            throw Error("OriginNotInPart", "every nef part must contain 0");
    }
    // the Minkowski sum must be reflexive
    Polytope sum = nef.parts[0];
    for (std::size_t i = 1; i < nef.parts.size(); ++i) sum = minkowski_sum(sum, nef.parts[i]);
    auto [sdual, reflexive] = polar_dual(sum);
    (void)sdual;
    if (!reflexive) throw Error("NotReflexive", "nef partition sum is not reflexive");

    NefPartition out;
    for (std::size_t j = 0; j < nef.parts.size(); ++j) {
        std::vector<std::pair<QVec, Rat>> ineqs;
        for (std::size_t i = 0; i < nef.parts.size(); ++i)
            for (const auto& m : nef.parts[i].vertices)
                ineqs.emplace_back(m, i == j ? Rat(-1) : Rat(0));
        out.parts.push_back(polytope_from_inequalities(dim, ineqs));
    }
    return out;
}

std::vector<IVec> lattice_points(const Polytope& p) {
    if (p.vertices.empty()) return {};
    std::vector<Int> lo(p.dim), hi(p.dim);
    for (std::size_t j = 0; j < p.dim; ++j) {
        Rat mn = p.vertices[0][j], mx = p.vertices[0][j];
        for (const auto& v : p.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        // ceil(mn), floor(mx)
        lo[j] = num(mn) / den(mn);
        if (Rat(lo[j]) < mn) lo[j] += 1;
        hi[j] = num(mx) / den(mx);
        if (Rat(hi[j]) > mx) hi[j] -= 1;
    }
    std::vector<IVec> out;
    IVec cur(p.dim);
    QVec curq(p.dim);
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == p.dim) {
            if (contains(p, curq)) out.push_back(cur);
            return;
        }
        for (Int v = lo[j]; v <= hi[j]; ++v) {
            cur[j] = v;
            curq[j] = Rat(v);
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool contains(const Polytope& p, const QVec& x) {
    if (x.size() != p.dim) throw Error("DimensionMismatch", "contains point dimension");
    for (const auto& [a, b] : p.equations)
        if (dot(a, x) != b) return false;
    for (const auto& f : p.facets)
        if (dot(f.normal, x) < -f.offset) return false;
    return true;
}

}  // namespace tmk
