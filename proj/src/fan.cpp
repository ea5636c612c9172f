#include "tmk/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tmk/error.hpp"
#include "tmk/intmat.hpp"
#include "tmk/linsys.hpp"
#include "tmk/qlinalg.hpp"

namespace tmk {

namespace {

std::vector<QVec> rays_q(const std::vector<IVec>& rays, const std::vector<int>& idx) {
    std::vector<QVec> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(to_qvec(rays[i]));
    return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
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

}  // namespace

std::size_t cone_rank(const std::vector<IVec>& rays, const std::vector<int>& idx) {
    return rank_q(rays_q(rays, idx));
}

std::vector<std::vector<int>> cone_facet_sets(const std::vector<IVec>& rays,
                                              const std::vector<int>& idx) {
    auto rq = rays_q(rays, idx);
    std::size_t m = rank_q(rq);
    if (m == 0) return {};
    // span basis and span coordinates
    std::vector<QVec> basis;
    for (const auto& r : rq) {
        auto cand = basis;
        cand.push_back(r);
        if (rank_q(cand) == cand.size()) basis.push_back(r);
    }
    std::size_t n = rays.empty() ? 0 : rays[0].size();
    std::vector<QVec> cols(n, QVec(m));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) cols[j][i] = basis[i][j];
    std::vector<QVec> rc;
    for (const auto& r : rq) {
        auto x = solve_q(cols, r);
        if (!x) throw Error("Internal", "ray outside its own span");
        rc.push_back(*x);
    }
    std::set<std::vector<int>> out;
    if (m == 1) return {};  // a ray has no facets spanned by rays
    std::vector<std::size_t> comb(m - 1);
    for (std::size_t i = 0; i < m - 1; ++i) comb[i] = i;
    do {
        std::vector<QVec> rows;
        for (auto i : comb) rows.push_back(rc[i]);
        if (rank_q(rows) != m - 1) continue;
        auto ns = nullspace_q(rows, m);
        if (ns.size() != 1) continue;
        QVec nu = ns[0];
        int sign = 0;
        bool onesided = true;
        for (const auto& r : rc) {
            Rat v = dot(nu, r);
            if (v > 0) {
                if (sign < 0) { onesided = false; break; }
                sign = 1;
            } else if (v < 0) {
                if (sign > 0) { onesided = false; break; }
                sign = -1;
            }
        }
        if (!onesided || sign == 0) continue;
        if (sign < 0)
            for (auto& x : nu) x = -x;
        std::vector<int> onset;
        for (std::size_t i = 0; i < rc.size(); ++i)
            if (dot(nu, rc[i]) == 0) onset.push_back(idx[i]);
        std::sort(onset.begin(), onset.end());
        out.insert(std::move(onset));
    } while (next_combination(comb, rc.size()));
    return {out.begin(), out.end()};
}

ConeHRep cone_hrep(const std::vector<IVec>& rays, const std::vector<int>& idx) {
    ConeHRep h;
    auto rq = rays_q(rays, idx);
    std::size_t n = rays.empty() ? 0 : rays[0].size();
    for (const auto& a : nullspace_q(rq, n)) h.equations.push_back(primitive(a));
    std::size_t m = rank_q(rq);
    if (m == 1) {
        // halfline: cut by hyperplanes orthogonal-ish; use <r, x> >= 0 within span
        h.inequalities.push_back(primitive(rq[0]));
        return h;
    }
    for (const auto& fs : cone_facet_sets(rays, idx)) {
        // ambient normal: vanishes on facet rays, nonnegative on the cone,
        // lies in the span of the cone
        std::vector<QVec> rows;
        for (int i : fs) rows.push_back(to_qvec(rays[i]));
        for (const auto& e : h.equations) rows.push_back(to_qvec(e));
        auto ns = nullspace_q(rows, n);
        if (ns.size() != 1) throw Error("Internal", "facet normal not unique");
        IVec nrm = primitive(ns[0]);
        // orient
        for (int i : idx) {
            Int v = dot(nrm, rays[i]);
            if (v > 0) break;
            if (v < 0) {
                for (auto& x : nrm) x = -x;
                break;
            }
        }
        h.inequalities.push_back(std::move(nrm));
    }
    std::sort(h.inequalities.begin(), h.inequalities.end());
    return h;
}

bool cone_contains(const ConeHRep& h, const QVec& x) {
    for (const auto& a : h.equations)
        if (dot(a, x) != 0) return false;
    for (const auto& n : h.inequalities)
        if (dot(n, x) < 0) return false;
    return true;
}

namespace {

// pulling triangulation of Cone(rays[idx]) at ascending global ray index
void pull_cone(const std::vector<IVec>& rays, std::vector<int> idx,
               std::vector<std::vector<int>>& out) {
    std::sort(idx.begin(), idx.end());
    std::size_t m = cone_rank(rays, idx);
    if (idx.size() == m) {
        out.push_back(idx);
        return;
    }
    int v = idx[0];
    for (const auto& f : cone_facet_sets(rays, idx)) {
        if (std::binary_search(f.begin(), f.end(), v)) continue;
        std::vector<std::vector<int>> sub;
        pull_cone(rays, f, sub);
        for (auto& s : sub) {
            s.push_back(v);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
}

}  // namespace

FanReport validate(const Fan& f) {
    FanReport rep;
    rep.is_fan = true;
    auto fail = [&](const std::string& why) {
        if (rep.is_fan) rep.detail = why;
        rep.is_fan = false;
    };

    // rays primitive, nonzero and pairwise distinct
    std::set<IVec> seen;
    for (const auto& r : f.rays) {
        bool zero = std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
        if (zero) {
            fail("zero ray");
            break;
        }
        if (primitive(r) != r) {
            fail("non-primitive ray");
            break;
        }
        if (!seen.insert(r).second) {
            fail("duplicate ray");
            break;
        }
    }

    rep.is_simplicial = true;
    bool all_fulldim = true;
    for (const auto& c : f.max_cones) {
        if (c.empty() || !std::is_sorted(c.begin(), c.end()) ||
            std::adjacent_find(c.begin(), c.end()) != c.end()) {
            fail("cone index set not sorted/unique");
            continue;
        }
        for (int i : c)
            if (i < 0 || static_cast<std::size_t>(i) >= f.rays.size()) fail("cone index out of range");
        if (!rep.is_fan) continue;
        std::size_t m = cone_rank(f.rays, c);
        if (m != f.dim) all_fulldim = false;
        if (m != c.size()) rep.is_simplicial = false;
        // positively independent: no nonneg combination of the others gives a ray,
        // and no nontrivial nonneg combination vanishes
        for (std::size_t k = 0; k < c.size() && rep.is_fan; ++k) {
            LinearSystem sys;
            sys.num_vars = c.size() - 1;
            for (std::size_t d = 0; d < f.dim; ++d) {
                QVec row;
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (j != k) row.push_back(Rat(f.rays[c[j]][d]));
                sys.add_eq(row, Rat(f.rays[c[k]][d]));
            }
            for (std::size_t j = 0; j < sys.num_vars; ++j) {
                QVec row(sys.num_vars, Rat(0));
                row[j] = 1;
                sys.add_ge(row, Rat(0));
            }
            if (lp_feasible(sys)) fail("cone ray is redundant (inside the other rays' cone)");
        }
        if (rep.is_fan) {
            LinearSystem sys;
            sys.num_vars = c.size();
            for (std::size_t d = 0; d < f.dim; ++d) {
                QVec row;
                for (std::size_t j = 0; j < c.size(); ++j) row.push_back(Rat(f.rays[c[j]][d]));
                sys.add_eq(row, Rat(0));
            }
            QVec ones(c.size(), Rat(1));
            sys.add_eq(ones, Rat(1));
            for (std::size_t j = 0; j < c.size(); ++j) {
                QVec row(c.size(), Rat(0));
                row[j] = 1;
                sys.add_ge(row, Rat(0));
            }
            if (lp_feasible(sys)) fail("cone is not strongly convex");
        }
    }

    // pairwise intersections are common faces: separating functional vanishing
    // exactly on the shared rays
    if (rep.is_fan) {
        for (std::size_t a = 0; a < f.max_cones.size() && rep.is_fan; ++a)
            for (std::size_t b = a + 1; b < f.max_cones.size() && rep.is_fan; ++b) {
                const auto& ca = f.max_cones[a];
                const auto& cb = f.max_cones[b];
                if (ca == cb) {
                    fail("duplicate maximal cone");
                    break;
                }
                std::vector<int> common;
                std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                      std::back_inserter(common));
                LinearSystem sys;
                sys.num_vars = f.dim;
                for (int i : ca) {
                    QVec row = to_qvec(f.rays[i]);
                    if (std::binary_search(common.begin(), common.end(), i))
                        sys.add_eq(row, Rat(0));
                    else
                        sys.add_gt(row, Rat(0));
                }
                for (int i : cb) {
                    if (std::binary_search(common.begin(), common.end(), i)) continue;
                    sys.add_lt(to_qvec(f.rays[i]), Rat(0));
                }
                if (!lp_feasible(sys))
                    fail("cones " + std::to_string(a) + "," + std::to_string(b) +
                         " do not meet in a common face");
            }
    }

    // completeness: all cones full-dimensional and every facet shared by
    // exactly two maximal cones
    rep.is_complete = rep.is_fan && all_fulldim && !f.max_cones.empty();
    if (rep.is_complete) {
        std::map<std::vector<int>, int> count;
        for (const auto& c : f.max_cones)
            for (auto& fs : cone_facet_sets(f.rays, c)) ++count[fs];
        for (const auto& [fs, n] : count)
            if (n != 2) rep.is_complete = false;
    }
    return rep;
}

Fan mpcp_refine(const Fan& f) {
    Fan out;
    out.dim = f.dim;
    out.rays = f.rays;
    std::set<std::vector<int>> cones;
    for (const auto& c : f.max_cones) {
        if (cone_rank(f.rays, c) == c.size()) {
            cones.insert(c);
            continue;
        }
        std::vector<std::vector<int>> tri;
        pull_cone(f.rays, c, tri);
        cones.insert(tri.begin(), tri.end());
    }
    out.max_cones.assign(cones.begin(), cones.end());
    return out;
}

Fan total_space_fan(const Fan& f, const std::vector<ToricDivisor>& divisors) {
    std::size_t r = divisors.size();
    for (const auto& d : divisors)
        if (d.coeffs.size() != f.rays.size())
            throw Error("DimensionMismatch", "divisor length != ray count");
    Fan out;
    out.dim = f.dim + r;
    for (std::size_t k = 0; k < f.rays.size(); ++k) {
        IVec v = f.rays[k];
        for (std::size_t i = 0; i < r; ++i) v.push_back(-divisors[i].coeffs[k]);
        out.rays.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < r; ++i) {
        IVec e(out.dim, Int(0));
        e[f.dim + i] = 1;
        out.rays.push_back(std::move(e));
    }
    for (const auto& c : f.max_cones) {
        std::vector<int> nc = c;
        for (std::size_t i = 0; i < r; ++i) nc.push_back(static_cast<int>(f.rays.size() + i));
        std::sort(nc.begin(), nc.end());
        out.max_cones.push_back(std::move(nc));
    }
    std::sort(out.max_cones.begin(), out.max_cones.end());
    return out;
}

std::vector<IVec> support_dual_cone(const Fan& f) {
    std::vector<int> all(f.rays.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    if (cone_rank(f.rays, all) != f.dim)
        throw Error("SupportNotPointed", "support cone is not full-dimensional");
    std::set<IVec> gens;
    for (const auto& fs : cone_facet_sets(f.rays, all)) {
        std::vector<QVec> rows;
        for (int i : fs) rows.push_back(to_qvec(f.rays[i]));
        auto ns = nullspace_q(rows, f.dim);
        if (ns.size() != 1) throw Error("Internal", "support facet normal not unique");
        IVec n = primitive(ns[0]);
        for (int i : all) {
            Int v = dot(n, f.rays[i]);
            if (v > 0) break;
            if (v < 0) {
                for (auto& x : n) x = -x;
                break;
            }
        }
        gens.insert(std::move(n));
    }
    std::vector<QVec> normals;
    for (const auto& g : gens) normals.push_back(to_qvec(g));
    if (rank_q(normals) != f.dim)
        throw Error("SupportNotPointed", "support cone contains a line");
    return {gens.begin(), gens.end()};
}

CoxData cox_data(const Fan& f) {
    IntMat m = IntMat::from_rows(f.rays);
    if (rank_of(m) != f.dim)
        throw Error("TorusFactor", "rays do not span the ambient space");
    SnfResult snf = smith_normal_form(m);
    CoxData out;
    out.torus_rank = static_cast<int>(f.rays.size() - f.dim);
    for (const auto& d : snf.factors)
        if (d > 1) out.torsion_factors.push_back(d);
    std::set<std::vector<int>> gens;
    for (const auto& c : f.max_cones) {
        std::vector<int> e(f.rays.size(), 1);
        for (int i : c) e[i] = 0;
        gens.insert(std::move(e));
    }
    out.irrelevant_generators.assign(gens.begin(), gens.end());
    return out;
}

std::optional<IVec> linear_equivalence(const Fan& f, const ToricDivisor& d1,
                                       const ToricDivisor& d2) {
    if (d1.coeffs.size() != f.rays.size() || d2.coeffs.size() != f.rays.size())
        throw Error("DimensionMismatch", "divisor length != ray count");
    IntMat m = IntMat::from_rows(f.rays);
    IVec rhs(f.rays.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = d1.coeffs[i] - d2.coeffs[i];
    return solve_integer(m, rhs);
}

Fan normal_fan(const Polytope& p) {
    if (!p.equations.empty() || p.vertices.empty())
        throw Error("NotFullDim", "normal fan needs a full-dimensional polytope");
    Fan f;
    f.dim = p.dim;
    for (const auto& fc : p.facets) f.rays.push_back(fc.normal);
    std::sort(f.rays.begin(), f.rays.end());
    for (const auto& v : p.vertices) {
        std::vector<int> cone;
        for (std::size_t i = 0; i < f.rays.size(); ++i) {
            // find this ray's facet offset
            for (const auto& fc : p.facets)
                if (fc.normal == f.rays[i] && dot(fc.normal, v) == -fc.offset) {
                    cone.push_back(static_cast<int>(i));
                    break;
                }
        }
        f.max_cones.push_back(std::move(cone));
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    return f;
}

}  // namespace tmk
