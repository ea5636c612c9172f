#ifndef TMK_FAN_HPP
#define TMK_FAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "tmk/numeric.hpp"
#include "tmk/polytope.hpp"

namespace tmk {

/// Polyhedral fan over a shared table of primitive rays; cones are stored as
/// sorted ray-index sets at the maximal level only.
struct Fan {
    std::size_t dim = 0;
    std::vector<IVec> rays;
    std::vector<std::vector<int>> max_cones;
    bool operator==(const Fan&) const = default;
};

struct FanReport {
    bool is_fan = false;
    bool is_simplicial = false;
    bool is_complete = false;
    std::string detail;  // first violation found, empty when is_fan
};

FanReport validate(const Fan& f);

/// Triangulates every maximal cone into simplicial cones spanned by its own
/// rays (pulling order: ascending ray index). Ray table and support unchanged.
Fan mpcp_refine(const Fan& f);

struct ToricDivisor {
    std::vector<Int> coeffs;  // one per ray
    bool operator==(const ToricDivisor&) const = default;
};

/// Fan of the total space of the direct sum of the line bundles O(D_i):
/// each ray u is lifted to (u, -a_1, ..., -a_r) and unit rays e_{dim+i}
/// are appended to every maximal cone.
Fan total_space_fan(const Fan& f, const std::vector<ToricDivisor>& divisors);

/// Primitive generators of the extreme rays of the dual of the support cone
/// Cone(rays of f); sorted lexicographically.
std::vector<IVec> support_dual_cone(const Fan& f);

struct CoxData {
    int torus_rank = 0;
    std::vector<Int> torsion_factors;                 // > 1, divisibility order
    std::vector<std::vector<int>> irrelevant_generators;  // exponent vectors
};

CoxData cox_data(const Fan& f);

/// Lattice point m with <m, u_rho> = (d1 - d2)_rho for every ray, if any.
std::optional<IVec> linear_equivalence(const Fan& f, const ToricDivisor& d1,
                                       const ToricDivisor& d2);

/// Normal fan of a full-dimensional polytope: one maximal cone per vertex,
/// spanned by the primitive inner normals of the facets through it.
Fan normal_fan(const Polytope& p);

/// H-representation of Cone(rays[idx]) inside its linear span.
struct ConeHRep {
    std::vector<IVec> equations;     // <a, x> = 0 cutting the span
    std::vector<IVec> inequalities;  // <n, x> >= 0 within the span
};

ConeHRep cone_hrep(const std::vector<IVec>& rays, const std::vector<int>& idx);
bool cone_contains(const ConeHRep& h, const QVec& x);

/// Facets of Cone(rays[idx]) as sorted global-ray-index sets.
std::vector<std::vector<int>> cone_facet_sets(const std::vector<IVec>& rays,
                                              const std::vector<int>& idx);

std::size_t cone_rank(const std::vector<IVec>& rays, const std::vector<int>& idx);

}  // namespace tmk

#endif
