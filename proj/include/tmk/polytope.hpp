#ifndef TMK_POLYTOPE_HPP
#define TMK_POLYTOPE_HPP

#include <utility>
#include <vector>

#include "tmk/numeric.hpp"

namespace tmk {

/// Facet inequality <normal, x> >= -offset with primitive integer normal.
struct Facet {
    IVec normal;
    Rat offset;
    bool operator==(const Facet&) const = default;
    auto operator<=>(const Facet&) const = default;
};

/// Lattice/rational polytope in both representations. Lower-dimensional
/// polytopes carry their affine hull as a list of equations <a, x> = b;
/// facet inequalities are then understood within that hull.
struct Polytope {
    std::size_t dim = 0;
    std::vector<QVec> vertices;                    // lex-sorted, irredundant
    std::vector<Facet> facets;                     // sorted
    std::vector<std::pair<IVec, Rat>> equations;   // empty iff full-dimensional

    std::size_t affine_dim() const { return vertices.empty() ? 0 : dim - equations.size(); }
    bool is_lattice() const;
    bool operator==(const Polytope&) const = default;
};

Polytope hull(const std::vector<QVec>& points);

/// Polar dual {n : <m,n> >= -1 for all m in p}; requires 0 strictly interior.
/// The flag is true iff p and its dual are both lattice polytopes.
std::pair<Polytope, bool> polar_dual(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

struct NefPartition {
    std::vector<Polytope> parts;
};

/// Dual nef partition: part j is cut out by <m, n> >= -delta_ij over all
/// vertices m of part i.
NefPartition nef_partition_dual(const NefPartition& parts);

std::vector<IVec> lattice_points(const Polytope& p);

bool contains(const Polytope& p, const QVec& x);

/// Vertex enumeration for a bounded intersection of halfspaces a.x >= b.
Polytope polytope_from_inequalities(std::size_t dim,
                                    const std::vector<std::pair<QVec, Rat>>& ineqs);

}  // namespace tmk

#endif
