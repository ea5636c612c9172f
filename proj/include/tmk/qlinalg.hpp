#ifndef TMK_QLINALG_HPP
#define TMK_QLINALG_HPP

#include <optional>
#include <vector>

#include "tmk/numeric.hpp"

namespace tmk {

std::size_t rank_q(const std::vector<QVec>& rows);

/// Basis of {x in Q^n : row . x = 0 for every row}.
std::vector<QVec> nullspace_q(const std::vector<QVec>& rows, std::size_t n);

/// Solves rows . x = rhs (rows as a matrix, one equation per row); nullopt if
/// inconsistent. When underdetermined returns the solution with free
/// variables set to zero.
std::optional<QVec> solve_q(const std::vector<QVec>& rows, const QVec& rhs);

/// Exact determinant of a square rational matrix.
Rat det_q(std::vector<QVec> m);

/// Affine frame of a point set: index of base point and a row basis of the
/// difference space. intrinsic() rewrites points in frame coordinates.
struct AffineFrame {
    QVec origin;
    std::vector<QVec> basis;  // rows spanning the difference space

    std::size_t dim() const { return basis.size(); }
    std::vector<QVec> intrinsic(const std::vector<QVec>& pts) const;
    /// Lifts an intrinsic linear functional to an ambient vector a with
    /// a . (p - origin) equal to the intrinsic pairing for p in the hull.
    QVec lift_normal(const QVec& nu) const;
};

AffineFrame affine_frame(const std::vector<QVec>& pts);

/// Facet of a full-dimensional point set: inner normal nu (primitive integer
/// direction), nu.x + c >= 0 on all points, onset = indices lying on it.
struct FullDimFacet {
    QVec nu;
    Rat c;
    std::vector<std::size_t> onset;
};

/// Brute-force facet enumeration over hyperplanes spanned by k-subsets;
/// pts must affinely span Q^k.
std::vector<FullDimFacet> full_dim_facets(const std::vector<QVec>& pts, std::size_t k);

void combination_init(std::vector<std::size_t>& idx, std::size_t k);
bool combination_next(std::vector<std::size_t>& idx, std::size_t n);

}  // namespace tmk

#endif
