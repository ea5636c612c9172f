#ifndef TMK_TRIANGULATION_HPP
#define TMK_TRIANGULATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tmk/fan.hpp"
#include "tmk/numeric.hpp"

namespace tmk {

/// Labeled lattice point configuration. x_labels/u_labels partition the
/// labels into coordinate-variable and bundle-variable points for the
/// ideal-extraction step; both may be empty for purely geometric use.
struct PointConfiguration {
    std::vector<std::string> labels;
    std::vector<IVec> points;
    std::vector<int> x_labels;
    std::vector<int> u_labels;

    std::size_t size() const { return points.size(); }
    int label_index(const std::string& name) const;
};

/// Cells as sorted label-index sets; cells are full-dimensional in the
/// configuration's affine hull.
struct Subdivision {
    std::vector<std::vector<int>> cells;
    bool operator==(const Subdivision&) const = default;
};

struct Triangulation {
    std::vector<std::vector<int>> cells;
    bool operator==(const Triangulation&) const = default;
};

struct WeightVector {
    QVec w;
};

/// Lower-facet projection of the weight lift: lifts point i to (p_i, w_i),
/// keeps the facets whose inward normal has positive last coordinate and
/// projects their point sets down.
Subdivision regular_subdivision(const PointConfiguration& c, const WeightVector& w);

/// Pulling refinement at the lowest label inside every non-simplex cell.
Triangulation refine_to_triangulation(const PointConfiguration& c, const Subdivision& s);

/// Exact LP: weights lifting every configuration point strictly above the
/// hyperplane of every cell not containing it.
std::optional<WeightVector> regularity_witness(const PointConfiguration& c,
                                               const Triangulation& t);

/// True iff w lifts each cell onto a single hyperplane with every other
/// point strictly above (i.e. w induces exactly this subdivision).
bool weights_induce(const PointConfiguration& c, const WeightVector& w, const Subdivision& s);

struct LtConditionReport {
    bool pass = false;
    bool t0_present = false;
    std::vector<std::string> violators;  // offending simplices, as label lists
    std::string note;
};

/// Checks the partial-compactification conditions on a triangulation of the
/// 14-label configuration P0..P11, S1, S2: the six star simplices must be
/// present and every other simplex must avoid {S1,P6,P7,P8} with a missing
/// pair (P_j, P_{6+j}), 3<=j<=5 (condition A), or avoid {S2,P9,P10,P11} with
/// a missing pair for 0<=j<=2 (condition B).
LtConditionReport check_lt_conditions(const PointConfiguration& c, const Triangulation& t);

/// Star triangulation of a simplicial fan with the two bundle points: one
/// simplex per maximal cone, its ray labels plus {S1, S2}.
Triangulation bb_star_triangulation(const Fan& f, const PointConfiguration& c,
                                    const std::string& s1, const std::string& s2);

/// Squarefree monomial ideal over the configuration's (x, u) variables;
/// generators are 0/1 exponent vectors, divisibility-reduced and sorted.
struct MonomialIdeal {
    std::vector<std::vector<int>> gens;
    bool operator==(const MonomialIdeal&) const = default;
};

/// Chamber ideals of a triangulation: for each maximal simplex with x-label
/// set I and u-label set J, the first ideal gains prod_{i not in I} x_i *
/// prod_{j not in J} u_j; the second gains the pure-x generator when J is
/// the full u-label set.
std::pair<MonomialIdeal, MonomialIdeal> triangulation_ideals(const PointConfiguration& c,
                                                             const Triangulation& t);

/// a_j = L_j + x(R_j - L_j) with sum a = C, if sum L <= C <= sum R.
std::optional<QVec> interpolate_bounds(const QVec& L, const QVec& R, const Rat& C);

/// Sum of cell volumes relative to the configuration's intrinsic frame
/// (consistent scale; suitable for covering checks only).
Rat relative_volume(const PointConfiguration& c, const std::vector<std::vector<int>>& cells);

}  // namespace tmk

#endif
