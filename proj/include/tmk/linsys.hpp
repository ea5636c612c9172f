#ifndef TMK_LINSYS_HPP
#define TMK_LINSYS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tmk/numeric.hpp"

namespace tmk {

/// System of rational linear inequalities over free variables:
/// every (a, b) in `ge` demands a.x >= b, every (a, b) in `gt` demands a.x > b.
struct LinearSystem {
    std::size_t num_vars = 0;
    std::vector<std::pair<QVec, Rat>> ge;
    std::vector<std::pair<QVec, Rat>> gt;

    void add_ge(QVec a, Rat b);
    void add_gt(QVec a, Rat b);
    void add_le(QVec a, Rat b);  // stored as -a.x >= -b
    void add_lt(QVec a, Rat b);
    void add_eq(QVec a, Rat b);  // two opposite ge rows

    bool satisfied_by(const QVec& x) const;
};

/// Exact two-phase simplex with Bland's rule. Strict inequalities are handled
/// by maximising a margin variable bounded by 1; the system is feasible iff
/// the optimum margin is positive. Deterministic: identical systems yield
/// identical witnesses.
std::optional<QVec> lp_feasible(const LinearSystem& sys);

}  // namespace tmk

#endif
