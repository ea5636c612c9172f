#ifndef TMK_GROEBNER_HPP
#define TMK_GROEBNER_HPP

#include <optional>
#include <vector>

#include "tmk/poly.hpp"

namespace tmk {

/// Ideal as a generator list; the monomial order lives on the ring.
struct Ideal {
    std::vector<Poly> gens;
};

inline constexpr long kDefaultSpairBudget = 200000;

struct GroebnerResult {
    std::vector<Poly> basis;  // reduced iff completed, partial state otherwise
    bool completed = false;
    long spairs = 0;  // S-pairs reduced
};

/// Buchberger with Gebauer-Moller pair elimination and normal selection.
/// Stops with completed=false once `budget` S-pair reductions were spent.
/// Completed bases are reduced: minimal, inter-reduced, monic, sorted by
/// ascending leading term.
GroebnerResult groebner(const Ring& r, const std::vector<Poly>& gens,
                        long budget = kDefaultSpairBudget);

/// Remainder of full multivariate division by a (Groebner) basis.
Poly normal_form(const Ring& r, const Poly& f, const std::vector<Poly>& basis);

/// f in sqrt(ideal) via 1 in ideal + <1 - t f> in one extra (largest)
/// variable; nullopt when the Groebner run exceeds its budget.
std::optional<bool> radical_membership(const Ring& r, const Poly& f,
                                       const std::vector<Poly>& gens,
                                       long budget = kDefaultSpairBudget);

}  // namespace tmk

#endif
