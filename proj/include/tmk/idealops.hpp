#ifndef TMK_IDEALOPS_HPP
#define TMK_IDEALOPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tmk/groebner.hpp"
#include "tmk/poly.hpp"
#include "tmk/triangulation.hpp"

namespace tmk {

/// Family parameter for the superpotential; rejects lambda^6 in {0, 1}
/// (over the rationals: lambda in {0, 1, -1}).
struct LambdaParam {
    Rat value;
    explicit LambdaParam(Rat v);
};

/// Monomial of a dual-cone lattice point: prod over rays of var^<m, u_ray>.
/// Negative pairings are rejected.
Poly monomial_for_point(const Ring& r, const IVec& m, const std::vector<IVec>& rays,
                        const Rat& coeff);

/// Sum of coefficient-weighted monomials of dual-cone points.
Poly superpotential(const Ring& r, const std::vector<IVec>& points,
                    const std::vector<IVec>& rays, const std::vector<Rat>& coeffs);

/// One generator per variable, zero partials dropped.
std::vector<Poly> jacobian_ideal(const Ring& r, const Poly& w);

/// All partials, aligned with the variable order (zero entries kept).
std::vector<Poly> all_partials(const Ring& r, const Poly& w);

Poly monomial_ideal_gen(const Ring& r, const std::vector<int>& e);

struct CertificateReport {
    struct Item {
        std::string name;
        bool pass = false;
    };
    std::vector<Item> items;
    bool pass = false;
    std::string note;
    /// The six square-free monomials certified to lie in sqrt(dw); any ideal
    /// generator divisible by one of them lies in sqrt(dw) as well.
    std::vector<Poly> radical_monomials;
};

/// Verifies the explicit membership identities behind the chamber
/// containment for the main superpotential: the cofactor combinations for
/// (u1 u2 x0..x11)^3 and (u2 x0 x1 x2 x9 x10 x11)^6 (and its mirror), the
/// radical steps for u1 x_i x_{6+i} / u2 x_{3+i} x_{9+i}, and the six
/// closing four-term identities. Everything is checked by exact expansion.
/// `tamper_sign` flips one sign in the first closing identity (negative
/// control: the mismatch must be reported).
CertificateReport certificate_check(const Ring& r, const Poly& w, const LambdaParam& lambda,
                                    bool tamper_sign = false);

struct ContainmentReport {
    struct Gen {
        std::string monomial;
        std::string route;  // "J" | "groebner" | "certificate" | "undecided"
        bool member = false;
    };
    std::vector<Gen> gens;
    bool all_member = false;
    bool any_undecided = false;
    long spairs_total = 0;
};

/// Checks every minimal generator of I against sqrt(<dw> + J): fast path by
/// J-divisibility, then Rabinowitsch Groebner within the budget, then (when
/// provided) divisibility against certified sqrt(dw) monomials.
ContainmentReport chamber_containment_check(const Ring& r, const MonomialIdeal& I,
                                            const MonomialIdeal& J, const Poly& w,
                                            long budget,
                                            const std::vector<Poly>* certified = nullptr,
                                            bool try_groebner = true);

}  // namespace tmk

#endif
