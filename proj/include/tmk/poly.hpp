#ifndef TMK_POLY_HPP
#define TMK_POLY_HPP

#include <string>
#include <vector>

#include "tmk/numeric.hpp"

namespace tmk {

enum class MonoOrder { GrevLex, Lex };

/// Polynomial ring context: ordered variable names (index 0 is the smallest
/// variable) and the active monomial order.
struct Ring {
    std::vector<std::string> vars;
    MonoOrder order = MonoOrder::GrevLex;

    std::size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;  // -1 when absent
};

using Expo = std::vector<int>;

int mono_deg(const Expo& e);

/// Three-way comparison under the given order; variables later in the ring
/// are the larger ones.
int mono_cmp(MonoOrder o, const Expo& a, const Expo& b);

bool mono_divides(const Expo& a, const Expo& b);  // a | b
Expo mono_lcm(const Expo& a, const Expo& b);

struct Term {
    Expo e;
    Rat c;
    bool operator==(const Term&) const = default;
};

/// Sparse polynomial; terms sorted descending in the ring's order, no zero
/// coefficients stored.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const;  // leading term
    bool operator==(const Poly&) const = default;
};

Poly poly_zero();
Poly poly_const(const Ring& r, const Rat& c);
Poly poly_term(const Ring& r, Expo e, const Rat& c);
Poly poly_var(const Ring& r, std::size_t var, int exp = 1);

Poly normalize(const Ring& r, std::vector<Term> terms);  // combine/sort/prune
Poly add(const Ring& r, const Poly& f, const Poly& g);
Poly sub(const Ring& r, const Poly& f, const Poly& g);
Poly neg(const Poly& f);
Poly mul(const Ring& r, const Poly& f, const Poly& g);
Poly mul_term(const Ring& r, const Poly& f, const Term& t);
Poly scale(const Poly& f, const Rat& c);
Poly poly_pow(const Ring& r, const Poly& f, unsigned k);
Poly derivative(const Ring& r, const Poly& f, std::size_t var);

/// Re-sorts a polynomial's terms after a change of monomial order.
Poly resorted(const Ring& r, Poly f);

int total_degree(const Poly& f);

/// Text form "c * x0^3 * x6 + ..."; parser accepts the same shape.
std::string poly_to_string(const Ring& r, const Poly& f);
Poly parse_poly(const Ring& r, const std::string& text);

}  // namespace tmk

#endif
