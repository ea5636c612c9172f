#include "tmk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "tmk/error.hpp"

namespace tmk {

int Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

int mono_deg(const Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int mono_cmp(MonoOrder o, const Expo& a, const Expo& b) {
    if (o == MonoOrder::GrevLex) {
        int da = mono_deg(a), db = mono_deg(b);
        if (da != db) return da < db ? -1 : 1;
        // graded reverse lex: first difference from the small-variable end,
        // the one with the SMALLER entry there is larger
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }
    // lex, largest variable last in storage
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

bool mono_divides(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo mono_lcm(const Expo& a, const Expo& b) {
    Expo out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

const Term& Poly::lt() const {
    if (terms.empty()) throw Error("ZeroPolynomial", "leading term of zero");
    return terms.front();
}

Poly poly_zero() { return {}; }

Poly poly_const(const Ring& r, const Rat& c) {
    if (c == 0) return {};
    Poly f;
    f.terms.push_back({Expo(r.nvars(), 0), c});
    return f;
}

Poly poly_term(const Ring& r, Expo e, const Rat& c) {
    if (e.size() != r.nvars()) throw Error("DimensionMismatch", "exponent vector length");
    if (c == 0) return {};
    Poly f;
    f.terms.push_back({std::move(e), c});
    return f;
}

Poly poly_var(const Ring& r, std::size_t var, int exp) {
    Expo e(r.nvars(), 0);
    e[var] = exp;
    return poly_term(r, std::move(e), Rat(1));
}

Poly normalize(const Ring& r, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(r.order, a.e, b.e) > 0;
    });
    Poly f;
    for (auto& t : terms) {
        if (t.c == 0) continue;
        if (!f.terms.empty() && f.terms.back().e == t.e) {
            f.terms.back().c += t.c;
            if (f.terms.back().c == 0) f.terms.pop_back();
        } else {
            f.terms.push_back(std::move(t));
        }
    }
    return f;
}

Poly resorted(const Ring& r, Poly f) { return normalize(r, std::move(f.terms)); }

Poly add(const Ring& r, const Poly& f, const Poly& g) {
    Poly out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = mono_cmp(r.order, f.terms[i].e, g.terms[j].e);
        if (c > 0) {
            out.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            out.terms.push_back(g.terms[j++]);
        } else {
            Rat s = f.terms[i].c + g.terms[j].c;
            if (s != 0) out.terms.push_back({f.terms[i].e, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < f.terms.size(); ++i) out.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) out.terms.push_back(g.terms[j]);
    return out;
}

Poly neg(const Poly& f) {
    Poly out = f;
    for (auto& t : out.terms) t.c = -t.c;
    return out;
}

Poly sub(const Ring& r, const Poly& f, const Poly& g) { return add(r, f, neg(g)); }

Poly mul_term(const Ring& r, const Poly& f, const Term& t) {
    (void)r;
    if (t.c == 0) return {};
    Poly out;
    out.terms.reserve(f.terms.size());
    for (const auto& ft : f.terms) {
        Expo e(ft.e.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ft.e[i] + t.e[i];
        out.terms.push_back({std::move(e), ft.c * t.c});
    }
    return out;  // multiplying by a term preserves the ordering
}

Poly mul(const Ring& r, const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const Poly& small = f.terms.size() <= g.terms.size() ? f : g;
    const Poly& large = f.terms.size() <= g.terms.size() ? g : f;
    Poly acc;
    for (const auto& t : small.terms) acc = add(r, acc, mul_term(r, large, t));
    return acc;
}

Poly scale(const Poly& f, const Rat& c) {
    if (c == 0) return {};
    Poly out = f;
    for (auto& t : out.terms) t.c *= c;
    return out;
}

Poly poly_pow(const Ring& r, const Poly& f, unsigned k) {
    Poly acc = poly_const(r, Rat(1));
    Poly base = f;
    while (k) {
        if (k & 1u) acc = mul(r, acc, base);
        k >>= 1u;
        if (k) base = mul(r, base, base);
    }
    return acc;
}

Poly derivative(const Ring& r, const Poly& f, std::size_t var) {
    std::vector<Term> out;
    for (const auto& t : f.terms) {
        if (t.e[var] == 0) continue;
        Term d = t;
        d.c *= t.e[var];
        d.e[var] -= 1;
        out.push_back(std::move(d));
    }
    return normalize(r, std::move(out));
}

int total_degree(const Poly& f) {
    int d = 0;
    for (const auto& t : f.terms) d = std::max(d, mono_deg(t.e));
    return d;
}

std::string poly_to_string(const Ring& r, const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms) {
        Rat c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool any_var = mono_deg(t.e) > 0;
        if (!any_var || c != 1) {
            os << rat_to_string(c);
            if (any_var) os << " * ";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < t.e.size(); ++i) {
            if (t.e[i] == 0) continue;
            if (!first_var) os << " * ";
            first_var = false;
            os << r.vars[i];
            if (t.e[i] != 1) os << "^" << t.e[i];
        }
    }
    return os.str();
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace

Poly parse_poly(const Ring& r, const std::string& text) {
    std::vector<Term> terms;
    std::size_t i = 0;
    skip_ws(text, i);
    if (i == text.size()) throw Error("ParseError", "empty polynomial");
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        skip_ws(text, i);
        if (i == text.size()) break;
        char ch = text[i];
        if (ch == '+' || ch == '-') {
            if (expect_term && ch == '-') {
                sign = -sign;
                ++i;
                continue;
            }
            sign = (ch == '-') ? -1 : 1;
            expect_term = true;
            ++i;
            continue;
        }
        // one term: factors separated by '*'
        Rat coeff = sign;
        Expo e(r.nvars(), 0);
        bool saw_factor = false;
        for (;;) {
            skip_ws(text, i);
            if (i < text.size() &&
                (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
                std::size_t j = i;
                while (j < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                    ++j;
                coeff *= parse_rat(text.substr(i, j - i));
                i = j;
                saw_factor = true;
            } else if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) ||
                                           text[i] == '_')) {
                std::size_t j = i;
                while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                           text[j] == '_'))
                    ++j;
                std::string name = text.substr(i, j - i);
                int vi = r.var_index(name);
                if (vi < 0) throw Error("ParseError", "unknown variable '" + name + "'");
                i = j;
                int exp = 1;
                skip_ws(text, i);
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip_ws(text, i);
                    std::size_t k = i;
                    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                        ++k;
                    if (k == i) throw Error("ParseError", "missing exponent");
                    exp = std::stoi(text.substr(i, k - i));
                    i = k;
                }
                e[vi] += exp;
                saw_factor = true;
            } else {
                break;
            }
            skip_ws(text, i);
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw Error("ParseError", "unexpected character in polynomial");
        terms.push_back({std::move(e), coeff});
        sign = 1;
        expect_term = false;
    }
    return normalize(r, std::move(terms));
}

}  // namespace tmk
