#include "tmk/groebner.hpp"

#include <algorithm>
#include <list>
#include <map>

#include "tmk/error.hpp"

namespace tmk {

namespace {

Term term_quotient(const Term& a, const Term& b) {
    Term q;
    q.c = a.c / b.c;
    q.e.resize(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) q.e[i] = a.e[i] - b.e[i];
    return q;
}

struct Pair {
    std::size_t i, j;
    Expo lcm;
    int deg;
};

}  // namespace

Poly normal_form(const Ring& r, const Poly& f, const std::vector<Poly>& basis) {
    Poly h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (mono_divides(g.lt().e, h.lt().e)) {
                Term q = term_quotient(h.lt(), g.lt());
                h = sub(r, h, mul_term(r, g, q));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(h.lt());
            h.terms.erase(h.terms.begin());
        }
    }
    Poly out;
    out.terms = std::move(remainder);  // emitted in decreasing order already
    return out;
}

namespace {

Poly spoly(const Ring& r, const Poly& f, const Poly& g) {
    Expo l = mono_lcm(f.lt().e, g.lt().e);
    Term tf{l, Rat(1)};
    Term tg{l, Rat(1)};
    for (std::size_t i = 0; i < l.size(); ++i) {
        tf.e[i] = l[i] - f.lt().e[i];
        tg.e[i] = l[i] - g.lt().e[i];
    }
    tf.c = 1 / f.lt().c;
    tg.c = 1 / g.lt().c;
    return sub(r, mul_term(r, f, tf), mul_term(r, g, tg));
}

bool coprime(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Gebauer-Moller update: insert generator t into the pair queue.
void gm_update(const Ring& r, const std::vector<Poly>& basis, std::list<Pair>& pairs,
               std::size_t t) {
    const Expo& lt_t = basis[t].lt().e;
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
        if (basis[i].is_zero()) continue;
        Pair p{i, t, mono_lcm(basis[i].lt().e, lt_t), 0};
        p.deg = mono_deg(p.lcm);
        fresh.push_back(std::move(p));
    }
    // M criterion: drop (i,t) when some (j,t) has a strictly smaller lcm
    // dividing it; F criterion: keep one representative per lcm value.
    std::vector<char> drop(fresh.size(), 0);
    for (std::size_t a = 0; a < fresh.size(); ++a)
        for (std::size_t b = 0; b < fresh.size(); ++b) {
            if (a == b || drop[a]) continue;
            if (drop[b]) continue;
            if (fresh[b].lcm != fresh[a].lcm && mono_divides(fresh[b].lcm, fresh[a].lcm))
                drop[a] = 1;
        }
    std::map<Expo, std::size_t> rep;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (drop[a]) continue;
        auto it = rep.find(fresh[a].lcm);
        if (it == rep.end())
            rep.emplace(fresh[a].lcm, a);
        else
            drop[a] = 1;  // F: first representative wins (deterministic)
    }
    // B criterion: coprime leading terms reduce to zero
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (drop[a]) continue;
        if (coprime(basis[fresh[a].i].lt().e, lt_t)) drop[a] = 1;
    }
    // old-pair pruning: (i,j) superseded when lt_t properly divides its lcm
    for (auto it = pairs.begin(); it != pairs.end();) {
        const Expo& l = it->lcm;
        if (mono_divides(lt_t, l) && mono_lcm(basis[it->i].lt().e, lt_t) != l &&
            mono_lcm(basis[it->j].lt().e, lt_t) != l)
            it = pairs.erase(it);
        else
            ++it;
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
        if (!drop[a]) pairs.push_back(std::move(fresh[a]));
}

std::vector<Poly> reduce_basis(const Ring& r, std::vector<Poly> basis) {
    // minimal: drop generators whose LT another LT divides
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) {
            keep[i] = 0;
            continue;
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j] || basis[j].is_zero()) continue;
            if (mono_divides(basis[j].lt().e, basis[i].lt().e) &&
                (basis[j].lt().e != basis[i].lt().e || j < i)) {
                keep[i] = 0;
                break;
            }
        }
    }
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));
    // inter-reduce and normalise to monic
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly g = normal_form(r, minimal[i], others);
        if (!g.is_zero()) reduced.push_back(scale(g, 1 / g.lt().c));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return mono_cmp(r.order, a.lt().e, b.lt().e) < 0;
    });
    return reduced;
}

}  // namespace

GroebnerResult groebner(const Ring& r, const std::vector<Poly>& gens, long budget) {
    GroebnerResult res;
    std::vector<Poly> basis;
    std::list<Pair> pairs;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Poly h = normal_form(r, g, basis);
        if (h.is_zero()) continue;
        basis.push_back(scale(h, 1 / h.lt().c));
        gm_update(r, basis, pairs, basis.size() - 1);
    }
    while (!pairs.empty()) {
        if (res.spairs >= budget) {
            res.basis = std::move(basis);
            res.completed = false;
            return res;
        }
        // normal selection: smallest lcm in the monomial order, ties by (i,j)
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            int c = mono_cmp(r.order, it->lcm, best->lcm);
            if (c < 0 || (c == 0 && std::make_pair(it->i, it->j) <
                                        std::make_pair(best->i, best->j)))
                best = it;
        }
        Pair p = *best;
        pairs.erase(best);
        ++res.spairs;
        Poly s = spoly(r, basis[p.i], basis[p.j]);
        Poly h = normal_form(r, s, basis);
        if (h.is_zero()) continue;
        basis.push_back(scale(h, 1 / h.lt().c));
        gm_update(r, basis, pairs, basis.size() - 1);
    }
    res.basis = reduce_basis(r, std::move(basis));
    res.completed = true;
    return res;
}

std::optional<bool> radical_membership(const Ring& r, const Poly& f,
                                       const std::vector<Poly>& gens, long budget) {
    if (f.is_zero()) return true;
    Ring ext = r;
    std::string tname = "t";
    while (ext.var_index(tname) >= 0) tname = "_" + tname;
    ext.vars.push_back(tname);  // largest variable
    auto lift = [&](const Poly& p) {
        Poly q = p;
        for (auto& t : q.terms) t.e.push_back(0);
        return resorted(ext, std::move(q));
    };
    std::vector<Poly> egens;
    for (const auto& g : gens) egens.push_back(lift(g));
    Poly tf = mul(ext, lift(f), poly_var(ext, ext.nvars() - 1));
    egens.push_back(sub(ext, poly_const(ext, Rat(1)), tf));
    GroebnerResult gb = groebner(ext, egens, budget);
    if (!gb.completed) return std::nullopt;
    return gb.basis.size() == 1 && gb.basis[0] == poly_const(ext, Rat(1));
}

}  // namespace tmk
