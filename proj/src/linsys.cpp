#include "tmk/linsys.hpp"

#include <algorithm>

#include "tmk/error.hpp"

namespace tmk {

void LinearSystem::add_ge(QVec a, Rat b) {
    if (a.size() != num_vars) throw Error("DimensionMismatch", "inequality row length");
    ge.emplace_back(std::move(a), std::move(b));
}
void LinearSystem::add_gt(QVec a, Rat b) {
    if (a.size() != num_vars) throw Error("DimensionMismatch", "inequality row length");
    gt.emplace_back(std::move(a), std::move(b));
}
void LinearSystem::add_le(QVec a, Rat b) {
    for (auto& x : a) x = -x;
    add_ge(std::move(a), -b);
}
void LinearSystem::add_lt(QVec a, Rat b) {
    for (auto& x : a) x = -x;
    add_gt(std::move(a), -b);
}
void LinearSystem::add_eq(QVec a, Rat b) {
    add_ge(a, b);
    add_le(std::move(a), std::move(b));
}

bool LinearSystem::satisfied_by(const QVec& x) const {
    for (const auto& [a, b] : ge)
        if (dot(a, x) < b) return false;
    for (const auto& [a, b] : gt)
        if (dot(a, x) <= b) return false;
    return true;
}

namespace {

/// Dense full-tableau simplex, minimisation, Bland anti-cycling.
class Tableau {
public:
    std::vector<QVec> rows;          // m rows of length ncols+1, rhs last
    std::vector<std::size_t> basis;  // basic column per row
    std::vector<char> banned;        // columns that may never enter
    std::size_t ncols = 0;

    QVec obj;  // reduced-cost row (length ncols+1, last = -objective value)

    void set_objective(const QVec& cost) {
        obj.assign(ncols + 1, Rat(0));
        for (std::size_t j = 0; j < ncols; ++j) obj[j] = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rat& cb = cost[basis[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= cb * rows[i][j];
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rat p = rows[r][c];
        for (auto& x : rows[r]) x /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        if (obj[c] != 0) {
            Rat f = obj[c];
            for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    /// Minimise until no improving column; Bland's rule. Optional callback is
    /// polled after each pivot and may stop the run early.
    template <typename Stop>
    void run(Stop&& stop) {
        for (;;) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j)
                if (!banned[j] && obj[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == ncols) return;
            std::size_t leave = rows.size();
            Rat best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rows[i][ncols] / rows[i][enter];
                if (leave == rows.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == rows.size()) throw Error("Unbounded", "simplex objective unbounded");
            pivot(leave, enter);
            if (stop()) return;
        }
    }
};

}  // namespace

std::optional<QVec> lp_feasible(const LinearSystem& sys) {
    const std::size_t n = sys.num_vars;
    const std::size_t n_ge = sys.ge.size();
    const std::size_t n_gt = sys.gt.size();
    const bool has_strict = n_gt > 0;
    const std::size_t m = n_ge + n_gt + (has_strict ? 1 : 0);

    // columns: x+ (n) | x- (n) | delta | slacks (m) | artificials (appended)
    const std::size_t col_delta = 2 * n;
    const std::size_t col_slack0 = col_delta + (has_strict ? 1 : 0);
    std::size_t ncols = col_slack0 + m;

    Tableau t;
    t.rows.assign(m, QVec());
    t.basis.assign(m, 0);

    std::vector<QVec> raw(m, QVec(ncols, Rat(0)));
    QVec rhs(m, Rat(0));
    std::size_t r = 0;
    auto fill = [&](const QVec& a, const Rat& b, bool strict) {
        for (std::size_t j = 0; j < n; ++j) {
            raw[r][j] = a[j];
            raw[r][n + j] = -a[j];
        }
        if (strict) raw[r][col_delta] = -1;
        raw[r][col_slack0 + r] = -1;  // a.x - delta_(strict) - s = b
        rhs[r] = b;
        ++r;
    };
    for (const auto& [a, b] : sys.ge) fill(a, b, false);
    for (const auto& [a, b] : sys.gt) fill(a, b, true);
    if (has_strict) {  // delta + s = 1
        raw[r][col_delta] = 1;
        raw[r][col_slack0 + r] = 1;
        rhs[r] = 1;
        ++r;
    }

    // orient rows so rhs >= 0; slack becomes basic when its coefficient is +1
    std::vector<std::size_t> art_of_row(m, ncols);
    std::size_t n_art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (rhs[i] < 0) {
            for (auto& x : raw[i]) x = -x;
            rhs[i] = -rhs[i];
        }
        if (raw[i][col_slack0 + i] == 1) {
            t.basis[i] = col_slack0 + i;
        } else {
            art_of_row[i] = ncols + n_art;
            t.basis[i] = art_of_row[i];
            ++n_art;
        }
    }
    std::size_t total = ncols + n_art;
    t.ncols = total;
    t.banned.assign(total, 0);
    for (std::size_t i = 0; i < m; ++i) {
        t.rows[i] = raw[i];
        t.rows[i].resize(total + 1, Rat(0));
        if (art_of_row[i] != ncols) t.rows[i][art_of_row[i]] = 1;
        t.rows[i][total] = rhs[i];
    }

    auto extract = [&]() {
        QVec x(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t b = t.basis[i];
            if (b < n)
                x[b] += t.rows[i][total];
            else if (b < 2 * n)
                x[b - n] -= t.rows[i][total];
        }
        return x;
    };
    auto early = [&]() {
        QVec x = extract();
        return sys.satisfied_by(x);
    };

    if (n_art > 0) {
        QVec cost(total, Rat(0));
        for (std::size_t j = ncols; j < total; ++j) cost[j] = 1;
        t.set_objective(cost);
        t.run([&] { return false; });
        if (t.obj[total] != 0) return std::nullopt;  // -value != 0 => infeasible
        // drive surviving zero-level artificials out of the basis
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < ncols) continue;
            std::size_t c = ncols;
            for (std::size_t j = 0; j < ncols; ++j)
                if (t.rows[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c < ncols) t.pivot(i, c);
        }
        for (std::size_t j = ncols; j < total; ++j) t.banned[j] = 1;
    }

    if (!has_strict) {
        QVec x = extract();
        return sys.satisfied_by(x) ? std::optional<QVec>(x) : std::nullopt;
    }

    {
        QVec xcur = extract();
        if (sys.satisfied_by(xcur)) return xcur;
    }
    QVec cost(total, Rat(0));
    cost[col_delta] = -1;  // maximise delta
    t.set_objective(cost);
    t.run(early);
    QVec x = extract();
    if (sys.satisfied_by(x)) return x;
    return std::nullopt;
}

}  // namespace tmk
