#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stategeom/errors.hpp"
#include "stategeom/rational.hpp"

namespace stategeom {

enum class LPStatus { Optimal, Infeasible, Unbounded };

// min objective·u  subject to  row·u = rhs (equalities), row·u <= rhs
// (inequalities). Variables are free unless flagged in `nonnegative`
// (empty means all free).
struct LinearProgram {
    RatVec objective;
    std::vector<std::pair<RatVec, Rational>> equalities;
    std::vector<std::pair<RatVec, Rational>> inequalities;
    std::size_t variable_count = 0;
    std::vector<bool> nonnegative;
};

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    Rational value;  // set iff Optimal
    RatVec point;    // set iff Optimal
};

namespace detail {

// min cost·z  s.t.  m z = rhs, z >= 0.
struct StandardForm {
    RatMatrix m;
    RatVec rhs;
    RatVec cost;
};

struct StandardSolution {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    RatVec z;
    RatVec multipliers;  // one per original row; valid iff Optimal and requested
};

// Two-phase full-tableau simplex with Bland's anti-cycling rule. Exact
// rational arithmetic throughout; deterministic for identical input.
inline StandardSolution solve_standard(const StandardForm& sf, bool want_multipliers = false) {
    const std::size_t m = sf.m.size();
    const std::size_t n = sf.cost.size();
    for (const auto& row : sf.m)
        if (row.size() != n) throw std::logic_error("solve_standard: ragged matrix");
    if (sf.rhs.size() != m) throw std::logic_error("solve_standard: rhs size");

    const std::size_t width = n + m + 1;  // structurals, artificials, rhs
    const std::size_t rhs_col = n + m;

    std::vector<bool> flipped(m, false);
    std::vector<RatVec> tab(m, RatVec(width, Rational(0)));
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = sf.rhs[r] < 0;
        flipped[r] = flip;
        for (std::size_t j = 0; j < n; ++j) tab[r][j] = flip ? -sf.m[r][j] : sf.m[r][j];
        tab[r][n + r] = 1;
        tab[r][rhs_col] = flip ? -sf.rhs[r] : sf.rhs[r];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;
    std::vector<bool> row_alive(m, true);

    // Reduced-cost rows; last slot holds -(current objective).
    RatVec phase1(width, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) phase1[j] -= tab[r][j];
        phase1[rhs_col] -= tab[r][rhs_col];
    }
    RatVec phase2(width, Rational(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = sf.cost[j];

    // `factor` is taken by value: callers pass an element of `row` itself.
    const auto eliminate = [&](RatVec& row, const RatVec& pivot_row, const Rational factor) {
        if (factor == 0) return;
        for (std::size_t j = 0; j < width; ++j)
            if (pivot_row[j] != 0) row[j] -= factor * pivot_row[j];
    };
    const auto pivot = [&](std::size_t pr, std::size_t pc, bool both_cost_rows) {
        const Rational p = tab[pr][pc];
        for (std::size_t j = 0; j < width; ++j)
            if (tab[pr][j] != 0) tab[pr][j] /= p;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == pr || !row_alive[r]) continue;
            eliminate(tab[r], tab[pr], tab[r][pc]);
        }
        eliminate(phase2, tab[pr], phase2[pc]);
        if (both_cost_rows) eliminate(phase1, tab[pr], phase1[pc]);
        basis[pr] = pc;
    };

    // Bland: smallest eligible entering column; leaving row by minimum
    // ratio, ties broken by smallest basic variable index.
    const auto run = [&](RatVec& costrow, bool allow_artificial, bool in_phase1) -> bool {
        for (;;) {
            const std::size_t limit = allow_artificial ? n + m : n;
            std::size_t entering = width;
            for (std::size_t j = 0; j < limit; ++j) {
                if (costrow[j] < 0) { entering = j; break; }
            }
            if (entering == width) return true;
            std::size_t leaving = m;
            Rational best_ratio;
            for (std::size_t r = 0; r < m; ++r) {
                if (!row_alive[r] || tab[r][entering] <= 0) continue;
                const Rational ratio = tab[r][rhs_col] / tab[r][entering];
                if (leaving == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving == m) return false;  // unbounded ray
            pivot(leaving, entering, in_phase1);
        }
    };

    if (!run(phase1, true, true))
        throw std::logic_error("solve_standard: phase 1 unbounded");
    StandardSolution out;
    if (-phase1[rhs_col] > 0) {
        out.status = LPStatus::Infeasible;
        return out;
    }
    // Drive leftover artificials out of the basis; a row that cannot pivot
    // on any structural column is redundant (0 = 0) and is retired.
    for (std::size_t r = 0; r < m; ++r) {
        if (!row_alive[r] || basis[r] < n) continue;
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j)
            if (tab[r][j] != 0) { col = j; break; }
        if (col < n)
            pivot(r, col, false);
        else
            row_alive[r] = false;
    }

    if (!run(phase2, false, false)) {
        out.status = LPStatus::Unbounded;
        return out;
    }
    out.status = LPStatus::Optimal;
    out.z.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
        if (row_alive[r] && basis[r] < n) out.z[basis[r]] = tab[r][rhs_col];
    out.value = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (out.z[j] != 0) out.value += sf.cost[j] * out.z[j];
    if (want_multipliers) {
        // The maintained cost row equals cost - pi·[M|I], so the entries
        // under the artificial identity block expose pi directly.
        out.multipliers.assign(m, Rational(0));
        for (std::size_t r = 0; r < m; ++r) {
            Rational pi = -phase2[n + r];
            out.multipliers[r] = flipped[r] ? -pi : pi;
        }
    }
    return out;
}

}  // namespace detail

inline void validate_program(const LinearProgram& prog) {
    if (prog.objective.size() != prog.variable_count)
        throw InputError("lp: objective length does not match variable count");
    if (!prog.nonnegative.empty() && prog.nonnegative.size() != prog.variable_count)
        throw InputError("lp: nonnegative flags length does not match variable count");
    for (const auto& [row, rhs] : prog.equalities)
        if (row.size() != prog.variable_count) throw InputError("lp: equality row has wrong length");
    for (const auto& [row, rhs] : prog.inequalities)
        if (row.size() != prog.variable_count) throw InputError("lp: inequality row has wrong length");
}

// Exact optimum over the rationals. Optimal outcomes are re-substituted
// into every constraint before being returned.
inline LPOutcome lp_solve(const LinearProgram& prog) {
    validate_program(prog);
    const std::size_t nv = prog.variable_count;
    const auto is_nonneg = [&](std::size_t k) {
        return !prog.nonnegative.empty() && prog.nonnegative[k];
    };

    std::vector<std::size_t> pos_col(nv), neg_col(nv, std::numeric_limits<std::size_t>::max());
    std::size_t ncols = 0;
    for (std::size_t k = 0; k < nv; ++k) {
        pos_col[k] = ncols++;
        if (!is_nonneg(k)) neg_col[k] = ncols++;
    }
    const std::size_t slack_base = ncols;
    ncols += prog.inequalities.size();

    detail::StandardForm sf;
    sf.cost.assign(ncols, Rational(0));
    for (std::size_t k = 0; k < nv; ++k) {
        sf.cost[pos_col[k]] = prog.objective[k];
        if (neg_col[k] != std::numeric_limits<std::size_t>::max())
            sf.cost[neg_col[k]] = -prog.objective[k];
    }
    const auto expand_row = [&](const RatVec& row) {
        RatVec out(ncols, Rational(0));
        for (std::size_t k = 0; k < nv; ++k) {
            if (row[k] == 0) continue;
            out[pos_col[k]] = row[k];
            if (neg_col[k] != std::numeric_limits<std::size_t>::max()) out[neg_col[k]] = -row[k];
        }
        return out;
    };
    for (const auto& [row, rhs] : prog.equalities) {
        sf.m.push_back(expand_row(row));
        sf.rhs.push_back(rhs);
    }
    for (std::size_t i = 0; i < prog.inequalities.size(); ++i) {
        RatVec r = expand_row(prog.inequalities[i].first);
        r[slack_base + i] = 1;
        sf.m.push_back(std::move(r));
        sf.rhs.push_back(prog.inequalities[i].second);
    }

    const auto sol = detail::solve_standard(sf);
    LPOutcome out;
    out.status = sol.status;
    if (sol.status != LPStatus::Optimal) return out;
    out.point.assign(nv, Rational(0));
    for (std::size_t k = 0; k < nv; ++k) {
        out.point[k] = sol.z[pos_col[k]];
        if (neg_col[k] != std::numeric_limits<std::size_t>::max())
            out.point[k] -= sol.z[neg_col[k]];
    }
    out.value = dot(prog.objective, out.point);
    for (const auto& [row, rhs] : prog.equalities)
        if (dot(row, out.point) != rhs) throw std::logic_error("lp_solve: equality re-substitution failed");
    for (const auto& [row, rhs] : prog.inequalities)
        if (dot(row, out.point) > rhs) throw std::logic_error("lp_solve: inequality re-substitution failed");
    return out;
}

// Same contract as lp_solve for programs whose variables are all free and
// whose row count dwarfs the variable count (functionals over many vertex
// constraints). Solves the dual in standard form, so the tableau keeps
// variable_count rows; the primal optimizer is recovered exactly from the
// final-basis multipliers and re-verified against every constraint.
inline LPOutcome lp_solve_dual(const LinearProgram& prog) {
    validate_program(prog);
    for (const bool flag : prog.nonnegative)
        if (flag) throw std::logic_error("lp_solve_dual: expects free variables only");

    const std::size_t p = prog.variable_count;
    const std::size_t me = prog.equalities.size();
    const std::size_t mi = prog.inequalities.size();

    detail::StandardForm sf;
    sf.m.assign(p, RatVec(2 * me + mi, Rational(0)));
    sf.cost.assign(2 * me + mi, Rational(0));
    sf.rhs = prog.objective;
    for (std::size_t j = 0; j < me; ++j) {
        const auto& [row, f] = prog.equalities[j];
        for (std::size_t r = 0; r < p; ++r) {
            sf.m[r][2 * j] = row[r];
            sf.m[r][2 * j + 1] = -row[r];
        }
        sf.cost[2 * j] = -f;
        sf.cost[2 * j + 1] = f;
    }
    for (std::size_t i = 0; i < mi; ++i) {
        const auto& [row, g] = prog.inequalities[i];
        for (std::size_t r = 0; r < p; ++r) sf.m[r][2 * me + i] = -row[r];
        sf.cost[2 * me + i] = g;
    }

    const auto sol = detail::solve_standard(sf, /*want_multipliers=*/true);
    LPOutcome out;
    if (sol.status == LPStatus::Unbounded) {
        out.status = LPStatus::Infeasible;
        return out;
    }
    if (sol.status == LPStatus::Infeasible) {
        out.status = LPStatus::Unbounded;
        return out;
    }
    out.status = LPStatus::Optimal;
    out.point.assign(p, Rational(0));
    for (std::size_t r = 0; r < p; ++r) out.point[r] = -sol.multipliers[r];
    out.value = -sol.value;
    if (dot(prog.objective, out.point) != out.value)
        throw std::logic_error("lp_solve_dual: objective mismatch");
    for (const auto& [row, f] : prog.equalities)
        if (dot(row, out.point) != f) throw std::logic_error("lp_solve_dual: equality violated");
    for (const auto& [row, g] : prog.inequalities)
        if (dot(row, out.point) > g) throw std::logic_error("lp_solve_dual: inequality violated");
    return out;
}

}  // namespace stategeom
