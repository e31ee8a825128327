#include "ultrafun/lp.hpp"

#include "ultrafun/matrix.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace uf::lp {

void Program::set_free(std::size_t j) {
    if (free_vars.size() != num_vars) free_vars.assign(num_vars, false);
    free_vars.at(j) = true;
}

void Program::add(Vector coeffs, Sense sense, Scalar rhs) {
    if (coeffs.size() != num_vars) throw std::invalid_argument("lp::Program::add: wrong coefficient count");
    constraints.push_back({std::move(coeffs), sense, std::move(rhs)});
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Rows 0..m-1 are constraints, row m is the reduced-cost row. The last column is
// the right-hand side; T(m, rhs) holds minus the current objective value.
struct Tableau {
    Matrix t;
    std::vector<std::size_t> basis;
    std::vector<bool> row_active;
    std::size_t m = 0, n = 0;

    void pivot(std::size_t r, std::size_t c) {
        Scalar inv = Scalar(1) / t(r, c);
        for (std::size_t j = 0; j <= n; ++j) t(r, j) *= inv;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == r || t(i, c) == 0) continue;
            Scalar f = t(i, c);
            for (std::size_t j = 0; j <= n; ++j) t(i, j) -= f * t(r, j);
        }
        basis[r] = c;
    }

    void load_objective(const Vector& cost) {
        for (std::size_t j = 0; j <= n; ++j) t(m, j) = j < n ? cost[j] : Scalar(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (!row_active[i]) continue;
            Scalar cb = cost[basis[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= n; ++j) t(m, j) -= cb * t(i, j);
        }
    }

    // Minimizes the loaded objective. Returns false when unbounded.
    bool run(const std::vector<bool>& allowed) {
        for (;;) {
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < n; ++j) {
                if (allowed[j] && t(m, j) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) return true;
            std::size_t leave = kNone;
            Scalar best;
            for (std::size_t i = 0; i < m; ++i) {
                if (!row_active[i] || t(i, enter) <= 0) continue;
                Scalar ratio = t(i, n) / t(i, enter);
                if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == kNone) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

Result solve(const Program& p) {
    const std::size_t nv = p.num_vars;
    std::vector<bool> is_free = p.free_vars.empty() ? std::vector<bool>(nv, false) : p.free_vars;
    if (is_free.size() != nv) throw std::invalid_argument("lp::solve: free_vars size mismatch");
    if (!p.objective.empty() && p.objective.size() != nv) throw std::invalid_argument("lp::solve: objective size mismatch");

    // Column layout: structural (split for free vars), slacks, artificials.
    std::vector<std::size_t> pos_col(nv), neg_col(nv, kNone);
    std::size_t col = 0;
    for (std::size_t j = 0; j < nv; ++j) {
        pos_col[j] = col++;
        if (is_free[j]) neg_col[j] = col++;
    }
    const std::size_t m = p.constraints.size();
    std::vector<std::size_t> slack_col(m, kNone);
    for (std::size_t i = 0; i < m; ++i)
        if (p.constraints[i].sense != Sense::Equal) slack_col[i] = col++;
    const std::size_t first_artificial = col;
    const std::size_t n = col + m;

    Tableau tab;
    tab.m = m;
    tab.n = n;
    tab.t = Matrix(m + 1, n + 1);
    tab.basis.assign(m, kNone);
    tab.row_active.assign(m, true);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = p.constraints[i];
        if (c.coeffs.size() != nv) throw std::invalid_argument("lp::solve: constraint size mismatch");
        Scalar flip = c.rhs < 0 ? Scalar(-1) : Scalar(1);
        for (std::size_t j = 0; j < nv; ++j) {
            tab.t(i, pos_col[j]) = flip * c.coeffs[j];
            if (neg_col[j] != kNone) tab.t(i, neg_col[j]) = -flip * c.coeffs[j];
        }
        if (slack_col[i] != kNone) tab.t(i, slack_col[i]) = flip * (c.sense == Sense::LessEq ? 1 : -1);
        tab.t(i, first_artificial + i) = 1;
        tab.t(i, n) = flip * c.rhs;
        tab.basis[i] = first_artificial + i;
    }

    // Phase 1.
    Vector phase1(n);
    for (std::size_t i = 0; i < m; ++i) phase1[first_artificial + i] = 1;
    tab.load_objective(phase1);
    std::vector<bool> allowed(n, true);
    tab.run(allowed);
    if (tab.t(m, n) != 0) return Result{Status::Infeasible, 0, {}};

    // Drive artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < first_artificial) continue;
        std::size_t c = kNone;
        for (std::size_t j = 0; j < first_artificial; ++j) {
            if (tab.t(i, j) != 0) {
                c = j;
                break;
            }
        }
        if (c == kNone)
            tab.row_active[i] = false;
        else
            tab.pivot(i, c);
    }
    for (std::size_t j = first_artificial; j < n; ++j) allowed[j] = false;

    // Phase 2.
    Vector cost(n);
    if (!p.objective.empty()) {
        Scalar s = p.maximize ? Scalar(-1) : Scalar(1);
        for (std::size_t j = 0; j < nv; ++j) {
            cost[pos_col[j]] = s * p.objective[j];
            if (neg_col[j] != kNone) cost[neg_col[j]] = -s * p.objective[j];
        }
    }
    tab.load_objective(cost);
    if (!tab.run(allowed)) return Result{Status::Unbounded, 0, {}};

    Vector values(n);
    for (std::size_t i = 0; i < m; ++i)
        if (tab.row_active[i]) values[tab.basis[i]] = tab.t(i, n);
    Result r;
    r.status = Status::Optimal;
    r.solution.assign(nv, 0);
    for (std::size_t j = 0; j < nv; ++j) {
        r.solution[j] = values[pos_col[j]];
        if (neg_col[j] != kNone) r.solution[j] -= values[neg_col[j]];
    }
    Scalar z = -tab.t(m, n);
    r.value = p.maximize ? Scalar(-z) : z;
    return r;
}

bool feasible(const Program& program) {
    Program q = program;
    q.objective.clear();
    return solve(q).status == Status::Optimal;
}

}  // namespace uf::lp
