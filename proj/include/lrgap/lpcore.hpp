#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lrgap {

enum class Rel { LE, EQ, GE };

/// Dense linear program, minimization. Variables may carry optional
/// lower/upper bounds (infinite by default, i.e. free).
struct LinearProgram {
    struct Constraint {
        std::vector<double> coeffs;
        Rel rel = Rel::LE;
        double rhs = 0.0;
    };
    int num_vars = 0;
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    std::vector<double> lower;  // empty means all -inf
    std::vector<double> upper;  // empty means all +inf
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> solution;
    double objective_value = 0.0;
};

namespace detail {

constexpr double kPivTol = 1e-9;
constexpr double kFeasTol = 1e-8;
constexpr double kInf = std::numeric_limits<double>::infinity();

/// Two-phase primal simplex on a dense tableau. Dantzig pricing with a
/// Bland fallback after 5(m+n) iterations guarantees termination.
class Tableau {
public:
    Tableau(int rows, int cols)
        : m_(rows), n_(cols), t_((rows + 1) * (cols + 1), 0.0),
          basis_(rows, -1), priceable_(cols, true) {}

    double& at(int r, int c) { return t_[static_cast<std::size_t>(r) * (n_ + 1) + c]; }
    double& rhs(int r) { return at(r, n_); }
    double& cost(int c) { return at(m_, c); }
    double& objective() { return at(m_, n_); }
    void set_basis(int r, int c) { basis_[r] = c; }
    int basis(int r) const { return basis_[r]; }
    void forbid(int c) { priceable_[c] = false; }

    void pivot(int pr, int pc) {
        const double p = at(pr, pc);
        for (int c = 0; c <= n_; ++c) at(pr, c) /= p;
        for (int r = 0; r <= m_; ++r) {
            if (r == pr) continue;
            const double f = at(r, pc);
            if (f == 0.0) continue;
            double* row = &at(r, 0);
            const double* prow = &at(pr, 0);
            for (int c = 0; c <= n_; ++c) row[c] -= f * prow[c];
            at(r, pc) = 0.0;
        }
        basis_[pr] = pc;
    }

    /// Runs the simplex iterations on the current cost row.
    /// Returns false when the problem is unbounded below.
    bool iterate() {
        const std::int64_t bland_after = 5LL * (m_ + n_);
        const std::int64_t max_iters = 20000 + 200LL * (m_ + n_);
        for (std::int64_t it = 0; it < max_iters; ++it) {
            const bool bland = it >= bland_after;
            int pc = -1;
            double best = -kPivTol;
            for (int c = 0; c < n_; ++c) {
                if (!priceable_[c]) continue;
                const double rc = cost(c);
                if (rc < best) {
                    best = rc;
                    pc = c;
                    if (bland) break;
                }
            }
            if (pc < 0) return true;  // optimal

            int pr = -1;
            double best_ratio = kInf;
            for (int r = 0; r < m_; ++r) {
                const double a = at(r, pc);
                if (a > kPivTol) {
                    const double ratio = rhs(r) / a;
                    if (ratio < best_ratio - 1e-12 ||
                        (ratio < best_ratio + 1e-12 &&
                         (pr < 0 || basis_[r] < basis_[pr]))) {
                        best_ratio = ratio;
                        pr = r;
                    }
                }
            }
            if (pr < 0) return false;  // unbounded
            pivot(pr, pc);
        }
        throw std::runtime_error("simplex: iteration limit exceeded");
    }

    int rows() const { return m_; }
    int cols() const { return n_; }

private:
    int m_, n_;
    std::vector<double> t_;
    std::vector<int> basis_;
    std::vector<bool> priceable_;
};

}  // namespace detail

inline LpOutcome solve(const LinearProgram& lp) {
    using detail::kFeasTol;
    using detail::kInf;
    using detail::kPivTol;

    // Validation: dimensions and finiteness.
    if (lp.num_vars <= 0 ||
        static_cast<int>(lp.objective.size()) != lp.num_vars)
        throw std::invalid_argument("solve: objective size mismatch");
    for (const double c : lp.objective)
        if (!std::isfinite(c)) throw std::invalid_argument("solve: non-finite objective");
    for (const auto& con : lp.constraints) {
        if (static_cast<int>(con.coeffs.size()) != lp.num_vars)
            throw std::invalid_argument("solve: constraint size mismatch");
        if (!std::isfinite(con.rhs))
            throw std::invalid_argument("solve: non-finite rhs");
        for (const double a : con.coeffs)
            if (!std::isfinite(a)) throw std::invalid_argument("solve: non-finite coefficient");
    }
    std::vector<double> lb(lp.lower), ub(lp.upper);
    lb.resize(static_cast<std::size_t>(lp.num_vars), -kInf);
    ub.resize(static_cast<std::size_t>(lp.num_vars), kInf);

    // Presolve: fold singleton rows into variable bounds.
    std::vector<const LinearProgram::Constraint*> rows;
    for (const auto& con : lp.constraints) {
        int nz = -1, count = 0;
        for (int i = 0; i < lp.num_vars && count < 2; ++i)
            if (con.coeffs[static_cast<std::size_t>(i)] != 0.0) { nz = i; ++count; }
        if (count == 1) {
            const double a = con.coeffs[static_cast<std::size_t>(nz)];
            const double v = con.rhs / a;
            const bool le = (con.rel == Rel::LE) == (a > 0);
            if (con.rel == Rel::EQ) {
                lb[static_cast<std::size_t>(nz)] = std::max(lb[static_cast<std::size_t>(nz)], v);
                ub[static_cast<std::size_t>(nz)] = std::min(ub[static_cast<std::size_t>(nz)], v);
            } else if (le) {
                ub[static_cast<std::size_t>(nz)] = std::min(ub[static_cast<std::size_t>(nz)], v);
            } else {
                lb[static_cast<std::size_t>(nz)] = std::max(lb[static_cast<std::size_t>(nz)], v);
            }
        } else if (count == 0) {
            const bool ok = (con.rel == Rel::LE && con.rhs >= -kFeasTol) ||
                            (con.rel == Rel::GE && con.rhs <= kFeasTol) ||
                            (con.rel == Rel::EQ && std::abs(con.rhs) <= kFeasTol);
            if (!ok) return {LpStatus::Infeasible, {}, 0.0};
        } else {
            rows.push_back(&con);
        }
    }
    for (int i = 0; i < lp.num_vars; ++i)
        if (lb[static_cast<std::size_t>(i)] > ub[static_cast<std::size_t>(i)] + kFeasTol)
            return {LpStatus::Infeasible, {}, 0.0};

    // Variable transform to nonnegative simplex variables:
    //   free        x = y+ - y-
    //   [l, inf)    x = l + y
    //   (-inf, u]   x = u - y
    //   [l, u]      x = l + y, plus a bound row y <= u - l
    struct VarMap { int col = -1, col2 = -1; double base = 0.0, sign = 1.0; };
    std::vector<VarMap> vmap(static_cast<std::size_t>(lp.num_vars));
    int ncols = 0;
    std::vector<std::pair<int, double>> bound_rows;  // (col, cap)
    for (int i = 0; i < lp.num_vars; ++i) {
        auto& vm = vmap[static_cast<std::size_t>(i)];
        const double l = lb[static_cast<std::size_t>(i)], u = ub[static_cast<std::size_t>(i)];
        if (std::isinf(l) && std::isinf(u)) {
            vm.col = ncols++;
            vm.col2 = ncols++;
        } else if (std::isinf(u)) {
            vm.col = ncols++;
            vm.base = l;
        } else if (std::isinf(l)) {
            vm.col = ncols++;
            vm.base = u;
            vm.sign = -1.0;
        } else {
            vm.col = ncols++;
            vm.base = l;
            bound_rows.emplace_back(vm.col, u - l);
        }
    }

    const int m = static_cast<int>(rows.size() + bound_rows.size());
    const int n_struct = ncols;
    // Count slacks and artificials per row after shifting rhs by bases.
    std::vector<double> brow(static_cast<std::size_t>(m));
    std::vector<Rel> rrel(static_cast<std::size_t>(m));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        double b = rows[r]->rhs;
        for (int i = 0; i < lp.num_vars; ++i)
            b -= rows[r]->coeffs[static_cast<std::size_t>(i)] *
                 vmap[static_cast<std::size_t>(i)].base;
        brow[r] = b;
        rrel[r] = rows[r]->rel;
    }
    for (std::size_t k = 0; k < bound_rows.size(); ++k) {
        brow[rows.size() + k] = bound_rows[k].second;
        rrel[rows.size() + k] = Rel::LE;
    }

    // Shared tail: map simplex variables y back to the original x.
    auto finish = [&](const std::vector<double>& y) {
        LpOutcome out;
        out.status = LpStatus::Optimal;
        out.solution.resize(static_cast<std::size_t>(lp.num_vars));
        for (int i = 0; i < lp.num_vars; ++i) {
            const auto& vm = vmap[static_cast<std::size_t>(i)];
            double x = vm.base + vm.sign * y[static_cast<std::size_t>(vm.col)];
            if (vm.col2 >= 0) x -= y[static_cast<std::size_t>(vm.col2)];
            out.solution[static_cast<std::size_t>(i)] = x;
        }
        for (int i = 0; i < lp.num_vars; ++i)
            out.objective_value +=
                lp.objective[static_cast<std::size_t>(i)] *
                out.solution[static_cast<std::size_t>(i)];
        return out;
    };

    // Objective on the y variables.
    std::vector<double> cy(static_cast<std::size_t>(n_struct), 0.0);
    for (int i = 0; i < lp.num_vars; ++i) {
        const double ci = lp.objective[static_cast<std::size_t>(i)];
        const auto& vm = vmap[static_cast<std::size_t>(i)];
        cy[static_cast<std::size_t>(vm.col)] += ci * vm.sign;
        if (vm.col2 >= 0) cy[static_cast<std::size_t>(vm.col2)] -= ci;
    }

    // Tall problems (many rows, few variables) solve far faster through
    // the dual: min c'y, My >= d, y >= 0  <->  max d'u, M'u <= c, u >= 0.
    // The primal solution is read off the reduced costs of the dual's
    // slack columns at optimality.
    if (m > 3 * n_struct && n_struct <= 512 && m > 0) {
        std::vector<std::vector<double>> M;
        std::vector<double> dvec;
        auto push_canon = [&](const std::vector<double>& a, double b,
                              double sgn) {
            std::vector<double> row(a);
            for (double& x : row) x *= sgn;
            M.push_back(std::move(row));
            dvec.push_back(sgn * b);
        };
        std::vector<double> dense(static_cast<std::size_t>(n_struct));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::fill(dense.begin(), dense.end(), 0.0);
            for (int i = 0; i < lp.num_vars; ++i) {
                const double a = rows[r]->coeffs[static_cast<std::size_t>(i)];
                if (a == 0.0) continue;
                const auto& vm = vmap[static_cast<std::size_t>(i)];
                dense[static_cast<std::size_t>(vm.col)] += a * vm.sign;
                if (vm.col2 >= 0) dense[static_cast<std::size_t>(vm.col2)] -= a;
            }
            const Rel rel = rrel[r];
            if (rel != Rel::LE) push_canon(dense, brow[r], 1.0);
            if (rel != Rel::GE) push_canon(dense, brow[r], -1.0);
        }
        for (const auto& [col, cap] : bound_rows) {
            std::fill(dense.begin(), dense.end(), 0.0);
            dense[static_cast<std::size_t>(col)] = 1.0;
            push_canon(dense, cap, -1.0);
        }

        const int nu = static_cast<int>(M.size());
        detail::Tableau T(n_struct, nu + n_struct + n_struct);
        std::vector<int> dslack(static_cast<std::size_t>(n_struct), -1);
        int n_dart = 0;
        for (int j = 0; j < n_struct; ++j) {
            // Micro-perturbation of the dual rhs (the primal objective)
            // removes the degeneracy that stalls pivoting.
            double b = cy[static_cast<std::size_t>(j)] + 1e-8 * (1 + (j % 97));
            double sgn = 1.0;
            if (b < 0) { sgn = -1.0; b = -b; }
            for (int r = 0; r < nu; ++r)
                T.at(j, r) = sgn * M[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            T.rhs(j) = b;
            dslack[static_cast<std::size_t>(j)] = nu + j;
            T.at(j, nu + j) = sgn;  // slack for <=, surplus for flipped rows
            if (sgn < 0) {
                const int art = nu + n_struct + n_dart++;
                T.at(j, art) = 1.0;
                T.set_basis(j, art);
            } else {
                T.set_basis(j, nu + j);
            }
        }
        bool dual_ok = true;
        if (n_dart > 0) {
            for (int j = 0; j < n_struct; ++j) {
                if (T.basis(j) < nu + n_struct) continue;
                for (int c = 0; c < nu + n_struct; ++c)
                    if (c != T.basis(j)) T.cost(c) -= T.at(j, c);
                T.objective() -= T.rhs(j);
            }
            if (!T.iterate())
                throw std::runtime_error("simplex: dual phase 1 unbounded");
            if (-T.objective() > kFeasTol) {
                dual_ok = false;  // dual infeasible; fall back to direct
            } else {
                for (int j = 0; j < n_struct; ++j) {
                    if (T.basis(j) < nu + n_struct) continue;
                    for (int c = 0; c < nu + n_struct; ++c) {
                        if (std::abs(T.at(j, c)) > kPivTol) {
                            T.pivot(j, c);
                            break;
                        }
                    }
                }
            }
            for (int c = nu + n_struct; c < T.cols(); ++c) T.forbid(c);
        }
        if (dual_ok) {
            for (int c = 0; c <= T.cols(); ++c) T.cost(c) = 0.0;
            for (int r = 0; r < nu; ++r) T.cost(r) = -dvec[static_cast<std::size_t>(r)];
            for (int j = 0; j < n_struct; ++j) {
                const int b = T.basis(j);
                if (b < 0) continue;
                const double cb = T.cost(b);
                if (cb == 0.0) continue;
                for (int c = 0; c <= T.cols(); ++c)
                    T.at(n_struct, c) -= cb * T.at(j, c);
            }
            if (!T.iterate()) return {LpStatus::Infeasible, {}, 0.0};
            std::vector<double> y(static_cast<std::size_t>(n_struct));
            for (int j = 0; j < n_struct; ++j)
                y[static_cast<std::size_t>(j)] =
                    std::max(0.0, T.cost(dslack[static_cast<std::size_t>(j)]));
            return finish(y);
        }
    }

    int n_slack = 0, n_art = 0;
    std::vector<int> slack_col(static_cast<std::size_t>(m), -1);
    std::vector<int> art_col(static_cast<std::size_t>(m), -1);
    std::vector<double> rsign(static_cast<std::size_t>(m), 1.0);
    for (int r = 0; r < m; ++r) {
        Rel rel = rrel[static_cast<std::size_t>(r)];
        // A zero-rhs >= row flips to a <= row so its slack can start
        // basic; otherwise it would drag an artificial into phase 1.
        if (brow[static_cast<std::size_t>(r)] == 0 && rel == Rel::GE) {
            rsign[static_cast<std::size_t>(r)] = -1.0;
            rel = Rel::LE;
            rrel[static_cast<std::size_t>(r)] = rel;
        } else if (brow[static_cast<std::size_t>(r)] < 0) {
            rsign[static_cast<std::size_t>(r)] = -1.0;
            brow[static_cast<std::size_t>(r)] = -brow[static_cast<std::size_t>(r)];
            rel = rel == Rel::LE ? Rel::GE : (rel == Rel::GE ? Rel::LE : Rel::EQ);
            rrel[static_cast<std::size_t>(r)] = rel;
        }
        if (rel != Rel::EQ) slack_col[static_cast<std::size_t>(r)] = n_struct + n_slack++;
        if (rel != Rel::LE) ++n_art;
        // Deterministic micro-perturbation: homogeneous sign rows make
        // every vertex heavily degenerate and Dantzig pivoting stalls.
        // Magnitudes stay below the 1e-8 feasibility tolerance.
        brow[static_cast<std::size_t>(r)] += 1e-10 * (1 + (r % 97));
    }
    int next_art = n_struct + n_slack;
    for (int r = 0; r < m; ++r)
        if (rrel[static_cast<std::size_t>(r)] != Rel::LE)
            art_col[static_cast<std::size_t>(r)] = next_art++;

    detail::Tableau T(m, n_struct + n_slack + n_art);
    auto fill_struct = [&](int r, int i, double a) {
        const auto& vm = vmap[static_cast<std::size_t>(i)];
        T.at(r, vm.col) += a * vm.sign;
        if (vm.col2 >= 0) T.at(r, vm.col2) -= a;
    };
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const double s = rsign[r];
        for (int i = 0; i < lp.num_vars; ++i) {
            const double a = rows[r]->coeffs[static_cast<std::size_t>(i)];
            if (a != 0.0) fill_struct(static_cast<int>(r), i, s * a);
        }
    }
    for (std::size_t k = 0; k < bound_rows.size(); ++k)
        T.at(static_cast<int>(rows.size() + k), bound_rows[k].first) =
            rsign[rows.size() + k];

    for (int r = 0; r < m; ++r) {
        T.rhs(r) = brow[static_cast<std::size_t>(r)];
        const Rel rel = rrel[static_cast<std::size_t>(r)];
        if (slack_col[static_cast<std::size_t>(r)] >= 0)
            T.at(r, slack_col[static_cast<std::size_t>(r)]) = rel == Rel::LE ? 1.0 : -1.0;
        if (art_col[static_cast<std::size_t>(r)] >= 0) {
            T.at(r, art_col[static_cast<std::size_t>(r)]) = 1.0;
            T.set_basis(r, art_col[static_cast<std::size_t>(r)]);
        } else {
            T.set_basis(r, slack_col[static_cast<std::size_t>(r)]);
        }
    }

    // Phase 1: minimize the sum of artificials.
    if (n_art > 0) {
        for (int r = 0; r < m; ++r) {
            if (art_col[static_cast<std::size_t>(r)] < 0) continue;
            for (int c = 0; c < T.cols(); ++c)
                if (c != art_col[static_cast<std::size_t>(r)]) T.cost(c) -= T.at(r, c);
            T.objective() -= T.rhs(r);
        }
        if (!T.iterate())
            throw std::runtime_error("simplex: phase 1 unbounded");
        if (-T.objective() > kFeasTol) return {LpStatus::Infeasible, {}, 0.0};
        // Pivot leftover artificials out of the basis where possible.
        for (int r = 0; r < m; ++r) {
            if (T.basis(r) < n_struct + n_slack) continue;
            for (int c = 0; c < n_struct + n_slack; ++c) {
                if (std::abs(T.at(r, c)) > kPivTol) {
                    T.pivot(r, c);
                    break;
                }
            }
        }
        for (int c = n_struct + n_slack; c < T.cols(); ++c) T.forbid(c);
    }

    // Phase 2: original objective expressed through the current basis.
    for (int c = 0; c <= T.cols(); ++c) T.cost(c) = 0.0;
    for (int i = 0; i < lp.num_vars; ++i) {
        const double ci = lp.objective[static_cast<std::size_t>(i)];
        const auto& vm = vmap[static_cast<std::size_t>(i)];
        T.cost(vm.col) += ci * vm.sign;
        if (vm.col2 >= 0) T.cost(vm.col2) -= ci;
    }
    for (int r = 0; r < m; ++r) {
        const int b = T.basis(r);
        if (b < 0) continue;
        const double cb = T.cost(b);
        if (cb == 0.0) continue;
        for (int c = 0; c <= T.cols(); ++c) T.at(m, c) -= cb * T.at(r, c);
    }
    if (!T.iterate()) return {LpStatus::Unbounded, {}, 0.0};

    // Recover the original variables.
    std::vector<double> y(static_cast<std::size_t>(T.cols()), 0.0);
    for (int r = 0; r < m; ++r)
        if (T.basis(r) >= 0) y[static_cast<std::size_t>(T.basis(r))] = T.rhs(r);
    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.solution.resize(static_cast<std::size_t>(lp.num_vars));
    for (int i = 0; i < lp.num_vars; ++i) {
        const auto& vm = vmap[static_cast<std::size_t>(i)];
        double x = vm.base + vm.sign * y[static_cast<std::size_t>(vm.col)];
        if (vm.col2 >= 0) x -= y[static_cast<std::size_t>(vm.col2)];
        out.solution[static_cast<std::size_t>(i)] = x;
    }
    out.objective_value = 0.0;
    for (int i = 0; i < lp.num_vars; ++i)
        out.objective_value +=
            lp.objective[static_cast<std::size_t>(i)] *
            out.solution[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace lrgap
