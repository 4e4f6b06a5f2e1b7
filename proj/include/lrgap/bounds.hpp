#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "lrgap/exact.hpp"
#include "lrgap/lpcore.hpp"
#include "lrgap/trigpoly.hpp"

namespace lrgap {

/// One bound computation: which class (sign epsilon, optional q for the
/// improved lower bound), polynomial degree and sampling resolution.
struct BoundSpec {
    SpeedVector v;
    int epsilon = +1;  // +1: upper bound class; -1: lower bound class
    std::optional<int> q;
    int degree = 0;
    int samples = 0;
    bool certify = true;
    // Box |c_k| <= coeff_box confines the unbounded rays a sampled sign
    // region otherwise admits (the continuum optimizers have small
    // coefficients, so the box never cuts them off). 0 disables.
    double coeff_box = 8.0;

    void validate() const {
        if (epsilon != 1 && epsilon != -1)
            throw std::invalid_argument("BoundSpec: epsilon must be +-1");
        if (degree < v.max_speed())
            throw std::invalid_argument("BoundSpec: degree must be >= max speed");
        if (samples < 2)
            throw std::invalid_argument("BoundSpec: need at least 2 samples");
        if (q) {
            if (epsilon != -1)
                throw std::invalid_argument("BoundSpec: q requires epsilon = -1");
            if (*q < 3) throw std::invalid_argument("BoundSpec: q >= 3");
        } else if (epsilon == -1 && v.size() < 2) {
            throw std::invalid_argument(
                "BoundSpec: lower bound without q needs at least 2 speeds");
        }
    }

    /// Left endpoint of the sign region; the right endpoint is 1/2.
    double region_lo() const {
        if (epsilon == +1) return 0.0;
        if (q) return 1.0 / *q;
        return 1.0 / static_cast<double>(v[v.size() - 1] + v[v.size() - 2]);
    }
};

enum class BoundStatus { Certified, SolvedUncertified, Infeasible, Unbounded };

inline const char* to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::Certified: return "certified";
        case BoundStatus::SolvedUncertified: return "uncertified";
        case BoundStatus::Infeasible: return "infeasible";
        case BoundStatus::Unbounded: return "unbounded";
    }
    return "?";
}

struct BoundResult {
    double lp_value = 0.0;        // raw mass with f(0) normalized to 1
    TrigPoly polynomial;          // repaired, admissible when Certified
    double certified_value = 0.0;
    double repair_shift = 0.0;
    double coefficient_repair = 0.0;
    BoundStatus status = BoundStatus::Infeasible;
    int degree = 0;
    int samples = 0;
    bool assumes_vq = false;      // q-variant valid only under v in V_q
};

/// Assembles the sampled LP: variables (c_0,...,c_D) all free,
/// normalization f(0) = 1, sign constraints eps*f(x_j) >= 0 on a uniform
/// grid over the region (endpoints included), and eps*c_k <= 0 for every
/// k outside the speed support. Objective: minimize eps*c_0.
inline LinearProgram build_lp(const BoundSpec& spec) {
    spec.validate();
    const int D = spec.degree;
    const int nv = D + 1;
    const double eps = spec.epsilon;

    LinearProgram lp;
    lp.num_vars = nv;
    lp.objective.assign(static_cast<std::size_t>(nv), 0.0);
    lp.objective[0] = eps;
    if (spec.coeff_box > 0.0) {
        lp.lower.assign(static_cast<std::size_t>(nv), -spec.coeff_box);
        lp.upper.assign(static_cast<std::size_t>(nv), spec.coeff_box);
    }

    // Normalization c_0 + 2 sum c_k = 1 makes the mass objective linear.
    LinearProgram::Constraint norm;
    norm.coeffs.assign(static_cast<std::size_t>(nv), 2.0);
    norm.coeffs[0] = 1.0;
    norm.rel = Rel::EQ;
    norm.rhs = 1.0;
    lp.constraints.push_back(std::move(norm));

    const double lo = spec.region_lo(), hi = 0.5;
    for (int j = 0; j < spec.samples; ++j) {
        const double x = lo + (hi - lo) * j / (spec.samples - 1);
        LinearProgram::Constraint row;
        row.coeffs.resize(static_cast<std::size_t>(nv));
        row.coeffs[0] = eps;
        for (int k = 1; k <= D; ++k)
            row.coeffs[static_cast<std::size_t>(k)] =
                eps * 2.0 * std::cos(2.0 * std::numbers::pi * k * x);
        row.rel = Rel::GE;
        row.rhs = 0.0;
        lp.constraints.push_back(std::move(row));
    }

    for (int k = 1; k <= D; ++k) {
        if (spec.v.contains(k)) continue;
        LinearProgram::Constraint row;
        row.coeffs.assign(static_cast<std::size_t>(nv), 0.0);
        row.coeffs[static_cast<std::size_t>(k)] = eps;
        row.rel = Rel::LE;
        row.rhs = 0.0;
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

/// Turns a numerical LP solution into a rigorous bound by the
/// constant-shift repair: zero out wrong-signed coefficients outside the
/// support (charging twice their total), take a certified minimum of
/// eps*f over the continuous region, and shift by the combined defect.
inline BoundResult certify(const BoundSpec& spec, const LpOutcome& raw) {
    if (raw.status != LpStatus::Optimal)
        throw std::invalid_argument("certify: outcome is not Optimal");
    BoundResult res;
    res.degree = spec.degree;
    res.samples = spec.samples;
    res.assumes_vq = spec.q.has_value();
    const double eps = spec.epsilon;

    std::vector<double> c = raw.solution;
    res.lp_value = c[0];

    if (!spec.certify) {
        res.polynomial = TrigPoly(std::move(c));
        res.certified_value = res.lp_value;
        res.status = BoundStatus::SolvedUncertified;
        return res;
    }

    // Stage 1: coefficient repair.
    double coeff_damage = 0.0;
    for (int k = 1; k <= spec.degree; ++k) {
        if (spec.v.contains(k)) continue;
        const double viol = eps * c[static_cast<std::size_t>(k)];
        if (viol > 0.0) {
            coeff_damage += viol;
            c[static_cast<std::size_t>(k)] = 0.0;
        }
    }
    res.coefficient_repair = coeff_damage;
    TrigPoly f(std::move(c));

    // Stage 2: certified minimum of eps*f over the continuous region.
    std::vector<double> ef(f.coeffs());
    for (double& x : ef) x *= eps;
    const CertifiedExtremum cert = rigorous_min(TrigPoly(std::move(ef)),
                                                spec.region_lo(), 0.5);
    const double defect = std::max(0.0, -cert.bound) + 2.0 * coeff_damage;

    // Stage 3: constant shift g = f + eps*defect.
    res.repair_shift = eps * defect;
    res.polynomial = shift_const(f, res.repair_shift);
    if (eps < 0 && 1.0 - defect <= 1e-6) {
        res.certified_value = res.lp_value;
        res.status = BoundStatus::SolvedUncertified;
        return res;
    }
    res.certified_value = (res.lp_value + eps * defect) / (1.0 + eps * defect);
    res.status = BoundStatus::Certified;
    return res;
}

namespace detail {

inline BoundResult run_bound(const BoundSpec& spec) {
    const LpOutcome raw = solve(build_lp(spec));
    if (raw.status == LpStatus::Infeasible) {
        BoundResult r;
        r.status = BoundStatus::Infeasible;
        r.degree = spec.degree;
        r.samples = spec.samples;
        r.assumes_vq = spec.q.has_value();
        return r;
    }
    if (raw.status == LpStatus::Unbounded) {
        BoundResult r;
        r.status = BoundStatus::Unbounded;
        r.degree = spec.degree;
        r.samples = spec.samples;
        r.assumes_vq = spec.q.has_value();
        return r;
    }
    return certify(spec, raw);
}

inline int default_degree(const SpeedVector& v) {
    return static_cast<int>(2 * v.max_speed());
}
inline int default_samples(int degree) { return 8 * degree + 1; }

}  // namespace detail

/// Certified upper bound gap(v) <= lambda_plus(v).
inline BoundResult lambda_plus(const SpeedVector& v, int degree = 0,
                               int samples = 0, bool certify_flag = true,
                               double coeff_box = 8.0) {
    BoundSpec spec{v, +1, std::nullopt, 0, 0, certify_flag, coeff_box};
    spec.degree = degree > 0 ? degree : detail::default_degree(v);
    spec.samples = samples > 0 ? samples : detail::default_samples(spec.degree);
    return detail::run_bound(spec);
}

/// Certified lower bound lambda_minus(v) <= gap(v).
inline BoundResult lambda_minus(const SpeedVector& v, int degree = 0,
                                int samples = 0, bool certify_flag = true,
                                double coeff_box = 8.0) {
    BoundSpec spec{v, -1, std::nullopt, 0, 0, certify_flag, coeff_box};
    spec.degree = degree > 0 ? degree : detail::default_degree(v);
    spec.samples = samples > 0 ? samples : detail::default_samples(spec.degree);
    return detail::run_bound(spec);
}

/// Improved lower bound lambda_minus(v,q) <= gap(v), valid when the gap
/// is attained at a time with denominator q (v in V_q); the result
/// records that assumption.
inline BoundResult lambda_minus_q(const SpeedVector& v, int q, int degree = 0,
                                  int samples = 0, bool certify_flag = true,
                                  double coeff_box = 8.0) {
    BoundSpec spec{v, -1, q, 0, 0, certify_flag, coeff_box};
    spec.degree = degree > 0 ? degree : detail::default_degree(v);
    spec.samples = samples > 0 ? samples : detail::default_samples(spec.degree);
    return detail::run_bound(spec);
}

}  // namespace lrgap
