#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

namespace lrgap {

/// Even real 1-periodic trigonometric polynomial
///   f(x) = c_0 + 2 * sum_{k=1..D} c_k cos(2 pi k x),
/// so c_k is the Fourier coefficient at both +k and -k.
class TrigPoly {
public:
    TrigPoly() : coeffs_(1, 0.0) {}
    explicit TrigPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(0.0);
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff(int k) const {
        const int a = k < 0 ? -k : k;
        return a < static_cast<int>(coeffs_.size()) ? coeffs_[a] : 0.0;
    }

    /// Mass, i.e. the mean value / zeroth Fourier coefficient.
    double mass() const { return coeffs_[0]; }

    double eval(double x) const {
        // cos(k th) by the three-term recurrence.
        const double th = 2.0 * std::numbers::pi * x;
        const double c = std::cos(th);
        double ckm1 = 1.0, ck = c;
        double s = coeffs_[0];
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            s += 2.0 * coeffs_[k] * ck;
            const double next = 2.0 * c * ck - ckm1;
            ckm1 = ck;
            ck = next;
        }
        return s;
    }

    /// Valid sup-norm bound |c_0| + 2 sum |c_k|.
    double sup_norm_bound() const {
        double b = std::abs(coeffs_[0]);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            b += 2.0 * std::abs(coeffs_[k]);
        return b;
    }

private:
    std::vector<double> coeffs_;
};

/// Fejer kernel K_m of degree m-1: coefficients c_j = 1 - j/m, equal to
/// (1/m)(sin(pi m x)/sin(pi x))^2 pointwise.
inline TrigPoly fejer(int m) {
    if (m < 1) throw std::invalid_argument("fejer: m >= 1");
    std::vector<double> c(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        c[static_cast<std::size_t>(j)] = 1.0 - static_cast<double>(j) / m;
    return TrigPoly(std::move(c));
}

/// cos(pi v x)^2 = 1/2 + (1/2) cos(2 pi v x).
inline TrigPoly cos_sq(int v) {
    if (v < 1) throw std::invalid_argument("cos_sq: v >= 1");
    std::vector<double> c(static_cast<std::size_t>(v) + 1, 0.0);
    c[0] = 0.5;
    c[static_cast<std::size_t>(v)] = 0.25;
    return TrigPoly(std::move(c));
}

/// g(x) = f(a x): coefficient at a*k equals c_k, zero elsewhere.
inline TrigPoly dilate(const TrigPoly& f, int a) {
    if (a < 1) throw std::invalid_argument("dilate: a >= 1");
    std::vector<double> c(static_cast<std::size_t>(f.degree()) * a + 1, 0.0);
    for (int k = 0; k <= f.degree(); ++k)
        c[static_cast<std::size_t>(k) * a] = f.coeff(k);
    return TrigPoly(std::move(c));
}

/// f + s (adds s to the constant coefficient only).
inline TrigPoly shift_const(const TrigPoly& f, double s) {
    std::vector<double> c = f.coeffs();
    c[0] += s;
    return TrigPoly(std::move(c));
}

/// Recovers the cosine coefficients of an even trigonometric polynomial
/// of degree <= D from samples at M = 2D+1 points x_j = (j+offset)/M.
/// The sine-part sums must vanish for an even trig poly; their energy is
/// checked against 1e-9 and the recovery rejected otherwise.
inline TrigPoly dft_coeffs(const std::function<double(double)>& sample_fn,
                           int D, double offset = 0.0) {
    if (D < 0) throw std::invalid_argument("dft_coeffs: D >= 0");
    const int M = 2 * D + 1;
    std::vector<double> samples(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j)
        samples[static_cast<std::size_t>(j)] = sample_fn((j + offset) / M);

    std::vector<double> c(static_cast<std::size_t>(D) + 1, 0.0);
    double worst_odd = 0.0;
    for (int k = 0; k <= D; ++k) {
        double re = 0.0, im = 0.0;
        for (int j = 0; j < M; ++j) {
            const double th = 2.0 * std::numbers::pi * k * (j + offset) / M;
            re += samples[static_cast<std::size_t>(j)] * std::cos(th);
            im += samples[static_cast<std::size_t>(j)] * std::sin(th);
        }
        c[static_cast<std::size_t>(k)] = re / M;
        worst_odd = std::max(worst_odd, std::abs(im / M));
    }
    if (worst_odd > 1e-9)
        throw std::domain_error(
            "dft_coeffs: input is not an even trig poly of degree <= D "
            "(odd/imaginary energy " + std::to_string(worst_odd) + ")");
    return TrigPoly(std::move(c));
}

/// Rigorous lower bound for min over [lo,hi], with the audit data that
/// justifies it.
struct CertifiedExtremum {
    double bound = 0.0;          // guaranteed <= true min over [lo,hi]
    std::int64_t grid_points = 0;
    double sup_norm_bound = 0.0; // B = |c_0| + 2 sum |c_k|
    double derivative_bound = 0.0; // 2 pi D B, by the Bernstein inequality
    double margin = 0.0;         // (best sampled value) - bound
};

/// Certified minimum of f over [lo,hi]: each interval is bounded below
/// by f(center) - |f'|_max * width/2, and intervals are bisected until
/// the global bound is within 1e-8*max(1,B) of the best sampled value.
/// A uniform grid at that slack would be astronomically fine for large
/// degrees, so refinement is adaptive with the same Bernstein slack.
inline CertifiedExtremum rigorous_min(const TrigPoly& f, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("rigorous_min: need lo < hi");
    CertifiedExtremum out;
    out.sup_norm_bound = f.sup_norm_bound();
    out.derivative_bound =
        2.0 * std::numbers::pi * f.degree() * out.sup_norm_bound;
    const double tol = 1e-8 * std::max(1.0, out.sup_norm_bound);

    struct Interval {
        double lb;      // certified lower bound on this interval
        double center;
        double half;    // half width
        bool operator<(const Interval& o) const { return lb > o.lb; }
    };
    std::priority_queue<Interval> heap;
    double best_sample = std::numeric_limits<double>::infinity();
    const int K0 = std::max(64, 8 * std::max(1, f.degree()));
    std::int64_t evals = 0;
    auto push = [&](double center, double half) {
        const double val = f.eval(center);
        ++evals;
        best_sample = std::min(best_sample, val);
        heap.push({val - out.derivative_bound * half, center, half});
    };
    const double w = (hi - lo) / K0;
    for (int i = 0; i < K0; ++i) push(lo + (i + 0.5) * w, w / 2.0);

    const std::int64_t max_evals = 50'000'000;
    while (heap.top().lb < best_sample - tol && evals < max_evals) {
        const Interval iv = heap.top();
        heap.pop();
        push(iv.center - iv.half / 2.0, iv.half / 2.0);
        push(iv.center + iv.half / 2.0, iv.half / 2.0);
    }
    out.bound = heap.top().lb;
    out.grid_points = evals;
    out.margin = best_sample - out.bound;
    return out;
}

/// Periodized hat function (delta - ||x||)_+.
inline double hat(double delta, double x) {
    if (!(delta > 0.0 && delta <= 0.5))
        throw std::invalid_argument("hat: need 0 < delta <= 1/2");
    double fx = x - std::floor(x);
    const double dist = fx < 0.5 ? fx : 1.0 - fx;
    return std::max(0.0, delta - dist);
}

/// Fourier coefficient of the hat: (sin(pi delta k)/(pi k))^2, delta^2 at k=0.
inline double hat_coeff(double delta, std::int64_t k) {
    if (!(delta > 0.0 && delta <= 0.5))
        throw std::invalid_argument("hat_coeff: need 0 < delta <= 1/2");
    if (k == 0) return delta * delta;
    const double s = std::sin(std::numbers::pi * delta * k) /
                     (std::numbers::pi * k);
    return s * s;
}

/// Closed-form optimizer for the improved lower bound at denominator q:
///   f(x) = K_q(a x) (1 - cos(pi/q)^2) / (cos(pi a x)^2 - cos(pi/q)^2),
/// recovered as an explicit TrigPoly of degree a(q-1). Singularities of
/// the quotient are removable; the sampling grid is phase-shifted when a
/// sample point lands on one. Internal checks: f(0) = q, mass = 1.
inline TrigPoly thm31_poly(int a, int q) {
    if (a < 1 || q < 3) throw std::invalid_argument("thm31_poly: a >= 1, q >= 3");
    if (std::gcd(a, q) != 1)
        throw std::invalid_argument("thm31_poly: gcd(a,q) must be 1");

    const TrigPoly Kq = fejer(q);
    const double cq = std::cos(std::numbers::pi / q);
    const double cq2 = cq * cq;
    auto quotient = [&](double x) {
        const double ca = std::cos(std::numbers::pi * a * x);
        return Kq.eval(a * x) * (1.0 - cq2) / (ca * ca - cq2);
    };

    const int D = a * (q - 1);
    const int M = 2 * D + 1;
    // Singular where cos(pi a x)^2 = cos(pi/q)^2, i.e. a x = m +- 1/q.
    auto grid_is_safe = [&](double offset) {
        for (int j = 0; j < M; ++j) {
            const double ax = a * (j + offset) / M;
            double r = ax - std::floor(ax);
            for (const double s : {1.0 / q, 1.0 - 1.0 / q})
                if (std::abs(r - s) < 1e-9) return false;
        }
        return true;
    };
    const double offset = grid_is_safe(0.0) ? 0.0 : 0.25;
    if (offset != 0.0 && !grid_is_safe(offset))
        throw std::domain_error("thm31_poly: no singularity-free grid found");

    TrigPoly f = dft_coeffs(quotient, D, offset);
    if (std::abs(f.eval(0.0) - q) > 1e-8)
        throw std::domain_error("thm31_poly: check f(0)=q failed");
    if (std::abs(f.mass() - 1.0) > 1e-8)
        throw std::domain_error("thm31_poly: check mass=1 failed");
    return f;
}

}  // namespace lrgap
