#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <tuple>

#include "lrgap/exact.hpp"
#include "lrgap/trigpoly.hpp"

namespace lrgap {

/// Closed-form equality cases with their optimal polynomials.
struct EqualityCase {
    enum class Kind { None, AllOdd, FejerDilate, GcdReduce, Thm31 };
    Kind kind = Kind::None;
    int a = 0;  // dilation (FejerDilate, Thm31) or gcd factor (GcdReduce)
    int m = 0;  // kernel order (FejerDilate) or denominator q (Thm31)
    std::shared_ptr<EqualityCase> inner;  // set for GcdReduce
    TrigPoly polynomial;
    Rational predicted_gap;

    bool matched() const { return kind != Kind::None; }

    std::string describe() const {
        switch (kind) {
            case Kind::None: return "none";
            case Kind::AllOdd: return "all-odd";
            case Kind::FejerDilate:
                return "fejer-dilate(a=" + std::to_string(a) +
                       ", m=" + std::to_string(m) + ")";
            case Kind::GcdReduce:
                return "gcd-reduce(" + std::to_string(a) + ", " +
                       (inner ? inner->describe() : "?") + ")";
            case Kind::Thm31:
                return "thm31(a=" + std::to_string(a) +
                       ", q=" + std::to_string(m) + ")";
        }
        return "?";
    }
};

namespace detail {

inline std::int64_t gcd_of(const SpeedVector& v) {
    std::int64_t g = 0;
    for (const std::int64_t s : v.speeds()) g = std::gcd(g, s);
    return g;
}

/// Searches coprime pairs (a, m), smallest m then smallest a, with
/// a{1,...,m-1} contained in the speeds and every leftover speed not
/// divisible by m.
inline bool find_fejer_pair(const SpeedVector& v, int fixed_m, int& out_a,
                            int& out_m) {
    const std::int64_t vmax = v.max_speed();
    const int m_lo = fixed_m > 0 ? fixed_m : 2;
    const int m_hi = fixed_m > 0 ? fixed_m
                                 : static_cast<int>(vmax) + 1;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int a = 1; static_cast<std::int64_t>(a) * (m - 1) <= vmax; ++a) {
            if (std::gcd(a, m) != 1) continue;
            bool ok = true;
            for (int j = 1; j < m && ok; ++j)
                ok = v.contains(static_cast<std::int64_t>(a) * j);
            if (!ok) continue;
            for (const std::int64_t s : v.speeds()) {
                const bool in_au =
                    s % a == 0 && s / a >= 1 && s / a <= m - 1;
                if (!in_au && s % m == 0) { ok = false; break; }
            }
            if (!ok) continue;
            out_a = a;
            out_m = m;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Detects the closed-form equality cases for the upper bound:
/// gcd reduction first (canonical witness), then all-odd, then the
/// dilated-Fejer containment condition.
inline EqualityCase detect_thm12(const SpeedVector& v) {
    EqualityCase res;
    const std::int64_t g = detail::gcd_of(v);
    if (g > 1) {
        std::vector<std::int64_t> reduced;
        for (const std::int64_t s : v.speeds()) reduced.push_back(s / g);
        EqualityCase inner = detect_thm12(SpeedVector(std::move(reduced)));
        if (!inner.matched()) return res;
        res.kind = EqualityCase::Kind::GcdReduce;
        res.a = static_cast<int>(g);
        res.predicted_gap = inner.predicted_gap;
        res.polynomial = dilate(inner.polynomial, res.a);
        res.inner = std::make_shared<EqualityCase>(std::move(inner));
        return res;
    }

    bool all_odd = true;
    for (const std::int64_t s : v.speeds()) all_odd = all_odd && (s % 2 != 0);
    if (all_odd) {
        res.kind = EqualityCase::Kind::AllOdd;
        res.predicted_gap = Rational(1, 2);
        res.polynomial = cos_sq(static_cast<int>(v[0]));
        return res;
    }

    int a = 0, m = 0;
    if (detail::find_fejer_pair(v, 0, a, m)) {
        res.kind = EqualityCase::Kind::FejerDilate;
        res.a = a;
        res.m = m;
        res.predicted_gap = Rational(1, m);
        res.polynomial = dilate(fejer(m), a);
        return res;
    }
    return res;
}

/// Analogous detection for the improved lower bound with the kernel
/// order fixed to q; the optimal polynomial is the thm31 quotient.
inline EqualityCase detect_thm31(const SpeedVector& v, int q) {
    EqualityCase res;
    if (q < 3) return res;
    const std::int64_t g = detail::gcd_of(v);
    if (g > 1) {
        std::vector<std::int64_t> reduced;
        for (const std::int64_t s : v.speeds()) reduced.push_back(s / g);
        EqualityCase inner = detect_thm31(SpeedVector(std::move(reduced)), q);
        if (!inner.matched()) return res;
        res.kind = EqualityCase::Kind::GcdReduce;
        res.a = static_cast<int>(g);
        res.predicted_gap = inner.predicted_gap;
        res.polynomial = dilate(inner.polynomial, res.a);
        res.inner = std::make_shared<EqualityCase>(std::move(inner));
        return res;
    }
    int a = 0, m = 0;
    if (detail::find_fejer_pair(v, q, a, m)) {
        res.kind = EqualityCase::Kind::Thm31;
        res.a = a;
        res.m = q;
        res.predicted_gap = Rational(1, q);
        res.polynomial = thm31_poly(a, q);
        return res;
    }
    return res;
}

/// Complementary-slackness report: the largest coefficient outside the
/// speed support, and the largest |f| value on the maximizer's orbit
/// {k p / q : k in 1..q-1, b does not divide k}. Both tiny means the
/// bound is exact for v.
struct SlacknessReport {
    double max_offsupport_coeff = 0.0;  // condition (a), k=0 exempt
    double max_orbit_value = 0.0;       // condition (b)
    bool holds(double tol = 1e-8) const {
        return max_offsupport_coeff < tol && max_orbit_value < tol;
    }
};

inline SlacknessReport slackness_check(const TrigPoly& f, const SpeedVector& v) {
    SlacknessReport rep;
    for (int k = 1; k <= f.degree(); ++k)
        if (!v.contains(k))
            rep.max_offsupport_coeff =
                std::max(rep.max_offsupport_coeff, std::abs(f.coeff(k)));
    const GapResult g = gap(v);
    const std::int64_t b = g.gap.den();
    const std::int64_t p = g.t_min.num(), q = g.t_min.den();
    for (std::int64_t k = 1; k < q; ++k) {
        if (k % b == 0) continue;
        const double x = static_cast<double>(k) * p / static_cast<double>(q);
        rep.max_orbit_value = std::max(rep.max_orbit_value, std::abs(f.eval(x)));
    }
    return rep;
}

/// The three stages of the Montgomery-style inequality chain with
/// delta = gap(v) and t its smallest maximizer:
///   delta*fhat(0)  >=  sum_k fhat(k) h(t k)  >=  delta^2 f(0),
/// where h is the periodized hat of half-width delta. Both inequalities
/// hold for any member of the upper-bound class; equality characterizes
/// the exact cases.
struct MontgomeryChain {
    double lhs = 0.0;
    double mid = 0.0;
    double rhs = 0.0;
};

inline MontgomeryChain montgomery_chain(const TrigPoly& f, const SpeedVector& v) {
    const GapResult g = gap(v);
    const double delta = g.gap.to_double();
    const double t = g.t_min.to_double();
    MontgomeryChain ch;
    ch.lhs = delta * f.coeff(0);
    ch.mid = f.coeff(0) * hat(delta, 0.0);
    for (int k = 1; k <= f.degree(); ++k)
        ch.mid += 2.0 * f.coeff(k) * hat(delta, t * k);
    ch.rhs = delta * delta * f.eval(0.0);
    return ch;
}

/// Goddyn-Wong tight families: vectors with gap exactly 1/n whose gap is
/// attained at denominator n.
///   A: (1,2,...,n-3, n-1, 2n-4)       for n = 2 (mod 6),  n >= 8
///   B: (1,2,...,n-4, n-2, n-1, 2n-6)  for n = 3 (mod 30), n >= 33
inline SpeedVector goddyn_wong_family(int n, char variant) {
    std::vector<std::int64_t> s;
    if (variant == 'A') {
        if (n < 8 || n % 6 != 2)
            throw std::invalid_argument(
                "goddyn_wong_family A: need n = 2 (mod 6), n >= 8");
        for (int k = 1; k <= n - 3; ++k) s.push_back(k);
        s.push_back(n - 1);
        s.push_back(2 * n - 4);
    } else if (variant == 'B') {
        if (n < 33 || n % 30 != 3)
            throw std::invalid_argument(
                "goddyn_wong_family B: need n = 3 (mod 30), n >= 33");
        for (int k = 1; k <= n - 4; ++k) s.push_back(k);
        s.push_back(n - 2);
        s.push_back(n - 1);
        s.push_back(2 * n - 6);
    } else {
        throw std::invalid_argument("goddyn_wong_family: variant A or B");
    }
    return SpeedVector(std::move(s));
}

}  // namespace lrgap
