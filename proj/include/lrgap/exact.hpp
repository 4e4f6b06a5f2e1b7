#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "lrgap/rational.hpp"

namespace lrgap {

/// Strictly increasing positive integer speeds v = (v_1,...,v_{n-1});
/// the stationary runner is not listed, so the runner count is size()+1.
class SpeedVector {
public:
    explicit SpeedVector(std::vector<std::int64_t> speeds)
        : speeds_(std::move(speeds)) {
        if (speeds_.empty())
            throw std::invalid_argument("SpeedVector: empty");
        if (speeds_.front() < 1)
            throw std::invalid_argument("SpeedVector: speeds must be positive");
        for (std::size_t i = 1; i < speeds_.size(); ++i)
            if (speeds_[i] <= speeds_[i - 1])
                throw std::invalid_argument(
                    "SpeedVector: speeds must be strictly increasing");
    }

    const std::vector<std::int64_t>& speeds() const { return speeds_; }
    std::size_t size() const { return speeds_.size(); }
    std::int64_t max_speed() const { return speeds_.back(); }
    std::int64_t runners() const {
        return static_cast<std::int64_t>(speeds_.size()) + 1;
    }
    std::int64_t operator[](std::size_t i) const { return speeds_[i]; }

    bool contains(std::int64_t s) const {
        return std::binary_search(speeds_.begin(), speeds_.end(), s);
    }

private:
    std::vector<std::int64_t> speeds_;
};

struct GapResult {
    Rational gap;                     // the value delta
    Rational t_min;                   // smallest maximizer in (0,1), lowest terms
    std::vector<Rational> maximizers; // all candidate maximizers, sorted
    std::int64_t q = 0;               // denominator of t_min
    std::int64_t candidate_count = 0;
};

/// Distance to the nearest integer, ||x|| in [0, 1/2].
inline Rational dist_to_nearest_integer(const Rational& x) {
    const Rational f = x.frac();
    return min(f, Rational(1) - f);
}

/// mu(t v) = min_i || t * v_i ||.
inline Rational mu(const SpeedVector& v, const Rational& t) {
    Rational best = Rational(1, 2);
    for (const std::int64_t s : v.speeds())
        best = min(best, dist_to_nearest_integer(t * Rational(s)));
    return best;
}

namespace detail {

inline void add_divisors(std::int64_t m, std::set<std::int64_t>& out) {
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.insert(d);
            out.insert(m / d);
        }
    }
}

/// Denominators q covering every local maximum of t -> mu(t v):
/// divisors of every |v_j +- v_i| with i != j, plus divisors of every
/// 2 v_i (covers maxima produced by a single speed folding at 1/2).
inline std::set<std::int64_t> candidate_denominators(const SpeedVector& v) {
    std::set<std::int64_t> qs;
    const auto& s = v.speeds();
    for (std::size_t i = 0; i < s.size(); ++i) {
        add_divisors(2 * s[i], qs);
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            add_divisors(s[j] - s[i], qs);
            add_divisors(s[j] + s[i], qs);
        }
    }
    qs.erase(1);
    return qs;
}

}  // namespace detail

/// All reduced fractions p/q in (0,1) over the candidate denominators.
/// Reduced fractions with distinct denominators never coincide, so the
/// result is duplicate-free by construction.
inline std::vector<Rational> candidate_times(const SpeedVector& v) {
    std::vector<Rational> out;
    for (const std::int64_t q : detail::candidate_denominators(v))
        for (std::int64_t p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

/// Exact gap of loneliness: maximum of mu over the finite candidate set.
inline GapResult gap(const SpeedVector& v) {
    GapResult r;
    r.gap = Rational(0);
    const std::vector<Rational> cands = candidate_times(v);
    r.candidate_count = static_cast<std::int64_t>(cands.size());
    for (const Rational& t : cands) {
        const Rational m = mu(v, t);
        if (m > r.gap) {
            r.gap = m;
            r.maximizers.clear();
        }
        if (m == r.gap) r.maximizers.push_back(t);
    }
    r.t_min = r.maximizers.front();
    r.q = r.t_min.den();
    return r;
}

/// Floating-point grid maximum of mu over t = j/N; always a lower bound
/// on gap(v), and within max(v)/(2N) of it (mu is piecewise linear with
/// slopes bounded by max(v)).
inline double dense_grid_gap_lower(const SpeedVector& v, std::int64_t N) {
    if (N < 2) throw std::invalid_argument("dense_grid_gap_lower: N >= 2");
    double best = 0.0;
    const auto& s = v.speeds();
    for (std::int64_t j = 0; j < N; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(N);
        double m = 0.5;
        for (const std::int64_t vi : s) {
            double x = t * static_cast<double>(vi);
            x -= static_cast<std::int64_t>(x);
            const double d = x < 0.5 ? x : 1.0 - x;
            if (d < m) m = d;
        }
        if (m > best) best = m;
    }
    return best;
}

}  // namespace lrgap
