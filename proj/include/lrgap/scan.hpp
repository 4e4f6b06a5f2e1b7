#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lrgap/bounds.hpp"
#include "lrgap/equality.hpp"
#include "lrgap/exact.hpp"

namespace lrgap {

/// One scan row: exact gap plus the three LP bounds for a single vector.
struct ScanRow {
    std::vector<std::int64_t> speeds;
    Rational gap_value;
    Rational t_min;
    std::int64_t q = 0;
    double lambda_plus = 0.0, lambda_plus_cert = 0.0;
    double lambda_minus = 0.0, lambda_minus_cert = 0.0;
    double lambda_minus_q = 0.0, lambda_minus_q_cert = 0.0;
    int degree = 0;
    int samples = 0;
    std::string status_plus, status_minus, status_minus_q;
};

inline const char* csv_header() {
    return "n,speeds,gap_num,gap_den,t_num,t_den,q,lambda_plus,"
           "lambda_plus_cert,lambda_minus,lambda_minus_cert,lambda_minus_q,"
           "lambda_minus_q_cert,degree,samples,status_plus,status_minus,"
           "status_minus_q";
}

namespace detail {

inline std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string join_speeds(const std::vector<std::int64_t>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(s[i]);
    }
    return out;
}

/// Deterministic bounded draw; modulo reduction keeps the stream
/// identical across platforms (std::uniform_int_distribution is not
/// specified portably).
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t bound) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bound));
}

}  // namespace detail

/// `count` distinct strictly increasing vectors of `k` speeds from
/// 1..max_speed, reproducible from the seed.
inline std::vector<SpeedVector> generate_random_vectors(int k,
                                                        std::int64_t max_speed,
                                                        int count,
                                                        std::uint64_t seed) {
    if (k < 1 || max_speed < k || count < 0)
        throw std::invalid_argument("generate_random_vectors: bad range");
    std::mt19937_64 rng(seed);
    std::set<std::vector<std::int64_t>> seen;
    std::vector<SpeedVector> out;
    while (static_cast<int>(out.size()) < count) {
        std::set<std::int64_t> pick;
        while (static_cast<int>(pick.size()) < k)
            pick.insert(1 + detail::draw(rng, max_speed));
        std::vector<std::int64_t> v(pick.begin(), pick.end());
        if (seen.insert(v).second) out.emplace_back(std::move(v));
    }
    return out;
}

/// All strictly increasing vectors of `k` speeds from 1..max_speed, in
/// lexicographic order.
inline std::vector<SpeedVector> enumerate_vectors(int k, std::int64_t max_speed) {
    if (k < 1 || max_speed < k)
        throw std::invalid_argument("enumerate_vectors: bad range");
    std::vector<SpeedVector> out;
    std::vector<std::int64_t> cur(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, std::int64_t lo) -> void {
        if (pos == k) {
            out.emplace_back(cur);
            return;
        }
        for (std::int64_t s = lo; s <= max_speed - (k - 1 - pos); ++s) {
            cur[static_cast<std::size_t>(pos)] = s;
            self(self, pos + 1, s + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

/// Full pipeline for one vector: exact gap, then the three bounds at the
/// given (or default) degree and sampling. q is taken from the smallest
/// maximizer's denominator.
inline ScanRow compute_row(const SpeedVector& v, int degree = 0,
                           int samples = 0) {
    ScanRow row;
    row.speeds = v.speeds();
    const GapResult g = gap(v);
    row.gap_value = g.gap;
    row.t_min = g.t_min;
    row.q = g.q;

    // Batch default: the smallest admissible degree. Per-vector quality
    // barely improves past it while the LP and certification costs grow
    // quadratically.
    const int D = degree > 0 ? degree : static_cast<int>(v.max_speed());
    const int N = samples > 0 ? samples : detail::default_samples(D);
    row.degree = D;
    row.samples = N;

    const BoundResult plus = lambda_plus(v, D, N);
    row.lambda_plus = plus.lp_value;
    row.lambda_plus_cert = plus.certified_value;
    row.status_plus = to_string(plus.status);

    if (v.size() >= 2) {
        const BoundResult minus = lambda_minus(v, D, N);
        row.lambda_minus = minus.lp_value;
        row.lambda_minus_cert = minus.certified_value;
        row.status_minus = to_string(minus.status);
    } else {
        row.status_minus = "skipped";
    }

    if (row.q >= 3) {
        const BoundResult mq = lambda_minus_q(v, static_cast<int>(row.q), D, N);
        row.lambda_minus_q = mq.lp_value;
        row.lambda_minus_q_cert = mq.certified_value;
        row.status_minus_q = to_string(mq.status);
    } else {
        row.status_minus_q = "skipped";
    }
    return row;
}

/// Computes rows for all vectors with a bounded worker pool; output
/// order matches the input order regardless of completion order.
inline std::vector<ScanRow> scan_rows(const std::vector<SpeedVector>& vectors,
                                      int threads = 1, int degree = 0,
                                      int samples = 0) {
    std::vector<ScanRow> rows(vectors.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < vectors.size(); ++i)
            rows[i] = compute_row(vectors[i], degree, samples);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= vectors.size()) return;
            rows[i] = compute_row(vectors[i], degree, samples);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rows;
}

inline std::string to_csv_line(const ScanRow& r) {
    std::string out;
    out += std::to_string(r.speeds.size() + 1);
    out += ',' + detail::join_speeds(r.speeds);
    out += ',' + std::to_string(r.gap_value.num());
    out += ',' + std::to_string(r.gap_value.den());
    out += ',' + std::to_string(r.t_min.num());
    out += ',' + std::to_string(r.t_min.den());
    out += ',' + std::to_string(r.q);
    out += ',' + detail::fmt_double(r.lambda_plus);
    out += ',' + detail::fmt_double(r.lambda_plus_cert);
    out += ',' + detail::fmt_double(r.lambda_minus);
    out += ',' + detail::fmt_double(r.lambda_minus_cert);
    out += ',' + detail::fmt_double(r.lambda_minus_q);
    out += ',' + detail::fmt_double(r.lambda_minus_q_cert);
    out += ',' + std::to_string(r.degree);
    out += ',' + std::to_string(r.samples);
    out += ',' + r.status_plus;
    out += ',' + r.status_minus;
    out += ',' + r.status_minus_q;
    return out;
}

inline void write_csv(const std::vector<ScanRow>& rows, std::ostream& os) {
    os << csv_header() << '\n';
    for (const ScanRow& r : rows) os << to_csv_line(r) << '\n';
}

/// Parses a scan CSV back into rows; throws std::runtime_error on a
/// missing column or malformed field.
inline std::vector<ScanRow> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("read_csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != csv_header())
        throw std::runtime_error("read_csv: unexpected header: " + line);
    std::vector<ScanRow> rows;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        if (f.size() != 18)
            throw std::runtime_error("read_csv: wrong field count at line " +
                                     std::to_string(lineno));
        try {
            ScanRow r;
            std::stringstream sp(f[1]);
            while (std::getline(sp, cell, ';')) r.speeds.push_back(std::stoll(cell));
            r.gap_value = Rational(std::stoll(f[2]), std::stoll(f[3]));
            r.t_min = Rational(std::stoll(f[4]), std::stoll(f[5]));
            r.q = std::stoll(f[6]);
            r.lambda_plus = std::stod(f[7]);
            r.lambda_plus_cert = std::stod(f[8]);
            r.lambda_minus = std::stod(f[9]);
            r.lambda_minus_cert = std::stod(f[10]);
            r.lambda_minus_q = std::stod(f[11]);
            r.lambda_minus_q_cert = std::stod(f[12]);
            r.degree = std::stoi(f[13]);
            r.samples = std::stoi(f[14]);
            r.status_plus = f[15];
            r.status_minus = f[16];
            r.status_minus_q = f[17];
            rows.push_back(std::move(r));
        } catch (const std::exception&) {
            throw std::runtime_error("read_csv: malformed field at line " +
                                     std::to_string(lineno));
        }
    }
    return rows;
}

}  // namespace lrgap
