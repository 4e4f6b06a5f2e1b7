// lrgap: exact gap-of-loneliness computation and certified LP bounds
// for integer speed vectors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrgap/bounds.hpp"
#include "lrgap/equality.hpp"
#include "lrgap/exact.hpp"
#include "lrgap/figure.hpp"
#include "lrgap/scan.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

lrgap::SpeedVector parse_speeds(const std::string& csv) {
    std::vector<std::int64_t> s;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            s.push_back(std::stoll(cell));
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse speed '" + cell + "'");
        }
    }
    return lrgap::SpeedVector(std::move(s));
}

int run_gap(const std::string& vstr, bool as_json, bool quiet) {
    const lrgap::SpeedVector v = parse_speeds(vstr);
    const lrgap::GapResult g = lrgap::gap(v);
    if (as_json) {
        json j;
        j["speeds"] = v.speeds();
        j["gap"] = {{"num", g.gap.num()}, {"den", g.gap.den()}};
        j["t_min"] = {{"num", g.t_min.num()}, {"den", g.t_min.den()}};
        j["q"] = g.q;
        j["candidate_count"] = g.candidate_count;
        json maxs = json::array();
        for (const auto& t : g.maximizers)
            maxs.push_back({{"num", t.num()}, {"den", t.den()}});
        j["maximizers"] = maxs;
        std::cout << j.dump(2) << "\n";
    } else if (!quiet) {
        std::cout << "gap = " << g.gap.str() << " at t = " << g.t_min.str()
                  << " (q = " << g.q << ")\n";
        std::cout << "maximizers:";
        for (const auto& t : g.maximizers) std::cout << ' ' << t.str();
        std::cout << "\n";
    }
    return kExitOk;
}

json bound_to_json(const lrgap::BoundResult& r) {
    json j;
    j["lp_value"] = r.lp_value;
    j["certified_value"] = r.certified_value;
    j["repair_shift"] = r.repair_shift;
    j["coefficient_repair"] = r.coefficient_repair;
    j["status"] = lrgap::to_string(r.status);
    j["degree"] = r.degree;
    j["samples"] = r.samples;
    j["assumes_vq"] = r.assumes_vq;
    return j;
}

int run_bound(const std::string& mode, const std::string& vstr, int q,
              int degree, int samples, bool no_certify, double coeff_box,
              const std::string& dump_poly, bool as_json, bool quiet) {
    const lrgap::SpeedVector v = parse_speeds(vstr);
    lrgap::BoundResult r;
    if (mode == "upper") {
        r = lrgap::lambda_plus(v, degree, samples, !no_certify, coeff_box);
    } else if (mode == "lower") {
        r = lrgap::lambda_minus(v, degree, samples, !no_certify, coeff_box);
    } else if (mode == "lower-q") {
        int qq = q;
        if (qq <= 0) qq = static_cast<int>(lrgap::gap(v).q);
        r = lrgap::lambda_minus_q(v, qq, degree, samples, !no_certify,
                                  coeff_box);
    } else {
        throw std::invalid_argument("bound mode must be upper|lower|lower-q");
    }

    if (r.status == lrgap::BoundStatus::Infeasible ||
        r.status == lrgap::BoundStatus::Unbounded) {
        std::cerr << "lrgap: LP " << lrgap::to_string(r.status)
                  << " (try raising --degree and --samples)\n";
        return kExitSolver;
    }
    if (as_json) {
        std::cout << bound_to_json(r).dump(2) << "\n";
    } else if (!quiet) {
        std::printf("lp_value        = %.12g\n", r.lp_value);
        std::printf("certified_value = %.12g\n", r.certified_value);
        std::printf("repair_shift    = %.3g\n", r.repair_shift);
        std::printf("status          = %s (degree %d, samples %d)\n",
                    lrgap::to_string(r.status), r.degree, r.samples);
    }
    if (!dump_poly.empty()) {
        std::ofstream os(dump_poly);
        if (!os) throw std::invalid_argument("cannot write " + dump_poly);
        for (const double c : r.polynomial.coeffs()) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", c);
            os << buf << '\n';
        }
    }
    return kExitOk;
}

int run_equality(const std::string& vstr, int q, bool as_json, bool quiet) {
    const lrgap::SpeedVector v = parse_speeds(vstr);
    const lrgap::GapResult g = lrgap::gap(v);
    const int qq = q > 0 ? q : static_cast<int>(g.q);
    const lrgap::EqualityCase c12 = lrgap::detect_thm12(v);
    lrgap::EqualityCase c31;
    if (qq >= 3) c31 = lrgap::detect_thm31(v, qq);

    json j;
    j["speeds"] = v.speeds();
    j["gap"] = g.gap.str();
    j["q"] = qq;
    j["thm12"] = c12.describe();
    j["thm31"] = c31.describe();
    if (c12.matched()) {
        const lrgap::SlacknessReport rep =
            lrgap::slackness_check(c12.polynomial, v);
        j["predicted_gap"] = c12.predicted_gap.str();
        j["slackness"] = {{"max_offsupport_coeff", rep.max_offsupport_coeff},
                          {"max_orbit_value", rep.max_orbit_value},
                          {"holds", rep.holds()}};
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else if (!quiet) {
        std::cout << "gap = " << g.gap.str() << " (q = " << qq << ")\n";
        std::cout << "upper-bound equality case: " << c12.describe() << "\n";
        std::cout << "lower-bound equality case: " << c31.describe() << "\n";
        if (c12.matched())
            std::cout << "slackness holds: "
                      << (j["slackness"]["holds"].get<bool>() ? "yes" : "no")
                      << "\n";
    }
    return kExitOk;
}

int run_scan(int n, std::int64_t max_speed, int count, std::uint64_t seed,
             bool exhaustive, int degree, int samples, int threads,
             const std::string& out, bool quiet) {
    const int k = n - 1;
    if (k < 1 || max_speed < k)
        throw std::invalid_argument("scan: need n >= 2 and max-speed >= n-1");
    std::vector<lrgap::SpeedVector> vectors =
        exhaustive ? lrgap::enumerate_vectors(k, max_speed)
                   : lrgap::generate_random_vectors(k, max_speed, count, seed);
    const std::vector<lrgap::ScanRow> rows =
        lrgap::scan_rows(vectors, threads, degree, samples);
    std::ofstream os(out);
    if (!os) throw std::invalid_argument("cannot write " + out);
    lrgap::write_csv(rows, os);
    if (!quiet)
        std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
    return kExitOk;
}

int run_figure(const std::string& input, const std::string& out, double vline,
               bool quiet) {
    std::ifstream is(input);
    if (!is) throw std::invalid_argument("cannot read " + input);
    std::vector<lrgap::ScanRow> rows;
    try {
        rows = lrgap::read_csv(is);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(e.what());
    }
    std::ofstream os(out);
    if (!os) throw std::invalid_argument("cannot write " + out);
    lrgap::write_figure_svg(rows, os, vline);
    if (!quiet)
        std::cout << "wrote figure for " << rows.size() << " rows to " << out
                  << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lonely-runner gaps and certified LP bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false, quiet = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_flag("--quiet", quiet, "suppress normal output");

    std::string vstr, mode, dump_poly, scan_out = "scan.csv";
    std::string fig_in, fig_out = "fig.svg";
    int q = 0, degree = 0, samples = 0, n = 6, count = 200, threads = 1;
    std::int64_t max_speed = 50;
    std::uint64_t seed = 1;
    bool no_certify = false, exhaustive = false;
    double vline = 1.0 / 6.0, coeff_box = 8.0;

    auto* cmd_gap = app.add_subcommand("gap", "exact gap of loneliness");
    cmd_gap->add_option("--v", vstr, "comma-separated speeds")->required();

    auto* cmd_bound = app.add_subcommand("bound", "certified LP bound");
    cmd_bound->add_option("mode", mode, "upper|lower|lower-q")->required();
    cmd_bound->add_option("--v", vstr, "comma-separated speeds")->required();
    cmd_bound->add_option("--q", q, "denominator for lower-q (default: from gap)");
    cmd_bound->add_option("--degree", degree, "polynomial degree");
    cmd_bound->add_option("--samples", samples, "sample points");
    cmd_bound->add_flag("--no-certify", no_certify, "skip rigorous repair");
    cmd_bound->add_option("--coeff-box", coeff_box,
                          "coefficient magnitude cap, 0 disables");
    cmd_bound->add_option("--dump-poly", dump_poly, "write coefficients to file");

    auto* cmd_eq = app.add_subcommand("equality", "closed-form equality cases");
    cmd_eq->add_option("--v", vstr, "comma-separated speeds")->required();
    cmd_eq->add_option("--q", q, "denominator (default: from gap)");

    auto* cmd_scan = app.add_subcommand("scan", "batch scan to CSV");
    cmd_scan->add_option("--n", n, "runner count (n-1 speeds)");
    cmd_scan->add_option("--max-speed", max_speed, "largest speed");
    cmd_scan->add_option("--count", count, "number of random vectors");
    cmd_scan->add_option("--seed", seed, "RNG seed");
    cmd_scan->add_flag("--exhaustive", exhaustive, "enumerate all vectors");
    cmd_scan->add_option("--degree", degree, "polynomial degree");
    cmd_scan->add_option("--samples", samples, "sample points");
    cmd_scan->add_option("--threads", threads, "worker threads");
    cmd_scan->add_option("--out", scan_out, "output CSV path");

    auto* cmd_fig = app.add_subcommand("figure", "scatter SVG from a scan CSV");
    cmd_fig->add_option("--input", fig_in, "scan CSV")->required();
    cmd_fig->add_option("--out", fig_out, "output SVG path");
    cmd_fig->add_option("--vline", vline, "vertical reference line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (cmd_gap->parsed()) return run_gap(vstr, as_json, quiet);
        if (cmd_bound->parsed())
            return run_bound(mode, vstr, q, degree, samples, no_certify,
                             coeff_box, dump_poly, as_json, quiet);
        if (cmd_eq->parsed()) return run_equality(vstr, q, as_json, quiet);
        if (cmd_scan->parsed())
            return run_scan(n, max_speed, count, seed, exhaustive, degree,
                            samples, threads, scan_out, quiet);
        if (cmd_fig->parsed()) return run_figure(fig_in, fig_out, vline, quiet);
    } catch (const std::invalid_argument& e) {
        std::cerr << "lrgap: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "lrgap: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
