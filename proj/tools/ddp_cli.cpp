// Command-line front end for the hyperspherical delta-delta' library.
// Everything numerical goes through the public C API; this file only does
// argument handling and formatting.
//
// Exit codes: 0 success, 1 verification failure, 2 argument/domain error,
// 3 numerical convergence/evaluation error.

#include <ddp/ddp.h>

#include "scan_util.hpp"

#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitArgs = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(ddp_status st) {
    switch (st) {
        case DDP_OK: return 0;
        case DDP_ERR_DOMAIN: return kExitArgs;
        case DDP_ERR_NO_STATE: return 0; // reported as a marker, not an error
        case DDP_ERR_CONVERGENCE:
        case DDP_ERR_EVAL: return kExitNumeric;
    }
    return kExitNumeric;
}

int fail(ddp_status st) {
    std::cerr << "error (" << ddp_status_name(st) << "): " << ddp_last_error() << "\n";
    return exit_code_for(st);
}

using scan::fmt17;

struct ParamFlags {
    int d = 3;
    double w0 = 0.0, w1 = 0.0, x0 = 1.0;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f, bool need_w0) {
    cmd->add_option("--d", f.d, "spatial dimension (>= 2)")->required();
    if (need_w0) cmd->add_option("--w0", f.w0, "delta coupling")->required();
    cmd->add_option("--w1", f.w1, "delta-prime coupling")->required();
    cmd->add_option("--x0", f.x0, "hypersphere radius (> 0)")->required();
}

// ---- spectrum ----------------------------------------------------------

int run_spectrum(const ParamFlags& f, const std::string& format) {
    ddp_params* p = nullptr;
    if (ddp_status st = ddp_params_create(f.d, f.w0, f.w1, f.x0, &p); st != DDP_OK)
        return fail(st);
    ddp_spectrum* s = nullptr;
    ddp_status st = ddp_spectrum_compute(p, &s);
    ddp_params_free(p);
    if (st != DDP_OK) return fail(st);

    int n = ddp_spectrum_size(s);
    std::uint64_t running = 0;
    if (format == "table") {
        std::printf("%4s  %22s  %22s  %10s  %10s\n", "l", "kappa", "lambda", "deg", "N");
        for (int i = 0; i < n; ++i) {
            int ell;
            double kap, lam;
            std::uint64_t deg;
            ddp_spectrum_state(s, i, &ell, &kap, &lam, &deg);
            running += deg;
            std::printf("%4d  %22.15g  %22.15g  %10" PRIu64 "  %10" PRIu64 "\n", ell, kap, lam,
                        deg, running);
        }
        std::printf("total states (with degeneracy): %" PRIu64 "\n", ddp_spectrum_total(s));
    } else if (format == "csv") {
        std::printf("# params: d=%d w0=%s w1=%s x0=%s\n", f.d, fmt17(f.w0).c_str(),
                    fmt17(f.w1).c_str(), fmt17(f.x0).c_str());
        std::printf("l,kappa,lambda,deg,N\n");
        for (int i = 0; i < n; ++i) {
            int ell;
            double kap, lam;
            std::uint64_t deg;
            ddp_spectrum_state(s, i, &ell, &kap, &lam, &deg);
            running += deg;
            std::printf("%d,%s,%s,%" PRIu64 ",%" PRIu64 "\n", ell, fmt17(kap).c_str(),
                        fmt17(lam).c_str(), deg, running);
        }
    } else { // json
        std::printf("{\"params\":{\"d\":%d,\"w0\":%s,\"w1\":%s,\"x0\":%s},\"states\":[", f.d,
                    fmt17(f.w0).c_str(), fmt17(f.w1).c_str(), fmt17(f.x0).c_str());
        for (int i = 0; i < n; ++i) {
            int ell;
            double kap, lam;
            std::uint64_t deg;
            ddp_spectrum_state(s, i, &ell, &kap, &lam, &deg);
            std::printf("%s{\"l\":%d,\"kappa\":%s,\"lambda\":%s,\"deg\":%" PRIu64 "}",
                        i ? "," : "", ell, fmt17(kap).c_str(), fmt17(lam).c_str(), deg);
        }
        std::printf("],\"total\":%" PRIu64 "}\n", ddp_spectrum_total(s));
    }
    ddp_spectrum_free(s);
    return 0;
}

// ---- phase-shift -------------------------------------------------------

int run_phase_shift(const ParamFlags& f, int ell, const std::string& krange, bool unwrap,
                    const std::string& format) {
    scan::AxisSpec axis;
    try {
        axis = scan::parse_axis(krange, false);
    } catch (const std::exception& e) {
        std::cerr << "error (args): --k: " << e.what() << "\n";
        return kExitArgs;
    }
    ddp_params* p = nullptr;
    if (ddp_status st = ddp_params_create(f.d, f.w0, f.w1, f.x0, &p); st != DDP_OK)
        return fail(st);

    struct Row {
        double k, delta, re, im;
    };
    std::vector<Row> rows;
    for (double k : axis.values()) {
        Row r{k, 0, 0, 0};
        if (ddp_status st = ddp_phase_shift(p, ell, k, &r.delta, &r.re, &r.im); st != DDP_OK) {
            ddp_params_free(p);
            return fail(st);
        }
        rows.push_back(r);
    }
    ddp_params_free(p);

    if (unwrap) {
        // shift each delta by a multiple of pi to keep the curve continuous
        double offset = 0.0;
        for (size_t i = 1; i < rows.size(); ++i) {
            double prev = rows[i - 1].delta;
            double cur = rows[i].delta + offset;
            offset += M_PI * std::round((prev - cur) / M_PI);
            rows[i].delta += offset;
        }
    }

    if (format == "table") {
        std::printf("%22s  %22s  %22s  %22s\n", "k", "delta", "Re(S)", "Im(S)");
        for (const Row& r : rows)
            std::printf("%22.15g  %22.15g  %22.15g  %22.15g\n", r.k, r.delta, r.re, r.im);
    } else if (format == "csv") {
        std::printf("# params: d=%d l=%d w0=%s w1=%s x0=%s\n", f.d, ell, fmt17(f.w0).c_str(),
                    fmt17(f.w1).c_str(), fmt17(f.x0).c_str());
        std::printf("k,delta,s_re,s_im\n");
        for (const Row& r : rows)
            std::printf("%s,%s,%s,%s\n", fmt17(r.k).c_str(), fmt17(r.delta).c_str(),
                        fmt17(r.re).c_str(), fmt17(r.im).c_str());
    } else { // json
        std::printf("{\"params\":{\"d\":%d,\"l\":%d,\"w0\":%s,\"w1\":%s,\"x0\":%s},\"rows\":[",
                    f.d, ell, fmt17(f.w0).c_str(), fmt17(f.w1).c_str(), fmt17(f.x0).c_str());
        for (size_t i = 0; i < rows.size(); ++i)
            std::printf("%s{\"k\":%s,\"delta\":%s,\"s_re\":%s,\"s_im\":%s}", i ? "," : "",
                        fmt17(rows[i].k).c_str(), fmt17(rows[i].delta).c_str(),
                        fmt17(rows[i].re).c_str(), fmt17(rows[i].im).c_str());
        std::printf("]}\n");
    }
    return 0;
}

// ---- zero-mode ---------------------------------------------------------

int run_zero_mode(int d, int ell, double w1, double x0) {
    int exists = 0;
    double w0 = 0.0;
    if (ddp_status st = ddp_zero_mode_w0(d, ell, w1, x0, &exists, &w0); st != DDP_OK)
        return fail(st);
    if (!exists) {
        std::printf("none (eta>0)\n");
        return 0;
    }
    std::printf("w0 = %s\n", fmt17(w0).c_str());
    return 0;
}

// ---- mean-radius -------------------------------------------------------

int run_mean_radius(const ParamFlags& f, int ell) {
    ddp_params* p = nullptr;
    if (ddp_status st = ddp_params_create(f.d, f.w0, f.w1, f.x0, &p); st != DDP_OK)
        return fail(st);
    double ratio = 0.0;
    ddp_status st = ddp_mean_radius_ratio(p, ell, &ratio);
    ddp_params_free(p);
    if (st == DDP_ERR_NO_STATE) {
        std::printf("NOSTATE\n");
        return 0;
    }
    if (st != DDP_OK) return fail(st);
    if (!std::isfinite(ratio)) {
        std::printf("INF\n");
        return 0;
    }
    std::printf("%s\n", fmt17(ratio).c_str());
    return 0;
}

// ---- scan --------------------------------------------------------------

int run_scan(const std::string& quantity, const scan::Fixed& fixed,
             const std::vector<std::string>& sweeps) {
    scan::ScanGrid g;
    g.quantity = quantity;
    g.fixed = fixed;
    try {
        for (const std::string& s : sweeps) g.axes.push_back(scan::parse_axis(s, true));
        for (const auto& a : g.axes) scan::apply_axis_value(g.fixed, a.name, a.start);
        scan::evaluate_grid(g);
        std::fputs(scan::to_csv(g).c_str(), stdout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error (args): " << e.what() << "\n";
        return kExitArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}

// ---- verify ------------------------------------------------------------

int run_verify(int trials, unsigned seed) {
    int failures = 0;
    std::vector<char> report(1 << 16);
    ddp_status st = ddp_verify(trials, seed, &failures, report.data(), report.size());
    if (st != DDP_OK) return fail(st);
    std::fputs(report.data(), stdout);
    if (failures) {
        std::cerr << "verification failed: " << failures << " check(s)\n";
        return kExitVerify;
    }
    std::printf("all checks passed\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound states, scattering, and observables of a hyperspherical "
                 "delta-delta' contact potential"};
    app.require_subcommand(1);

    ParamFlags pf;
    int ell = 0;
    std::string format = "table";
    std::string krange;
    bool unwrap = false;

    CLI::App* spectrum = app.add_subcommand("spectrum", "discrete spectrum over all channels");
    add_param_flags(spectrum, pf, true);
    spectrum->add_option("--format", format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* phase = app.add_subcommand("phase-shift", "phase-shift curve over a k range");
    add_param_flags(phase, pf, true);
    phase->add_option("--l", ell, "angular momentum channel")->required();
    phase->add_option("--k", krange, "momentum range START:STOP:STEP")->required();
    phase->add_flag("--unwrap", unwrap, "remove pi jumps to make delta(k) continuous");
    phase->add_option("--format", format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* zm = app.add_subcommand("zero-mode", "delta coupling on the zero-mode surface");
    zm->add_option("--d", pf.d, "spatial dimension")->required();
    zm->add_option("--l", ell, "angular momentum channel")->required();
    zm->add_option("--w1", pf.w1, "delta-prime coupling")->required();
    zm->add_option("--x0", pf.x0, "hypersphere radius")->required();

    CLI::App* mr = app.add_subcommand("mean-radius", "mean radius ratio <x>/x0 of a channel");
    add_param_flags(mr, pf, true);
    mr->add_option("--l", ell, "angular momentum channel")->required();

    std::string quantity;
    std::vector<std::string> sweeps;
    double kfixed = 1.0;
    CLI::App* sc = app.add_subcommand("scan", "sweep one or two parameters, emit CSV");
    sc->add_option("--quantity", quantity,
                   "energy|count|mean_radius_ratio|phase_shift|lmax|zero_mode_boundary")
        ->required()
        ->check(CLI::IsMember({"energy", "count", "mean_radius_ratio", "phase_shift", "lmax",
                               "zero_mode_boundary"}));
    sc->add_option("--d", pf.d, "spatial dimension")->required();
    sc->add_option("--l", ell, "angular momentum channel");
    sc->add_option("--w0", pf.w0, "delta coupling (fixed unless swept)");
    sc->add_option("--w1", pf.w1, "delta-prime coupling (fixed unless swept)");
    sc->add_option("--x0", pf.x0, "hypersphere radius (fixed unless swept)");
    sc->add_option("--k", kfixed, "momentum for phase_shift (fixed unless swept)");
    sc->add_option("--sweep", sweeps, "swept axis name=START:STOP:STEP (once or twice)")
        ->required()
        ->expected(1, 2);

    int trials = 100;
    unsigned seed = 20260825;
    CLI::App* ver = app.add_subcommand("verify", "run the oracle cross-check suite");
    ver->add_option("--trials", trials, "number of random parameter sets");
    ver->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitArgs; // CLI11's own codes collapse to exit 2
    }

    if (spectrum->parsed()) return run_spectrum(pf, format);
    if (phase->parsed()) return run_phase_shift(pf, ell, krange, unwrap, format);
    if (zm->parsed()) return run_zero_mode(pf.d, ell, pf.w1, pf.x0);
    if (mr->parsed()) return run_mean_radius(pf, ell);
    if (sc->parsed()) {
        scan::Fixed fixed{pf.d, ell, pf.w0, pf.w1, pf.x0, kfixed};
        return run_scan(quantity, fixed, sweeps);
    }
    if (ver->parsed()) return run_verify(trials, seed);
    return kExitArgs;
}
