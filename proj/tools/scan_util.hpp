// Parameter-sweep grids and their CSV serialization for the command-line
// front end.  Depends only on the public C API so the CSV round-trip can be
// exercised against the shipped library surface.
#ifndef DDP_SCAN_UTIL_HPP
#define DDP_SCAN_UTIL_HPP

#include <ddp/ddp.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace scan {

// Fixed 17-significant-digit formatting: deterministic, round-trips doubles.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct AxisSpec {
    std::string name; // one of w0, w1, x0, k
    double start, stop, step;

    // Inclusive grid START, START+STEP, ...; STOP kept when it lands within
    // half a step of the last point.
    std::vector<double> values() const {
        if (!(step > 0.0)) throw std::invalid_argument("axis step must be positive");
        if (!(stop > start)) throw std::invalid_argument("axis stop must exceed start");
        std::vector<double> v;
        long n = std::lround(std::floor((stop - start) / step + 0.5));
        for (long i = 0; i <= n; ++i) {
            double x = start + i * step;
            if (x > stop + 0.5 * step) break;
            v.push_back(x);
        }
        return v;
    }
};

// Parses "A:B:S" (and "name=A:B:S" when expect_name is set).
inline AxisSpec parse_axis(const std::string& text, bool expect_name) {
    AxisSpec a;
    std::string rest = text;
    if (expect_name) {
        size_t eq = rest.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("sweep spec must look like name=START:STOP:STEP");
        a.name = rest.substr(0, eq);
        rest = rest.substr(eq + 1);
    }
    size_t c1 = rest.find(':');
    size_t c2 = (c1 == std::string::npos) ? std::string::npos : rest.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("range must look like START:STOP:STEP");
    try {
        a.start = std::stod(rest.substr(0, c1));
        a.stop = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
        a.step = std::stod(rest.substr(c2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("range endpoints must be numbers");
    }
    if (!(a.step > 0.0)) throw std::invalid_argument("range step must be positive");
    if (!(a.stop > a.start)) throw std::invalid_argument("range stop must exceed start");
    return a;
}

struct Cell {
    enum Kind { Value, NoState, Inf } kind = NoState;
    double v = 0.0;

    std::string text() const {
        switch (kind) {
            case Value: return fmt17(v);
            case NoState: return "NOSTATE";
            case Inf: return "INF";
        }
        return "NOSTATE";
    }
    bool operator==(const Cell& o) const {
        return kind == o.kind && (kind != Value || v == o.v);
    }
};

inline std::optional<Cell> parse_cell(const std::string& s) {
    if (s == "NOSTATE") return Cell{Cell::NoState, 0.0};
    if (s == "INF") return Cell{Cell::Inf, 0.0};
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) return std::nullopt;
        return Cell{Cell::Value, v};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Fixed (non-swept) problem fields.
struct Fixed {
    int d = 3;
    int ell = 0;
    double w0 = 0.0;
    double w1 = 0.0;
    double x0 = 1.0;
    double k = 1.0;
};

struct ScanGrid {
    std::string quantity;
    Fixed fixed;
    std::vector<AxisSpec> axes; // 1 or 2 swept parameters
    std::vector<Cell> cells;    // row-major: first axis is the slow index
};

inline void apply_axis_value(Fixed& f, const std::string& name, double v) {
    if (name == "w0") f.w0 = v;
    else if (name == "w1") f.w1 = v;
    else if (name == "x0") f.x0 = v;
    else if (name == "k") f.k = v;
    else throw std::invalid_argument("unknown sweep parameter '" + name + "'");
}

// Evaluates one grid cell.  Absent states, degenerate couplings, and points
// where the value is undefined map to the NOSTATE marker; non-finite values
// map to INF.
inline Cell evaluate_cell(const std::string& quantity, const Fixed& f) {
    auto finish = [](ddp_status st, double v) {
        if (st == DDP_OK) {
            if (!std::isfinite(v)) return Cell{Cell::Inf, 0.0};
            return Cell{Cell::Value, v};
        }
        return Cell{Cell::NoState, 0.0};
    };

    if (quantity == "lmax") {
        ddp_params* p = nullptr;
        if (ddp_params_create(f.d, f.w0, f.w1, f.x0, &p) != DDP_OK) return {Cell::NoState, 0.0};
        double L = 0.0;
        int em = 0, ab = 0;
        ddp_status st = ddp_lmax(p, &L, &em, &ab);
        ddp_params_free(p);
        return finish(st, L);
    }
    if (quantity == "zero_mode_boundary") {
        int exists = 0;
        double w0 = 0.0;
        ddp_status st = ddp_zero_mode_w0(f.d, f.ell, f.w1, f.x0, &exists, &w0);
        if (st != DDP_OK || !exists) return {Cell::NoState, 0.0};
        return finish(DDP_OK, w0);
    }

    ddp_params* p = nullptr;
    if (ddp_params_create(f.d, f.w0, f.w1, f.x0, &p) != DDP_OK) return {Cell::NoState, 0.0};
    Cell out{Cell::NoState, 0.0};
    if (quantity == "energy") {
        int exists = 0;
        double kap = 0.0, lam = 0.0;
        ddp_status st = ddp_find_bound_state(p, f.ell, &exists, &kap, &lam);
        if (st == DDP_OK && exists) out = finish(DDP_OK, lam);
    } else if (quantity == "count") {
        ddp_spectrum* s = nullptr;
        if (ddp_spectrum_compute(p, &s) == DDP_OK) {
            out = finish(DDP_OK, static_cast<double>(ddp_spectrum_total(s)));
            ddp_spectrum_free(s);
        }
    } else if (quantity == "mean_radius_ratio") {
        double ratio = 0.0;
        ddp_status st = ddp_mean_radius_ratio(p, f.ell, &ratio);
        out = finish(st, ratio);
    } else if (quantity == "phase_shift") {
        double delta = 0.0;
        ddp_status st = ddp_phase_shift(p, f.ell, f.k, &delta, nullptr, nullptr);
        out = finish(st, delta);
    } else {
        ddp_params_free(p);
        throw std::invalid_argument("unknown quantity '" + quantity + "'");
    }
    ddp_params_free(p);
    return out;
}

// Evaluates all cells with a bounded worker pool; cells land at their
// row-major index, so the output order never depends on scheduling.
inline void evaluate_grid(ScanGrid& g, unsigned max_workers = 8) {
    if (g.axes.empty() || g.axes.size() > 2)
        throw std::invalid_argument("scan needs one or two sweep axes");
    std::vector<std::vector<double>> vals;
    for (const auto& a : g.axes) vals.push_back(a.values());
    size_t rows = vals[0].size();
    size_t cols = (vals.size() == 2) ? vals[1].size() : 1;
    g.cells.assign(rows * cols, Cell{});

    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = std::min(max_workers, hw ? hw : 1u);
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next.fetch_add(1)) < g.cells.size();) {
            Fixed f = g.fixed;
            apply_axis_value(f, g.axes[0].name, vals[0][i / cols]);
            if (g.axes.size() == 2) apply_axis_value(f, g.axes[1].name, vals[1][i % cols]);
            g.cells[i] = evaluate_cell(g.quantity, f);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

// CSV: one `# params:` comment, a header row, then one row per cell with
// the axis coordinates leading the value.
inline std::string to_csv(const ScanGrid& g) {
    std::ostringstream out;
    out << "# params: quantity=" << g.quantity << " d=" << g.fixed.d << " l=" << g.fixed.ell
        << " w0=" << fmt17(g.fixed.w0) << " w1=" << fmt17(g.fixed.w1)
        << " x0=" << fmt17(g.fixed.x0) << " k=" << fmt17(g.fixed.k);
    for (const auto& a : g.axes)
        out << " sweep=" << a.name << "=" << fmt17(a.start) << ":" << fmt17(a.stop) << ":"
            << fmt17(a.step);
    out << "\n";
    for (const auto& a : g.axes) out << a.name << ",";
    out << g.quantity << "\n";

    std::vector<std::vector<double>> vals;
    for (const auto& a : g.axes) vals.push_back(a.values());
    size_t cols = (vals.size() == 2) ? vals[1].size() : 1;
    for (size_t i = 0; i < g.cells.size(); ++i) {
        out << fmt17(vals[0][i / cols]) << ",";
        if (vals.size() == 2) out << fmt17(vals[1][i % cols]) << ",";
        out << g.cells[i].text() << "\n";
    }
    return out.str();
}

struct ParsedCsv {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> coords; // per data row, leading columns
    std::vector<Cell> cells;
};

// Parses the CSV emitted by to_csv (comment line skipped); throws
// std::invalid_argument on malformed rows.
inline ParsedCsv parse_csv(const std::string& text) {
    ParsedCsv out;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (!have_header) {
            out.columns = fields;
            have_header = true;
            continue;
        }
        if (fields.size() != out.columns.size())
            throw std::invalid_argument("csv row width does not match header");
        std::vector<double> coord;
        for (size_t i = 0; i + 1 < fields.size(); ++i) coord.push_back(std::stod(fields[i]));
        std::optional<Cell> c = parse_cell(fields.back());
        if (!c) throw std::invalid_argument("csv cell is neither a number nor a marker");
        out.coords.push_back(std::move(coord));
        out.cells.push_back(*c);
    }
    return out;
}

} // namespace scan

#endif
