#include <CLI11.hpp>
#include <clocale>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "pmg/body_io.hpp"
#include "pmg/classifier.hpp"

using namespace pmg;

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

AffinePoint parse_point(const std::string& text) {
    double x = 0, y = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &x, &y, &tail) != 2)
        fail_spec("BadPoint", "expected x,y, got '" + text + "'");
    return {x, y};
}

struct Config {
    std::string body_path;
    std::string space = "hilbert";
    std::string out_path;
    std::string format; // empty means the per-command default
    uint64_t seed = 0;
    std::vector<std::string> tol_args;
    std::map<std::string, double> tolerances;

    void parse_tolerances() {
        for (const auto& arg : tol_args) {
            auto eq = arg.find('=');
            if (eq == std::string::npos)
                fail_spec("BadTolerance", "expected name=value, got '" + arg + "'");
            std::string name = arg.substr(0, eq);
            if (name != "fit" && name != "conic")
                fail_spec("UnknownTolerance", "'" + name + "' (known: fit, conic)");
            double value = 0;
            char tail = 0;
            if (std::sscanf(arg.c_str() + eq + 1, "%lf%c", &value, &tail) != 1 ||
                !(value > 0))
                fail_spec("BadTolerance", "tolerance must be a positive real: '" + arg + "'");
            tolerances[name] = value;
        }
    }

    double tol(const std::string& name, double fallback) const {
        auto it = tolerances.find(name);
        return it == tolerances.end() ? fallback : it->second;
    }

    std::string pick_format(const std::string& fallback,
                            std::initializer_list<const char*> allowed) const {
        std::string f = format.empty() ? fallback : format;
        for (const char* a : allowed)
            if (f == a) return f;
        fail_spec("UnsupportedFormat", "'" + f + "' for this command");
    }

    BodyPtr body() const {
        if (body_path.empty()) return Ellipse::unit_disk();
        return load_body_spec(body_path);
    }

    MetricSpace metric_space() const {
        if (space == "hilbert") return MetricSpace::hilbert(body());
        if (space == "minkowski") return MetricSpace::minkowski(body());
        fail_spec("BadSpace", "expected hilbert or minkowski, got '" + space + "'");
    }

    void emit(const std::string& text) const {
        if (out_path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out_path, std::ios::binary);
        if (!f) fail_io("IOError", "cannot open '" + out_path + "' for writing");
        f << text;
        if (!f.good()) fail_io("IOError", "short write to '" + out_path + "'");
    }
};

std::vector<AffinePoint> read_points_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail_io("IOError", "cannot read points file '" + path + "'");
    std::vector<AffinePoint> out;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_point(line));
    }
    return out;
}

std::string centers_svg(const std::vector<CenterReport>& reports, const BoundingBox& box) {
    // Residual heat map: log-residual from green (center-grade) to red.
    double w = box.hi.x - box.lo.x, h = box.hi.y - box.lo.y;
    double scale = 400.0 / std::max(w, h);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << fmt12(w * scale + 20) << "\" height=\"" << fmt12(h * scale + 20) << "\">\n";
    for (const auto& r : reports) {
        double lr = std::log10(std::max(r.fit_residual, 1e-16));
        double u = std::min(1.0, std::max(0.0, (lr + 12.0) / 12.0)); // 1e-12 .. 1
        int red = static_cast<int>(255 * u);
        int green = static_cast<int>(255 * (1.0 - u));
        double cx = 10 + (r.point.x - box.lo.x) * scale;
        double cy = 10 + (box.hi.y - r.point.y) * scale; // flip to SVG y-down
        svg << "<circle cx=\"" << fmt12(cx) << "\" cy=\"" << fmt12(cy)
            << "\" r=\"5\" fill=\"rgb(" << red << "," << green << ",0)\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

int cmd_dist(const Config& cfg, const AffinePoint& a, const AffinePoint& b) {
    MetricSpace space = cfg.metric_space();
    cfg.emit(fmt12(distance(space, a, b)) + "\n");
    return 0;
}

int cmd_midpoint(const Config& cfg, const AffinePoint& a, const AffinePoint& b) {
    MetricSpace space = cfg.metric_space();
    AffinePoint m = metric_midpoint(space, a, b);
    cfg.emit(fmt12(m.x) + "," + fmt12(m.y) + "\n");
    return 0;
}

int cmd_centers(const Config& cfg, int grid) {
    std::string format = cfg.pick_format("csv", {"csv", "svg"});
    MetricSpace space = cfg.metric_space();
    auto reports = scan_centers(space, grid, cfg.tol("fit", 1e-6));
    if (format == "svg") {
        cfg.emit(centers_svg(reports, space.body().bounding_box()));
        return 0;
    }
    std::string csv = "x,y,residual,misses_body,is_center,isometry_error\n";
    for (const auto& r : reports) {
        csv += fmt12(r.point.x) + "," + fmt12(r.point.y) + "," + fmt12(r.fit_residual) +
               "," + (r.line_misses_body ? "true" : "false") + "," +
               (r.is_projective_center ? "true" : "false") + ",";
        if (r.reflection_isometry_error) csv += fmt12(*r.reflection_isometry_error);
        csv += "\n";
    }
    cfg.emit(csv);
    return 0;
}

int cmd_classify(const Config& cfg, int grid) {
    std::string format = cfg.pick_format("json", {"json", "csv"});
    SymmetryVerdict v = classify(cfg.metric_space(), grid, cfg.tol("fit", 1e-6));
    if (format == "csv") {
        cfg.emit("kind,center_fraction,conic_residual,grid\n" + to_string(v.kind) + "," +
                 fmt12(v.center_fraction) + "," + fmt12(v.conic_residual) + "," +
                 std::to_string(v.grid) + "\n");
        return 0;
    }
    cfg.emit("{\"kind\":\"" + to_string(v.kind) +
             "\",\"center_fraction\":" + fmt12(v.center_fraction) +
             ",\"conic_residual\":" + fmt12(v.conic_residual) +
             ",\"grid\":" + std::to_string(v.grid) + "}\n");
    return 0;
}

int cmd_orbit(const Config& cfg, double p, double q, double lo, double hi, int iters) {
    auto orbit = kronecker_orbit(p, q, lo, hi, iters);
    double max_gap = hi - lo;
    if (!orbit.empty()) {
        max_gap = 0.0;
        double prev = lo;
        for (double v : orbit) {
            max_gap = std::max(max_gap, v - prev);
            prev = v;
        }
        max_gap = std::max(max_gap, hi - prev);
    }
    std::string csv;
    for (double v : orbit) csv += fmt12(v) + "\n";
    csv += "max_gap=" + fmt12(max_gap) + "\n";
    cfg.emit(csv);
    return 0;
}

int cmd_reflect(const Config& cfg, const AffinePoint& o, const std::string& points_path) {
    MetricSpace space = cfg.metric_space();
    if (!space.admissible(o)) fail_domain("PointOutside", "reflection center outside the body");
    PointReflection refl = construct_point_reflection(space, o);
    std::string csv = "x,y,rx,ry,d_before,d_after\n";
    for (const auto& p : read_points_file(points_path)) {
        AffinePoint r = refl.apply(p);
        double before = distance(space, p, o);
        double after = distance(space, r, o);
        csv += fmt12(p.x) + "," + fmt12(p.y) + "," + fmt12(r.x) + "," + fmt12(r.y) + "," +
               fmt12(before) + "," + fmt12(after) + "\n";
    }
    cfg.emit(csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"planar projective-metric geometry toolkit"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--body", cfg.body_path, "body spec JSON file (default: unit disk)");
    app.add_option("--space", cfg.space, "hilbert|minkowski")->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--out", cfg.out_path, "write output to a file instead of stdout");
    app.add_option("--format", cfg.format, "csv|json|svg (per-command default)");
    app.add_option("--tol", cfg.tol_args, "tolerance override, name=value (fit, conic)");

    std::string from_arg = "0,0", to_arg = "0,0", center_arg = "0,0", points_path;
    int grid = 7, iters = 200;
    double orbit_p = 1.0, orbit_q = 1.0, orbit_lo = 0.0, orbit_hi = 10.0;

    // fallthrough lets the global flags appear after the subcommand name
    CLI::App* dist = app.add_subcommand("dist", "distance between two points");
    dist->fallthrough();
    dist->add_option("--from", from_arg, "first point x,y")->required();
    dist->add_option("--to", to_arg, "second point x,y")->required();

    CLI::App* midpoint = app.add_subcommand("midpoint", "metric midpoint of two points");
    midpoint->fallthrough();
    midpoint->add_option("--from", from_arg, "first point x,y")->required();
    midpoint->add_option("--to", to_arg, "second point x,y")->required();

    CLI::App* centers = app.add_subcommand("centers", "projective-center scan on a grid");
    centers->fallthrough();
    centers->add_option("--grid", grid, "grid resolution")->capture_default_str();

    CLI::App* classify_cmd = app.add_subcommand("classify", "symmetry verdict for the space");
    classify_cmd->fallthrough();
    classify_cmd->add_option("--grid", grid, "grid resolution")->capture_default_str();

    CLI::App* orbit = app.add_subcommand("orbit", "Kronecker orbit {2ip - 2jq} in a range");
    orbit->fallthrough();
    orbit->add_option("--p", orbit_p, "first displacement")->capture_default_str();
    orbit->add_option("--q", orbit_q, "second displacement")->capture_default_str();
    orbit->add_option("--lo", orbit_lo, "range start")->capture_default_str();
    orbit->add_option("--hi", orbit_hi, "range end")->capture_default_str();
    orbit->add_option("--iters", iters, "index budget |i|+|j|")->capture_default_str();

    CLI::App* reflect = app.add_subcommand("reflect", "metric point reflection of listed points");
    reflect->fallthrough();
    reflect->add_option("--center", center_arg, "reflection center x,y")->required();
    reflect->add_option("--points", points_path, "file with one x,y per line")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    }

    try {
        cfg.parse_tolerances();
        if (dist->parsed()) return cmd_dist(cfg, parse_point(from_arg), parse_point(to_arg));
        if (midpoint->parsed())
            return cmd_midpoint(cfg, parse_point(from_arg), parse_point(to_arg));
        if (centers->parsed()) return cmd_centers(cfg, grid);
        if (classify_cmd->parsed()) return cmd_classify(cfg, grid);
        if (orbit->parsed())
            return cmd_orbit(cfg, orbit_p, orbit_q, orbit_lo, orbit_hi, iters);
        if (reflect->parsed()) return cmd_reflect(cfg, parse_point(center_arg), points_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return 1;
    }
    return 3;
}
