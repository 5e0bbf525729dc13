#include "pmg/body_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pmg {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            fail_spec("InvalidSpec", "unknown key '" + it.key() + "' in body spec");
}

AffinePoint parse_point(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail_spec("InvalidSpec", "point must be a [x, y] number pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

Eigen::Matrix2d parse_mat2(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        fail_spec("InvalidSpec", "matrix must be 2x2");
    Eigen::Matrix2d m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            if (!j[r][c].is_number()) fail_spec("InvalidSpec", "matrix entries must be numbers");
            m(r, c) = j[r][c].get<double>();
        }
    return m;
}

Eigen::Matrix3d parse_mat3(const json& j) {
    if (!j.is_array() || j.size() != 3)
        fail_spec("InvalidSpec", "map must be 3x3");
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) {
        if (!j[r].is_array() || j[r].size() != 3)
            fail_spec("InvalidSpec", "map must be 3x3");
        for (int c = 0; c < 3; ++c) {
            if (!j[r][c].is_number()) fail_spec("InvalidSpec", "map entries must be numbers");
            m(r, c) = j[r][c].get<double>();
        }
    }
    return m;
}

BodyPtr parse_body(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail_spec("InvalidSpec", "body spec needs a string 'kind'");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "ellipse") {
        check_keys(j, {"kind", "center", "shape"});
        if (!j.contains("shape")) fail_spec("InvalidSpec", "ellipse needs 'shape'");
        AffinePoint center = j.contains("center") ? parse_point(j["center"]) : AffinePoint{0, 0};
        return std::make_shared<Ellipse>(center, parse_mat2(j["shape"]));
    }
    if (kind == "pnorm") {
        check_keys(j, {"kind", "p", "center", "scale"});
        if (!j.contains("p") || !j["p"].is_number())
            fail_spec("InvalidSpec", "pnorm needs a numeric 'p'");
        AffinePoint center = j.contains("center") ? parse_point(j["center"]) : AffinePoint{0, 0};
        Eigen::Matrix2d scale = j.contains("scale") ? parse_mat2(j["scale"])
                                                    : Eigen::Matrix2d(Eigen::Matrix2d::Identity());
        return std::make_shared<PNormBall>(j["p"].get<double>(), scale, center);
    }
    if (kind == "polygon") {
        check_keys(j, {"kind", "vertices"});
        if (!j.contains("vertices") || !j["vertices"].is_array())
            fail_spec("InvalidSpec", "polygon needs a 'vertices' array");
        std::vector<AffinePoint> vertices;
        for (const auto& v : j["vertices"]) vertices.push_back(parse_point(v));
        return std::make_shared<Polygon>(std::move(vertices));
    }
    if (kind == "projective_image") {
        check_keys(j, {"kind", "base", "map"});
        if (!j.contains("base") || !j.contains("map"))
            fail_spec("InvalidSpec", "projective_image needs 'base' and 'map'");
        BodyPtr base = parse_body(j["base"]);
        return std::make_shared<ProjectiveImage>(base, Projectivity(parse_mat3(j["map"])));
    }
    fail_spec("InvalidSpec", "unknown body kind '" + kind + "'");
}

} // namespace

BodyPtr parse_body_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail_spec("InvalidSpec", std::string("malformed JSON: ") + e.what());
    }
    try {
        return parse_body(j);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidSpec) throw;
        // Construction failures (singular map, bad shape, ...) are spec defects here.
        fail_spec("InvalidSpec", e.what());
    } catch (const std::exception& e) {
        fail_spec("InvalidSpec", e.what());
    }
}

BodyPtr load_body_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_io("IOError", "cannot open body spec '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail_io("IOError", "cannot read body spec '" + path + "'");
    return parse_body_spec(buf.str());
}

} // namespace pmg
