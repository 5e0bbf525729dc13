#pragma once

#include <string>

#include "pmg/convex_body.hpp"

namespace pmg {

// Body specification JSON:
//   {"kind": "ellipse", "center": [x, y], "shape": [[sxx, sxy], [sxy, syy]]}
//   {"kind": "pnorm", "p": 4.0, "center": [x, y], "scale": [[a, b], [c, d]]}
//   {"kind": "polygon", "vertices": [[x, y], ...]}           (counterclockwise)
//   {"kind": "projective_image", "base": {...}, "map": [[3x3 row-major]]}
// Unknown keys are rejected.
BodyPtr parse_body_spec(const std::string& json_text);

BodyPtr load_body_spec(const std::string& path);

} // namespace pmg
