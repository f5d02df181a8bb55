#include "regrasp/gripper.hpp"

namespace regrasp {

std::vector<TriMesh> GripperSpec::body_parts(double jawwidth, double pad_clearance) const {
    const double t = finger_thickness();
    const double w = pad_width, h = pad_height;
    const double half = jawwidth / 2.0 + pad_clearance;
    std::vector<TriMesh> parts;
    // fingers: inner faces at y = -/+ half, spanning the pad rectangle in x/z
    parts.push_back(make_box({w, t, h}, {0.0, -(half + t / 2.0), 0.0}));
    parts.push_back(make_box({w, t, h}, {0.0, +(half + t / 2.0), 0.0}));
    // palm: spans the fully open width behind the fingers
    const double palm_span = max_jawwidth + 2.0 * t;
    parts.push_back(make_box({w, palm_span, palm_depth},
                             {0.0, 0.0, -(h / 2.0 + palm_depth / 2.0)}));
    return parts;
}

TriMesh GripperSpec::body_mesh(double jawwidth) const {
    TriMesh merged;
    for (const auto& part : body_parts(jawwidth)) {
        const int base = static_cast<int>(merged.vertices.size());
        merged.vertices.insert(merged.vertices.end(), part.vertices.begin(), part.vertices.end());
        for (const auto& f : part.faces) {
            merged.faces.push_back({f[0] + base, f[1] + base, f[2] + base});
        }
    }
    merged.com = Vec3(0, 0, -pad_height / 2.0);
    return merged;
}

}  // namespace regrasp
