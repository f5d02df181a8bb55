#pragma once

#include "regrasp/geometry.hpp"

namespace regrasp {

// Parallel-jaw gripper. Local frame convention:
//   origin  = grasp center (midpoint between the finger pads)
//   y axis  = closing direction (pad inner faces at y = -/+ jawwidth/2)
//   z axis  = approach direction (palm sits behind at -z, fingers point +z)
struct GripperSpec {
    double max_jawwidth = 0.08;
    double min_jawwidth = 0.0;
    double pad_width = 0.02;    // pad extent along x
    double pad_height = 0.03;   // pad extent along z
    double palm_depth = 0.04;   // palm extent along z, behind the fingers

    // Finger thickness beyond the pad face; derived so the spec stays small.
    double finger_thickness() const { return pad_width / 2.0; }

    // Convex parts (two fingers + palm) at a given jaw opening. pad_clearance
    // pulls the pad faces back from the contact plane, exempting the grasp
    // contact itself from collision tests.
    std::vector<TriMesh> body_parts(double jawwidth, double pad_clearance = 0.0) const;

    // Single merged mesh, mostly for export and visualization.
    TriMesh body_mesh(double jawwidth) const;

    bool valid() const {
        return min_jawwidth >= 0.0 && min_jawwidth < max_jawwidth &&
               pad_width > 0 && pad_height > 0 && palm_depth > 0;
    }
};

}  // namespace regrasp
