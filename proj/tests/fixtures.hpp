#pragma once

#include "regrasp/geometry.hpp"
#include "regrasp/gripper.hpp"
#include "regrasp/kinematics.hpp"

namespace regrasp::fixtures {

// Solid extrusion of a simple (possibly non-convex) CCW polygon along z.
TriMesh extrude_polygon(const std::vector<Vec2>& polygon, double z0, double z1);

// Three-direction pipe: a tee made of a bar along x and a stem along -y.
// Six stable placements: top, bottom, back, stem end, and the two bar ends.
TriMesh pipe_mesh();

// Regular tetrahedron, edge ~ 2*sqrt(2)*scale, centered at the origin.
TriMesh tetrahedron_mesh(double scale = 0.03);

TriMesh unit_cube();

// Small bar used in manipulation scenes.
TriMesh bar_mesh();

GripperSpec small_gripper();

// Anthropomorphic 6-DoF test arm (chains are data; this is the default rig).
ArmModel test_arm(ArmId id, const Transform& base);

// Dual 6-DoF arms with mirrored bases 0.3 m apart plus a torso box.
RobotModel dual_arm_robot();

}  // namespace regrasp::fixtures
