#pragma once

#include "regrasp/exec.hpp"
#include "regrasp/geometry.hpp"
#include "regrasp/gripper.hpp"

#include <cstdint>

namespace regrasp {

// A parallel-jaw grasp expressed in the object's local frame.
struct Grasp {
    Transform object_to_gripper;
    double jawwidth = 0.0;
    Vec3 contact_a = Vec3::Zero();
    Vec3 contact_b = Vec3::Zero();
    Vec3 normal_a = Vec3::Zero();   // outward surface normal at contact_a
    Vec3 normal_b = Vec3::Zero();
};

struct GraspParams {
    double friction_mu = 0.5;
    double density = 800.0;          // surface samples per m^2
    double cluster_radius = 0.005;   // contact-pair dedup radius
    int rotations_per_pair = 8;      // gripper rolls about the contact axis
    double pad_clearance = 1e-4;     // contact-face exemption for collision
    uint64_t seed = 0;
    Exec exec = Exec::parallel;
};

// Antipodal two-contact force closure: the contact line lies inside both
// friction cones. d points from a to b.
bool force_closure(const Vec3& contact_a, const Vec3& normal_a,
                   const Vec3& contact_b, const Vec3& normal_b, double friction_mu);

// Deterministic surface sample points for one face (area-scaled count).
std::vector<Vec3> face_samples(const TriMesh& mesh, int face, double density, uint64_t seed);

// Gripper pose for a contact pair and a roll index about the contact axis.
Transform grasp_frame(const Vec3& contact_a, const Vec3& contact_b, int rotation,
                      int rotations_per_pair);

// Force-closure grasp synthesis: ray-cast antipodal contact pairs between
// opposing faces, cluster, enumerate rolls, and keep gripper poses that do
// not collide with the object. Empty result simply means no face pair fits
// the jaw stroke.
std::vector<Grasp> synthesize_grasps(const TriMesh& mesh, const GripperSpec& gripper,
                                     const GraspParams& params);

// n_g used in graph scale reporting.
inline int grasp_count_report(const std::vector<Grasp>& grasps) {
    return static_cast<int>(grasps.size());
}

// Re-validation used by tests and cache loading: force closure, contact
// spacing, jaw range, and gripper-object clearance all hold.
bool revalidate_grasp(const Grasp& g, const TriMesh& mesh, const GripperSpec& gripper,
                      const GraspParams& params);

}  // namespace regrasp
