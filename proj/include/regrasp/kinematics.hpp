#pragma once

#include "regrasp/geometry.hpp"
#include "regrasp/gripper.hpp"
#include "regrasp/placement.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace regrasp {

struct JointLimit : std::runtime_error {
    explicit JointLimit(const std::string& what) : std::runtime_error(what) {}
};

enum class ArmId { left, right };

inline const char* arm_name(ArmId a) { return a == ArmId::left ? "left" : "right"; }

struct Joint {
    Vec3 axis = Vec3::UnitZ();        // revolute axis, joint frame
    Transform parent_to_joint;        // fixed offset from the previous joint
    double lo = -M_PI;
    double hi = M_PI;
};

struct ArmModel {
    ArmId id = ArmId::right;
    std::vector<Joint> joints;        // 6..9 revolute joints
    Transform base;                   // world
    Transform tool;                   // flange to gripper frame
    Eigen::VectorXd home;             // default configuration
    double link_radius = 0.03;        // capsule radius for link collision

    int dof() const { return static_cast<int>(joints.size()); }
    double total_reach() const;
    bool within_limits(const Eigen::VectorXd& q, double slack = 1e-9) const;
    Eigen::VectorXd clamp(Eigen::VectorXd q) const;
};

struct RobotModel {
    std::vector<ArmModel> arms;
    std::vector<GripperSpec> grippers;   // aligned with arms
    TriMesh torso;                       // static obstacle

    const ArmModel& arm(ArmId id) const;
    const GripperSpec& gripper(ArmId id) const;
    bool has_arm(ArmId id) const;
};

struct ArmConfig {
    ArmId arm = ArmId::right;
    Eigen::VectorXd q;
    double jawwidth = 0.0;
};

// Gripper pose in the world frame by chain composition. Throws JointLimit
// when q is outside the arm's limits.
Transform fk(const ArmModel& arm, const Eigen::VectorXd& q);

// World positions of the base and every joint origin, plus the tool point.
// Used for link-capsule collision checks.
std::vector<Vec3> fk_joint_origins(const ArmModel& arm, const Eigen::VectorXd& q);

// Geometric Jacobian (linear on top, angular below) at the tool point.
Eigen::Matrix<double, 6, Eigen::Dynamic> jacobian(const ArmModel& arm, const Eigen::VectorXd& q);

struct IkParams {
    double pos_tol = 1e-6;
    double rot_tol = 1e-5;
    double damping = 0.05;
    double step_clip = 0.2;
    int max_iterations = 300;
    int max_restarts = 20;
};

// Damped-least-squares IK with a deterministic restart schedule (seed_q plus
// Halton perturbations). nullopt = unreachable after all restarts.
std::optional<ArmConfig> ik(const ArmModel& arm, const Transform& target,
                            const Eigen::VectorXd& seed_q, const IkParams& params = {});

// Gripper pose in the object's local frame: inverse(pose.world) * fk(arm, q).
Transform object_frame_grasp(const ObjectPose& pose, const ArmConfig& config,
                             const RobotModel& robot);

Transform object_frame_grasp(const Transform& object_world, const ArmConfig& config,
                             const RobotModel& robot);

// Orientation error as an axis-angle vector (log map of a * b^T).
Vec3 rotation_error(const Mat3& target, const Mat3& current);

}  // namespace regrasp
